import pytest
from hypothesis import given, strategies as st

from lcsketch.core import text
from lcsketch.lcs import decide_from_sketches, is_subsequence, lcs_decide_sketched, lcs_length
from lcsketch.oracle import lcs_bruteforce
from lcsketch.sketcher import sketch_bits, sketch_stream


@st.composite
def pairs(draw, max_sigma=3, max_len=64):
    sigma = draw(st.integers(2, max_sigma))
    sym = st.integers(0, sigma - 1)
    x = bytes(draw(st.lists(sym, max_size=max_len)))
    y = bytes(draw(st.lists(sym, max_size=max_len)))
    return x, y, sigma


@pytest.mark.parametrize("y, x, expected", [("", "0101", True), ("11", "0101", True), ("110", "0101", False)])
def test_is_subsequence_examples(y, x, expected):
    assert is_subsequence(text(y), text(x)) is expected


def test_lcs_length_examples():
    x = text("0110100")
    assert lcs_length(x, b"") == 0
    assert lcs_length(text("0101"), text("1010")) == 3
    assert lcs_length(x, x) == len(x)


@pytest.mark.parametrize("L, answer", [(3, True), (4, False), (0, True)])
def test_decide_examples(L, answer):
    report = lcs_decide_sketched(text("0101"), text("1010"), L)
    assert report.answer is answer
    assert report.answer == (report.lcs_of_sketches >= L)


def test_decide_zero_limit_always_yes():
    report = lcs_decide_sketched(text("000"), text("111"), 0, sigma=2)
    assert report.answer and report.lcs_of_sketches == 0


def test_decide_reports_bit_counts():
    x, y = text("0012210"), text("2101")
    report = lcs_decide_sketched(x, y, 2, sigma=3)
    assert report.sketch_x_bits == sketch_bits(sketch_stream(x, 3, 2), 3, 2)
    assert report.sketch_y_bits == sketch_bits(sketch_stream(y, 3, 2), 3, 2)
    assert decide_from_sketches(report.sketch_x, report.sketch_y, 2, 3) == report


@given(pairs(max_len=10))
def test_lcs_matches_bruteforce(args):
    x, y, _ = args
    assert lcs_length(x, y) == lcs_bruteforce(x, y)


@given(pairs())
def test_lcs_properties(args):
    x, y, _ = args
    n = lcs_length(x, y)
    assert n == lcs_length(y, x)
    assert n <= min(len(x), len(y))
    assert is_subsequence(y, x) == (lcs_length(x, y) == len(y))


@given(pairs(), st.integers(0, 6))
def test_protocol_sound_and_complete(args, L):
    x, y, sigma = args
    assert lcs_decide_sketched(x, y, L, sigma).answer == (lcs_length(x, y) >= L)
