import pytest
from hypothesis import given, strategies as st

from lcsketch import core
from lcsketch.core import RleString, WeightFn, rle_encode, text
from lcsketch.errors import NonCanonicalError, OverflowBoundError, SymbolError
from lcsketch.lcs import lcs_length
from lcsketch.oracle import wlcs_exhaustive
from lcsketch.sketcher import sketch_stream
from lcsketch.wlcs import WlcsStats, prefix_counts, wlcs_auto, wlcs_dp, wlcs_rle, wlcs_solve

COUNTER_X, COUNTER_Y, COUNTER_W = text("2012"), text("0122"), WeightFn((1, 1, 5))


@st.composite
def instances(draw, max_sigma=4, max_x=200, max_y=50, max_weight=100, runny=False):
    sigma = draw(st.integers(2, max_sigma))
    sym = st.integers(0, sigma - 1)
    if runny:
        runs = draw(st.lists(st.tuples(sym, st.integers(1, 12)), max_size=max_x // 6))
        x = b"".join(bytes([c]) * k for c, k in runs)[:max_x]
    else:
        x = bytes(draw(st.lists(sym, max_size=max_x)))
    y = bytes(draw(st.lists(sym, max_size=max_y)))
    w = WeightFn(tuple(draw(st.lists(st.integers(1, max_weight), min_size=sigma, max_size=sigma))))
    return x, y, w


def test_prefix_counts_examples():
    assert prefix_counts(b"", 2) == [[0], [0]]
    assert prefix_counts(text("0101"), 2) == [[0, 1, 1, 2, 2], [0, 0, 1, 1, 2]]
    assert prefix_counts(text("000"), 2) == [[0, 1, 2, 3], [0, 0, 0, 0]]


@given(st.lists(st.integers(0, 3), max_size=60).map(bytes))
def test_prefix_counts_invariants(y):
    table = prefix_counts(y, 4)
    assert all(row[0] == 0 for row in table)
    assert all(row[j] - row[j - 1] in (0, 1) for row in table for j in range(1, len(y) + 1))
    assert sum(row[-1] for row in table) == len(y)


def test_dp_examples():
    assert wlcs_dp(text("0120"), b"", COUNTER_W) == 0
    assert wlcs_dp(COUNTER_X, COUNTER_Y, COUNTER_W) == 10
    assert wlcs_dp(COUNTER_X, COUNTER_Y, WeightFn.unit(3)) == 3 == lcs_length(COUNTER_X, COUNTER_Y)


def test_rle_examples():
    w = WeightFn((1, 4))
    assert wlcs_exhaustive(text("00011"), text("0101"), w) == 9
    assert wlcs_rle(RleString(((0, 3), (1, 2))), text("0101"), w) == 9
    assert wlcs_rle([(0, 3), (1, 2)], text("0101"), w) == 9
    assert wlcs_rle(rle_encode(COUNTER_X), COUNTER_Y, COUNTER_W) == 10
    assert wlcs_rle(RleString(), text("0101"), w) == 0


def test_rle_rejects_non_canonical():
    with pytest.raises(NonCanonicalError):
        wlcs_rle([(0, 1), (0, 2)], text("01"), WeightFn((1, 1)))
    with pytest.raises(NonCanonicalError):
        wlcs_rle([(0, 0)], text("01"), WeightFn((1, 1)))


def test_symbols_checked_against_weights():
    with pytest.raises(SymbolError):
        wlcs_dp(text("012"), text("01"), WeightFn((1, 1)))
    with pytest.raises(SymbolError):
        wlcs_rle([(2, 1)], text("01"), WeightFn((1, 1)))


def test_overflow_bound(monkeypatch):
    with pytest.raises(OverflowBoundError):
        core.check_score_bound(2**31 + 1, WeightFn((2**32 - 1, 1)))
    core.check_score_bound(2**31, WeightFn((2**32 - 1, 1)))
    monkeypatch.setattr(core, "SCORE_LIMIT", 100)
    x, y, w = bytes(30), bytes(30), WeightFn((5, 1))
    for solve in (wlcs_dp, wlcs_auto, lambda a, b, c: wlcs_rle(rle_encode(a), b, c)):
        with pytest.raises(OverflowBoundError):
            solve(x, y, w)


def test_auto_examples():
    for algo in ("auto", "dp", "rle"):
        assert wlcs_solve(COUNTER_X, COUNTER_Y, COUNTER_W, algo) == 10
    stats = WlcsStats()
    assert wlcs_auto(bytes(1000), text("01"), WeightFn((1, 1)), stats) == 1
    assert stats.path == "rle"
    assert stats.runs == 1 and sketch_stream(bytes(1000), 2, 2).length <= 2


def test_auto_swaps_and_handles_empty():
    stats = WlcsStats()
    assert wlcs_auto(text("01"), bytes(1000), WeightFn((1, 1)), stats) == 1
    assert stats.swapped
    stats = WlcsStats()
    assert wlcs_auto(b"", text("0101"), WeightFn((1, 1)), stats) == 0
    assert stats.path == "empty"


def test_auto_prefers_dp_when_runs_are_short():
    stats = WlcsStats()
    wlcs_auto(text("0101010101"), text("10"), WeightFn((3, 4)), stats)
    assert stats.path == "dp" and stats.cost_dp <= stats.cost_rle


def test_unknown_algorithm():
    with pytest.raises(ValueError):
        wlcs_solve(COUNTER_X, COUNTER_Y, COUNTER_W, "fast")


@given(instances())
def test_engines_agree(args):
    x, y, w = args
    expected = wlcs_dp(x, y, w)
    assert wlcs_rle(rle_encode(x), y, w) == expected
    assert wlcs_auto(x, y, w) == expected


@given(instances(runny=True))
def test_engines_agree_on_run_heavy_inputs(args):
    x, y, w = args
    expected = wlcs_dp(x, y, w)
    assert wlcs_rle(rle_encode(x), y, w, check=True) == expected
    assert wlcs_auto(x, y, w) == expected


@given(instances(max_x=120, max_y=30))
def test_sketch_path_is_valid(args):
    x, y, w = args
    sigma = w.sigma
    assert wlcs_rle(sketch_stream(x, sigma, len(y)), y, w) == wlcs_dp(x, y, w)


@given(instances(max_x=10, max_y=10))
def test_dp_matches_exhaustive(args):
    x, y, w = args
    assert wlcs_dp(x, y, w) == wlcs_exhaustive(x, y, w)


@given(instances(max_x=100, max_y=40))
def test_unit_weights_reduce_to_lcs(args):
    x, y, w = args
    assert wlcs_dp(x, y, WeightFn.unit(w.sigma)) == lcs_length(x, y)


@given(instances(max_x=80, max_y=40))
def test_symmetry_and_weight_bound(args):
    x, y, w = args
    value = wlcs_dp(x, y, w)
    assert value == wlcs_dp(y, x, w)
    assert value <= min(w.total(x), w.total(y))


@given(instances(max_x=80, max_y=40, runny=True))
def test_window_and_counters(args):
    x, y, w = args
    r = rle_encode(x)
    stats = WlcsStats()
    wlcs_rle(r, y, w, stats, check=True)
    assert stats.insertions == len(r) * len(y)
    assert stats.removals <= len(r) * len(y)
    assert stats.runs == len(r)


def test_cell_check_rejects_bad_windows():
    from collections import deque

    from lcsketch.wlcs import _check_cell

    pc = [0, 1, 2, 3]
    height = [0, 5, 3, 1]
    cur, prev = [0, 1, 2, 3], [0, 0, 0, 0]
    _check_cell(deque([1, 2, 3]), height, pc, 3, 2, cur, prev)
    for window in ([2, 3], [1, 3, 2], [0, 1, 2, 3]):
        with pytest.raises(AssertionError):
            _check_cell(deque(window), height, pc, 3, 2, cur, prev)
    with pytest.raises(AssertionError):
        _check_cell(deque([1, 2, 3]), height, pc, 3, 2, [0, 1, 2, 1], prev)
