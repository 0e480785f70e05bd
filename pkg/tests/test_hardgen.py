import random
from itertools import product

import pytest

from lcsketch.core import count_runs, text
from lcsketch.errors import ParameterError
from lcsketch.hardgen import base_digits, gen_pat, gen_perm_hard, gen_xz, perm_hard_length
from lcsketch.lcs import is_subsequence
from lcsketch.oracle import subseq_set
from lcsketch.sketcher import sketch_stream


def test_perm_hard_examples():
    assert gen_perm_hard(2, 2) == text("010")
    assert gen_perm_hard(4, 2) == text("00100100")
    x = gen_perm_hard(8, 2)
    assert len(x) == 24 == perm_hard_length(4, 1)
    assert count_runs(x) >= 4


def test_perm_hard_floor_of_m():
    assert gen_perm_hard(5, 2) == gen_perm_hard(4, 2)
    x = text("0")
    for k in (1, 2):
        x = (x + bytes([k])) * 1 + x
    assert gen_perm_hard(3, 3) == x == text("0102010")


@pytest.mark.parametrize("L, sigma", [(2, 2), (6, 2), (9, 3), (8, 4), (10, 5)])
def test_perm_hard_length_identity(L, sigma):
    m = L // sigma
    x = gen_perm_hard(L, sigma)
    assert len(x) == perm_hard_length(m, sigma - 1)
    assert perm_hard_length(m, 1) == (m + 1) * m + m


def test_perm_hard_rejects_small_limit():
    with pytest.raises(ParameterError):
        gen_perm_hard(1, 2)


@pytest.mark.parametrize("L, sigma", [(4, 2), (6, 2), (8, 2), (3, 3), (6, 3)])
def test_sketch_of_hard_string_is_large(L, sigma):
    m = L // sigma
    s = sketch_stream(gen_perm_hard(L, sigma), sigma, L)
    assert s.length >= m**sigma
    assert len(s) >= m ** (sigma - 1)


def test_claim2_desk_scale():
    x = gen_perm_hard(4, 2)
    target = subseq_set(x, 4, 2)
    for n in range(4):
        for z in product(range(2), repeat=n):
            assert subseq_set(z, 4, 2) != target
    for c, a in product(range(2), range(5)):
        assert subseq_set((c,) * a, 4, 2) != target


def test_xz_examples():
    assert gen_xz([1, 0], 2, 2) == text("01")
    assert gen_xz([0, 0], 2, 2) == text("1")
    z = [1, 2, 0, 2, 1, 0, 0, 1, 2]
    b = [bytes(v) for v in z]
    one, two = text("1"), text("2")
    expected = one.join(b[0:3]) + two + one.join(b[3:6]) + two + one.join(b[6:9])
    assert gen_xz(z, 3, 3) == expected


@pytest.mark.parametrize("m, sigma", [(2, 2), (3, 3), (2, 4), (4, 3)])
def test_xz_length_bound(m, sigma):
    z = [m - 1] * m ** (sigma - 1)
    assert len(gen_xz(z, m, sigma)) <= m**sigma - 1


@pytest.mark.parametrize(
    "z, m, sigma",
    [([0], 2, 2), ([0, 2], 2, 2), ([0, -1], 2, 2), ([], 0, 2)],
)
def test_xz_errors(z, m, sigma):
    with pytest.raises(ParameterError):
        gen_xz(z, m, sigma)


def test_pat_examples():
    y = text("00")
    assert gen_pat(4, y, 3, 3) == text("21") + y + text("12")
    assert gen_pat(0, text("0"), 2, 2) == text("01")
    assert gen_pat(3, b"", 2, 3) == text("21")


def test_pat_length_bound():
    for i in range(27):
        assert len(gen_pat(i, bytes(2), 3, 4)) <= 3 * 2 + 2


@pytest.mark.parametrize("i, y", [(9, b""), (-1, b""), (0, text("1"))])
def test_pat_errors(i, y):
    with pytest.raises(ParameterError):
        gen_pat(i, y, 3, 3)


def test_base_digits_little_endian():
    assert base_digits(4, 3, 2) == [1, 1]
    assert base_digits(5, 3, 2) == [2, 1]
    assert base_digits(7, 2, 3) == [1, 1, 1]


@pytest.mark.parametrize("m, sigma", [(3, 3), (2, 4), (4, 2)])
def test_pattern_queries_decode_z(m, sigma):
    rng = random.Random(m * 10 + sigma)
    for _ in range(100):
        z = [rng.randrange(m) for _ in range(m ** (sigma - 1))]
        xz = gen_xz(z, m, sigma)
        for i in range(len(z)):
            for t in range(m + 1):
                assert is_subsequence(gen_pat(i, bytes(t), m, sigma), xz) == (t <= z[i])
