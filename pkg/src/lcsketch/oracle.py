"""Brute-force references used only to validate the fast paths.

Nothing here imports the production algorithms; each check is written from
the definitions so that agreement means something.
"""

from __future__ import annotations

from collections.abc import Sequence
from itertools import combinations, product

from .errors import GuardExceededError

SUBSEQ_GUARD = 10**6
WLCS_GUARD = 12

Text = Sequence[int]


def _embeds(y: Text, x: Text) -> bool:
    it = iter(x)
    return all(c in it for c in y)


def subseq_set(x: Text, L: int, sigma: int) -> list[tuple[int, ...]]:
    """All subsequences of ``x`` of length at most ``L``, sorted by (length, value)."""
    if sigma**L > SUBSEQ_GUARD:
        raise GuardExceededError(f"sigma^L = {sigma}^{L} exceeds {SUBSEQ_GUARD}")
    found = []
    for length in range(L + 1):
        for y in product(range(sigma), repeat=length):
            if _embeds(y, x):
                found.append(y)
    return found


def subseq_set_equal(x1: Text, x2: Text, L: int, sigma: int) -> bool:
    return subseq_set(x1, L, sigma) == subseq_set(x2, L, sigma)


def wlcs_exhaustive(x: Text, y: Text, weights: Sequence[int]) -> int:
    """Max total weight over every subsequence of ``x`` that embeds in ``y``."""
    if len(x) > WLCS_GUARD or len(y) > WLCS_GUARD:
        raise GuardExceededError(f"inputs longer than {WLCS_GUARD} symbols")
    w = list(getattr(weights, "weights", weights))
    best = 0
    for size in range(1, len(x) + 1):
        for idx in combinations(range(len(x)), size):
            z = [x[i] for i in idx]
            if _embeds(z, y):
                best = max(best, sum(w[c] for c in z))
    return best


def is_permutation_string(z: Text, q: int, S: int) -> bool:
    """Whether ``z`` splits into ``q`` blocks each containing every symbol of bitmask ``S``."""
    blocks = 0
    seen = 0
    for c in z:
        if not S >> c & 1:
            return False
        seen |= 1 << c
        if seen == S:
            blocks += 1
            seen = 0
    return blocks >= q


def has_permutation_suffix(z: Text, q: int, S: int) -> bool:
    """Whether some suffix of ``z`` is a ``(q, S)``-permutation string."""
    return any(is_permutation_string(z[k:], q, S) for k in range(len(z) + 1))


def sketch_outline(x: Text, L: int, sigma: int) -> list[int]:
    """Literal suffix-scanning sketcher: keep ``c`` unless a suffix of the kept
    string is an ``(L, S)``-permutation string for some ``S`` containing ``c``."""
    kept: list[int] = []
    for c in x:
        if not any(
            S >> c & 1 and has_permutation_suffix(kept, L, S) for S in range(1, 1 << sigma)
        ):
            kept.append(c)
    return kept


def lcs_bruteforce(x: Text, y: Text) -> int:
    """Longest subsequence of ``x`` embedding in ``y``; exponential in ``|x|``."""
    if len(x) > WLCS_GUARD:
        raise GuardExceededError(f"inputs longer than {WLCS_GUARD} symbols")
    for size in range(len(x), 0, -1):
        for idx in combinations(range(len(x)), size):
            if _embeds([x[i] for i in idx], y):
                return size
    return 0
