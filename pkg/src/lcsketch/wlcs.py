"""Weighted LCS: quadratic DP, the run-length DP, and the dispatcher between them.

The run-length engine fills ``D(i, j)``, the best weight of a common
subsequence of the first ``i`` runs of ``x`` and ``y[:j]``, one run at a
time.  With ``c, l`` the symbol and length of run ``i`` and ``P[j]`` the
number of ``c`` in ``y[:j]``::

    D(i, j) = W(c) * P[j] + max{ h(k) : k <= j, P[j] - P[k] <= l }
    h(k)    = D(i-1, k) - W(c) * P[k]

The admissible ``k`` form a window sliding right with ``j``; its maximum is
kept in a monotonic deque (positions increasing, heights strictly
decreasing), so each cell costs amortized O(1).
"""

from __future__ import annotations

from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional

from .core import RleString, Text, WeightFn, check_score_bound, check_text, count_runs
from .sketcher import run_bound, sketch_stream

PrefixCounts = list[list[int]]


@dataclass
class WlcsStats:
    """Bookkeeping filled in by the solvers when passed as ``stats``."""

    path: str = ""
    runs: int = 0
    insertions: int = 0
    removals: int = 0
    swapped: bool = False
    cost_dp: int = 0
    cost_rle: int = 0


def prefix_counts(y: Text, sigma: int) -> PrefixCounts:
    """``table[c][j]`` is the number of occurrences of ``c`` in ``y[:j]``."""
    table = []
    for c in range(sigma):
        row = [0] * (len(y) + 1)
        n = 0
        for j, b in enumerate(y, 1):
            if b == c:
                n += 1
            row[j] = n
        table.append(row)
    return table


def wlcs_dp(x: Text, y: Text, weights: WeightFn) -> int:
    """O(nm) DP over two rows; the shorter string indexes the columns."""
    check_text(x, weights.sigma)
    check_text(y, weights.sigma)
    if len(y) > len(x):
        x, y = y, x
    if not y:
        return 0
    check_score_bound(len(y), weights)
    w = weights.weights
    prev = [0] * (len(y) + 1)
    for a in x:
        wa = w[a]
        cur = [0]
        left = 0
        for j, b in enumerate(y):
            if a == b:
                left = prev[j] + wa
            elif prev[j + 1] > left:
                left = prev[j + 1]
            cur.append(left)
        prev = cur
    return prev[-1]


def wlcs_rle(
    x: RleString | Sequence[tuple[int, int]],
    y: Text,
    weights: WeightFn,
    stats: Optional[WlcsStats] = None,
    check: bool = False,
) -> int:
    """WLCS of a run-length encoded ``x`` and a plain ``y`` in O(runs * |y|).

    With ``check=True`` every cell is cross-checked against a linear scan of
    the window and the row monotonicity of ``D`` is asserted.
    """
    if not isinstance(x, RleString):
        x = RleString(tuple(x))
    sigma = weights.sigma
    check_text([c for c, _ in x], sigma)
    check_text(y, sigma)
    if stats is not None:
        stats.path = stats.path or "rle"
        stats.runs = len(x)
    m = len(y)
    if m == 0 or not x.runs:
        return 0
    check_score_bound(m, weights)

    counts = prefix_counts(y, sigma)
    insertions = removals = 0
    prev = [0] * (m + 1)
    for c, ell in x.runs:
        w = weights[c]
        pc = counts[c]
        height = [prev[k] - w * pc[k] for k in range(m + 1)]
        cur = [0] * (m + 1)
        window = deque([0])
        for j in range(1, m + 1):
            pj = pc[j]
            while pj - pc[window[0]] > ell:
                window.popleft()
                removals += 1
            hj = height[j]
            while window and height[window[-1]] <= hj:
                window.pop()
                removals += 1
            window.append(j)
            insertions += 1
            cur[j] = w * pj + height[window[0]]
            if check:
                _check_cell(window, height, pc, j, ell, cur, prev)
        prev = cur

    if stats is not None:
        stats.insertions += insertions
        stats.removals += removals
    return prev[m]


def _check_cell(window, height, pc, j, ell, cur, prev) -> None:
    best = max(height[k] for k in range(j + 1) if pc[j] - pc[k] <= ell)
    if height[window[0]] != best:
        raise AssertionError(f"window maximum {height[window[0]]} != scanned maximum {best} at j={j}")
    ks = list(window)
    for a, b in zip(ks, ks[1:]):
        if not (a < b and height[a] > height[b]):
            raise AssertionError(f"window not monotonic at j={j}: {ks}")
    if pc[j] - pc[ks[0]] > ell:
        raise AssertionError(f"window holds inactive position {ks[0]} at j={j}")
    if cur[j] < cur[j - 1] or cur[j] < prev[j]:
        raise AssertionError(f"DP table not monotonic at j={j}")


def wlcs_auto(x: Text, y: Text, weights: WeightFn, stats: Optional[WlcsStats] = None) -> int:
    """Pick the cheaper of the quadratic DP and compress-then-run-length DP.

    After ordering so that ``|x| >= |y|``, the DP costs ``n*m`` cell updates
    while the other path costs ``n`` sketch steps plus ``m`` per run of the
    sketch ``C_m(x)``; the run count is bounded by both the runs of ``x``
    and the sketch's run bound.  Ties go to the DP.
    """
    sigma = weights.sigma
    check_text(x, sigma)
    check_text(y, sigma)
    swapped = len(y) > len(x)
    if swapped:
        x, y = y, x
    n, m = len(x), len(y)
    cost_dp = n * m
    cost_rle = n + m * min(count_runs(x), run_bound(sigma, m))
    if stats is not None:
        stats.swapped = swapped
        stats.cost_dp = cost_dp
        stats.cost_rle = cost_rle
    if m == 0:
        if stats is not None:
            stats.path = "empty"
        return 0
    if cost_dp <= cost_rle:
        if stats is not None:
            stats.path = "dp"
        return wlcs_dp(x, y, weights)
    if stats is not None:
        stats.path = "rle"
    return wlcs_rle(sketch_stream(x, sigma, m), y, weights, stats)


def wlcs_solve(
    x: Text, y: Text, weights: WeightFn, algo: str = "auto", stats: Optional[WlcsStats] = None
) -> int:
    """Front end for the CLI: ``algo`` is ``auto``, ``dp`` or ``rle``."""
    if algo == "auto":
        return wlcs_auto(x, y, weights, stats)
    if algo == "dp":
        if stats is not None:
            stats.path = "dp"
        return wlcs_dp(x, y, weights)
    if algo == "rle":
        check_text(x, weights.sigma)
        if len(y) > len(x):
            x, y = y, x
            if stats is not None:
                stats.swapped = True
        if not y:
            return 0
        return wlcs_rle(sketch_stream(x, weights.sigma, len(y)), y, weights, stats)
    raise ValueError(f"unknown algorithm {algo!r}")
