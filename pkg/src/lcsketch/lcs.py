"""Unweighted LCS primitives and the sketch-based threshold decision."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import MIN_SIGMA, RleString, Text
from .sketcher import sketch_bits, sketch_stream


def is_subsequence(y: Text, x: Text) -> bool:
    """Greedy left-to-right test for ``y`` being a subsequence of ``x``."""
    if len(y) > len(x):
        return False
    j = 0
    m = len(y)
    for c in x:
        if j == m:
            break
        if c == y[j]:
            j += 1
    return j == m


def lcs_length(x: Text, y: Text) -> int:
    """Textbook DP with two rows of length ``min(|x|, |y|) + 1``."""
    if len(y) > len(x):
        x, y = y, x
    if not y:
        return 0
    prev = [0] * (len(y) + 1)
    for a in x:
        cur = [0]
        left = 0
        for j, b in enumerate(y):
            if a == b:
                left = prev[j] + 1
            elif prev[j + 1] > left:
                left = prev[j + 1]
            cur.append(left)
        prev = cur
    return prev[-1]


@dataclass(frozen=True)
class DecisionReport:
    answer: bool
    limit: int
    sketch_x_bits: int
    sketch_y_bits: int
    lcs_of_sketches: int
    sketch_x: RleString
    sketch_y: RleString


def lcs_decide_sketched(x: Text, y: Text, limit: int, sigma: Optional[int] = None) -> DecisionReport:
    """Decide ``LCS(x, y) >= limit`` from the two sketches ``C_limit(x)`` and ``C_limit(y)``.

    Each party sketches its own string with the same threshold; the referee
    decodes both and runs :func:`lcs_length` on them.  ``sigma`` defaults to
    the smallest alphabet covering both strings.
    """
    if sigma is None:
        sigma = max(MIN_SIGMA, max(x, default=0) + 1, max(y, default=0) + 1)
    return decide_from_sketches(sketch_stream(x, sigma, limit), sketch_stream(y, sigma, limit), limit, sigma)


def decide_from_sketches(sx: RleString, sy: RleString, limit: int, sigma: int) -> DecisionReport:
    """Referee step: LCS of the decoded sketches compared against ``limit``."""
    common = lcs_length(sx.decode(), sy.decode())
    return DecisionReport(
        answer=common >= limit,
        limit=limit,
        sketch_x_bits=sketch_bits(sx, sigma, limit),
        sketch_y_bits=sketch_bits(sy, sigma, limit),
        lcs_of_sketches=common,
        sketch_x=sx,
        sketch_y=sy,
    )
