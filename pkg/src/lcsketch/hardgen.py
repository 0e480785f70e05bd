"""Adversarial string families.

``gen_perm_hard`` builds strings whose sketches cannot be small: any string
with the same short subsequences needs many runs.  ``gen_xz`` encodes a
vector ``z`` into a string so that subsequence queries ``gen_pat(i, 0^t)``
reveal ``z[i]``.
"""

from __future__ import annotations

from collections.abc import Sequence

from .core import Text, check_sigma
from .errors import ParameterError


def perm_hard_block(L: int, sigma: int) -> int:
    """Block parameter ``m = floor(L / sigma)``."""
    return L // sigma


def gen_perm_hard(L: int, sigma: int) -> bytes:
    """``x0 = 0^m`` and ``xk = (x(k-1) k)^m x(k-1)``; returns ``x(sigma-1)``."""
    check_sigma(sigma)
    if L < sigma:
        raise ParameterError(f"need L >= sigma so that m >= 1, got L={L}, sigma={sigma}")
    m = perm_hard_block(L, sigma)
    x = bytes(m)
    for k in range(1, sigma):
        x = (x + bytes([k])) * m + x
    return x


def perm_hard_length(m: int, k: int) -> int:
    """Length of ``x(k)`` from ``l0 = m`` and ``lk = (m+1) l(k-1) + m``."""
    length = m
    for _ in range(k):
        length = (m + 1) * length + m
    return length


def gen_xz(z: Sequence[int], m: int, sigma: int) -> bytes:
    """Encode ``z`` (length ``m^(sigma-1)``, entries below ``m``) as a string.

    Leaves are ``0^z[i]``; level ``c`` joins ``m`` consecutive level ``c-1``
    blocks with ``m - 1`` separators ``c``.
    """
    check_sigma(sigma)
    if m < 1:
        raise ParameterError(f"m must be positive, got {m}")
    if len(z) != m ** (sigma - 1):
        raise ParameterError(f"z must have length m^(sigma-1) = {m ** (sigma - 1)}, got {len(z)}")
    for i, v in enumerate(z):
        if not 0 <= v < m:
            raise ParameterError(f"z[{i}] = {v} outside 0..{m - 1}")
    blocks = [bytes(v) for v in z]
    for c in range(1, sigma):
        sep = bytes([c])
        blocks = [sep.join(blocks[i : i + m]) for i in range(0, len(blocks), m)]
    (x,) = blocks
    return x


def base_digits(i: int, m: int, count: int) -> list[int]:
    """Little-endian base-``m`` digits of ``i``, padded to ``count`` digits."""
    digits = []
    for _ in range(count):
        i, d = divmod(i, m)
        digits.append(d)
    return digits


def gen_pat(i: int, y: Text, m: int, sigma: int) -> bytes:
    """Query string for block ``i``: ``y`` framed by the separators that lead to it.

    The prefix is ``(sigma-1)^d[sigma-2] ... 1^d[0]`` and the suffix
    ``1^(m-1-d[0]) ... (sigma-1)^(m-1-d[sigma-2])`` with ``d`` the base-``m``
    digits of ``i``.  ``y`` must consist of zeros only.
    """
    check_sigma(sigma)
    if m < 1:
        raise ParameterError(f"m must be positive, got {m}")
    if not 0 <= i < m ** (sigma - 1):
        raise ParameterError(f"i must be in 0..{m ** (sigma - 1) - 1}, got {i}")
    if any(c != 0 for c in y):
        raise ParameterError("y must consist of the symbol 0 only")
    d = base_digits(i, m, sigma - 1)
    prefix = b"".join(bytes([c]) * d[c - 1] for c in range(sigma - 1, 0, -1))
    suffix = b"".join(bytes([c]) * (m - 1 - d[c - 1]) for c in range(1, sigma))
    return prefix + bytes(y) + suffix
