"""Streaming computation of the LCS sketch ``C_L(x)``.

For every nonempty subset ``S`` of the alphabet (a bitmask) the state keeps a
counter ``t[S]``, the number of complete blocks in the longest suffix of the
kept string that uses only symbols of ``S`` and splits into blocks each
containing all of ``S``; and ``q[S]``, the symbols already seen in the
current, incomplete block.  A symbol ``c`` is kept iff ``t[S] < L`` for every
``S`` containing ``c``.  If some such ``S`` has ``L`` complete blocks then
every string of length at most ``L`` that would use this occurrence of ``c``
can be matched inside that suffix instead, so dropping it preserves all
subsequences of length at most ``L``.

State changes only when a symbol is kept, so the keep/drop decision for each
symbol is cached in a bitmask after every keep.  Long stretches of dropped
symbols are then skipped with a single regex scan.
"""

from __future__ import annotations

import re
from collections.abc import Iterable
from functools import lru_cache

from .core import RleString, Text, check_sigma, check_text
from .errors import MalformedSketchError, SymbolError

MAGIC = b"LCSK1"


@lru_cache(maxsize=None)
def _subset_tables(sigma: int) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    full = 1 << sigma
    containing = tuple(tuple(S for S in range(1, full) if S >> c & 1) for c in range(sigma))
    excluding = tuple(tuple(S for S in range(1, full) if not S >> c & 1) for c in range(sigma))
    return containing, excluding


@lru_cache(maxsize=4096)
def _symbol_class(mask: int) -> re.Pattern[bytes]:
    symbols = bytes(c for c in range(mask.bit_length()) if mask >> c & 1)
    return re.compile(b"[" + b"".join(re.escape(bytes([c])) for c in symbols) + b"]")


def run_bound(sigma: int, limit: int) -> int:
    """Maximum number of runs of ``C_L(x)`` over an alphabet of size ``sigma``."""
    return 2 * (limit + 1) ** (sigma - 1) - 1


class SketchState:
    """Incremental sketcher; feed symbols with :meth:`push` or :meth:`push_chunk`."""

    def __init__(self, sigma: int, limit: int):
        check_sigma(sigma)
        if not isinstance(limit, int) or limit < 0:
            raise ValueError(f"limit must be a non-negative integer, got {limit!r}")
        self.sigma = sigma
        self.limit = limit
        self.t = [0] * (1 << sigma)
        self.q = [0] * (1 << sigma)
        self.kept_len = 0
        self._runs: list[list[int]] = []
        self._containing, self._excluding = _subset_tables(sigma)
        self._keepable = (1 << sigma) - 1 if limit > 0 else 0

    def keeps(self, c: int) -> bool:
        """Evaluate the keep condition for ``c`` directly from the counters."""
        L = self.limit
        return all(self.t[S] < L for S in self._containing[c])

    def push(self, c: int) -> bool:
        """Process one symbol; return whether it was appended to the sketch."""
        if not 0 <= c < self.sigma:
            raise SymbolError(f"symbol {c} outside alphabet of size {self.sigma}")
        if not self._keepable >> c & 1:
            return False
        self._keep(c)
        return True

    def push_chunk(self, chunk: bytes) -> int:
        """Process a block of symbols (byte values); return how many were kept."""
        if chunk and max(chunk) >= self.sigma:
            check_text(chunk, self.sigma)
        kept = 0
        pos = 0
        n = len(chunk)
        while self._keepable and pos < n:
            m = _symbol_class(self._keepable).search(chunk, pos)
            if m is None:
                break
            i = m.start()
            self._keep(chunk[i])
            kept += 1
            pos = i + 1
        return kept

    def _keep(self, c: int) -> None:
        t, q = self.t, self.q
        bit = 1 << c
        for S in self._containing[c]:
            qs = q[S] | bit
            if qs == S:
                q[S] = 0
                t[S] += 1
            else:
                q[S] = qs
        for S in self._excluding[c]:
            t[S] = 0
            q[S] = 0

        runs = self._runs
        if runs and runs[-1][0] == c:
            runs[-1][1] += 1
        else:
            runs.append([c, 1])
        self.kept_len += 1

        L = self.limit
        mask = 0
        for d, subsets in enumerate(self._containing):
            for S in subsets:
                if t[S] >= L:
                    break
            else:
                mask |= 1 << d
        self._keepable = mask

    def copy(self) -> SketchState:
        """Independent state that continues from the same point of the stream."""
        other = object.__new__(SketchState)
        other.__dict__.update(self.__dict__)
        other.t = list(self.t)
        other.q = list(self.q)
        other._runs = [list(run) for run in self._runs]
        return other

    @property
    def run_count(self) -> int:
        return len(self._runs)

    def finish(self) -> RleString:
        """Return the sketch built so far; the state stays usable."""
        return RleString(tuple((c, k) for c, k in self._runs))


def sketch_stream(x: Text, sigma: int, limit: int) -> RleString:
    """Compute ``C_L(x)`` in one pass."""
    state = SketchState(sigma, limit)
    data = x if isinstance(x, (bytes, bytearray)) else _to_bytes(x, sigma)
    state.push_chunk(bytes(data))
    return state.finish()


def sketch_chunks(chunks: Iterable[bytes], sigma: int, limit: int) -> RleString:
    """Sketch a stream delivered as parsed chunks; memory is independent of its length."""
    state = SketchState(sigma, limit)
    for chunk in chunks:
        state.push_chunk(chunk)
    return state.finish()


def _to_bytes(x: Text, sigma: int) -> bytes:
    check_text(x, sigma)
    return bytes(x)


def _varint(n: int) -> bytes:
    if n < 0:
        raise ValueError("varints encode non-negative integers only")
    out = bytearray()
    while True:
        byte = n & 0x7F
        n >>= 7
        if n:
            out.append(byte | 0x80)
        else:
            out.append(byte)
            return bytes(out)


def _read_varint(data: bytes, pos: int) -> tuple[int, int]:
    value = shift = 0
    while True:
        if pos >= len(data):
            raise MalformedSketchError("truncated varint")
        byte = data[pos]
        pos += 1
        value |= (byte & 0x7F) << shift
        if not byte & 0x80:
            return value, pos
        shift += 7


def _check_sketch(r: RleString, sigma: int, limit: int) -> None:
    for c, k in r:
        if c >= sigma:
            raise MalformedSketchError(f"symbol {c} outside alphabet of size {sigma}")
        if k > limit:
            raise MalformedSketchError(f"run of length {k} exceeds limit {limit}")


def header_bits(run_count: int, limit: int) -> int:
    return 8 * (len(MAGIC) + 1 + len(_varint(limit)) + len(_varint(run_count)))


def sketch_bits(r: RleString, sigma: int, limit: int) -> int:
    """Bit size of the run-length sketch: header plus fixed-width run records."""
    check_sigma(sigma)
    _check_sketch(r, sigma, limit)
    per_run = (sigma - 1).bit_length() + limit.bit_length()
    return header_bits(len(r), limit) + len(r) * per_run


def encode_sketch(r: RleString, sigma: int, limit: int) -> bytes:
    """Serialize to the binary ``LCSK1`` format."""
    check_sigma(sigma)
    _check_sketch(r, sigma, limit)
    out = bytearray(MAGIC)
    out.append(sigma)
    out += _varint(limit)
    out += _varint(len(r))
    for c, k in r:
        out.append(c)
        out += _varint(k)
    return bytes(out)


def decode_sketch(data: bytes) -> tuple[int, int, RleString]:
    """Parse the binary format; return ``(sigma, limit, runs)``."""
    if data[: len(MAGIC)] != MAGIC:
        raise MalformedSketchError("bad magic")
    pos = len(MAGIC)
    if pos >= len(data):
        raise MalformedSketchError("missing sigma byte")
    sigma = data[pos]
    pos += 1
    try:
        check_sigma(sigma)
    except ValueError as exc:
        raise MalformedSketchError(str(exc)) from exc
    limit, pos = _read_varint(data, pos)
    count, pos = _read_varint(data, pos)
    runs = []
    for _ in range(count):
        if pos >= len(data):
            raise MalformedSketchError("truncated run record")
        c = data[pos]
        k, pos = _read_varint(data, pos + 1)
        runs.append((c, k))
    if pos != len(data):
        raise MalformedSketchError(f"{len(data) - pos} trailing bytes")
    try:
        r = RleString(tuple(runs))
    except ValueError as exc:
        raise MalformedSketchError(str(exc)) from exc
    _check_sketch(r, sigma, limit)
    return sigma, limit, r
