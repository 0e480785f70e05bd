"""Alphabets, texts, run-length strings and weight tables.

A text is any sequence of integer symbols ``0..sigma-1``.  Parsers return
``bytes`` whose byte values are the symbols themselves (not ASCII digits),
which keeps long texts compact and lets the sketcher scan them with C-level
primitives.  ``text("0110")`` is the convenient way to build one by hand.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import BinaryIO, TextIO, Union

from .errors import (
    AlphabetError,
    DuplicateSymbolError,
    MalformedLineError,
    MissingSymbolError,
    NonCanonicalError,
    OverflowBoundError,
    ParseError,
    SymbolError,
    WeightRangeError,
    ZeroWeightError,
)

MIN_SIGMA = 2
MAX_SIGMA = 10
MAX_WEIGHT = 2**32 - 1
SCORE_LIMIT = 2**63

Text = Sequence[int]

_WHITESPACE = b" \t\n\r\v\f"
_DIGITS = b"0123456789"


@dataclass(frozen=True)
class Alphabet:
    sigma: int

    def __post_init__(self) -> None:
        check_sigma(self.sigma)

    def __contains__(self, symbol: object) -> bool:
        return isinstance(symbol, int) and 0 <= symbol < self.sigma

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.sigma))

    def __len__(self) -> int:
        return self.sigma


def check_sigma(sigma: int) -> None:
    if not isinstance(sigma, int) or not MIN_SIGMA <= sigma <= MAX_SIGMA:
        raise AlphabetError(f"sigma must be in {MIN_SIGMA}..{MAX_SIGMA}, got {sigma!r}")


def check_text(x: Text, sigma: int) -> None:
    """Raise SymbolError unless every symbol of ``x`` is below ``sigma``."""
    if len(x) and (max(x) >= sigma or min(x) < 0):
        bad = next(c for c in x if not 0 <= c < sigma)
        raise SymbolError(f"symbol {bad} outside alphabet of size {sigma}")


def text(digits: str) -> bytes:
    """Build a text from a digit string such as ``"0110"``; whitespace is ignored."""
    return parse_text(digits, MAX_SIGMA)


def render_text(x: Text) -> str:
    return bytes(x).translate(_RENDER).decode("ascii")


_PARSE = bytes.maketrans(_DIGITS, bytes(range(10)))
_RENDER = bytes.maketrans(bytes(range(10)), _DIGITS)


def _bad_char_pattern(sigma: int) -> re.Pattern[bytes]:
    allowed = re.escape(_DIGITS[:sigma] + _WHITESPACE)
    return re.compile(b"[^" + allowed + b"]")


def parse_text(data: Union[str, bytes], sigma: int) -> bytes:
    """Parse digit text, ignoring whitespace; return symbol values as bytes."""
    check_sigma(sigma)
    raw = data.encode("latin-1", "replace") if isinstance(data, str) else bytes(data)
    bad = _bad_char_pattern(sigma).search(raw)
    if bad is not None:
        ch = bad.group().decode("latin-1")
        raise ParseError(f"invalid symbol {ch!r} at offset {bad.start()} for sigma={sigma}")
    return raw.translate(_PARSE, _WHITESPACE)


def iter_text_chunks(
    stream: Union[BinaryIO, TextIO], sigma: int, chunk_size: int = 1 << 16
) -> Iterator[bytes]:
    """Yield parsed chunks of a digit stream without holding the whole input."""
    check_sigma(sigma)
    while True:
        chunk = stream.read(chunk_size)
        if not chunk:
            return
        parsed = parse_text(chunk, sigma)
        if parsed:
            yield parsed


@dataclass(frozen=True)
class RleString:
    """Canonical run-length encoding: a tuple of ``(symbol, length)`` pairs."""

    runs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        runs = tuple((int(c), int(k)) for c, k in self.runs)
        object.__setattr__(self, "runs", runs)
        prev = None
        for c, k in runs:
            if k <= 0:
                raise NonCanonicalError(f"run of symbol {c} has length {k}")
            if c < 0:
                raise SymbolError(f"negative symbol {c}")
            if c == prev:
                raise NonCanonicalError(f"adjacent runs share symbol {c}")
            prev = c

    def __len__(self) -> int:
        return len(self.runs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.runs)

    def __getitem__(self, i: int) -> tuple[int, int]:
        return self.runs[i]

    @property
    def length(self) -> int:
        """Number of symbols in the decoded text."""
        return sum(k for _, k in self.runs)

    @property
    def max_run(self) -> int:
        return max((k for _, k in self.runs), default=0)

    def decode(self) -> bytes:
        return rle_decode(self)

    def __str__(self) -> str:
        return format_rle(self)


def rle_encode(x: Iterable[int]) -> RleString:
    runs: list[list[int]] = []
    for c in x:
        if runs and runs[-1][0] == c:
            runs[-1][1] += 1
        else:
            runs.append([c, 1])
    return RleString(tuple((c, k) for c, k in runs))


def rle_decode(r: RleString) -> bytes:
    return b"".join(bytes([c]) * k for c, k in r.runs)


def count_runs(x: Text) -> int:
    return sum(1 for i in range(len(x)) if i == 0 or x[i] != x[i - 1])


def format_rle(r: RleString) -> str:
    return " ".join(f"{c}*{k}" for c, k in r.runs)


_RUN_TOKEN = re.compile(r"([0-9])\*([0-9]+)")


def parse_rle(data: str, sigma: int) -> RleString:
    """Parse whitespace-separated ``c*k`` tokens into a canonical RleString."""
    check_sigma(sigma)
    runs = []
    for token in data.split():
        m = _RUN_TOKEN.fullmatch(token)
        if m is None:
            raise ParseError(f"malformed run token {token!r}")
        c, k = int(m.group(1)), int(m.group(2))
        if c >= sigma:
            raise ParseError(f"symbol {c} outside alphabet of size {sigma}")
        if k == 0:
            raise ParseError(f"zero-length run in token {token!r}")
        runs.append((c, k))
    try:
        return RleString(tuple(runs))
    except NonCanonicalError as exc:
        raise ParseError(str(exc)) from exc


@dataclass(frozen=True)
class WeightFn:
    """Positive integer weight per symbol; ``len(weights)`` is the alphabet size."""

    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        check_sigma(len(self.weights))
        for c, w in enumerate(self.weights):
            if w < 1:
                raise ZeroWeightError(f"weight of symbol {c} must be positive, got {w}")
            if w > MAX_WEIGHT:
                raise WeightRangeError(f"weight of symbol {c} must be below 2^32, got {w}")

    @classmethod
    def unit(cls, sigma: int) -> WeightFn:
        return cls((1,) * sigma)

    @property
    def sigma(self) -> int:
        return len(self.weights)

    @property
    def max_weight(self) -> int:
        return max(self.weights)

    def __getitem__(self, c: int) -> int:
        return self.weights[c]

    def total(self, x: Text) -> int:
        """Total weight of the symbols of ``x``."""
        return sum(self.weights[c] for c in x)


_WEIGHT_LINE = re.compile(r"([0-9])[ \t]+([0-9]+)")


def parse_weights(data: str, sigma: int) -> WeightFn:
    """Parse ``"<digit> <weight>"`` lines, one per symbol of the alphabet."""
    check_sigma(sigma)
    table: dict[int, int] = {}
    for lineno, line in enumerate(data.splitlines(), 1):
        if not line.strip():
            continue
        m = _WEIGHT_LINE.fullmatch(line.strip())
        if m is None:
            raise MalformedLineError(f"line {lineno}: expected '<digit> <weight>', got {line!r}")
        c, w = int(m.group(1)), int(m.group(2))
        if c >= sigma:
            raise MalformedLineError(f"line {lineno}: symbol {c} outside alphabet of size {sigma}")
        if c in table:
            raise DuplicateSymbolError(f"line {lineno}: symbol {c} assigned twice")
        if w == 0:
            raise ZeroWeightError(f"line {lineno}: weight of symbol {c} is 0")
        if w > MAX_WEIGHT:
            raise WeightRangeError(f"line {lineno}: weight {w} is not below 2^32")
        table[c] = w
    missing = [c for c in range(sigma) if c not in table]
    if missing:
        raise MissingSymbolError(f"no weight for symbol(s) {', '.join(map(str, missing))}")
    return WeightFn(tuple(table[c] for c in range(sigma)))


def check_score_bound(length: int, weights: WeightFn) -> None:
    if length * weights.max_weight >= SCORE_LIMIT:
        raise OverflowBoundError(
            f"{length} symbols of weight up to {weights.max_weight} may overflow 2^63"
        )

