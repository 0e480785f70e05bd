"""Desk-scale acceptance checks, shared by ``lcsketch verify`` and the test suite.

Each ``check_*`` function runs one criterion and returns a :class:`Result`.
``scale`` shrinks the fuzz counts for quick runs; the test suite always uses
``scale=1``.
"""

from __future__ import annotations

import random
import time
import tracemalloc
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from itertools import product

from .core import WeightFn, rle_encode, text
from .hardgen import gen_pat, gen_perm_hard, gen_xz
from .lcs import is_subsequence, lcs_decide_sketched, lcs_length
from .oracle import subseq_set, subseq_set_equal, wlcs_exhaustive
from .sketcher import run_bound, sketch_chunks, sketch_stream
from .wlcs import WlcsStats, wlcs_auto, wlcs_dp, wlcs_rle

SEED = 20181231
STREAM_MEMORY_CEILING = 4 << 20
STREAM_TIME_TARGET = 10.0


@dataclass
class Result:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d}. {self.name}: {self.detail} ({self.seconds:.1f}s)"


def _count(n: int, scale: float) -> int:
    return max(1, int(n * scale))


def random_text(rng: random.Random, sigma: int, max_len: int) -> bytes:
    """Uniform, run-heavy or periodic string, chosen at random."""
    n = rng.randint(0, max_len)
    kind = rng.randrange(3)
    if kind == 0:
        return bytes(rng.randrange(sigma) for _ in range(n))
    if kind == 1:
        out = bytearray()
        while len(out) < n:
            out += bytes([rng.randrange(sigma)]) * min(n - len(out), 1 + int(rng.expovariate(0.25)))
        return bytes(out)
    block = bytes(rng.randrange(sigma) for _ in range(rng.randint(1, 2 * sigma)))
    out = bytearray()
    while len(out) < n:
        out += block if rng.random() < 0.8 else bytes([rng.randrange(sigma)])
    return bytes(out[:n])


def random_weights(rng: random.Random, sigma: int, max_weight: int) -> WeightFn:
    return WeightFn(tuple(rng.randint(1, max_weight) for _ in range(sigma)))


def _timed(number: int, name: str, body: Callable[[], tuple[bool, str]]) -> Result:
    start = time.perf_counter()
    passed, detail = body()
    return Result(number, name, passed, detail, time.perf_counter() - start)


def check_sketch_correctness(scale: float = 1.0) -> Result:
    max_len = 12 if scale >= 1 else 8

    def body():
        bad = []
        checked = 0
        for n in range(max_len + 1):
            for x in product(range(2), repeat=n):
                for L in range(5):
                    s = sketch_stream(x, 2, L).decode()
                    checked += 1
                    if not subseq_set_equal(x, s, L, 2):
                        bad.append((x, L))
        return not bad, f"{checked} (x, L) pairs with |x| <= {max_len}, {len(bad)} mismatches"

    return _timed(1, "sketch preserves subsequences up to length L", body)


def _sketch_corpus(scale: float) -> Iterator[tuple[bytes, int, int]]:
    """``10^4`` strings for every pair ``sigma in {2, 3}``, ``L in 0..8``."""
    rng = random.Random(SEED + 2)
    for sigma in (2, 3):
        for L in range(9):
            for _ in range(_count(10**4, scale)):
                yield random_text(rng, sigma, 500), sigma, L


def check_run_bounds(scale: float = 1.0) -> Result:
    def body():
        violations = 0
        total = 0
        for x, sigma, L in _sketch_corpus(scale):
            s = sketch_stream(x, sigma, L)
            total += 1
            if len(s) > run_bound(sigma, L) or s.max_run > L or s.length > L * len(s):
                violations += 1
        return violations == 0, f"{total} strings, {violations} violations"

    return _timed(2, "run count and run length bounds", body)


def check_idempotence(scale: float = 1.0) -> Result:
    def body():
        bad = 0
        total = 0
        for x, sigma, L in _sketch_corpus(scale):
            s = sketch_stream(x, sigma, L)
            total += 1
            if sketch_stream(s.decode(), sigma, L) != s:
                bad += 1
        return bad == 0, f"{total} strings, {bad} not idempotent"

    return _timed(3, "sketching a sketch is the identity", body)


def check_protocol(scale: float = 1.0) -> Result:
    def body():
        rng = random.Random(SEED + 4)
        bad = 0
        n = _count(10**4, scale)
        for _ in range(n):
            sigma = rng.randint(2, 3)
            x = random_text(rng, sigma, 64)
            y = random_text(rng, sigma, 64)
            L = rng.randint(0, 6)
            if lcs_decide_sketched(x, y, L, sigma).answer != (lcs_length(x, y) >= L):
                bad += 1
        return bad == 0, f"{n} triples, {bad} disagreements"

    return _timed(4, "sketch protocol decides LCS >= L", body)


def check_claim2() -> Result:
    def body():
        x = gen_perm_hard(4, 2)
        target = subseq_set(x, 4, 2)
        short = [z for n in range(4) for z in product(range(2), repeat=n) if subseq_set(z, 4, 2) == target]
        # c^a for a >= 4 has the same subsequences up to length 4 as c^4.
        single_run = [
            z
            for a in range(5)
            for c in range(2)
            for z in [(c,) * a]
            if subseq_set(z, 4, 2) == target
        ]
        s = sketch_stream(gen_perm_hard(8, 2), 2, 8)
        ok = x == text("00100100") and not short and not single_run and s.length >= 16 and len(s) >= 4
        return ok, (
            f"{len(short)} shorter equivalents, {len(single_run)} single-run equivalents; "
            f"C_8 of the L=8 string has length {s.length} with {len(s)} runs"
        )

    return _timed(5, "hard strings are incompressible", body)


def check_claim3(scale: float = 1.0) -> Result:
    def body():
        rng = random.Random(SEED + 6)
        bad = 0
        n = _count(100, scale)
        for _ in range(n):
            z = [rng.randrange(3) for _ in range(9)]
            xz = gen_xz(z, 3, 3)
            for i in range(9):
                for t in range(4):
                    if is_subsequence(gen_pat(i, bytes(t), 3, 3), xz) != (t <= z[i]):
                        bad += 1
        frame = gen_pat(4, bytes(2), 3, 3) == text("21") + bytes(2) + text("12")
        return bad == 0 and frame, f"{n} vectors z, {bad} wrong answers, pattern frame ok={frame}"

    return _timed(6, "pattern queries decode z", body)


def check_engine_agreement(scale: float = 1.0) -> Result:
    def body():
        rng = random.Random(SEED + 7)
        bad = 0
        paths = {"dp": 0, "rle": 0, "empty": 0}
        n = _count(10**4, scale)
        for _ in range(n):
            sigma = rng.randint(2, 4)
            x = random_text(rng, sigma, 200)
            y = random_text(rng, sigma, 50)
            w = random_weights(rng, sigma, 100)
            stats = WlcsStats()
            a = wlcs_rle(rle_encode(x), y, w)
            b = wlcs_dp(x, y, w)
            c = wlcs_auto(x, y, w, stats)
            paths[stats.path] += 1
            if not a == b == c:
                bad += 1
        return bad == 0, f"{n} instances, {bad} disagreements, auto paths {paths}"

    return _timed(7, "run-length DP, quadratic DP and dispatcher agree", body)


COUNTEREXAMPLE = (text("2012"), text("0122"), WeightFn((1, 1, 5)))


def check_oracle_agreement(scale: float = 1.0) -> Result:
    def body():
        rng = random.Random(SEED + 8)
        bad = 0
        n = _count(10**3, scale)
        for _ in range(n):
            sigma = rng.randint(2, 4)
            x = random_text(rng, sigma, 10)
            y = random_text(rng, sigma, 10)
            w = random_weights(rng, sigma, 100)
            if wlcs_dp(x, y, w) != wlcs_exhaustive(x, y, w):
                bad += 1
        x, y, w = COUNTEREXAMPLE
        values = {
            "dp": wlcs_dp(x, y, w),
            "rle": wlcs_rle(rle_encode(x), y, w),
            "auto": wlcs_auto(x, y, w),
            "sketch": wlcs_rle(sketch_stream(x, 3, len(y)), y, w),
            "exhaustive": wlcs_exhaustive(x, y, w),
        }
        counter_ok = all(v == 10 for v in values.values())
        return bad == 0 and counter_ok, f"{n} instances, {bad} disagreements; counterexample {values}"

    return _timed(8, "quadratic DP matches exhaustive search", body)


def check_unit_weights(scale: float = 1.0) -> Result:
    def body():
        rng = random.Random(SEED + 9)
        bad = 0
        n = _count(10**3, scale)
        for _ in range(n):
            sigma = rng.randint(2, 4)
            x = random_text(rng, sigma, 200)
            y = random_text(rng, sigma, 50)
            if wlcs_dp(x, y, WeightFn.unit(sigma)) != lcs_length(x, y):
                bad += 1
        return bad == 0, f"{n} instances, {bad} disagreements"

    return _timed(9, "unit weights reduce WLCS to LCS", body)


def check_deque_accounting(scale: float = 1.0) -> Result:
    def body():
        rng = random.Random(SEED + 10)
        bad = 0
        n = _count(100, scale)
        ops = 0
        for _ in range(n):
            sigma = rng.randint(2, 4)
            x = rle_encode(random_text(rng, sigma, 200))
            y = random_text(rng, sigma, 50)
            w = random_weights(rng, sigma, 100)
            stats = WlcsStats()
            wlcs_rle(x, y, w, stats, check=True)
            rm = len(x) * len(y)
            ops += stats.insertions + stats.removals
            if stats.insertions != rm or stats.removals > rm:
                bad += 1
        return bad == 0, f"{n} instances, {bad} counter violations, {ops} deque operations"

    return _timed(10, "deque performs r*m insertions and at most r*m removals", body)


def _random_stream(n: int, sigma: int, seed: int, chunk: int = 1 << 16) -> Iterator[bytes]:
    rng = random.Random(seed)
    fold = bytes(b % sigma for b in range(256))
    while n > 0:
        k = min(chunk, n)
        yield rng.randbytes(k).translate(fold)
        n -= k


def check_streaming(scale: float = 1.0) -> Result:
    n = max(10**5, int(10**7 * scale))

    def body():
        tracemalloc.start()
        start = time.perf_counter()
        try:
            s = sketch_chunks(_random_stream(n, 4, SEED + 11), 4, 8)
            elapsed = time.perf_counter() - start
            _, peak = tracemalloc.get_traced_memory()
        finally:
            tracemalloc.stop()
        fits = peak <= STREAM_MEMORY_CEILING
        pace = "within" if elapsed <= STREAM_TIME_TARGET else "over"
        return fits, (
            f"{n} symbols, sketch of {len(s)} runs, peak traced memory {peak / 2**20:.2f} MiB "
            f"(ceiling {STREAM_MEMORY_CEILING / 2**20:.0f} MiB), {elapsed:.2f}s {pace} the "
            f"{STREAM_TIME_TARGET:.0f}s target"
        )

    return _timed(11, "streaming sketch in bounded memory", body)


def run_all(scale: float = 1.0) -> list[Result]:
    return [
        check_sketch_correctness(scale),
        check_run_bounds(scale),
        check_idempotence(scale),
        check_protocol(scale),
        check_claim2(),
        check_claim3(scale),
        check_engine_agreement(scale),
        check_oracle_agreement(scale),
        check_unit_weights(scale),
        check_deque_accounting(scale),
        check_streaming(scale),
    ]
