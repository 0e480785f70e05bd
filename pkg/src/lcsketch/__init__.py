"""Deterministic LCS sketches, sketch-based LCS decisions and weighted LCS solvers."""

from .core import (
    Alphabet,
    RleString,
    WeightFn,
    parse_rle,
    parse_text,
    parse_weights,
    render_text,
    rle_decode,
    rle_encode,
    text,
)
from .errors import LcsketchError
from .hardgen import gen_pat, gen_perm_hard, gen_xz
from .lcs import DecisionReport, is_subsequence, lcs_decide_sketched, lcs_length
from .sketcher import SketchState, decode_sketch, encode_sketch, sketch_bits, sketch_stream
from .wlcs import WlcsStats, prefix_counts, wlcs_auto, wlcs_dp, wlcs_rle, wlcs_solve

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "DecisionReport",
    "LcsketchError",
    "RleString",
    "SketchState",
    "WeightFn",
    "WlcsStats",
    "decode_sketch",
    "encode_sketch",
    "gen_pat",
    "gen_perm_hard",
    "gen_xz",
    "is_subsequence",
    "lcs_decide_sketched",
    "lcs_length",
    "parse_rle",
    "parse_text",
    "parse_weights",
    "prefix_counts",
    "render_text",
    "rle_decode",
    "rle_encode",
    "sketch_bits",
    "sketch_stream",
    "text",
    "wlcs_auto",
    "wlcs_dp",
    "wlcs_rle",
    "wlcs_solve",
]
