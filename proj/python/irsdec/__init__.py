"""Interleaved Reed-Solomon codec.

Joint decoding of row bursts across interleaved codewords via a single
elimination on the syndrome matrix, correcting up to min(l, n-k-1) corrupted
rows, plus analytical failure/miscorrection bounds and a seeded Monte-Carlo
harness.
"""

from irsdec._core import (
    Field,
    RsSpec,
    SimStats,
    decode,
    decode_incremental,
    decode_independent,
    default_primitive_poly,
    encode,
    fer_bound,
    fer_error_bound,
    make_spec,
    p_dependent_bound,
    p_error_bound,
    p_error_bound_approx,
    p_error_bound_factorial,
    p_failure_bound,
    p_valid_fraction,
    selftest,
    simulate,
    sweep,
    __version__,
)

__all__ = [
    "Field",
    "RsSpec",
    "SimStats",
    "decode",
    "decode_incremental",
    "decode_independent",
    "default_primitive_poly",
    "encode",
    "fer_bound",
    "fer_error_bound",
    "make_spec",
    "p_dependent_bound",
    "p_error_bound",
    "p_error_bound_approx",
    "p_error_bound_factorial",
    "p_failure_bound",
    "p_valid_fraction",
    "selftest",
    "simulate",
    "sweep",
    "__version__",
]
