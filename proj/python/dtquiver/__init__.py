"""Exact Donaldson-Thomas invariants of quivers.

Classes are tuples of ints, exact values are fractions.Fraction. Rational
inputs accept ints, Fractions or "p/q" strings.
"""

from ._core import (
    DegenerateIdentity,
    DtqError,
    MissingEntry,
    PoleOrderError,
    PotentialUnsupported,
    Quiver,
    QuiverSpec,
    SizeCapExceeded,
    SpecParseError,
    Stability,
    VertexMismatch,
    bps_from_dtbar,
    demo_conifold,
    demo_grassmannian,
    demo_hilbert_points,
    dtbar,
    dtbar_from_bps,
    dtbar_from_pair,
    dtbar_table,
    epsilon_hat,
    framed_stable_count_oracle,
    gaussian_binomial,
    hall_twist_oracle,
    is_generic,
    load_quiver,
    ndt_direct,
    pair_from_dtbar,
    parse_quiver,
    run_cli,
    semistable_count_at,
    semistable_count_oracle,
    stacky_count_oracle,
    transform_table,
)

__version__ = "0.1.0"
__all__ = [name for name in dir() if not name.startswith("_")]
