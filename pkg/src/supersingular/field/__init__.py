"""Finite-field tower, dense univariate polynomials, serialization."""
from .gf import GF, FFElement, extension_field, prime_field
from .tower import (
    BasePrimePower,
    FieldTower,
    PrimeIdeal,
    auto_ideal,
    bracket,
    build_tower,
    element_from_json,
    element_to_json,
    frob,
    pow_big,
    upoly_from_json,
    upoly_to_json,
)
from .upoly import (
    UPolyRing,
    NEG_INF,
    UPoly,
    is_irreducible,
    upoly_derivative,
    upoly_gcd,
    upoly_roots_exhaustive,
)
