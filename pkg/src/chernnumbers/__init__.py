"""Exact Chern-number calculus for complex projective manifolds."""
from .chern_algebra import (ChernPolynomial, ChernVector, evaluate, pontryagin_class,
                            pontryagin_number_functional, power_sum)
from .genera import chi_p_functional, chi_y, todd
from .invariance import annihilator, difference, verify_3fold_theorem, verify_4fold_theorem, verify_higher
from .manifolds import HodgeDiamond, SurfaceData, cp, fake_partner, product, signature, stabilize, times_cp1
from .partitions import index_of, partitions_of
from .projbundle import ProjBundleData, projectivize, ruled_canonical, ruled_tangent

__all__ = [
    "ChernPolynomial", "ChernVector", "evaluate", "pontryagin_class", "pontryagin_number_functional",
    "power_sum", "chi_p_functional", "chi_y", "todd", "annihilator", "difference", "verify_3fold_theorem",
    "verify_4fold_theorem", "verify_higher", "HodgeDiamond", "SurfaceData", "cp", "fake_partner",
    "product", "signature", "stabilize", "times_cp1", "index_of", "partitions_of", "ProjBundleData",
    "projectivize", "ruled_canonical", "ruled_tangent",
]
__version__ = "0.1.0"
