"""Mapping classes of closed nonorientable surfaces acting on pi_1(N_g).

The main entry points:

    GroupContext / context   word problem, conjugacy, inner automorphisms
    make_curve, curve_word   the standard curve families
    Engine                   twists, crosscap slides and the reflection R
    parse_genword, realize   symbolic generator words
    catalog, verify          statements about the level 2 subgroup
"""
from .catalog import Statement, catalog, involution_set, regenerate_hs
from .curves import CurveSpec, alpha, alpha_bar, alpha_bar4, curve_word, make_curve, mod2_class
from .generators import parse_genword, realize, validate_generators
from .group import GroupContext, context
from .homology import induced_int, induced_mod2, intersection_mod2, is_level2, isometry_order
from .kernels import BACKEND
from .mapping import Engine, MappingClass
from .verifier import (Certificate, RunConfig, minimality_matrix, surjectivity_check, verify,
                       verify_all)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Certificate", "CurveSpec", "Engine", "GroupContext", "MappingClass", "RunConfig",
    "Statement", "alpha", "alpha_bar", "alpha_bar4", "catalog", "context", "curve_word",
    "induced_int", "induced_mod2", "intersection_mod2", "involution_set", "is_level2",
    "isometry_order", "make_curve", "minimality_matrix", "mod2_class", "parse_genword",
    "realize", "regenerate_hs", "surjectivity_check", "validate_generators", "verify",
    "verify_all",
]
