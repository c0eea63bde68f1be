"""Rank functions on finite (d+2)-angulated categories.

Exact rational computations with rank functions on objects and morphisms,
additive functions on module categories of self-injective Nakayama
algebras, and the polyhedral cone of rank functions on a finite skeleton.
"""

from rankfun.core import (
    AngleTemplate,
    CategorySkeleton,
    angle_closure,
    direct_sum_angles,
    make_object,
    rotate_angle,
    trivial_angle,
    validate_skeleton,
)
from rankfun.rank_objects import (
    RankOnObjects,
    angle_defect,
    check_rank_on_objects,
    eval_object,
    is_integral,
)
from rankfun.rank_morphisms import (
    ParityError,
    RankOnMorphismsView,
    phi_eval,
    psi_eval,
    rm_axiom_suite,
    roundtrip_check,
)

__all__ = [
    "AngleTemplate",
    "CategorySkeleton",
    "ParityError",
    "RankOnMorphismsView",
    "RankOnObjects",
    "angle_closure",
    "angle_defect",
    "check_rank_on_objects",
    "direct_sum_angles",
    "eval_object",
    "is_integral",
    "make_object",
    "phi_eval",
    "psi_eval",
    "rm_axiom_suite",
    "rotate_angle",
    "roundtrip_check",
    "trivial_angle",
    "validate_skeleton",
]
