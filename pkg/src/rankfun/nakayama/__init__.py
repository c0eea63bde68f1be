"""Self-injective Nakayama algebras kC_n/rad^ell and the linear algebras A^d_2."""

from rankfun.nakayama.algebra import (
    NakayamaAlgebra,
    NakayamaModule,
    TwistData,
    UnsupportedPeriodicity,
    composition_factors,
    iterated_syzygy,
    projective,
    simple,
    syzygy,
    twist_data,
)
from rankfun.nakayama.angles import (
    ProjAngle,
    SchanuelResult,
    check_exactness,
    generate_angle,
    generate_angle_for,
    padded_variants,
    proj_label,
    schanuel_check,
    trivial_proj_angle,
)
from rankfun.nakayama.morphisms import (
    ProjMorphism,
    hom_basis,
    image_of,
    path_image,
    presenting_morphism,
)

__all__ = [
    "NakayamaAlgebra",
    "NakayamaModule",
    "ProjAngle",
    "ProjMorphism",
    "SchanuelResult",
    "TwistData",
    "UnsupportedPeriodicity",
    "check_exactness",
    "composition_factors",
    "generate_angle",
    "generate_angle_for",
    "hom_basis",
    "image_of",
    "iterated_syzygy",
    "padded_variants",
    "path_image",
    "presenting_morphism",
    "proj_label",
    "projective",
    "schanuel_check",
    "simple",
    "syzygy",
    "trivial_proj_angle",
    "twist_data",
]
