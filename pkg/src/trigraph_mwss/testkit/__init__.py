"""Oracles, validators, instance generators and hardness constructions."""

from .generators import (
    CLASSES,
    GeneratorConfig,
    Skeleton,
    gen_basic,
    gen_glued,
    gen_instances,
    gen_large_glued,
    random_weights,
)
from .oracles import BRUTE_LIMIT, brute_alpha
from .validate import Obstruction, find_obstruction, is_isk4_wheel_free

__all__ = [
    "BRUTE_LIMIT",
    "CLASSES",
    "GeneratorConfig",
    "Obstruction",
    "Skeleton",
    "brute_alpha",
    "find_obstruction",
    "gen_basic",
    "gen_glued",
    "gen_instances",
    "gen_large_glued",
    "is_isk4_wheel_free",
    "random_weights",
]

from .hardness import (  # noqa: E402
    HardnessInstance,
    TwoExtension,
    arc_contribution,
    bipartite_trigraph_hardness,
    extended_bipartite,
    poljak_double_subdivision,
    subdivide_once,
    two_extension,
    unit_weights,
)

__all__ += [
    "HardnessInstance",
    "TwoExtension",
    "arc_contribution",
    "bipartite_trigraph_hardness",
    "extended_bipartite",
    "poljak_double_subdivision",
    "subdivide_once",
    "two_extension",
    "unit_weights",
]
