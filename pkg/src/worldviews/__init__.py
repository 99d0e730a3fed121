"""World views of epistemic logic programs under several competing semantics."""

from .errors import CapExceeded, ParseError, UnsupportedConstruct, WorldViewError
from .syntax import (
    Program,
    Rule,
    expand_program,
    format_theory,
    ground,
    parse_formula,
    parse_program,
    parse_theory,
)
from .ht import stable_models
from .epistemic import format_world_view, sort_world_views
from .semantics import (
    SEMANTICS,
    COMPARED_SEMANTICS,
    SolveConfig,
    normalize_to_program,
    restrict_world_views,
    solve_specification,
    translate_b,
    translate_k,
    with_em,
    with_kem,
    world_views,
)
from .splitting import find_splitting_sets, is_splitting_set, solve_via_splitting, split
from .properties import (
    EXPECTED,
    brute_force_world_views,
    campaign,
    check_constraint_monotonicity,
    check_foundedness,
    check_supra_asp,
    check_supra_s5,
    is_epistemically_tight,
)
from .reports import PropertyReport

__all__ = [
    "CapExceeded",
    "EXPECTED",
    "ParseError",
    "Program",
    "PropertyReport",
    "Rule",
    "SEMANTICS",
    "SolveConfig",
    "COMPARED_SEMANTICS",
    "UnsupportedConstruct",
    "WorldViewError",
    "brute_force_world_views",
    "campaign",
    "check_constraint_monotonicity",
    "check_foundedness",
    "check_supra_asp",
    "check_supra_s5",
    "expand_program",
    "find_splitting_sets",
    "format_theory",
    "format_world_view",
    "ground",
    "is_epistemically_tight",
    "is_splitting_set",
    "normalize_to_program",
    "parse_formula",
    "parse_program",
    "parse_theory",
    "restrict_world_views",
    "solve_specification",
    "solve_via_splitting",
    "sort_world_views",
    "split",
    "stable_models",
    "translate_b",
    "translate_k",
    "with_em",
    "with_kem",
    "world_views",
]
