from .automorphism import (
    BRUTE_FORCE_CAP,
    GraphTooLarge,
    aut_brute_force,
    aut_group,
    equitable_refinement,
    is_automorphism,
)
from .groups import (
    ISOMORPHISM_CAP,
    GroupCapExceeded,
    GroupSpec,
    GroupSpecError,
    PermGroup,
    group_from_spec,
    groups_isomorphic,
    parse_cayley_table,
    parse_group_spec,
    validate_cayley_table,
)
from .perm import (
    CLOSURE_CAP,
    ClosureCapExceeded,
    Permutation,
    PermutationError,
    closure,
    closure_order,
    compose,
    format_permutation,
    identity,
    inverse,
    parse_permutation,
    parse_permutations,
)

__all__ = [
    "BRUTE_FORCE_CAP",
    "CLOSURE_CAP",
    "ClosureCapExceeded",
    "GraphTooLarge",
    "GroupCapExceeded",
    "GroupSpec",
    "GroupSpecError",
    "ISOMORPHISM_CAP",
    "PermGroup",
    "Permutation",
    "PermutationError",
    "aut_brute_force",
    "aut_group",
    "closure",
    "closure_order",
    "compose",
    "equitable_refinement",
    "format_permutation",
    "group_from_spec",
    "groups_isomorphic",
    "identity",
    "inverse",
    "is_automorphism",
    "parse_cayley_table",
    "parse_group_spec",
    "parse_permutation",
    "parse_permutations",
    "validate_cayley_table",
]
