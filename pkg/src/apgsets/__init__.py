"""Accessible pointed graphs as pictures of possibly non-well-founded sets."""

from .core import (
    EMPTY,
    Apg,
    SetLiteral,
    canonical_picture,
    decorate_wf,
    descendant_subgraph,
    is_picture_of,
    parse_apg,
    serialize_apg,
    to_dot,
)
from .relations import (
    Partition,
    bisimilar,
    check_bisimulation,
    dhom_exists,
    finsler_eq,
    isomorphic,
    max_bisim_partition,
    max_bisimulation,
    mutual_dhom,
    same_children,
    scott_eq,
    scott_partition,
    star,
    verify_dhom,
)
from .extensionality import ExtReport, classify, is_ext_wrt, is_extensional
from .constructions import (
    FlatSystem,
    collapse_afa,
    collapse_iter,
    joinable,
    parse_flat_system,
    product_bisim,
    solve_flat_system,
    unfold_depth,
)
from .omega import (
    IndexSet,
    OmegaPresentation,
    SymbolicWitness,
    index_eq,
    make_J,
    make_Q2,
    shift_down,
    truncate,
    verify_dhom_symbolic,
)

__version__ = "0.1.0"
