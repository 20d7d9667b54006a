"""Finite G-sets, bispans and Tambara functors, with G-Witt vectors."""

from .bispans import (Bispan, bispan_N, bispan_R, bispan_T, bispans_isomorphic, compose_bispans,
                      distributor, eval_bispan, nfold_compose, word_to_bispan)
from .errors import (IntegralityError, PreconditionError, SizeCapError, TambaraError,
                     UnsupportedCarrierError, ValidationError)
from .groups import cyclic, dihedral, direct_product, make_group, subgroup_system, symmetric
from .gsets import GMap, GSet, orbit, point, pullback, terminal_map
from .spans import Span, compose_spans
from .witt import (ghost, ghost_bracket, ghost_solve, phi, tau, witt_add, witt_mul,
                   witt_specialize, witt_universal)

__all__ = [
    "Bispan", "bispan_N", "bispan_R", "bispan_T", "bispans_isomorphic", "compose_bispans",
    "distributor", "eval_bispan", "nfold_compose", "word_to_bispan",
    "IntegralityError", "PreconditionError", "SizeCapError", "TambaraError",
    "UnsupportedCarrierError", "ValidationError",
    "cyclic", "dihedral", "direct_product", "make_group", "subgroup_system", "symmetric",
    "GMap", "GSet", "orbit", "point", "pullback", "terminal_map",
    "Span", "compose_spans",
    "ghost", "ghost_bracket", "ghost_solve", "phi", "tau", "witt_add", "witt_mul",
    "witt_specialize", "witt_universal",
]
