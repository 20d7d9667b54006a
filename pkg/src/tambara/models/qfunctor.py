"""The functor q: values on an orbit modulo transfers from strictly larger
orbits over it."""

from __future__ import annotations

from ..groups import subgroup_system
from ..gsets import enumerate_gmaps, orbit
from ..semirings import FinCommSemigroup, congruence_closure, quotient


def proper_orbit_maps(U):
    """All maps u: G/K -> U from orbits that are not isomorphic to U."""
    G = U.group
    out = []
    for K in subgroup_system(G).reps:
        V = orbit(G, K)
        if V.size > U.size:
            out.extend(enumerate_gmaps(V, U))
    return out


def q_functor(M, U):
    """(quotient semigroup, elements of M(U), projection list) for transitive U."""
    assert len(U.orbits) == 1, "q is computed on orbits"
    elems = list(M.elements(U))
    index = {e: k for k, e in enumerate(elems)}
    add = tuple(tuple(index[M.add(U, a, b)] for b in elems) for a in elems)
    zero = index[M.zero(U)]
    S = FinCommSemigroup(add, zero)
    pairs = []
    for u in proper_orbit_maps(U):
        for m in M.elements(u.dom):
            pairs.append((index[M.T(u, m)], zero))
    E = congruence_closure(S, pairs)
    Q, proj = quotient(S, E)
    return Q, elems, proj


def burnside_q_class(B, U, v):
    """The image of v in q(Burnside)(U) = N, via the section count |Sec|."""
    return B.section_count(U, v)
