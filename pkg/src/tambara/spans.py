"""Spans X <- A -> Y of G-sets: composition by pullback, sums, the T/R
generators, canonical keys, and the double coset formula."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import PreconditionError
from .groups import conjugate, double_cosets
from .gsets import (GMap, compose, coproduct_many, gsets_over_isomorphic, identity_map,
                    orbit_map, over_key, pairing, pullback)


@dataclass(frozen=True, eq=False)
class Span:
    left: GMap   # A -> X
    right: GMap  # A -> Y

    def __post_init__(self):
        if self.left.dom != self.right.dom:
            raise PreconditionError("span legs must share the apex")

    @property
    def apex(self):
        return self.left.dom

    @property
    def source(self):
        return self.left.cod

    @property
    def target(self):
        return self.right.cod

    def __repr__(self):
        return f"Span({self.source.size} <- {self.apex.size} -> {self.target.size})"


def span_T(f):
    """T_f = (X <-1- X -f-> Y)"""
    return Span(identity_map(f.dom), f)


def span_R(f):
    """R_f = (Y <-f- X -1-> X)"""
    return Span(f, identity_map(f.dom))


def identity_span(X):
    return Span(identity_map(X), identity_map(X))


def compose_spans(w1, w0):
    """w1 after w0, with apex the pullback of the inner legs."""
    if w0.target != w1.source:
        raise PreconditionError("spans are not composable")
    P, a0, a1 = pullback(w0.right, w1.left)
    return Span(compose(w0.left, a0), compose(w1.right, a1))


def span_canonical_key(w):
    """Orbit-classified signature of the apex over source x target."""
    return over_key(pairing(w.left, w.right))


def spans_isomorphic(w, v):
    """An apex bijection commuting with both legs, or None."""
    if w.source != v.source or w.target != v.target:
        raise PreconditionError("spans must have the same endpoints")
    return gsets_over_isomorphic(pairing(w.left, w.right), pairing(v.left, v.right))


class SpanSum:
    """A finite multiset of spans X -> Y, compared through canonical keys."""

    def __init__(self, terms, source=None, target=None):
        self.terms = list(terms)
        if self.terms:
            source = self.terms[0].source
            target = self.terms[0].target
            for t in self.terms:
                if t.source != source or t.target != target:
                    raise PreconditionError("span sum terms must share endpoints")
        self.source, self.target = source, target

    def keys(self):
        """Multiset of orbit keys over all terms (the key of the union span)."""
        out = Counter()
        for t in self.terms:
            out.update(span_canonical_key(t))
        return out

    def __eq__(self, other):
        return self.keys() == other.keys()

    def __len__(self):
        return len(self.terms)

    def as_span(self):
        """The disjoint-union span representing the sum."""
        A, incs = coproduct_many([t.apex for t in self.terms])
        left = [0] * A.size
        right = [0] * A.size
        for t, inc in zip(self.terms, incs):
            for a in t.apex.points:
                left[inc.table[a]] = t.left.table[a]
                right[inc.table[a]] = t.right.table[a]
        return Span(GMap(A, self.source, tuple(left)), GMap(A, self.target, tuple(right)))


def conjugation_map(G, M, t):
    """C: G/M -> G/(t M t^-1), xM -> x t^-1 (t M t^-1)."""
    return orbit_map(G, M, conjugate(G, M, t), G.inv[t])


def double_coset_rewrite(G, H, K, L):
    """R^K_L T^H_L as the sum over double coset reps t of T^K_{M'} C_t R^H_{M_t}."""
    dc = double_cosets(G, L, K, H)
    terms = []
    for t, M, Mp in zip(dc.reps, dc.stabilizers, dc.conjugated):
        r = span_R(orbit_map(G, M, H, G.identity))
        c = span_T(conjugation_map(G, M, t))
        tr = span_T(orbit_map(G, Mp, K, G.identity))
        terms.append(compose_spans(tr, compose_spans(c, r)))
    return SpanSum(terms)


def double_coset_composite(G, H, K, L):
    """The pullback composite R^K_L T^H_L."""
    return compose_spans(span_R(orbit_map(G, K, L, G.identity)),
                         span_T(orbit_map(G, H, L, G.identity)))


def eval_span_on_mackey(w, M, element):
    """T_q R_p (element)"""
    return M.T(w.right, M.R(w.left, element))
