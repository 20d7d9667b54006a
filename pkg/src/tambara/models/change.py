"""Change of groups: restriction and induction of G-sets, maps and bispans,
the adjunction bijection on bispans, and coinduction of carriers."""

from __future__ import annotations

from functools import lru_cache

from ..bispans import Bispan
from ..errors import PreconditionError
from ..groups import from_table
from ..gsets import GMap, GSet, _cosets
from .base import TambaraCarrier


@lru_cache(maxsize=None)
def subgroup_as_group(G, H):
    """(group object for H, list of G-elements in H order)."""
    elems = list(H.elements)
    pos = {h: k for k, h in enumerate(elems)}
    table = [[pos[G.mult[a][b]] for b in elems] for a in elems]
    return from_table(table, f"sub{len(elems)}"), tuple(elems)


def restrict_gset(X, H):
    Hg, elems = subgroup_as_group(X.group, H)
    return GSet(Hg, tuple(X.act[g] for g in elems), X.labels)


def restrict_map(f, H):
    return GMap(restrict_gset(f.dom, H), restrict_gset(f.cod, H), f.table)


def restrict_bispan(w, H):
    return Bispan(restrict_map(w.p, H), restrict_map(w.q, H), restrict_map(w.r, H))


class Induction:
    """G x_H Y for an H-set Y, with points (t, y) for t running over the
    least elements of the left cosets of H."""

    def __init__(self, G, H):
        self.G, self.H = G, H
        self.Hg, self.elems = subgroup_as_group(G, H)
        self.pos = {h: k for k, h in enumerate(self.elems)}
        cosets, where = _cosets(G, H)
        self.reps = [c[0] for c in cosets]
        self.where = where

    def move(self, g, t):
        """g t = t' h with t' a coset rep; returns (index of t', index of h in H)."""
        G = self.G
        gt = G.mult[g][t]
        k = self.where[gt]
        t2 = self.reps[k]
        h = G.mult[G.inv[t2]][gt]
        return k, self.pos[h]

    def gset(self, Y):
        if Y.group != self.Hg:
            raise PreconditionError("induction needs an H-set")
        labels = [(k, y) for k in range(len(self.reps)) for y in Y.points]

        def action(g, lab):
            k, y = lab
            k2, h = self.move(g, self.reps[k])
            return (k2, Y.act[h][y])

        return GSet.from_labels(self.G, labels, action)

    def map(self, f):
        X, Y = self.gset(f.dom), self.gset(f.cod)
        return GMap(X, Y, tuple(Y.index[(k, f.table[x])] for k, x in X.labels))

    def bispan(self, w):
        return Bispan(self.map(w.p), self.map(w.q), self.map(w.r))

    def adjoint_bispan(self, X, w0):
        """P0 = (res X <- A0 -> B0 -> Y) over H  |->  (X <- ind A0 -> ind B0 -> ind Y),
        the left leg being the equivariant extension [t, a] -> t p0(a)."""
        A = self.gset(w0.A)
        p = GMap(A, X, tuple(X.act[self.reps[k]][w0.p.table[a]] for k, a in A.labels))
        return Bispan(p, self.map(w0.q), self.map(w0.r))


def induce_bispan(G, H, w):
    return Induction(G, H).bispan(w)


class CoinducedCarrier(TambaraCarrier):
    """coind(S) = S o res for a carrier S over H."""

    def __init__(self, S, G, H):
        self.S, self.group, self.H = S, G, H
        self.cancellative = getattr(S, "cancellative", False)

    def _r(self, X):
        return restrict_gset(X, self.H)

    def zero(self, X):
        return self.S.zero(self._r(X))

    def one(self, X):
        return self.S.one(self._r(X))

    def add(self, X, a, b):
        return self.S.add(self._r(X), a, b)

    def mul(self, X, a, b):
        return self.S.mul(self._r(X), a, b)

    def eq(self, X, a, b):
        return self.S.eq(self._r(X), a, b)

    def R(self, f, b):
        return self.S.R(restrict_map(f, self.H), b)

    def T(self, f, a):
        return self.S.T(restrict_map(f, self.H), a)

    def N(self, f, a):
        return self.S.N(restrict_map(f, self.H), a)

    def elements(self, X):
        return self.S.elements(self._r(X))

    def sample(self, X, rng):
        return self.S.sample(self._r(X), rng)


def coinduce_carrier(S, G, H):
    return CoinducedCarrier(S, G, H)
