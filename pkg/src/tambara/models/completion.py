"""Additive completion of a Tambara carrier: S+ with the convolution
semiring on S(V(f)), the map chi, and the norm extended to differences."""

from __future__ import annotations

import itertools

from ..config import check_cap
from ..errors import UnsupportedCarrierError
from ..gsets import GMap, GSet
from .base import TambaraCarrier


class CompletionCarrier(TambaraCarrier):
    """Values (a+, a-) read as a+ - a-; equality needs a cancellative base."""

    cancellative = True

    def __init__(self, S):
        if not getattr(S, "cancellative", False):
            raise UnsupportedCarrierError("completion equality needs a cancellative carrier")
        self.base = S
        self.group = S.group

    def embed(self, a):
        return (a, None)

    def _n(self, X, a):
        return self.base.zero(X) if a[1] is None else a[1]

    def normalize(self, X, a):
        return (a[0], self._n(X, a))

    def zero(self, X):
        return (self.base.zero(X), self.base.zero(X))

    def one(self, X):
        return (self.base.one(X), self.base.zero(X))

    def neg(self, X, a):
        return (self._n(X, a), a[0])

    def _reduce(self, X, pos, neg):
        cancel = getattr(self.base, "cancel", None)
        return cancel(X, pos, neg) if cancel else (pos, neg)

    def add(self, X, a, b):
        S = self.base
        return self._reduce(X, S.add(X, a[0], b[0]), S.add(X, self._n(X, a), self._n(X, b)))

    def sub(self, X, a, b):
        return self.add(X, a, self.neg(X, b))

    def mul(self, X, a, b):
        S = self.base
        ap, an, bp, bn = a[0], self._n(X, a), b[0], self._n(X, b)
        return self._reduce(X, S.add(X, S.mul(X, ap, bp), S.mul(X, an, bn)),
                            S.add(X, S.mul(X, ap, bn), S.mul(X, an, bp)))

    def eq(self, X, a, b):
        S = self.base
        return S.eq(X, S.add(X, a[0], self._n(X, b)), S.add(X, self._n(X, a), b[0]))

    def R(self, f, b):
        return (self.base.R(f, b[0]), self.base.R(f, self._n(f.cod, b)))

    def T(self, f, a):
        return (self.base.T(f, a[0]), self.base.T(f, self._n(f.dom, a)))

    def N(self, f, a):
        neg = self._n(f.dom, a)
        if self.base.eq(f.dom, neg, self.base.zero(f.dom)):
            return (self.base.N(f, a[0]), self.base.zero(f.cod))
        return completion_norm(self, f, a)

    def sample(self, X, rng):
        return (self.base.sample(X, rng), self.base.sample(X, rng))


# --------------------------------------------------------- the G-sets V(f)

class SubsetData:
    """V(f) = {(y, C) : C subset of f^-1 y}, V2(f) = {(y, C1, C2) disjoint},
    U(f) = {(x, C) : x in C subset of f^-1 f(x)} with the maps used by the
    convolution product and chi."""

    def __init__(self, f, cap=None):
        X, Y = f.dom, f.cod
        G = X.group
        self.f = f
        total = sum(2 ** len(fib) for fib in f.fibers)
        check_cap(total, cap, "subset G-set V(f)")
        v_labels = [(y, C) for y in Y.points for C in _subsets(f.fiber(y))]
        self.V = GSet.from_labels(G, v_labels, lambda g, lab: (Y.act[g][lab[0]],
                                                              tuple(sorted(X.act[g][x] for x in lab[1]))))
        v2_labels = []
        for y in Y.points:
            fib = f.fiber(y)
            for assign in itertools.product((0, 1, 2), repeat=len(fib)):
                C1 = tuple(x for x, s in zip(fib, assign) if s == 1)
                C2 = tuple(x for x, s in zip(fib, assign) if s == 2)
                v2_labels.append((y, C1, C2))
        check_cap(len(v2_labels), cap, "subset G-set V2(f)")

        def act2(g, lab):
            y, C1, C2 = lab
            return (Y.act[g][y], tuple(sorted(X.act[g][x] for x in C1)),
                    tuple(sorted(X.act[g][x] for x in C2)))

        self.V2 = GSet.from_labels(G, v2_labels, act2)
        vi = self.V.index
        self.p1 = GMap(self.V2, self.V, tuple(vi[(y, C1)] for y, C1, _ in v2_labels))
        self.p2 = GMap(self.V2, self.V, tuple(vi[(y, C2)] for y, _, C2 in v2_labels))
        self.p12 = GMap(self.V2, self.V,
                        tuple(vi[(y, tuple(sorted(C1 + C2)))] for y, C1, C2 in v2_labels))
        self.k = GMap(Y, self.V, tuple(vi[(y, ())] for y in Y.points))
        self.j = GMap(Y, self.V, tuple(vi[(y, tuple(f.fiber(y)))] for y in Y.points))
        u_labels = [(x, C) for y, C in v_labels for x in C]
        self.U = GSet.from_labels(G, u_labels, lambda g, lab: (X.act[g][lab[0]],
                                                              tuple(sorted(X.act[g][x] for x in lab[1]))))
        self.r = GMap(self.U, X, tuple(x for x, _ in u_labels))
        self.t = GMap(self.U, self.V, tuple(vi[(f.table[x], C)] for x, C in u_labels))
        self.max_fiber = max((len(fib) for fib in f.fibers), default=0)


def _subsets(fib):
    fib = list(fib)
    out = []
    for mask in range(1 << len(fib)):
        out.append(tuple(x for i, x in enumerate(fib) if mask >> i & 1))
    return out


def convolve(S, data, a1, a2):
    """a1 v a2 = T_p12 (R_p1 a1 . R_p2 a2)"""
    return S.T(data.p12, S.mul(data.V2, S.R(data.p1, a1), S.R(data.p2, a2)))


def convolution_unit(S, data):
    """e = T_k(1)"""
    return S.T(data.k, S.one(data.f.cod))


def chi(S, data, a):
    """chi = N_t R_r : S(X) -> S(V(f))"""
    return S.N(data.t, S.R(data.r, a))


def convolution_inverse(Splus, data, c):
    """Inverse of c in the convolution semiring when R_k c = 1, by the
    geometric series sum_{i <= n} (-b)^i with b = c - e nilpotent."""
    V = data.V
    e = convolution_unit(Splus, data)
    b = Splus.sub(V, c, e)
    minus_b = Splus.neg(V, b)
    total = e
    power = e
    for _ in range(data.max_fiber):
        power = convolve(Splus, data, power, minus_b)
        total = Splus.add(V, total, power)
    return total


def completion_norm(Splus, f, a, data=None):
    """N_f(a+ - a-) = R_j (chi(a+) v inverse(chi(a-))) in S+."""
    S = Splus.base
    data = data or SubsetData(f)
    pos = Splus.embed(chi(S, data, a[0]))
    neg = Splus.embed(chi(S, data, Splus._n(f.dom, a)))
    pos, neg = Splus.normalize(data.V, pos), Splus.normalize(data.V, neg)
    inv = convolution_inverse(Splus, data, neg)
    return Splus.R(data.j, convolve(Splus, data, pos, inv))
