"""Tambara pairs for the group of order two, and the constructions E
(pair -> carrier) and F (carrier -> pair)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from ..errors import PreconditionError
from ..gsets import GMap, fixed_points, orbit, point
from ..semirings import Semiring
from .base import TambaraCarrier


@dataclass
class TambaraPair:
    A: Semiring
    B: Semiring
    bar: Callable
    res: Callable
    trc: Callable
    nrm: Callable
    name: str = ""

    def check_axioms(self, samples_a, samples_b):
        """Evaluate the eleven pair axioms on the samples.

        Returns a dict axiom name -> None (pass) or a witness tuple.
        """
        A, B = self.A, self.B
        bar, res, trc, nrm = self.bar, self.res, self.trc, self.nrm
        sa, sb = list(samples_a), list(samples_b)
        pairs = list(itertools.product(sa, sa))
        checks = {
            "trc(0) = 0": [((), B.eq(trc(A.zero), B.zero))],
            "nrm(1) = 1": [((), B.eq(nrm(A.one), B.one))],
            "nrm(0) = 0": [((), B.eq(nrm(A.zero), B.zero))],
            "trc additive": [((a, c), B.eq(trc(A.add(a, c)), B.add(trc(a), trc(c))))
                             for a, c in pairs],
            "nrm multiplicative": [((a, c), B.eq(nrm(A.mul(a, c)), B.mul(nrm(a), nrm(c))))
                                   for a, c in pairs],
            "trc(abar) = trc(a)": [((a,), B.eq(trc(bar(a)), trc(a))) for a in sa],
            "nrm(abar) = nrm(a)": [((a,), B.eq(nrm(bar(a)), nrm(a))) for a in sa],
            "res(trc a) = a + abar": [((a,), A.eq(res(trc(a)), A.add(a, bar(a)))) for a in sa],
            "res(nrm a) = a abar": [((a,), A.eq(res(nrm(a)), A.mul(a, bar(a)))) for a in sa],
            "nrm(a0 + a1) = nrm a0 + nrm a1 + trc(a0 a1bar)": [
                ((a, c), B.eq(nrm(A.add(a, c)),
                              B.add(B.add(nrm(a), nrm(c)), trc(A.mul(a, bar(c))))))
                for a, c in pairs],
            "trc(a res b) = trc(a) b": [
                ((a, b), B.eq(trc(A.mul(a, res(b))), B.mul(trc(a), b)))
                for a in sa for b in sb],
        }
        return {name: next((w for w, ok in cases if not ok), None)
                for name, cases in checks.items()}

    def check_structure(self, samples_a, samples_b):
        """The standing assumptions: bar is an involutive semiring map, res is
        a semiring map landing in the fixed points."""
        A, B = self.A, self.B
        sa, sb = list(samples_a), list(samples_b)
        out = {}
        out["bar involution"] = next((a for a in sa if not A.eq(self.bar(self.bar(a)), a)), None)
        out["bar semiring map"] = next(
            ((a, c) for a in sa for c in sa
             if not (A.eq(self.bar(A.add(a, c)), A.add(self.bar(a), self.bar(c)))
                     and A.eq(self.bar(A.mul(a, c)), A.mul(self.bar(a), self.bar(c))))), None)
        out["res semiring map"] = next(
            ((b, d) for b in sb for d in sb
             if not (A.eq(self.res(B.add(b, d)), A.add(self.res(b), self.res(d)))
                     and A.eq(self.res(B.mul(b, d)), A.mul(self.res(b), self.res(d))))), None)
        if not (A.eq(self.res(B.one), A.one) and A.eq(self.res(B.zero), A.zero)):
            out["res semiring map"] = ("units",)
        out["res fixed"] = next((b for b in sb if not A.eq(self.bar(self.res(b)), self.res(b))),
                                None)
        return out

    def norm_of_sum_identity(self, items):
        """nrm(sum a_i) against sum nrm(a_i) + sum_{i<j} trc(a_i a_j bar)."""
        A, B = self.A, self.B
        lhs = self.nrm(A.sum(items))
        rhs = B.sum(self.nrm(a) for a in items)
        for i, j in itertools.combinations(range(len(items)), 2):
            rhs = B.add(rhs, self.trc(A.mul(items[i], self.bar(items[j]))))
        return B.eq(lhs, rhs)


# ---------------------------------------------------------------- example pair

class DualNumbers(Semiring):
    """Z[alpha]/alpha^2 as pairs (i, j) = i + j alpha."""

    zero, one = (0, 0), (1, 0)
    has_negatives = True
    cancellative = True

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def mul(self, a, b):
        return (a[0] * b[0], a[0] * b[1] + a[1] * b[0])

    def neg(self, a):
        return (-a[0], -a[1])

    def from_int(self, n):
        return (n, 0)

    def random(self, rng):
        return (rng.randint(-4, 4), rng.randint(-4, 4))


class BetaGamma(Semiring):
    """Z + Z beta + (Z/2) gamma with beta^2 = beta gamma = gamma^2 = 0, as
    triples (i, j, k mod 2)."""

    zero, one = (0, 0, 0), (1, 0, 0)
    has_negatives = True
    cancellative = True

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1], (a[2] + b[2]) % 2)

    def mul(self, a, b):
        return (a[0] * b[0], a[0] * b[1] + a[1] * b[0], (a[0] * b[2] + a[2] * b[0]) % 2)

    def neg(self, a):
        return (-a[0], -a[1], a[2] % 2)

    def from_int(self, n):
        return (n, 0, 0)

    def random(self, rng):
        return (rng.randint(-4, 4), rng.randint(-4, 4), rng.randint(0, 1))


def dual_numbers_pair():
    """A = Z[alpha]/alpha^2, B = Z + Z beta + (Z/2) gamma, trivial involution,
    res(i + j beta + k gamma) = i + 2j alpha, trc(i + j alpha) = 2i + j beta,
    nrm(i + j alpha) = i^2 + ij beta + j^2 gamma."""
    return TambaraPair(
        A=DualNumbers(),
        B=BetaGamma(),
        bar=lambda a: a,
        res=lambda b: (b[0], 2 * b[1]),
        trc=lambda a: (2 * a[0], a[1], 0),
        nrm=lambda a: (a[0] * a[0], a[0] * a[1], (a[1] * a[1]) % 2),
        name="dual-numbers",
    )


def integer_pair():
    """A = B = Z with trivial involution, res = id, trc(k) = 2k, nrm(k) = k^2."""
    from ..semirings import IntegerRing
    Z = IntegerRing()
    return TambaraPair(Z, Z, lambda a: a, lambda b: b, lambda a: 2 * a, lambda a: a * a,
                       name="integers")


# -------------------------------------------------------------- E and F

def _require_c2(G):
    if G.order != 2:
        raise PreconditionError("Tambara pairs need the group of order two")
    return 1 - G.identity  # the nontrivial element chi


def regular_gset(G):
    return orbit(G, G.trivial)


def chi_map(G):
    """x -> x chi on the regular C2-set (equivariant since C2 is abelian)."""
    chi = _require_c2(G)
    Gs = regular_gset(G)
    return GMap(Gs, Gs, tuple(Gs.act[chi][x] for x in Gs.points))


def eps_map(G):
    Gs = regular_gset(G)
    return GMap(Gs, point(G), (0,) * Gs.size)


class CarrierSemiring(Semiring):
    """The semiring S(X) of a Tambara carrier, viewed on its own."""

    def __init__(self, S, X):
        self.S, self.X = S, X
        self.zero, self.one = S.zero(X), S.one(X)
        self.cancellative = getattr(S, "cancellative", False)

    def add(self, a, b):
        return self.S.add(self.X, a, b)

    def mul(self, a, b):
        return self.S.mul(self.X, a, b)

    def eq(self, a, b):
        return self.S.eq(self.X, a, b)

    def random(self, rng):
        return self.S.sample(self.X, rng)


def pair_from_functor(S):
    """F(S) = (S(G), S(1), T_chi, R_eps, T_eps, N_eps)."""
    G = S.group
    _require_c2(G)
    Gs, pt = regular_gset(G), point(G)
    chi, eps = chi_map(G), eps_map(G)
    return TambaraPair(
        A=CarrierSemiring(S, Gs),
        B=CarrierSemiring(S, pt),
        bar=lambda a: S.T(chi, a),
        res=lambda b: S.R(eps, b),
        trc=lambda a: S.T(eps, a),
        nrm=lambda a: S.N(eps, a),
        name=f"F({type(S).__name__})",
    )


class PairTambara(TambaraCarrier):
    """E(P): a value on X is (u, v) with u: X -> A equivariant (u(chi x) =
    bar u(x)) and v: X^G -> B with u(x) = res v(x); v is stored as a tuple
    aligned with the sorted fixed points."""

    def __init__(self, group, P):
        self.chi = _require_c2(group)
        self.group = group
        self.P = P

    def _fixed(self, X):
        return fixed_points(X, self.group.whole)

    def zero(self, X):
        A, B = self.P.A, self.P.B
        return ((A.zero,) * X.size, (B.zero,) * len(self._fixed(X)))

    def one(self, X):
        A, B = self.P.A, self.P.B
        return ((A.one,) * X.size, (B.one,) * len(self._fixed(X)))

    def add(self, X, a, b):
        A, B = self.P.A, self.P.B
        return (tuple(A.add(x, y) for x, y in zip(a[0], b[0])),
                tuple(B.add(x, y) for x, y in zip(a[1], b[1])))

    def mul(self, X, a, b):
        A, B = self.P.A, self.P.B
        return (tuple(A.mul(x, y) for x, y in zip(a[0], b[0])),
                tuple(B.mul(x, y) for x, y in zip(a[1], b[1])))

    def eq(self, X, a, b):
        A, B = self.P.A, self.P.B
        return (all(A.eq(x, y) for x, y in zip(a[0], b[0]))
                and all(B.eq(x, y) for x, y in zip(a[1], b[1])))

    def R(self, f, b):
        m, n = b
        X, Y = f.dom, f.cod
        pos = {y: k for k, y in enumerate(self._fixed(Y))}
        return (tuple(m[y] for y in f.table), tuple(n[pos[f.table[x]]] for x in self._fixed(X)))

    def _split(self, f, y):
        """Fixed points and one representative per free orbit in f^-1{y}."""
        X = f.dom
        fixed, free = [], []
        seen = set()
        for x in f.fiber(y):
            x2 = X.act[self.chi][x]
            if x2 == x:
                fixed.append(x)
            elif x not in seen:
                free.append(min(x, x2))
                seen.update((x, x2))
        return fixed, free

    def T(self, f, a):
        u, v = a
        A, B = self.P.A, self.P.B
        X, Y = f.dom, f.cod
        posX = {x: k for k, x in enumerate(self._fixed(X))}
        m = tuple(A.sum(u[x] for x in fib) for fib in f.fibers)
        n = []
        for y in self._fixed(Y):
            fixed, free = self._split(f, y)
            total = B.sum(v[posX[x]] for x in fixed)
            for x in free:
                total = B.add(total, self.P.trc(u[x]))
            n.append(total)
        return (m, tuple(n))

    def N(self, f, a):
        u, v = a
        A, B = self.P.A, self.P.B
        posX = {x: k for k, x in enumerate(self._fixed(f.dom))}
        p = tuple(A.prod(u[x] for x in fib) for fib in f.fibers)
        q = []
        for y in self._fixed(f.cod):
            fixed, free = self._split(f, y)
            total = B.prod(v[posX[x]] for x in fixed)
            for x in free:
                total = B.mul(total, self.P.nrm(u[x]))
            q.append(total)
        return (p, tuple(q))

    def make(self, X, free_values, fixed_values):
        """Value from A-values at the least point of each free orbit and
        B-values at the fixed points."""
        A = self.P.A
        u = [None] * X.size
        it_free, it_fixed = iter(free_values), iter(fixed_values)
        v = []
        for orb in X.orbits:
            if len(orb) == 1:
                b = next(it_fixed)
                u[orb[0]] = self.P.res(b)
                v.append((orb[0], b))
            else:
                a = next(it_free)
                u[orb[0]] = a
                u[X.act[self.chi][orb[0]]] = self.P.bar(a)
        v.sort()
        return (tuple(u), tuple(b for _, b in v))

    def is_valid(self, X, value):
        u, v = value
        A = self.P.A
        if any(not A.eq(u[X.act[self.chi][x]], self.P.bar(u[x])) for x in X.points):
            return False
        return all(A.eq(u[x], self.P.res(b)) for x, b in zip(self._fixed(X), v))

    def sample(self, X, rng):
        nfree = sum(1 for orb in X.orbits if len(orb) == 2)
        nfix = X.size - 2 * nfree
        return self.make(X, [self.P.A.random(rng) for _ in range(nfree)],
                         [self.P.B.random(rng) for _ in range(nfix)])


def functor_from_pair(group, P):
    return PairTambara(group, P)


def alpha(S, E, X, m):
    """The comparison S(X) -> EF S(X): u(x) = R_{xhat} m on the regular
    C2-set, v(x) = R_{x} m for fixed x."""
    G = S.group
    chi = E.chi
    Gs = regular_gset(G)
    pt = point(G)
    u = []
    for x in X.points:
        # xhat sends the identity coset to x and the chi coset to chi x
        table = tuple(X.act[c[0]][x] for c in Gs.labels)
        u.append(S.R(GMap(Gs, X, table), m))
    v = tuple(S.R(GMap(pt, X, (x,)), m) for x in fixed_points(X, G.whole))
    return (tuple(u), v)
