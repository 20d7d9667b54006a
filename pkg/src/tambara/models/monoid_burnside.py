"""The semigroup semiring A[M] of a finite-valued Mackey carrier M, and the
coconstant Mackey carrier dA."""

from __future__ import annotations

import itertools

from ..bispans import distributor
from ..groups import subgroup_system
from ..gsets import GMap, compose, coproduct_many, empty_gset, identity_map, orbit, pullback
from ..semirings import FinCommSemigroup, congruence_closure
from .base import MackeyCarrier, TambaraCarrier


class MonoidBurnside(TambaraCarrier):
    """A value on X is the isomorphism class of a triple (U, u: U -> X, m in M(U)).

    The canonical form is a sorted tuple with one tag (i, z, m') per orbit of
    U: choose a point o with stabilizer exactly H_i, let phi: G/H_i -> U send
    the identity coset to o, and minimize (u(o), R_phi m) over such o.
    """

    cancellative = True

    def __init__(self, M):
        self.M = M
        self.group = M.group
        self.system = subgroup_system(self.group)

    def _orbit_tag(self, U, u, m, orb):
        G = self.group
        i = self.system.class_of(U.stabilizers[orb[0]])
        H = self.system.reps[i]
        src = orbit(G, H)
        best = None
        for o in orb:
            if U.stabilizers[o] != H:
                continue
            phi = GMap(src, U, tuple(U.act[c[0]][o] for c in src.labels))
            key = (u.table[o], self.M.R(phi, m))
            if best is None or key < best:
                best = key
        return (i,) + best

    def canonical(self, u, m):
        U = u.dom
        return tuple(sorted(self._orbit_tag(U, u, m, orb) for orb in U.orbits))

    def realize(self, X, v):
        """(u: U -> X, m) representing v."""
        G = self.group
        if not v:
            E = empty_gset(G)
            return GMap(E, X, ()), self.M.zero(E)
        parts = [orbit(G, self.system.reps[i]) for i, _, _ in v]
        U, incs = coproduct_many(parts)
        table = []
        m = self.M.zero(U)
        for (i, z, mp), P, inc in zip(v, parts, incs):
            table.extend(X.act[c[0]][z] for c in P.labels)
            m = self.M.add(U, m, self.M.T(inc, mp))
        return GMap(U, X, tuple(table)), m

    def element(self, u, m):
        return self.canonical(u, m)

    def unit(self, X, m):
        """eta(m) = [X, 1, m]"""
        return self.canonical(identity_map(X), m)

    def zero(self, X):
        return ()

    def one(self, X):
        return self.canonical(identity_map(X), self.M.zero(X))

    def add(self, X, a, b):
        return tuple(sorted(a + b))

    def mul(self, X, a, b):
        ua, ma = self.realize(X, a)
        ub, mb = self.realize(X, b)
        P, pa, pb = pullback(ua, ub)
        m = self.M.add(P, self.M.R(pa, ma), self.M.R(pb, mb))
        return self.canonical(compose(ua, pa), m)

    def T(self, f, a):
        u, m = self.realize(f.dom, a)
        return self.canonical(compose(f, u), m)

    def R(self, f, b):
        u, m = self.realize(f.cod, b)
        P, p1, p2 = pullback(f, u)
        return self.canonical(p1, self.M.R(p2, m))

    def N(self, f, a):
        u, m = self.realize(f.dom, a)
        d = distributor(u, f)
        return self.canonical(d.r, self.M.T(d.q, self.M.R(d.p, m)))

    def counit(self, S, X, v):
        """epsilon[W, f, m] = T_f(m) into a Tambara carrier S whose
        multiplicative part is M: products of S as the addition of M and
        norms of S as the transfers of M."""
        u, m = self.realize(X, v)
        return S.T(u, m)

    def sample(self, X, rng, max_orbits=2):
        from ..gsets import fixed_points
        out = []
        for _ in range(rng.randint(0, max_orbits)):
            i = rng.randrange(len(self.system.reps))
            fixed = fixed_points(X, self.system.reps[i])
            if not fixed:
                continue
            orb = orbit(self.group, self.system.reps[i])
            out.append((i, rng.choice(fixed), rng.choice(list(self.M.elements(orb)))))
        if not out:
            return ()
        u, m = self.realize(X, tuple(out))
        return self.canonical(u, m)


def monoid_burnside(M):
    return MonoidBurnside(M)


class CoconstantMackey(MackeyCarrier):
    """dA(X) = Map(X, A)_G, coinvariants in the semigroup sense, for a finite
    commutative monoid A with G acting by automorphisms (perms[g]).

    Values are canonical representatives: the least tuple in the class.
    """

    def __init__(self, group, A, perms=None):
        self.group = group
        self.A = A
        self.perms = perms or [tuple(range(A.size))] * group.order
        self._cache = {}

    def _orbit_classes(self, X, orb):
        """Least representatives on one orbit, through Map(G/H, A)_G = A_H:
        m goes to the class of sum_x t_x^-1 m(x) where t_x o = x."""
        key = (X, orb)
        if key in self._cache:
            return self._cache[key]
        A, G = self.A, self.group
        o = orb[0]
        H = X.stabilizers[o]
        E = congruence_closure(A, [(a, self.perms[h][a]) for h in H for a in range(A.size)])
        idx = E.class_index()
        mover = {}
        for g in G.elements:
            mover.setdefault(X.act[g][o], G.inv[g])
        rep_of_class = {}
        rep = {}
        for m in itertools.product(range(A.size), repeat=len(orb)):
            s = A.zero
            for x, a in zip(orb, m):
                s = A.add(s, self.perms[mover[x]][a])
            c = idx[s]
            rep_of_class.setdefault(c, m)  # product() runs in lex order
            rep[m] = rep_of_class[c]
        self._cache[key] = (rep, sorted(rep_of_class.values()))
        return self._cache[key]

    def _orbits(self, X):
        return [tuple(sorted(orb)) for orb in X.orbits]

    def canon(self, X, m):
        # coinvariants turn disjoint unions into direct sums, and the least
        # tuple of a product class is the product of least tuples
        out = list(m)
        for orb in self._orbits(X):
            rep = self._orbit_classes(X, orb)[0][tuple(m[x] for x in orb)]
            for x, a in zip(orb, rep):
                out[x] = a
        return tuple(out)

    def zero(self, X):
        return (self.A.zero,) * X.size

    def add(self, X, a, b):
        return self.canon(X, tuple(self.A.add(x, y) for x, y in zip(a, b)))

    def R(self, f, b):
        return self.canon(f.dom, tuple(b[y] for y in f.table))

    def T(self, f, a):
        out = []
        for fib in f.fibers:
            s = self.A.zero
            for x in fib:
                s = self.A.add(s, a[x])
            out.append(s)
        return self.canon(f.cod, tuple(out))

    def elements(self, X):
        orbs = self._orbits(X)
        out = []
        for reps in itertools.product(*(self._orbit_classes(X, orb)[1] for orb in orbs)):
            m = [None] * X.size
            for orb, rep in zip(orbs, reps):
                for x, a in zip(orb, rep):
                    m[x] = a
            out.append(tuple(m))
        return sorted(out)


def coinvariant_classes_brute(group, A, X, perms=None):
    """Map(X, A)_G by closing {(m, g.m)} on the full table of Map(X, A).
    Returns the map from each function to the least tuple in its class."""
    perms = perms or [tuple(range(A.size))] * group.order
    maps = list(itertools.product(range(A.size), repeat=X.size))
    index = {m: k for k, m in enumerate(maps)}
    add = tuple(tuple(index[tuple(A.add(a, b) for a, b in zip(m1, m2))] for m2 in maps)
                for m1 in maps)
    S = FinCommSemigroup(add, index[(A.zero,) * X.size])
    pairs = []
    for g in group.elements:
        gi = group.inv[g]
        for m in maps:
            moved = tuple(perms[g][m[X.act[gi][x]]] for x in X.points)
            pairs.append((index[m], index[moved]))
    E = congruence_closure(S, pairs)
    rep = {}
    for cls in E.classes():
        r = maps[cls[0]]
        for k in cls:
            rep[maps[k]] = r
    return rep


def constant_mackey(group, A, perms=None):
    """cA for a finite commutative monoid A as a Mackey carrier."""
    from .fixed_point import FixedPointTambara
    perms = perms or [tuple(range(A.size))] * group.order
    return FixedPointTambara(group, A, action=lambda g, a: perms[g][a])
