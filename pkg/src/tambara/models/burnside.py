"""The Burnside model: values on X are isomorphism classes of G-sets over X."""

from __future__ import annotations

from collections import Counter

from ..bispans import section_space
from ..groups import subgroup_system
from ..gsets import (GMap, compose, coproduct_many, empty_gset, fixed_points, identity_map,
                     orbit, over_key, pullback, sections)
from .base import TambaraCarrier


class BurnsideTambara(TambaraCarrier):
    """A value is the sorted tuple of orbit tags (i, z) produced by over_key:
    H_i the stabilizer class, z the least image of a point with stabilizer
    exactly H_i.  Addition is multiset union."""

    cancellative = True

    def __init__(self, group, cap=None):
        self.group = group
        self.system = subgroup_system(group)
        self.cap = cap
        self._mul_cache = {}
        self._res_cache = {}

    def realize(self, X, v):
        """A G-set Q with k: Q -> X representing v."""
        G = self.group
        if not v:
            E = empty_gset(G)
            return E, GMap(E, X, ())
        parts = [orbit(G, self.system.reps[i]) for i, _ in v]
        Q, incs = coproduct_many(parts)
        table = []
        for (i, z), P in zip(v, parts):
            table.extend(X.act[c[0]][z] for c in P.labels)
        return Q, GMap(Q, X, tuple(table))

    def canonical(self, k):
        return over_key(k)

    def element(self, X, classes_points):
        """Canonical value from a list of (i, z) with z in X^{H_i}."""
        for i, z in classes_points:
            assert z in fixed_points(X, self.system.reps[i]), "point not fixed by H_i"
        return self.canonical(self.realize(X, tuple(classes_points))[1])

    def zero(self, X):
        return ()

    def one(self, X):
        return over_key(identity_map(X))

    def add(self, X, a, b):
        return tuple(sorted(a + b))

    def mul(self, X, a, b):
        # the pullback distributes over disjoint unions, so work orbit by orbit
        out = []
        oid = X.orbit_id
        for s in a:
            for t in b:
                if oid[s[1]] != oid[t[1]]:
                    continue
                key = (X, min(s, t), max(s, t))
                if key not in self._mul_cache:
                    _, ka = self.realize(X, (s,))
                    _, kb = self.realize(X, (t,))
                    P, pa, _ = pullback(ka, kb)
                    self._mul_cache[key] = over_key(compose(ka, pa))
                out.extend(self._mul_cache[key])
        return tuple(sorted(out))

    def cancel(self, X, a, b):
        """Remove the common orbits of a and b (the carrier is cancellative)."""
        common = Counter(a) & Counter(b)
        return (tuple(sorted((Counter(a) - common).elements())),
                tuple(sorted((Counter(b) - common).elements())))

    def R(self, f, b):
        out = []
        for s in b:
            key = (f, s)
            if key not in self._res_cache:
                _, k = self.realize(f.cod, (s,))
                P, p1, _ = pullback(f, k)
                self._res_cache[key] = over_key(p1)
            out.extend(self._res_cache[key])
        return tuple(sorted(out))

    def T(self, f, a):
        Y = f.cod
        norms = self.system.normalizers
        return tuple(sorted((i, min(Y.act[n][f.table[z]] for n in norms[i])) for i, z in a))

    def N(self, f, a):
        Q, k = self.realize(f.dom, a)
        S, base, _ = section_space(f, Q, k.fiber, self.cap)
        return over_key(base)

    def sample(self, X, rng, max_orbits=2):
        out = []
        for _ in range(rng.randint(0, max_orbits)):
            i = rng.randrange(len(self.system.reps))
            fixed = fixed_points(X, self.system.reps[i])
            if fixed:
                out.append((i, rng.choice(fixed)))
        return self.canonical(self.realize(X, tuple(out))[1]) if out else ()

    def counts(self, v):
        """Orbit-class multiplicities of a value on a one-point set."""
        c = [0] * len(self.system.reps)
        for i, _ in v:
            c[i] += 1
        return tuple(c)

    def from_counts(self, X, counts):
        """sum_i counts[i] [G/H_i -> X] for X a one-point G-set."""
        assert X.size == 1
        return tuple((i, 0) for i, n in enumerate(counts) for _ in range(n))

    def section_count(self, U, v):
        """|Sec(k)| for the G-set k: Q -> U representing v."""
        _, k = self.realize(U, v)
        return len(sections(k, self.cap))


def burnside_tambara(group, cap=None):
    return BurnsideTambara(group, cap)
