"""The fixed-point model cR: values are equivariant maps X -> R."""

from __future__ import annotations

import itertools

from .base import TambaraCarrier


class FixedPointTambara(TambaraCarrier):
    """cR for a G-semiring R.  A value on X is a tuple indexed by the points
    of X with v[g x] = g v[x]; R restricts, T sums over fibers, N multiplies
    over fibers.  For a plain semigroup R only the Mackey part is usable.

    action(g, r) defaults to R.act.
    """

    def __init__(self, group, R, action=None):
        self.group = group
        self.ring = R
        self.action = action or R.act

    @property
    def cancellative(self):
        return getattr(self.ring, "cancellative", False)

    def zero(self, X):
        return (self.ring.zero,) * X.size

    def one(self, X):
        return (self.ring.one,) * X.size

    def add(self, X, a, b):
        return tuple(self.ring.add(x, y) for x, y in zip(a, b))

    def mul(self, X, a, b):
        return tuple(self.ring.mul(x, y) for x, y in zip(a, b))

    def R(self, f, b):
        return tuple(b[y] for y in f.table)

    def T(self, f, a):
        return tuple(self.ring.sum(a[x] for x in fib) for fib in f.fibers)

    def N(self, f, a):
        return tuple(self.ring.prod(a[x] for x in fib) for fib in f.fibers)

    def eq(self, X, a, b):
        return len(a) == len(b) and all(self.ring.eq(x, y) for x, y in zip(a, b))

    def is_equivariant(self, X, v):
        return all(self.ring.eq(v[X.act[g][x]], self.action(g, v[x]))
                   for g in X.group.elements for x in X.points)

    def extend(self, X, rep_values):
        """Value determined by its entries at the least point of each orbit."""
        v = [None] * X.size
        for orb, r in zip(X.orbits, rep_values):
            x = orb[0]
            for g in X.group.elements:
                v[X.act[g][x]] = self.action(g, r)
        return tuple(v)

    def _fixed(self, S, r):
        return all(self.ring.eq(self.action(h, r), r) for h in S)

    def sample(self, X, rng):
        reps = []
        for orb in X.orbits:
            S = X.stabilizers[orb[0]]
            r = self.ring.random(rng)
            if not self._fixed(S, r):
                r = self.ring.sum(self.action(h, r) for h in S)
            reps.append(r)
        return self.extend(X, reps)

    def elements(self, X):
        options = []
        for orb in X.orbits:
            S = X.stabilizers[orb[0]]
            options.append([r for r in self.ring.elements() if self._fixed(S, r)])
        return [self.extend(X, reps) for reps in itertools.product(*options)]


def fixed_point_tambara(group, R, action=None):
    return FixedPointTambara(group, R, action)
