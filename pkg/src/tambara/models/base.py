"""Carrier interfaces for Mackey and Tambara functor models, plus helpers
that only use the interface."""

from __future__ import annotations

from ..gsets import coproduct, fold_map, image_split


class MackeyCarrier:
    """Values on finite G-sets with restriction R_f and transfer T_f.

    For f: X -> Y, R(f, b) takes b in S(Y) to S(X) and T(f, a) takes a in
    S(X) to S(Y).  Value sets may be infinite; elements(X) and sample(X, rng)
    are optional capabilities.
    """

    group = None

    def zero(self, X):
        raise NotImplementedError

    def add(self, X, a, b):
        raise NotImplementedError

    def R(self, f, b):
        raise NotImplementedError

    def T(self, f, a):
        raise NotImplementedError

    def eq(self, X, a, b):
        return a == b

    def elements(self, X):
        raise NotImplementedError(f"{type(self).__name__} is not enumerable")

    def sample(self, X, rng):
        raise NotImplementedError(f"{type(self).__name__} cannot sample")

    def pair(self, XY, inl, inr, a, b):
        """The element of S(X + Y) with components a and b."""
        return self.add(XY, self.T(inl, a), self.T(inr, b))


class TambaraCarrier(MackeyCarrier):
    """Adds the multiplicative norm N_f and the semiring structure on S(X)."""

    def one(self, X):
        raise NotImplementedError

    def mul(self, X, a, b):
        raise NotImplementedError

    def N(self, f, a):
        raise NotImplementedError


def add_via_transfer(S, X, a, b):
    """a + b = T_s(a, b) for the fold map s: X + X -> X."""
    XX, inl, inr = coproduct(X, X)
    return S.T(fold_map(X), S.pair(XX, inl, inr, a, b))


def mul_via_norm(S, X, a, b):
    """a b = N_s(a, b) for the fold map s: X + X -> X."""
    XX, inl, inr = coproduct(X, X)
    return S.N(fold_map(X), S.pair(XX, inl, inr, a, b))


def zero_via_transfer(S, X):
    from ..gsets import empty_gset
    E = empty_gset(X.group)
    z = _empty_map(E, X)
    return S.T(z, S.zero(E))


def one_via_norm(S, X):
    from ..gsets import empty_gset
    E = empty_gset(X.group)
    return S.N(_empty_map(E, X), S.zero(E))


def _empty_map(E, X):
    from ..gsets import GMap
    return GMap(E, X, ())


def split_along_image(S, g, value):
    """Components of value in S(Y) on g(X) and on its complement."""
    img, rest = image_split(g)
    return S.R(img, value), S.R(rest, value)
