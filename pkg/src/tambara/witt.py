"""G-Witt vectors over a coefficient ring with trivial G-action.

A Witt vector is a tuple indexed by the subgroup classes of
subgroup_system(G) (ordered by order, then lex-least tuple).  The ghost map

    gamma(a)_j = sum_i |(G/H_i)^{H_j}| a_i^{|H_i|/|H_j|}

is triangular with diagonal |W_G(H_j)|, so sums and products are solved
back from ghost coordinates, largest class first.  Coefficients can be
ints, sympy integer polynomials, or anything with +, -, *, ** and an exact
division by integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import ZZ
from sympy.polys.rings import PolyElement, ring

from .errors import IntegralityError, PreconditionError
from .groups import subgroup_system
from .gsets import orbit, orbit_map, point, sections, terminal_map
from .semirings import MonoidElement, bracket_power


def _check_length(G, a):
    r = len(subgroup_system(G).reps)
    if len(a) != r:
        raise PreconditionError(f"expected {r} coordinates (one per subgroup class), got {len(a)}")
    return r


def _zero_like(v):
    return v * 0


def _exact_div(v, d):
    """v / d, asserting the quotient is integral."""
    if d == 1:
        return v
    if isinstance(v, int):
        if v % d:
            raise IntegralityError(f"{v} is not divisible by {d}")
        return v // d
    if isinstance(v, PolyElement):
        for monom, c in v.terms():
            if c % d:
                raise IntegralityError(f"coefficient {c} of monomial {monom} is not divisible by {d}")
        return v.quo_ground(d)
    if isinstance(v, MonoidElement):
        out = {}
        for m, c in v.coeffs.items():
            if c % d:
                raise IntegralityError(f"coefficient {c} at [{m}] is not divisible by {d}")
            out[m] = c // d
        return MonoidElement(v.monoid, out)
    if isinstance(v, Fraction):
        return v / d
    raise PreconditionError(f"no exact division for {type(v).__name__}")


def ghost(G, a, power=None):
    """The ghost components of a.  power(x, k) defaults to x ** k."""
    _check_length(G, a)
    system = subgroup_system(G)
    marks, orders = system.marks, system.orders
    power = power or (lambda x, k: x ** k)
    out = []
    for j in range(len(a)):
        total = _zero_like(a[j])
        for i in range(len(a)):
            m = marks[i][j]
            if m:
                total = total + m * power(a[i], orders[i] // orders[j])
        out.append(total)
    return tuple(out)


def ghost_solve(G, g):
    """The unique z with ghost(z) = g, or IntegralityError if z is not integral."""
    _check_length(G, g)
    system = subgroup_system(G)
    marks, orders = system.marks, system.orders
    r = len(g)
    z = [None] * r
    for j in reversed(range(r)):
        rest = g[j]
        for i in range(j + 1, r):
            m = marks[i][j]
            if m:
                rest = rest - m * z[i] ** (orders[i] // orders[j])
        z[j] = _exact_div(rest, marks[j][j])
    return tuple(z)


def witt_add(G, x, y):
    gx, gy = ghost(G, x), ghost(G, y)
    return ghost_solve(G, tuple(u + v for u, v in zip(gx, gy)))


def witt_mul(G, x, y):
    gx, gy = ghost(G, x), ghost(G, y)
    return ghost_solve(G, tuple(u * v for u, v in zip(gx, gy)))


def witt_neg(G, x):
    return ghost_solve(G, tuple(-u for u in ghost(G, x)))


def witt_sub(G, x, y):
    return witt_add(G, x, witt_neg(G, y))


def witt_zero(G):
    return (0,) * len(subgroup_system(G).reps)


def witt_one(G):
    """delta_G: 1 at the class of G itself."""
    r = len(subgroup_system(G).reps)
    return (0,) * (r - 1) + (1,)


def basis_vector(G, i, c=1):
    r = len(subgroup_system(G).reps)
    v = [0] * r
    v[i] = c
    return tuple(v)


# ----------------------------------------------------- universal polynomials

@dataclass(frozen=True)
class WittUniversalPolynomials:
    group: object
    ring: object
    xs: tuple
    ys: tuple
    sums: tuple
    prods: tuple

    def coefficients(self):
        """Every integer coefficient appearing in the sum and product polynomials."""
        return [c for p in self.sums + self.prods for c in p.coeffs()]

    def as_text(self):
        """Polynomials as strings, keyed by 'sum' and 'prod'."""
        return {"sum": [str(p.as_expr()) for p in self.sums],
                "prod": [str(p.as_expr()) for p in self.prods]}


@lru_cache(maxsize=None)
def witt_universal(G):
    """Sum and product polynomials over Z[x_i, y_i], computed once per group."""
    r = len(subgroup_system(G).reps)
    names = [f"x{i}" for i in range(r)] + [f"y{i}" for i in range(r)]
    R, *gens = ring(",".join(names), ZZ)
    xs, ys = tuple(gens[:r]), tuple(gens[r:])
    return WittUniversalPolynomials(G, R, xs, ys, witt_add(G, xs, ys), witt_mul(G, xs, ys))


def _evaluate(poly, values, S=None):
    """Substitute values for the generators; S is an optional Semiring carrier."""
    total = None
    for monom, c in poly.terms():
        if S is None:
            term = c
            for v, e in zip(values, monom):
                if e:
                    term = term * v ** e
        else:
            term = S.from_int(int(c))
            for v, e in zip(values, monom):
                if e:
                    term = S.mul(term, S.power(v, e))
        if total is None:
            total = term
        else:
            total = total + term if S is None else S.add(total, term)
    if total is None:
        return 0 if S is None else S.zero
    return total


def witt_specialize(polys, x, y, op="add", S=None):
    """Evaluate the universal sum (op='add') or product (op='mul') at x, y.

    With S None the values use Python arithmetic; otherwise S supplies
    add, mul, power and from_int (negative integers need S.neg).
    """
    _check_length(polys.group, x)
    _check_length(polys.group, y)
    if op not in ("add", "mul"):
        raise PreconditionError("op must be 'add' or 'mul'")
    table = polys.sums if op == "add" else polys.prods
    values = list(x) + list(y)
    return tuple(_evaluate(p, values, S) for p in table)


# --------------------------------------------------------- tau and phi

def _burnside_plus(G, cap=None):
    from .models.burnside import BurnsideTambara
    from .models.completion import CompletionCarrier
    return CompletionCarrier(BurnsideTambara(G, cap))


def nu(P, uhat, c):
    """nu_U(c) = N_uhat(c.1) in Burnside+(U) for uhat: G -> U and c an integer.

    For c < 0 this uses multiplicativity, nu(c) = nu(-1) nu(-c); both factors
    are norms.  The direct norm of a negative multiple agrees (it is slower).
    """
    G = P.group
    B = P.base
    regular = uhat.dom
    if c < 0:
        minus_one = P.N(uhat, ((), B.one(regular)))
        return P.mul(uhat.cod, minus_one, nu(P, uhat, -c))
    many = tuple(sorted(B.one(regular) * c))
    return P.N(uhat, (many, ()))


def tau(G, a, cap=None):
    """tau(a) = sum_i T_{x_i} nu_{U_i}(a_i) in Burnside+(pt), as signed orbit
    counts: sum_i n_i [G/H_i] is returned as (n_0, ..., n_{r-1})."""
    _check_length(G, a)
    system = subgroup_system(G)
    P = _burnside_plus(G, cap)
    B = P.base
    pt = point(G)
    total = P.zero(pt)
    for i, c in enumerate(a):
        c = int(c)
        if c == 0:
            continue
        uhat = orbit_map(G, G.trivial, system.reps[i], G.identity)
        total = P.add(pt, total, P.T(terminal_map(uhat.cod), nu(P, uhat, c)))
    pos, neg = P.normalize(pt, total)
    return tuple(p - n for p, n in zip(B.counts(pos), B.counts(neg)))


def phi(G, counts):
    """The marks homomorphism on sum_i n_i [G/H_i]: component j is sum_i n_i |(G/H_i)^{H_j}|."""
    _check_length(G, counts)
    marks = subgroup_system(G).marks
    r = len(counts)
    return tuple(sum(counts[i] * marks[i][j] for i in range(r)) for j in range(r))


def burnside_product_counts(G, b1, b2, cap=None):
    """Product of two orbit-count vectors in Burnside+(pt), computed by pullback."""
    from .models.burnside import BurnsideTambara
    B = BurnsideTambara(G, cap)
    pt = point(G)

    def split(c):
        return (B.from_counts(pt, [max(v, 0) for v in c]),
                B.from_counts(pt, [max(-v, 0) for v in c]))

    p1, n1 = split(b1)
    p2, n2 = split(b2)
    pos = B.add(pt, B.mul(pt, p1, p2), B.mul(pt, n1, n2))
    neg = B.add(pt, B.mul(pt, p1, n2), B.mul(pt, n1, p2))
    return tuple(p - n for p, n in zip(B.counts(pos), B.counts(neg)))


# --------------------------------------------------- bracket-power variant

def ghost_bracket(G, a):
    """ghost with x^k replaced by the bracket power x^<k> on N[M]."""
    return ghost(G, a, power=bracket_power)


class MonoidWitt:
    """tau' and beta' between Map(sub(G), N[M]) and A[dM](pt), for a finite
    commutative monoid M with trivial G-action.

    dM(U) = Map(U, M)_G is identified with M by summing a representative.
    """

    def __init__(self, G, M, cap=None):
        from .models.monoid_burnside import CoconstantMackey, MonoidBurnside
        self.group = G
        self.monoid = M
        self.cap = cap
        self.dM = CoconstantMackey(G, M)
        self.AM = MonoidBurnside(self.dM)
        self.system = subgroup_system(G)

    def collapse(self, value):
        s = self.monoid.zero
        for v in value:
            s = self.monoid.add(s, v)
        return s

    def lam(self, U, m):
        """lambda(m) = [U -1-> U, m] with m placed at one point of U."""
        rep = (m,) + (self.monoid.zero,) * (U.size - 1)
        return self.AM.unit(U, self.dM.canon(U, rep))

    def nu_prime(self, U, a):
        AM = self.AM
        total = AM.zero(U)
        for m, n in sorted(a.coeffs.items()):
            if n < 0:
                raise PreconditionError("nu' is defined on N[M]")
            for _ in range(n):
                total = AM.add(U, total, self.lam(U, m))
        return total

    def tau_prime(self, a):
        """sum_i T_{x_i} nu'_{U_i}(a_i) in A[dM](pt)."""
        _check_length(self.group, a)
        pt = point(self.group)
        total = self.AM.zero(pt)
        for i, ai in enumerate(a):
            U = orbit(self.group, self.system.reps[i])
            total = self.AM.add(pt, total, self.AM.T(terminal_map(U), self.nu_prime(U, ai)))
        return total

    def beta0(self, U, value):
        """sum over sections w of u: W -> U of R_w(m), as an element of N[M]."""
        u, m = self.AM.realize(U, value)
        out = {}
        for w in sections(u, self.cap):
            k = self.collapse(self.dM.R(w, m))
            out[k] = out.get(k, 0) + 1
        return MonoidElement(self.monoid, out)

    def beta_prime(self, value):
        """beta'(a)(H_i) = beta0(R_{x_i} a) for a in A[dM](pt)."""
        pt = point(self.group)
        out = []
        for H in self.system.reps:
            U = orbit(self.group, H)
            out.append(self.beta0(U, self.AM.R(terminal_map(U), value)))
        return tuple(out)


class WittGroup:
    """W_G(Z) as a ring object for the difference-operator machinery."""

    has_negatives = True
    cancellative = True

    def __init__(self, G):
        self.group = G
        self.zero = witt_zero(G)
        self.one = witt_one(G)

    def add(self, a, b):
        return witt_add(self.group, a, b)

    def mul(self, a, b):
        return witt_mul(self.group, a, b)

    def neg(self, a):
        return witt_neg(self.group, a)

    def sub(self, a, b):
        return witt_sub(self.group, a, b)

    def eq(self, a, b):
        return tuple(a) == tuple(b)
