"""Coefficient algebra: exact (semi)rings, finite commutative semigroups and
semirings given by tables, congruence closure, quotients, coinvariants,
additive completion, monoid semirings with bracket powers, and difference
operators for polynomial maps."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import PreconditionError, UnsupportedCarrierError, ValidationError


class Semiring:
    """Commutative semiring interface used by the carriers.

    Elements are plain Python values; subclasses supply the operations.
    """

    zero = None
    one = None
    has_negatives = False
    cancellative = False
    finite = False

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def eq(self, a, b):
        return a == b

    def neg(self, a):
        raise UnsupportedCarrierError(f"{type(self).__name__} has no negatives")

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def from_int(self, n):
        if n < 0:
            return self.neg(self.from_int(-n))
        out = self.zero
        for _ in range(n):
            out = self.add(out, self.one)
        return out

    def sum(self, items):
        out = self.zero
        for x in items:
            out = self.add(out, x)
        return out

    def prod(self, items):
        out = self.one
        for x in items:
            out = self.mul(out, x)
        return out

    def power(self, a, k):
        out = self.one
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def act(self, g, a):
        """Group action on elements; trivial unless overridden."""
        return a

    def elements(self):
        raise UnsupportedCarrierError("carrier is not enumerable")

    def random(self, rng):
        return rng.choice(list(self.elements()))


class IntegerRing(Semiring):
    zero, one = 0, 1
    has_negatives = True
    cancellative = True

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def from_int(self, n):
        return n

    def power(self, a, k):
        return a ** k

    def random(self, rng):
        return rng.randint(-4, 4)


class NaturalSemiring(IntegerRing):
    has_negatives = False

    def random(self, rng):
        return rng.randint(0, 4)

    def neg(self, a):
        raise UnsupportedCarrierError("natural numbers have no negatives")

    def from_int(self, n):
        if n < 0:
            raise PreconditionError("negative natural number")
        return n


class RationalField(IntegerRing):
    zero, one = Fraction(0), Fraction(1)

    def from_int(self, n):
        return Fraction(n)


class SwapPairs(Semiring):
    """Z x Z with C2 (or any group through a sign character) swapping coordinates.

    parity(g) decides whether g swaps; used as a nontrivial G-semiring.
    """

    zero, one = (0, 0), (1, 1)
    has_negatives = True
    cancellative = True

    def __init__(self, parity):
        self.parity = parity

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def mul(self, a, b):
        return (a[0] * b[0], a[1] * b[1])

    def neg(self, a):
        return (-a[0], -a[1])

    def from_int(self, n):
        return (n, n)

    def act(self, g, a):
        return (a[1], a[0]) if self.parity(g) else a

    def random(self, rng):
        return (rng.randint(-3, 3), rng.randint(-3, 3))


# ------------------------------------------------------------- finite tables

@dataclass(frozen=True, eq=False)
class FinCommSemigroup(Semiring):
    """Finite commutative semigroup on {0..n-1} written additively; zero is
    the neutral element, or None for a semigroup without one."""

    add_table: tuple
    zero: int = 0

    @property
    def size(self):
        return len(self.add_table)

    finite = True

    def add(self, a, b):
        return self.add_table[a][b]

    def elements(self):
        return range(self.size)

    def validate(self):
        if self.zero is None:
            _check_semigroup(self.add_table, "addition")
        else:
            _check_monoid(self.add_table, self.zero, "addition")
        return self

    def tables(self):
        return (self.add_table,)


@dataclass(frozen=True, eq=False)
class FinCommSemiring(FinCommSemigroup):
    mul_table: tuple = ()
    one: int = 1

    def mul(self, a, b):
        return self.mul_table[a][b]

    def validate(self):
        n = self.size
        _check_monoid(self.add_table, self.zero, "addition")
        _check_monoid(self.mul_table, self.one, "multiplication")
        A, M = self.add_table, self.mul_table
        for a in range(n):
            if M[self.zero][a] != self.zero:
                raise ValidationError(f"absorption: 0*{a} != 0")
        for a, b, c in itertools.product(range(n), repeat=3):
            if M[a][A[b][c]] != A[M[a][b]][M[a][c]]:
                raise ValidationError(f"distributivity fails on ({a}, {b}, {c})")
        return self

    def tables(self):
        return (self.add_table, self.mul_table)

    @property
    def has_negatives(self):
        return all(any(self.add_table[a][b] == self.zero for b in range(self.size))
                   for a in range(self.size))

    def neg(self, a):
        for b in range(self.size):
            if self.add_table[a][b] == self.zero:
                return b
        raise UnsupportedCarrierError(f"element {a} has no additive inverse")


def _check_semigroup(T, what):
    n = len(T)
    for a in range(n):
        if len(T[a]) != n or any(not 0 <= v < n for v in T[a]):
            raise ValidationError(f"{what}: malformed table row {a}")
        for b in range(n):
            if T[a][b] != T[b][a]:
                raise ValidationError(f"{what}: commutativity fails on ({a}, {b})")
    for a, b, c in itertools.product(range(n), repeat=3):
        if T[T[a][b]][c] != T[a][T[b][c]]:
            raise ValidationError(f"{what}: associativity fails on ({a}, {b}, {c})")


def _check_monoid(T, e, what):
    n = len(T)
    for a in range(n):
        if len(T[a]) != n or any(not 0 <= v < n for v in T[a]):
            raise ValidationError(f"{what}: malformed table row {a}")
        if T[e][a] != a:
            raise ValidationError(f"{what}: {e} is not neutral for {a}")
        for b in range(n):
            if T[a][b] != T[b][a]:
                raise ValidationError(f"{what}: commutativity fails on ({a}, {b})")
    for a, b, c in itertools.product(range(n), repeat=3):
        if T[T[a][b]][c] != T[a][T[b][c]]:
            raise ValidationError(f"{what}: associativity fails on ({a}, {b}, {c})")


def zmod(n):
    add = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    mul = tuple(tuple((a * b) % n for b in range(n)) for a in range(n))
    return FinCommSemiring(add, 0, mul, 1 % n)


def truncated_naturals(cap):
    """{0..cap} with saturating addition and multiplication."""
    r = range(cap + 1)
    add = tuple(tuple(min(a + b, cap) for b in r) for a in r)
    mul = tuple(tuple(min(a * b, cap) for b in r) for a in r)
    return FinCommSemiring(add, 0, mul, 1 if cap else 0)


def truncated_naturals_squared(cap):
    """Pairs (i, j) with 0 <= i, j <= cap, coordinatewise saturating; index i*(cap+1)+j."""
    base = truncated_naturals(cap)
    k = cap + 1
    n = k * k
    add = tuple(tuple(base.add(a // k, b // k) * k + base.add(a % k, b % k) for b in range(n))
                for a in range(n))
    mul = tuple(tuple(base.mul(a // k, b // k) * k + base.mul(a % k, b % k) for b in range(n))
                for a in range(n))
    return FinCommSemiring(add, 0, mul, (1 % k) * k + 1 % k)


def field_f4():
    """F_4 = {0, 1, w, w^2} with indices 0, 1, 2, 3."""
    # addition is xor on the basis (1, w): 0=00, 1=01, w=10, w^2=w+1=11
    add = tuple(tuple(a ^ b for b in range(4)) for a in range(4))
    log = {1: 0, 2: 1, 3: 2}
    exp = {0: 1, 1: 2, 2: 3}
    mul = tuple(tuple(0 if a == 0 or b == 0 else exp[(log[a] + log[b]) % 3] for b in range(4))
                for a in range(4))
    return FinCommSemiring(add, 0, mul, 1)


# ------------------------------------------------------------------ congruences

class Congruence:
    """A partition of {0..n-1}, stored through a union-find forest."""

    def __init__(self, n):
        self.parent = list(range(n))
        self.rounds = 0

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True

    def same(self, a, b):
        return self.find(a) == self.find(b)

    def classes(self):
        groups = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return sorted(groups.values())

    def class_index(self):
        idx = {}
        for k, cls in enumerate(self.classes()):
            for x in cls:
                idx[x] = k
        return idx


def congruence_closure(S, pairs, mode="semigroup"):
    """Least congruence containing pairs.

    Alternates an operation pass (translate every related pair by every
    element, and multiply in semiring mode) with the transitive closure kept
    by the union-find forest, until nothing changes.  The number of passes is
    stored in .rounds.
    """
    tables = _mode_tables(S, mode)
    n = S.size
    E = Congruence(n)
    for a, b in pairs:
        E.union(a, b)
    changed = True
    while changed:
        E.rounds += 1
        changed = False
        for a in range(n):
            ra = E.find(a)
            if ra == a:
                continue
            for T in tables:
                row_a, row_r = T[a], T[ra]
                for c in range(n):
                    if E.union(row_a[c], row_r[c]):
                        changed = True
    return E


def _mode_tables(S, mode):
    if mode == "semigroup":
        return (S.add_table,)
    if mode == "semiring":
        if not isinstance(S, FinCommSemiring):
            raise PreconditionError("semiring mode needs a semiring")
        return (S.add_table, S.mul_table)
    raise PreconditionError(f"unknown closure mode {mode!r}")


def closure_tower(S, pairs, mode="semigroup"):
    """The literal E(n) tower: E(0) reflexive-symmetric closure of pairs,
    odd steps close under the operations, even steps take transitive
    closure.  Returns the list of |E(n)| until it stabilizes."""
    tables = _mode_tables(S, mode)
    n = S.size
    E = {(a, a) for a in range(n)} | set(pairs) | {(b, a) for a, b in pairs}
    sizes = [len(E)]
    step = 0
    while True:
        step += 1
        if step % 2:
            new = set(E)
            lst = list(E)
            for T in tables:
                for (a, b) in lst:
                    for (c, d) in lst:
                        new.add((T[a][c], T[b][d]))
        else:
            new = _transitive(E, n)
        sizes.append(len(new))
        if new == E and step >= 2:
            return sizes
        E = new


def _transitive(E, n):
    uf = Congruence(n)
    for a, b in E:
        uf.union(a, b)
    return {(a, b) for cls in uf.classes() for a in cls for b in cls}


def is_congruence(S, partition_index, mode="semigroup"):
    tables = _mode_tables(S, mode)
    n = S.size
    for T in tables:
        for a in range(n):
            for b in range(a + 1, n):
                if partition_index[a] != partition_index[b]:
                    continue
                for c in range(n):
                    if partition_index[T[a][c]] != partition_index[T[b][c]]:
                        return False
    return True


def quotient(S, E):
    """Quotient carrier with induced tables; returns (carrier, projection list)."""
    idx = E.class_index()
    classes = E.classes()
    reps = [c[0] for c in classes]

    def induced(T):
        return tuple(tuple(idx[T[a][b]] for b in reps) for a in reps)

    proj = tuple(idx[x] for x in range(S.size))
    if isinstance(S, FinCommSemiring):
        Q = FinCommSemiring(induced(S.add_table), idx[S.zero], induced(S.mul_table), idx[S.one])
    else:
        Q = FinCommSemigroup(induced(S.add_table), None if S.zero is None else idx[S.zero])
    return Q, proj


def coinvariants(S, action, mode="semigroup"):
    """Quotient of S by the closure of {(m, g.m)}.

    action is a sequence of permutations of the carrier, one per group
    element; each must be an automorphism of the structure used by mode.
    """
    tables = _mode_tables(S, mode)
    n = S.size
    for perm in action:
        if sorted(perm) != list(range(n)):
            raise ValidationError("action entry is not a permutation")
        for T in tables:
            for a in range(n):
                for b in range(n):
                    if perm[T[a][b]] != T[perm[a]][perm[b]]:
                        raise ValidationError(f"action is not by automorphisms at ({a}, {b})")
    pairs = [(m, perm[m]) for perm in action for m in range(n)]
    E = congruence_closure(S, pairs, mode)
    return quotient(S, E)


def enumerate_comm_monoids(n, up_to_iso=True):
    """All commutative monoid tables on {0..n-1} with neutral element 0."""
    if n == 0:
        return []
    if n == 1:
        return [((0,),)]
    cells = [(a, b) for a in range(1, n) for b in range(a, n)]
    T = [[None] * n for _ in range(n)]
    for a in range(n):
        T[0][a] = T[a][0] = a
    out = []

    def consistent():
        for a in range(n):
            for b in range(n):
                ab = T[a][b]
                if ab is None:
                    continue
                for c in range(n):
                    bc = T[b][c]
                    if bc is None:
                        continue
                    l, r = T[ab][c], T[a][bc]
                    if l is not None and r is not None and l != r:
                        return False
        return True

    def rec(k):
        if k == len(cells):
            out.append(tuple(tuple(row) for row in T))
            return
        a, b = cells[k]
        for v in range(n):
            T[a][b] = T[b][a] = v
            if consistent():
                rec(k + 1)
        T[a][b] = T[b][a] = None

    rec(0)
    if not up_to_iso:
        return out
    seen = set()
    reps = []
    for tab in out:
        canon = min(_relabel(tab, (0,) + p) for p in itertools.permutations(range(1, n)))
        if canon not in seen:
            seen.add(canon)
            reps.append(tab)
    return reps


@lru_cache(maxsize=None)
def enumerate_comm_semigroups(n):
    """Commutative semigroup tables on {0..n-1}, one per isomorphism class."""
    if n == 0:
        return ()
    cells = [(a, b) for a in range(n) for b in range(a, n)]
    T = [[None] * n for _ in range(n)]
    labeled = []

    def consistent():
        for x in range(n):
            for y in range(n):
                xy = T[x][y]
                if xy is None:
                    continue
                for z in range(n):
                    yz = T[y][z]
                    if yz is None:
                        continue
                    l, r = T[xy][z], T[x][yz]
                    if l is not None and r is not None and l != r:
                        return False
        return True

    def rec(k):
        if k == len(cells):
            labeled.append(tuple(tuple(row) for row in T))
            return
        a, b = cells[k]
        for v in range(n):
            T[a][b] = T[b][a] = v
            if consistent():
                rec(k + 1)
        T[a][b] = T[b][a] = None

    rec(0)
    seen = set()
    reps = []
    for tab in labeled:
        if tab in seen:
            continue
        reps.append(tab)
        for perm in itertools.permutations(range(n)):
            seen.add(_relabel(tab, perm))
    return tuple(reps)


def _relabel(tab, perm):
    """Table of the isomorphic monoid obtained by renaming x to perm[x]."""
    n = len(tab)
    inv = [0] * n
    for x, y in enumerate(perm):
        inv[y] = x
    return tuple(tuple(perm[tab[inv[a]][inv[b]]] for b in range(n)) for a in range(n))


def enumerate_comm_semirings(n):
    """All commutative semiring structures on {0..n-1} with 0 additive and 1
    multiplicative neutral (n >= 2); additive tables up to isomorphism."""
    out = []
    for add in enumerate_comm_monoids(n):
        cells = [(a, b) for a in range(2, n) for b in range(a, n)]
        M = [[None] * n for _ in range(n)]
        for a in range(n):
            M[0][a] = M[a][0] = 0
            M[1][a] = M[a][1] = a

        def ok():
            for a in range(n):
                for b in range(n):
                    ab = M[a][b]
                    if ab is None:
                        continue
                    for c in range(n):
                        bc = M[b][c]
                        if bc is not None and M[ab][c] is not None and M[a][bc] is not None:
                            if M[ab][c] != M[a][bc]:
                                return False
                        mbc = M[a][add[b][c]]
                        if mbc is not None and M[a][c] is not None and ab is not None:
                            if mbc != add[ab][M[a][c]]:
                                return False
            return True

        def rec(k):
            if k == len(cells):
                out.append(FinCommSemiring(add, 0, tuple(tuple(r) for r in M), 1))
                return
            a, b = cells[k]
            for v in range(n):
                M[a][b] = M[b][a] = v
                if ok():
                    rec(k + 1)
            M[a][b] = M[b][a] = None

        rec(0)
    return out


def automorphisms(S):
    n = S.size
    tables = S.tables()
    fixed = {S.zero} | ({S.one} if isinstance(S, FinCommSemiring) else set())
    out = []
    for perm in itertools.permutations(range(n)):
        if any(perm[x] != x for x in fixed):
            continue
        if all(perm[T[a][b]] == T[perm[a]][perm[b]] for T in tables
               for a in range(n) for b in range(n)):
            out.append(perm)
    return out


# -------------------------------------------------------- additive completion

class CompletionSemiring(Semiring):
    """Pairs (a+, a-) over a base semiring, read as a+ - a-."""

    has_negatives = True
    cancellative = True

    def __init__(self, base):
        self.base = base
        self.zero = (base.zero, base.zero)
        self.one = (base.one, base.zero)
        if not (base.cancellative or base.finite):
            self._decidable = False
        else:
            self._decidable = True

    def embed(self, a):
        return (a, self.base.zero)

    def add(self, a, b):
        B = self.base
        return (B.add(a[0], b[0]), B.add(a[1], b[1]))

    def mul(self, a, b):
        B = self.base
        return (B.add(B.mul(a[0], b[0]), B.mul(a[1], b[1])),
                B.add(B.mul(a[0], b[1]), B.mul(a[1], b[0])))

    def neg(self, a):
        return (a[1], a[0])

    def eq(self, a, b):
        B = self.base
        lhs = B.add(a[0], b[1])
        rhs = B.add(a[1], b[0])
        if B.cancellative:
            return B.eq(lhs, rhs)
        if B.finite:
            return any(B.eq(B.add(lhs, x), B.add(rhs, x)) for x in B.elements())
        raise UnsupportedCarrierError("completion equality undecidable on this carrier")

    def from_int(self, n):
        B = self.base
        return (B.from_int(n), B.zero) if n >= 0 else (B.zero, B.from_int(-n))

    def act(self, g, a):
        return (self.base.act(g, a[0]), self.base.act(g, a[1]))

    def random(self, rng):
        return (self.base.random(rng), self.base.random(rng))


def additive_completion(A):
    return CompletionSemiring(A)


# ------------------------------------------------------------ monoid semirings

class MonoidElement:
    """A finitely supported formal sum sum n_m [m] over a commutative monoid."""

    __slots__ = ("monoid", "coeffs")

    def __init__(self, monoid, coeffs):
        self.monoid = monoid
        self.coeffs = {m: c for m, c in dict(coeffs).items() if c != 0}

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + c
        return MonoidElement(self.monoid, out)

    __radd__ = __add__

    def __neg__(self):
        return MonoidElement(self.monoid, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for m, c in self.coeffs.items():
            for k, d in other.coeffs.items():
                mk = self.monoid.add(m, k)
                out[mk] = out.get(mk, 0) + c * d
        return MonoidElement(self.monoid, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = MonoidElement(self.monoid, {self.monoid.zero: 1})
        for _ in range(k):
            out = out * self
        return out

    def _coerce(self, other):
        if isinstance(other, MonoidElement):
            return other
        return MonoidElement(self.monoid, {self.monoid.zero: other})

    def __eq__(self, other):
        if not isinstance(other, MonoidElement):
            other = self._coerce(other)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}[{m}]" for m, c in sorted(self.coeffs.items()))


class MonoidSemiring(Semiring):
    """N[M] (or Z[M]) for a finite commutative monoid M."""

    cancellative = True

    def __init__(self, monoid):
        self.monoid = monoid
        self.zero = MonoidElement(monoid, {})
        self.one = MonoidElement(monoid, {monoid.zero: 1})

    def basis(self, m, n=1):
        return MonoidElement(self.monoid, {m: n})

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b


def monoid_semiring(M):
    return MonoidSemiring(M)


def monoid_multiple(M, m, k):
    """k.m in the monoid M (additive notation)."""
    out = M.zero
    for _ in range(k):
        out = M.add(out, m)
    return out


def bracket_power(a, k):
    """(sum n_i [m_i])^<k> = sum n_i [k m_i]."""
    if k < 0:
        raise PreconditionError("bracket power needs k >= 0")
    out = {}
    for m, c in a.coeffs.items():
        km = monoid_multiple(a.monoid, m, k)
        out[km] = out.get(km, 0) + c
    return MonoidElement(a.monoid, out)


def cyclic_monoid(n):
    """Z/n as a finite commutative monoid."""
    return FinCommSemigroup(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)), 0)


# ------------------------------------------------------------ polynomial maps

def _require_group(group):
    if not getattr(group, "has_negatives", False):
        raise UnsupportedCarrierError("difference operators need an additively complete carrier")


def delta_operator(f, a, source, target=None):
    """(delta[a] f)(x) = f(a + x) - f(x)"""
    target = source if target is None else target
    _require_group(source)
    _require_group(target)
    return lambda x: target.sub(f(source.add(a, x)), f(x))


def delta_multi(f, avec, source, target=None):
    """delta[I, a] f = sum over J subset I of (-1)^{|I - J|} f(sigma(J, a) + x)."""
    target = source if target is None else target
    _require_group(source)
    _require_group(target)
    avec = list(avec)
    return lambda x: _delta_value(f, avec, x, source, target)


def polynomial_degree_at_most(f, n, samples, source, target=None):
    """Check delta[I, a] f (x) = 0 for |I| = n + 1 on samples of (a_1..a_{n+1}, x).

    Returns (True, None) or (False, (avec, x, value)).
    """
    target = source if target is None else target
    _require_group(source)
    _require_group(target)
    for avec, x in samples:
        if len(avec) != n + 1:
            raise PreconditionError("each sample needs n + 1 increments")
        value = _delta_value(f, avec, x, source, target)
        if not target.eq(value, target.zero):
            return False, (tuple(avec), x, value)
    return True, None


def _delta_value(f, avec, x, source, target):
    k = len(avec)
    total = target.zero
    for mask in range(1 << k):
        s = x
        bits = 0
        for i in range(k):
            if mask >> i & 1:
                s = source.add(s, avec[i])
                bits += 1
        val = f(s)
        if (k - bits) % 2:
            val = target.neg(val)
        total = target.add(total, val)
    return total
