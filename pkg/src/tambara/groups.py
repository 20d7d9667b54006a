"""Finite groups given by multiplication tables, their subgroups up to
conjugacy, and double coset decompositions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .errors import PreconditionError, ValidationError


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    mult: tuple
    identity: int
    inv: tuple
    name: str = ""

    @property
    def order(self):
        return len(self.mult)

    @property
    def elements(self):
        return range(len(self.mult))

    def mul(self, a, b):
        return self.mult[a][b]

    def conj(self, g, x):
        """g x g^-1"""
        return self.mult[self.mult[g][x]][self.inv[g]]

    def element_order(self, x):
        k, y = 1, x
        while y != self.identity:
            y = self.mult[y][x]
            k += 1
        return k

    @cached_property
    def _key(self):
        return (self.mult, self.identity)

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self._key == other._key

    @cached_property
    def _hash(self):
        return hash(self._key)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FiniteGroup({self.name or 'table'}, order={self.order})"

    @cached_property
    def trivial(self):
        return Subgroup((self.identity,))

    @cached_property
    def whole(self):
        return Subgroup(tuple(self.elements))


@dataclass(frozen=True, order=True)
class Subgroup:
    elements: tuple

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self._set

    @cached_property
    def _set(self):
        return frozenset(self.elements)

    @property
    def order(self):
        return len(self.elements)

    def issubset(self, other):
        return self._set <= other._set


def from_table(table, name="table"):
    """Validate a multiplication table and wrap it as a FiniteGroup."""
    n = len(table)
    if n == 0:
        raise ValidationError("closure: empty table")
    mult = tuple(tuple(int(v) for v in row) for row in table)
    for a, row in enumerate(mult):
        if len(row) != n:
            raise ValidationError(f"closure: row {a} has length {len(row)}, expected {n}")
        for b, v in enumerate(row):
            if not 0 <= v < n:
                raise ValidationError(f"closure: {a}*{b} = {v} is out of range")
    identity = None
    for e in range(n):
        if all(mult[e][x] == x and mult[x][e] == x for x in range(n)):
            identity = e
            break
    if identity is None:
        raise ValidationError("identity: no two-sided identity element")
    inv = []
    for a in range(n):
        cands = [b for b in range(n) if mult[a][b] == identity and mult[b][a] == identity]
        if not cands:
            raise ValidationError(f"inverse: element {a} has no two-sided inverse")
        inv.append(cands[0])
    for a, b, c in itertools.product(range(n), repeat=3):
        if mult[mult[a][b]][c] != mult[a][mult[b][c]]:
            raise ValidationError(f"associativity: fails on witness triple ({a}, {b}, {c})")
    return FiniteGroup(mult, identity, tuple(inv), name)


def cyclic(n):
    if n < 1:
        raise PreconditionError("cyclic group needs n >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return from_table(table, f"cyclic:{n}")


def symmetric(n):
    """Permutations of {0..n-1} in lexicographic order; (st)(x) = s(t(x))."""
    if n < 1:
        raise PreconditionError("symmetric group needs n >= 1")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(s[t[x]] for x in range(n))] for t in perms] for s in perms]
    return from_table(table, f"symmetric:{n}")


def dihedral(n):
    """Symmetries of the regular n-gon (order 2n); element r^k s^e has index k + n*e."""
    if n < 1:
        raise PreconditionError("dihedral group needs n >= 1")

    def mul(a, b):
        k1, e1 = a % n, a // n
        k2, e2 = b % n, b // n
        # r^k1 s^e1 r^k2 s^e2 = r^(k1 + (-1)^e1 k2) s^(e1+e2)
        k = (k1 + (k2 if e1 == 0 else -k2)) % n
        return k + n * ((e1 + e2) % 2)

    table = [[mul(a, b) for b in range(2 * n)] for a in range(2 * n)]
    return from_table(table, f"dihedral:{n}")


def direct_product(G, H):
    m = H.order
    table = [
        [G.mult[a // m][b // m] * m + H.mult[a % m][b % m] for b in range(G.order * m)]
        for a in range(G.order * m)
    ]
    return from_table(table, f"{G.name}x{H.name}")


def make_group(spec):
    """Build a group from a spec string (cyclic:N, symmetric:N, dihedral:N,
    or table: followed by rows), a (family, n) tuple, or an explicit table."""
    if isinstance(spec, FiniteGroup):
        return spec
    if isinstance(spec, tuple) and len(spec) == 2 and isinstance(spec[0], str):
        return make_group(f"{spec[0]}:{spec[1]}")
    if isinstance(spec, str):
        family, _, rest = spec.strip().partition(":")
        family = family.strip().lower()
        families = {"cyclic": cyclic, "symmetric": symmetric, "dihedral": dihedral}
        if family in families:
            try:
                n = int(rest)
            except ValueError:
                raise ValidationError(f"bad group size in spec {spec!r}") from None
            return families[family](n)
        if family == "table":
            rows = [r for r in rest.replace(";", "\n").splitlines() if r.strip()]
            try:
                table = [[int(v) for v in r.replace(",", " ").split()] for r in rows]
            except ValueError:
                raise ValidationError("table rows must be integers") from None
            return from_table(table)
        raise ValidationError(f"unknown group family {family!r}")
    return from_table(spec)


def generated(G, gens):
    """The subgroup generated by gens."""
    elems = {G.identity}
    frontier = [G.identity]
    gens = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mult[x][g]
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(tuple(sorted(elems)))


def is_subgroup(G, elements):
    s = set(elements)
    if G.identity not in s:
        return False
    return all(G.mult[a][b] in s for a in s for b in s) and all(G.inv[a] in s for a in s)


def conjugate(G, H, g):
    """g H g^-1"""
    return Subgroup(tuple(sorted(G.conj(g, h) for h in H)))


def normalizer(G, H):
    return Subgroup(tuple(g for g in G.elements if conjugate(G, H, g) == H))


def intersect(H, K):
    return Subgroup(tuple(sorted(H._set & K._set)))


@lru_cache(maxsize=None)
def all_subgroups(G):
    subs = {generated(G, [x]) for x in G.elements}
    frontier = set(subs)
    while frontier:
        new = set()
        for H in frontier:
            for K in list(subs):
                J = generated(G, set(H.elements) | set(K.elements))
                if J not in subs and J not in new:
                    new.add(J)
        subs |= new
        frontier = new
    return tuple(sorted(subs, key=lambda S: (len(S), S.elements)))


@dataclass(frozen=True, eq=False)
class SubgroupSystem:
    group: FiniteGroup
    reps: tuple
    class_of_map: dict = field(repr=False)
    weyl_order: tuple
    normalizers: tuple = field(repr=False)

    def class_of(self, H):
        return self.class_of_map[H]

    @property
    def orders(self):
        return [len(H) for H in self.reps]

    def __len__(self):
        return len(self.reps)

    @cached_property
    def marks(self):
        """marks[i][j] = |(G/H_i)^{H_j}|"""
        G = self.group
        table = []
        for Hi in self.reps:
            row = []
            for Hj in self.reps:
                count = sum(
                    1 for x in G.elements
                    if all(G.mult[G.mult[G.inv[x]][h]][x] in Hi for h in Hj)
                )
                row.append(count // len(Hi))
            table.append(tuple(row))
        return tuple(table)

    def subconjugate(self, j, i):
        """True when H_j is conjugate to a subgroup of H_i."""
        return self.marks[i][j] > 0


@lru_cache(maxsize=None)
def subgroup_system(G):
    classes = {}
    for H in all_subgroups(G):
        conjs = {conjugate(G, H, g) for g in G.elements}
        rep = min(conjs, key=lambda S: S.elements)
        classes.setdefault(rep, set()).update(conjs)
    reps = sorted(classes, key=lambda S: (len(S), S.elements))
    class_of = {}
    for i, rep in enumerate(reps):
        for S in classes[rep]:
            class_of[S] = i
    norms = tuple(normalizer(G, H) for H in reps)
    weyl = tuple(len(N) // len(H) for N, H in zip(norms, reps))
    return SubgroupSystem(G, tuple(reps), class_of, weyl, norms)


@dataclass(frozen=True)
class DoubleCosetDecomposition:
    reps: tuple
    cosets: tuple
    stabilizers: tuple
    conjugated: tuple  # M'_t = t M_t t^-1, a subgroup of K


def double_cosets(G, L, K, H):
    """Decompose L into double cosets KtH under (k,h).l = k l h^-1.

    The stabilizer recorded for t is M_t = H ∩ t^-1 K t, the isotropy of the
    point (H, t^-1 K) of G/H x_{G/L} G/K, and conjugated[t] = t M_t t^-1.
    """
    if not K.issubset(L) or not H.issubset(L):
        raise PreconditionError("double_cosets requires K <= L and H <= L")
    seen = set()
    reps, cosets, stabs, conjs = [], [], [], []
    for t in L:
        if t in seen:
            continue
        coset = sorted({G.mult[G.mult[k][t]][h] for k in K for h in H})
        seen.update(coset)
        ti = G.inv[t]
        M = Subgroup(tuple(h for h in H if G.conj(t, h) in K))
        assert M == intersect(H, conjugate(G, K, ti))
        reps.append(t)
        cosets.append(tuple(coset))
        stabs.append(M)
        conjs.append(conjugate(G, M, t))
    return DoubleCosetDecomposition(tuple(reps), tuple(cosets), tuple(stabs), tuple(conjs))
