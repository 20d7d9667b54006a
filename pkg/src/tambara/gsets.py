"""Finite G-sets stored as explicit action tables, equivariant maps, and
the basic constructions on them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .config import check_cap
from .errors import PreconditionError, ValidationError
from .groups import FiniteGroup, Subgroup, conjugate, subgroup_system


@dataclass(frozen=True, eq=False)
class GSet:
    """act[g][x] is the image of point x under group element g."""

    group: FiniteGroup
    act: tuple
    labels: tuple = field(default=None, compare=False)

    @property
    def size(self):
        return len(self.act[0]) if self.act else 0

    def __len__(self):
        return self.size

    @property
    def points(self):
        return range(self.size)

    def __eq__(self, other):
        return isinstance(other, GSet) and self.group == other.group and self.act == other.act

    @cached_property
    def _hash(self):
        return hash((self.group, self.act))

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"GSet(size={self.size}, orbits={orbit_type(self)})"

    @staticmethod
    def from_labels(G, labels, action):
        """Build a G-set on the given labels; action(g, label) returns a label."""
        labels = tuple(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != len(labels):
            raise PreconditionError("duplicate point labels")
        act = tuple(tuple(index[action(g, lab)] for lab in labels) for g in G.elements)
        return GSet(G, act, labels)

    def validate(self):
        G = self.group
        n = self.size
        for g in G.elements:
            if len(self.act[g]) != n:
                raise ValidationError(f"action row {g} has wrong length")
        if any(self.act[G.identity][x] != x for x in range(n)):
            raise ValidationError("action: identity does not act trivially")
        for g in G.elements:
            for h in G.elements:
                gh = G.mult[g][h]
                for x in range(n):
                    if self.act[g][self.act[h][x]] != self.act[gh][x]:
                        raise ValidationError(f"action: g.(h.x) != (gh).x at ({g}, {h}, {x})")
        return self

    @cached_property
    def index(self):
        if self.labels is None:
            return {x: x for x in range(self.size)}
        return {lab: i for i, lab in enumerate(self.labels)}

    def label(self, x):
        return x if self.labels is None else self.labels[x]

    def stabilizer(self, x):
        return self.stabilizers[x]

    @cached_property
    def stabilizers(self):
        G = self.group
        return tuple(
            Subgroup(tuple(g for g in G.elements if self.act[g][x] == x)) for x in range(self.size)
        )

    @cached_property
    def orbits(self):
        """Orbits as sorted point tuples, ordered by least point."""
        seen = [False] * self.size
        out = []
        for x in range(self.size):
            if not seen[x]:
                orb = sorted({self.act[g][x] for g in self.group.elements})
                for y in orb:
                    seen[y] = True
                out.append(tuple(orb))
        return tuple(out)

    @cached_property
    def orbit_id(self):
        ids = [0] * self.size
        for k, orb in enumerate(self.orbits):
            for x in orb:
                ids[x] = k
        return tuple(ids)

    def fixed_points(self, H):
        return fixed_points(self, H)


@dataclass(frozen=True, eq=False)
class GMap:
    dom: GSet
    cod: GSet
    table: tuple

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))

    def __call__(self, x):
        return self.table[x]

    def __eq__(self, other):
        return (isinstance(other, GMap) and self.table == other.table
                and self.dom == other.dom and self.cod == other.cod)

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"GMap({self.dom.size}>{self.cod.size}:{','.join(map(str, self.table))})"

    def validate(self):
        if len(self.table) != self.dom.size:
            raise ValidationError("map table length differs from domain size")
        if any(not 0 <= y < self.cod.size for y in self.table):
            raise ValidationError("map value out of codomain range")
        if self.dom.group != self.cod.group:
            raise ValidationError("map between G-sets over different groups")
        for g in self.dom.group.elements:
            for x in self.dom.points:
                if self.table[self.dom.act[g][x]] != self.cod.act[g][self.table[x]]:
                    raise ValidationError(f"equivariance fails at g={g}, x={x}")
        return self

    def fiber(self, y):
        return self.fibers[y]

    @cached_property
    def fibers(self):
        fib = [[] for _ in range(self.cod.size)]
        for x, y in enumerate(self.table):
            fib[y].append(x)
        return tuple(tuple(f) for f in fib)

    def is_bijective(self):
        return self.dom.size == self.cod.size and len(set(self.table)) == self.dom.size

    def inverse(self):
        assert self.is_bijective()
        inv = [0] * self.cod.size
        for x, y in enumerate(self.table):
            inv[y] = x
        return GMap(self.cod, self.dom, inv)


def gmap(dom, cod, table, check=True):
    f = GMap(dom, cod, tuple(table))
    return f.validate() if check else f


def identity_map(X):
    return GMap(X, X, tuple(X.points))


def compose(g, f):
    """g after f"""
    if f.cod != g.dom:
        raise PreconditionError("maps are not composable")
    return GMap(f.dom, g.cod, tuple(g.table[y] for y in f.table))


# ---------------------------------------------------------------- constructions

def trivial_gset(G, n):
    return GSet(G, tuple(tuple(range(n)) for _ in G.elements))


def point(G):
    return trivial_gset(G, 1)


def empty_gset(G):
    return trivial_gset(G, 0)


def terminal_map(X):
    return GMap(X, point(X.group), (0,) * X.size)


@lru_cache(maxsize=None)
def _cosets(G, H):
    seen = set()
    cosets = []
    for x in G.elements:
        if x not in seen:
            c = tuple(sorted(G.mult[x][h] for h in H))
            seen.update(c)
            cosets.append(c)
    where = {}
    for i, c in enumerate(cosets):
        for x in c:
            where[x] = i
    return tuple(cosets), where


@lru_cache(maxsize=None)
def orbit(G, H):
    """G/H as left cosets, ordered by least element; point 0 is H itself."""
    cosets, where = _cosets(G, H)
    act = tuple(tuple(where[G.mult[g][c[0]]] for c in cosets) for g in G.elements)
    return GSet(G, act, cosets)


def coset_of(G, H, x):
    """Index of xH in orbit(G, H)."""
    return _cosets(G, H)[1][x]


def orbit_map(G, K, H, g):
    """G/K -> G/H, xK -> x g H; needs K <= g H g^-1."""
    if not K.issubset(conjugate(G, H, g)):
        raise PreconditionError("orbit_map requires K <= g H g^-1")
    src, dst = orbit(G, K), orbit(G, H)
    return GMap(src, dst, tuple(coset_of(G, H, G.mult[c[0]][g]) for c in src.labels))


def projection(G, K, H):
    """The coset projection G/K -> G/H for K <= H."""
    if not K.issubset(H):
        raise PreconditionError("projection requires K <= H")
    return orbit_map(G, K, H, G.identity)


def coproduct(X, Y):
    """Returns (X+Y, inl, inr); points of X come first."""
    G = X.group
    n = X.size
    act = tuple(X.act[g] + tuple(n + y for y in Y.act[g]) for g in G.elements)
    labels = tuple((0, X.label(x)) for x in X.points) + tuple((1, Y.label(y)) for y in Y.points)
    S = GSet(G, act, labels)
    return S, GMap(X, S, tuple(X.points)), GMap(Y, S, tuple(n + y for y in Y.points))


def coproduct_many(parts):
    """Disjoint union of a list of G-sets with the list of inclusions."""
    assert parts
    G = parts[0].group
    offsets = []
    off = 0
    for P in parts:
        offsets.append(off)
        off += P.size
    act = tuple(
        tuple(o + y for P, o in zip(parts, offsets) for y in P.act[g]) for g in G.elements
    )
    labels = tuple((k, P.label(x)) for k, P in enumerate(parts) for x in P.points)
    S = GSet(G, act, labels)
    incs = [GMap(P, S, tuple(o + x for x in P.points)) for P, o in zip(parts, offsets)]
    return S, incs


def fold_map(X):
    """X + X -> X"""
    S, _, _ = coproduct(X, X)
    return GMap(S, X, tuple(X.points) * 2)


def copairing(f, g):
    """[f, g]: X + Y -> Z"""
    if f.cod != g.cod:
        raise PreconditionError("copairing needs a common codomain")
    S, _, _ = coproduct(f.dom, g.dom)
    return GMap(S, f.cod, f.table + g.table)


def map_sum(f, g):
    """f + g: X + Y -> X' + Y'"""
    S, _, _ = coproduct(f.dom, g.dom)
    T, _, _ = coproduct(f.cod, g.cod)
    n = f.cod.size
    return GMap(S, T, f.table + tuple(n + y for y in g.table))


def product(X, Y):
    G = X.group
    m = Y.size
    act = tuple(
        tuple(X.act[g][x] * m + Y.act[g][y] for x in X.points for y in Y.points)
        for g in G.elements
    )
    labels = tuple((x, y) for x in X.points for y in Y.points)
    P = GSet(G, act, labels)
    return P, GMap(P, X, tuple(x for x, _ in labels)), GMap(P, Y, tuple(y for _, y in labels))


def pairing(f, g):
    """<f, g>: W -> X x Y"""
    if f.dom != g.dom:
        raise PreconditionError("pairing needs a common domain")
    P, _, _ = product(f.cod, g.cod)
    m = g.cod.size
    return GMap(f.dom, P, tuple(a * m + b for a, b in zip(f.table, g.table)))


def pullback(f, g):
    """{(a,b) | f(a) = g(b)} with the diagonal action; returns (P, pr1, pr2)."""
    if f.cod != g.cod:
        raise PreconditionError("pullback needs a common codomain")
    G = f.dom.group
    fib = {}
    for b, y in enumerate(g.table):
        fib.setdefault(y, []).append(b)
    pairs = tuple((a, b) for a in f.dom.points for b in fib.get(f.table[a], ()))
    index = {p: i for i, p in enumerate(pairs)}
    act = tuple(
        tuple(index[(f.dom.act[h][a], g.dom.act[h][b])] for a, b in pairs) for h in G.elements
    )
    P = GSet(G, act, pairs)
    return P, GMap(P, f.dom, tuple(a for a, _ in pairs)), GMap(P, g.dom, tuple(b for _, b in pairs))


def fixed_points(X, H):
    return tuple(x for x in X.points if all(X.act[h][x] == x for h in H))


def image_split(g):
    """Inclusions of g(X) and its complement into Y, as G-sets."""
    Y = g.cod
    img = sorted(set(g.table))
    rest = [y for y in Y.points if y not in set(img)]
    return subset_inclusion(Y, img), subset_inclusion(Y, rest)


def subset_inclusion(Y, pts):
    """Inclusion of an invariant subset (in the given point order)."""
    pts = list(pts)
    index = {y: i for i, y in enumerate(pts)}
    act = tuple(tuple(index[Y.act[g][y]] for y in pts) for g in Y.group.elements)
    S = GSet(Y.group, act, tuple(Y.label(y) for y in pts))
    return GMap(S, Y, tuple(pts))


def orbit_inclusions(X):
    """Inclusions of the orbits of X, ordered by least point."""
    return [subset_inclusion(X, orb) for orb in X.orbits]


def gset_from_orbits(G, classes):
    """Disjoint union of G/H_i over the given class indices."""
    system = subgroup_system(G)
    if not classes:
        return empty_gset(G)
    parts = [orbit(G, system.reps[i]) for i in classes]
    return coproduct_many(parts)[0]


def all_gsets(G, max_size, min_size=0):
    """One G-set per isomorphism class with min_size <= size <= max_size."""
    system = subgroup_system(G)
    sizes = [G.order // len(H) for H in system.reps]
    out = []

    def rec(start, remaining, chosen):
        total = max_size - remaining
        if total >= min_size:
            out.append(gset_from_orbits(G, tuple(chosen)))
        for i in range(start, len(sizes)):
            if sizes[i] <= remaining:
                rec(i, remaining - sizes[i], chosen + [i])

    rec(0, max_size, [])
    out.sort(key=lambda X: (X.size, orbit_type(X)))
    return out


# ------------------------------------------------------------------ orbit data

def orbit_decomposition(X):
    """[(class index, least point)] for each orbit of X."""
    system = subgroup_system(X.group)
    return [(system.class_of(X.stabilizers[orb[0]]), orb[0]) for orb in X.orbits]


def orbit_type(X):
    return tuple(sorted(c for c, _ in orbit_decomposition(X)))


def _conjugator(G, S, H):
    """Some g with g S g^-1 = H."""
    for g in G.elements:
        if conjugate(G, S, g) == H:
            return g
    raise AssertionError("subgroups are not conjugate")


def normal_point(X, x):
    """A point in the orbit of x whose stabilizer is exactly the class representative."""
    system = subgroup_system(X.group)
    S = X.stabilizers[x]
    i = system.class_of(S)
    g = _conjugator(X.group, S, system.reps[i])
    return i, X.act[g][x]


def over_key(k):
    """Canonical token for the G-set k.dom over k.cod.

    Each orbit is tagged by (i, z): H_i its stabilizer class and z the least
    image point among orbit points with stabilizer exactly H_i (an N(H_i)-orbit
    in the base).  Equal tokens <=> isomorphic over the base.
    """
    Q, X = k.dom, k.cod
    system = subgroup_system(Q.group)
    out = []
    for orb in Q.orbits:
        i, q = normal_point(Q, orb[0])
        z0 = k.table[q]
        z = min(X.act[n][z0] for n in system.normalizers[i])
        out.append((i, z))
    return tuple(sorted(out))


def gset_key(X):
    return orbit_type(X)


# --------------------------------------------------------------- enumeration

def enumerate_gmaps(U, X, cap=None):
    """All equivariant maps U -> X; an orbit with least point u and stabilizer
    S maps to any point of X^S."""
    orbs = U.orbits
    choices = [fixed_points(X, U.stabilizers[orb[0]]) for orb in orbs]
    count = 1
    for c in choices:
        count *= len(c)
    check_cap(count, cap, "equivariant maps")
    G = U.group
    out = []
    for pick in itertools.product(*choices):
        table = [0] * U.size
        for orb, x in zip(orbs, pick):
            u = orb[0]
            for g in G.elements:
                table[U.act[g][u]] = X.act[g][x]
        out.append(GMap(U, X, tuple(table)))
    return out


def sections(f, cap=None):
    """Equivariant s: V -> U with f s = 1, for f: U -> V."""
    U, V = f.dom, f.cod
    orbs = V.orbits
    choices = []
    for orb in orbs:
        v = orb[0]
        S = V.stabilizers[v]
        choices.append([u for u in f.fiber(v) if all(U.act[h][u] == u for h in S)])
    count = 1
    for c in choices:
        count *= len(c)
    check_cap(count, cap, "sections")
    G = U.group
    out = []
    for pick in itertools.product(*choices):
        table = [0] * V.size
        for orb, u in zip(orbs, pick):
            v = orb[0]
            for g in G.elements:
                table[V.act[g][v]] = U.act[g][u]
        out.append(GMap(V, U, tuple(table)))
    return out


def _extend(X, Y, x, y, table):
    G = X.group
    for g in G.elements:
        table[X.act[g][x]] = Y.act[g][y]


def gsets_over_isomorphic(p, q):
    """An equivariant bijection phi: p.dom -> q.dom with q phi = p, or None."""
    if p.cod != q.cod:
        raise PreconditionError("maps must share a codomain")
    X, Y = p.dom, q.dom
    if X.size != Y.size or over_key(p) != over_key(q):
        return None
    used = set()
    table = [None] * X.size
    for orb in X.orbits:
        x = orb[0]
        S = X.stabilizers[x]
        target = None
        for y in Y.points:
            if Y.orbit_id[y] in used:
                continue
            if q.table[y] == p.table[x] and Y.stabilizers[y] == S:
                target = y
                break
        if target is None:
            return None
        used.add(Y.orbit_id[target])
        _extend(X, Y, x, target, table)
    return GMap(X, Y, tuple(table))


def gsets_isomorphic(X, Y):
    return gsets_over_isomorphic(terminal_map(X), terminal_map(Y)) if X.group == Y.group else None


# --------------------------------------------------------------- text format

def parse_gset(G, text):
    """`orbits: i1,i2,...` or `points:N action: row;row;...` (one row per group element)."""
    text = text.strip()
    head, _, rest = text.partition(":")
    head = head.strip().lower()
    try:
        if head == "orbits":
            classes = [int(c) for c in rest.replace(" ", "").split(",") if c]
            system = subgroup_system(G)
            if any(not 0 <= c < len(system.reps) for c in classes):
                raise ValidationError("orbit class index out of range")
            return gset_from_orbits(G, tuple(classes))
        if head == "points":
            n_text, _, action = rest.partition("action:")
            n = int(n_text)
            rows = [r for r in action.split(";") if r.strip()]
            act = tuple(tuple(int(v) for v in r.replace(",", " ").split()) for r in rows)
            if len(act) != G.order or any(len(r) != n for r in act):
                raise ValidationError("action table must have one row of N entries per group element")
            return GSet(G, act).validate()
    except ValueError as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(f"cannot parse G-set {text!r}") from None
    raise ValidationError(f"unknown G-set format {text!r}")
