"""Bispans X <- A -> B -> Y: generators, distributors, binary and n-fold
composition, canonical keys and isomorphism witnesses, TNR words."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .config import check_cap
from .errors import PreconditionError
from .groups import subgroup_system
from .gsets import GMap, GSet, compose, identity_map, pullback


@dataclass(frozen=True, eq=False)
class Bispan:
    p: GMap  # A -> X
    q: GMap  # A -> B
    r: GMap  # B -> Y

    def __post_init__(self):
        if self.p.dom != self.q.dom or self.q.cod != self.r.dom:
            raise PreconditionError("bispan maps do not share carriers")

    @property
    def A(self):
        return self.p.dom

    @property
    def B(self):
        return self.r.dom

    @property
    def source(self):
        return self.p.cod

    @property
    def target(self):
        return self.r.cod

    def __repr__(self):
        return (f"Bispan({self.source.size} <- {self.A.size} -> {self.B.size} -> "
                f"{self.target.size})")


def bispan_R(f):
    """R_f = (Y <-f- X -1-> X -1-> X)"""
    one = identity_map(f.dom)
    return Bispan(f, one, one)


def bispan_N(f):
    """N_f = (X <-1- X -f-> Y -1-> Y)"""
    return Bispan(identity_map(f.dom), f, identity_map(f.cod))


def bispan_T(f):
    """T_f = (X <-1- X -1-> X -f-> Y)"""
    one = identity_map(f.dom)
    return Bispan(one, one, f)


def identity_bispan(X):
    one = identity_map(X)
    return Bispan(one, one, one)


# ------------------------------------------------------------- section spaces

def section_space(fib, V, choices, cap=None):
    """The G-set of pairs (y, s), s a function on fib^-1{y} with s(e) in choices(e).

    choices(e) lists points of V and must satisfy choices(g e) = g choices(e).
    Sections are stored as tuples aligned with fib.fiber(y); G acts by
    conjugation, (g.s)(g e) = g s(e).  Returns (S, base map S -> fib.cod).
    """
    E, Y = fib.dom, fib.cod
    G = E.group
    opts = {e: tuple(choices(e)) for e in E.points}
    labels = []
    for y in Y.points:
        fiber = fib.fiber(y)
        count = 1
        for e in fiber:
            count *= len(opts[e])
        check_cap(len(labels) + count, cap, "section space")
        for s in itertools.product(*(opts[e] for e in fiber)):
            labels.append((y, s))
    index = {lab: i for i, lab in enumerate(labels)}
    pos = {}
    for y in Y.points:
        for k, e in enumerate(fib.fiber(y)):
            pos[e] = k
    act = []
    for g in G.elements:
        ag, vg = E.act[g], V.act[g]
        row = []
        for y, s in labels:
            y2 = Y.act[g][y]
            new = [None] * len(s)
            for e, v in zip(fib.fiber(y), s):
                new[pos[ag[e]]] = vg[v]
            row.append(index[(y2, tuple(new))])
        act.append(tuple(row))
    S = GSet(G, tuple(act), tuple(labels))
    return S, GMap(S, Y, tuple(y for y, _ in labels)), pos


def _evaluation(fib, S, pos):
    """The pullback fib.dom x_Y S with the map (e, (y, s)) -> s(e)."""
    base = GMap(S, fib.cod, tuple(y for y, _ in S.labels))
    P, pr1, pr2 = pullback(fib, base)
    ev = tuple(S.labels[b][1][pos[e]] for e, b in P.labels)
    return P, pr1, pr2, ev, base


def distributor(f, g, cap=None):
    """Delta(f, g) for X -f-> Y -g-> Z, a bispan X -> Z with N_g T_f = T_r N_q R_p."""
    if f.cod != g.dom:
        raise PreconditionError("distributor needs composable maps")
    X = f.dom
    B, _, pos = section_space(g, X, f.fiber, cap)
    A, _, pr2, ev, base = _evaluation(g, B, pos)
    return Bispan(GMap(A, X, ev), pr2, base)


def compose_bispans(w1, w0, cap=None):
    """w1 after w0 (w0: X0 -> X1, w1: X1 -> X2)."""
    if w0.target != w1.source:
        raise PreconditionError("bispans are not composable")
    # B = {(b1, s) : s on q1^-1{b1}, r0 s = p1}
    B, _, pos = section_space(w1.q, w0.B, lambda a1: w0.r.fiber(w1.p.table[a1]), cap)
    W, _, w_to_b, ev, base = _evaluation(w1.q, B, pos)
    # A = {(a0, w) : q0(a0) = s(a1)}
    A, pa0, pw = pullback(w0.q, GMap(W, w0.B, ev))
    p = compose(w0.p, pa0)
    q = compose(w_to_b, pw)
    r = compose(w1.r, base)
    return Bispan(p, q, r)


# ---------------------------------------------------------------- term systems

def _term_system_data(ws, cap):
    """Enumerate term systems for the chain ws = [w_0, ..., w_{m-1}].

    A system is stored as parts = (b, s_{m-1}, ..., s_1) where b = s_m(1) and
    s_i is a tuple of B_{i-1} points aligned with the sorted list S_i.  S_i
    consists of tuples (a_i, ..., a_{m-1}).
    """
    m = len(ws)
    out = []

    def rec(i, S_i, parts):
        if i == 0:
            out.append((tuple(parts), S_i))
            check_cap(len(out), cap, "term systems")
            return
        opts = [ws[i - 1].r.fiber(ws[i].p.table[t[0]]) for t in S_i]
        for combo in itertools.product(*opts):
            S_prev = sorted((a,) + t for t, b in zip(S_i, combo) for a in ws[i - 1].q.fiber(b))
            rec(i - 1, S_prev, parts + [combo])

    for b in ws[m - 1].B.points:
        S_last = sorted((a,) for a in ws[m - 1].q.fiber(b))
        rec(m - 1, S_last, [b])
    return out


def _system_sets(ws, parts):
    """Recover the lists S_{m-1}, ..., S_0 from parts."""
    m = len(ws)
    S = sorted((a,) for a in ws[m - 1].q.fiber(parts[0]))
    sets = [S]
    for k, i in enumerate(range(m - 1, 0, -1)):
        combo = parts[k + 1]
        S = sorted((a,) + t for t, b in zip(S, combo) for a in ws[i - 1].q.fiber(b))
        sets.append(S)
    return sets


def _act_system(ws, g, parts, sets):
    m = len(ws)
    acts_A = [w.A.act[g] for w in ws]
    b = ws[m - 1].B.act[g][parts[0]]
    new = [b]
    for k, i in enumerate(range(m - 1, 0, -1)):
        S_i = sets[k]
        vals = parts[k + 1]
        moved = {}
        for t, v in zip(S_i, vals):
            t2 = tuple(acts_A[i + j][a] for j, a in enumerate(t))
            moved[t2] = ws[i - 1].B.act[g][v]
        new.append(tuple(moved[t] for t in sorted(moved)))
    return tuple(new)


def nfold_compose(ws, cap=None):
    """Single-step composite of the chain ws (ws[0] applied first) via term systems."""
    ws = list(ws)
    if not ws:
        raise PreconditionError("nfold_compose needs at least one bispan")
    for w0, w1 in zip(ws, ws[1:]):
        if w0.target != w1.source:
            raise PreconditionError("bispan chain is not composable")
    G = ws[0].A.group
    m = len(ws)
    data = _term_system_data(ws, cap)
    labels = [parts for parts, _ in data]
    index = {parts: k for k, parts in enumerate(labels)}
    sets_of = [_system_sets(ws, parts) for parts in labels]
    actB = tuple(
        tuple(index[_act_system(ws, g, parts, sets)] for parts, sets in zip(labels, sets_of))
        for g in G.elements
    )
    B = GSet(G, actB, tuple(labels))
    a_labels = [(t, k) for k, (_, S0) in enumerate(data) for t in S0]
    a_index = {lab: i for i, lab in enumerate(a_labels)}
    actA = []
    for g in G.elements:
        row = []
        for t, k in a_labels:
            t2 = tuple(ws[j].A.act[g][a] for j, a in enumerate(t))
            row.append(a_index[(t2, actB[g][k])])
        actA.append(tuple(row))
    A = GSet(G, tuple(actA), tuple(a_labels))
    p = GMap(A, ws[0].source, tuple(ws[0].p.table[t[0]] for t, _ in a_labels))
    q = GMap(A, B, tuple(k for _, k in a_labels))
    r = GMap(B, ws[-1].target, tuple(ws[-1].r.table[parts[0]] for parts in labels))
    return Bispan(p, q, r)


def check_term_system(ws, parts):
    """Mechanically re-check axioms (a)-(c) for one term system."""
    m = len(ws)
    sets = _system_sets(ws, parts)
    # sets[k] is S_{m-1-k}; values parts[k+1] are s_{m-1-k}
    for k, i in enumerate(range(m - 1, 0, -1)):
        S_i = sets[k]
        for t, v in zip(S_i, parts[k + 1]):
            if ws[i - 1].r.table[v] != ws[i].p.table[t[0]]:
                return False
    for k in range(m):
        i = m - 1 - k
        S_i = set(sets[k])
        if k == 0:
            expect = {(a,) for a in ws[i].q.fiber(parts[0])}
        else:
            s_next = dict(zip(sets[k - 1], parts[k]))
            expect = {(a,) + t for t, b in s_next.items() for a in ws[i].q.fiber(b)}
        if S_i != expect:
            return False
    return True


# ------------------------------------------------- canonical keys and witnesses

def _sub_orbits(X, H, pts):
    """Orbits of the subgroup H on an H-invariant list of points."""
    seen = set()
    out = []
    for x in pts:
        if x not in seen:
            orb = sorted({X.act[h][x] for h in H})
            seen.update(orb)
            out.append(orb)
    return out


def _fiber_key(w, b):
    H = w.B.stabilizers[b]
    A = w.A
    key = []
    for orb in _sub_orbits(A, H, w.q.fiber(b)):
        key.append(min((A.stabilizers[a].elements, w.p.table[a]) for a in orb))
    return tuple(sorted(key))


def _normal_points(w, orb):
    system = subgroup_system(w.B.group)
    i = system.class_of(w.B.stabilizers[orb[0]])
    rep = system.reps[i]
    return i, [b for b in orb if w.B.stabilizers[b] == rep]


def _orbit_key(w, orb):
    i, pts = _normal_points(w, orb)
    return (i, min((w.r.table[b], _fiber_key(w, b)) for b in pts))


def bispan_canonical_key(w):
    """Equal keys <=> isomorphic bispans (same endpoints assumed)."""
    return tuple(sorted(_orbit_key(w, orb) for orb in w.B.orbits))


def bispans_isomorphic(w, v):
    """A pair (alpha: A -> A', beta: B -> B') of equivariant bijections with
    p' alpha = p, q' alpha = beta q, r' beta = r, or None."""
    if w.source != v.source or w.target != v.target:
        raise PreconditionError("bispans must have the same endpoints")
    if w.A.size != v.A.size or w.B.size != v.B.size:
        return None
    if bispan_canonical_key(w) != bispan_canonical_key(v):
        return None
    G = w.A.group
    alpha = [None] * w.A.size
    beta = [None] * w.B.size
    used = set()
    for orb in w.B.orbits:
        i, pts = _normal_points(w, orb)
        b = pts[0]
        target = (w.r.table[b], _fiber_key(w, b))
        H = w.B.stabilizers[b]
        match = None
        for b2 in v.B.points:
            if v.B.orbit_id[b2] in used or v.B.stabilizers[b2] != H:
                continue
            if (v.r.table[b2], _fiber_key(v, b2)) == target:
                match = b2
                break
        if match is None:
            return None
        used.add(v.B.orbit_id[match])
        fiber_map = _match_fibers(w, b, v, match, H)
        if fiber_map is None:
            return None
        for g in G.elements:
            beta[w.B.act[g][b]] = v.B.act[g][match]
            for a, a2 in fiber_map.items():
                alpha[w.A.act[g][a]] = v.A.act[g][a2]
    return GMap(w.A, v.A, tuple(alpha)), GMap(w.B, v.B, tuple(beta))


def _match_fibers(w, b, v, b2, H):
    used = set()
    out = {}
    taken_orbits = []
    for orb in _sub_orbits(w.A, H, w.q.fiber(b)):
        a = orb[0]
        S, x = w.A.stabilizers[a], w.p.table[a]
        found = None
        for orb2 in _sub_orbits(v.A, H, v.q.fiber(b2)):
            if orb2[0] in used:
                continue
            for a2 in orb2:
                if v.A.stabilizers[a2] == S and v.p.table[a2] == x:
                    found = (orb2, a2)
                    break
            if found:
                break
        if found is None:
            return None
        used.add(found[0][0])
        for h in H:
            out[w.A.act[h][a]] = v.A.act[h][found[1]]
    return out


def check_bispan_iso(w, v, alpha, beta):
    """Verify a claimed isomorphism witness."""
    if not (alpha.is_bijective() and beta.is_bijective()):
        return False
    G = w.A.group
    for g in G.elements:
        if any(alpha.table[w.A.act[g][a]] != v.A.act[g][alpha.table[a]] for a in w.A.points):
            return False
        if any(beta.table[w.B.act[g][b]] != v.B.act[g][beta.table[b]] for b in w.B.points):
            return False
    return (all(v.p.table[alpha.table[a]] == w.p.table[a] for a in w.A.points)
            and all(v.q.table[alpha.table[a]] == beta.table[w.q.table[a]] for a in w.A.points)
            and all(v.r.table[beta.table[b]] == w.r.table[b] for b in w.B.points))


# ---------------------------------------------------------------------- words

_GENERATORS = {"T": bispan_T, "N": bispan_N, "R": bispan_R}


def word_to_bispan(word, X=None, cap=None):
    """word = [(tag, f), ...] read as a composite g1 g2 ... gk (gk acts first).

    The empty word needs X and yields the identity bispan on X.
    """
    word = list(word)
    if not word:
        if X is None:
            raise PreconditionError("empty word needs an object")
        return identity_bispan(X)
    result = None
    for tag, f in reversed(word):
        if tag not in _GENERATORS:
            raise PreconditionError(f"unknown generator tag {tag!r}")
        gen = _GENERATORS[tag](f)
        result = gen if result is None else compose_bispans(gen, result, cap)
    return result


def eval_bispan(w, S, value):
    """T_r N_q R_p applied to value in S(X)."""
    return S.T(w.r, S.N(w.q, S.R(w.p, value)))


def eval_word(word, S, value):
    for tag, f in reversed(list(word)):
        value = getattr(S, tag)(f, value)
    return value


def bispan_word(w):
    """[T_r, N_q, R_p]"""
    return [("T", w.r), ("N", w.q), ("R", w.p)]
