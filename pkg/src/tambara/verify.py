"""Named invariant suites.  Each suite runs a family of exact checks and
returns a SuiteResult; the first failing case is kept as the witness.

The CLI `verify` verb and the acceptance tests run these same functions.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from sympy import ZZ

from .bispans import (Bispan, bispan_N, bispan_T, bispans_isomorphic, check_bispan_iso,
                      compose_bispans, distributor, eval_bispan, nfold_compose)
from .groups import cyclic, double_cosets, make_group, symmetric, subgroup_system
from .gsets import (GMap, all_gsets, compose, enumerate_gmaps, image_split, orbit, point,
                    pullback, terminal_map, trivial_gset)
from .errors import IntegralityError
from .models.base import split_along_image
from .models.burnside import BurnsideTambara
from .models.c2 import (PairTambara, alpha, dual_numbers_pair, pair_from_functor,
                        regular_gset)
from .models.completion import (CompletionCarrier, SubsetData, chi, completion_norm,
                                convolution_unit, convolve)
from .models.fixed_point import FixedPointTambara
from .models.monoid_burnside import CoconstantMackey, MonoidBurnside
from .semirings import (FinCommSemigroup, IntegerRing, Semiring, SwapPairs, closure_tower,
                        congruence_closure, cyclic_monoid, enumerate_comm_semigroups,
                        is_congruence, polynomial_degree_at_most, truncated_naturals)
from .witt import (WittGroup, basis_vector, burnside_product_counts, ghost, nu, phi, tau,
                   witt_add, witt_mul, witt_universal)


@dataclass
class SuiteResult:
    name: str
    ok: bool
    cases: int
    seconds: float = 0.0
    witness: object = None
    detail: str = ""
    extra: dict = field(default_factory=dict)

    def line(self):
        status = "PASS" if self.ok else "FAIL"
        text = f"{status} {self.name}: {self.cases} cases in {self.seconds:.2f}s"
        if self.detail:
            text += f" ({self.detail})"
        if not self.ok:
            text += f"; witness: {self.witness!r}"
        return text


class _Tally:
    """Counts checks and remembers the first failure."""

    def __init__(self):
        self.cases = 0
        self.witness = None

    def check(self, ok, witness):
        self.cases += 1
        if not ok and self.witness is None:
            self.witness = witness
        return ok

    @property
    def ok(self):
        return self.witness is None


def _result(name, tally, detail="", **extra):
    return SuiteResult(name, tally.ok, tally.cases, witness=tally.witness, detail=detail,
                       extra=extra)


# ------------------------------------------------------------- enumeration

def _automorphisms(X):
    return [m.table for m in enumerate_gmaps(X, X) if m.is_bijective()]


def _inverse_perm(p):
    q = [0] * len(p)
    for i, v in enumerate(p):
        q[v] = i
    return q


def map_classes(Xs):
    """One map X -> Y per isomorphism class of arrows, for X, Y in Xs.
    Yields (f, automorphisms of X, automorphisms of Y)."""
    auts = [_automorphisms(X) for X in Xs]
    for i, X in enumerate(Xs):
        for j, Y in enumerate(Xs):
            seen = set()
            for f in enumerate_gmaps(X, Y):
                if f.table in seen:
                    continue
                yield f
                for s in auts[i]:
                    si = _inverse_perm(s)
                    for t in auts[j]:
                        seen.add(tuple(t[f.table[si[x]]] for x in X.points))


def composable_classes(Xs):
    """One pair (f: X -> Y, g: Y -> Z) per isomorphism class of diagrams."""
    auts = [_automorphisms(X) for X in Xs]
    for j, Y in enumerate(Xs):
        for k, Z in enumerate(Xs):
            seen = set()
            reps = []
            for g in enumerate_gmaps(Y, Z):
                if g.table in seen:
                    continue
                reps.append(g)
                for s in auts[j]:
                    si = _inverse_perm(s)
                    for t in auts[k]:
                        seen.add(tuple(t[g.table[si[y]]] for y in Y.points))
            for g in reps:
                stab = []
                for s in auts[j]:
                    si = _inverse_perm(s)
                    moved = tuple(g.table[si[y]] for y in Y.points)
                    if any(tuple(t[v] for v in moved) == g.table for t in auts[k]):
                        stab.append(s)
                for i, X in enumerate(Xs):
                    seen_f = set()
                    for f in enumerate_gmaps(X, Y):
                        if f.table in seen_f:
                            continue
                        yield f, g
                        for s in auts[i]:
                            si = _inverse_perm(s)
                            for t in stab:
                                seen_f.add(tuple(t[f.table[si[x]]] for x in X.points))


def c2_carriers(G):
    """The concrete Tambara carriers over C2 used by the exhaustive suites."""
    swap = SwapPairs(lambda g: g != G.identity)
    B = BurnsideTambara(G)
    return {
        "burnside": B,
        "burnside+": CompletionCarrier(B),
        "fixed-point Z": FixedPointTambara(G, IntegerRing()),
        "fixed-point ZxZ swap": FixedPointTambara(G, swap),
        "E(dual numbers)": PairTambara(G, dual_numbers_pair()),
        "A[dM], M = Z/2": MonoidBurnside(CoconstantMackey(G, cyclic_monoid(2))),
    }


# ------------------------------------------------------------------ suites

def suite_burnside_c2(seed=0, cap=None):
    """A(pt) for C2: t^2 = 2t, res(t) = 2, trc(1) = t."""
    G = cyclic(2)
    B = BurnsideTambara(G, cap)
    tally = _Tally()
    pt, Gs = point(G), regular_gset(G)
    eps = terminal_map(Gs)
    t = B.from_counts(pt, (1, 0))
    tally.check(B.T(eps, B.one(Gs)) == t, ("trc(1)", B.T(eps, B.one(Gs))))
    tally.check(B.mul(pt, t, t) == B.add(pt, t, t), ("t^2", B.mul(pt, t, t)))
    two = B.add(Gs, B.one(Gs), B.one(Gs))
    tally.check(B.R(eps, t) == two, ("res(t)", B.R(eps, t)))
    tally.check(B.counts(B.one(pt)) == (0, 1), ("1 = [pt]", B.one(pt)))
    return _result("burnside-c2", tally)


def explicit_distributor_example():
    """The bispan 3 <- 4 -> 2 -> 1 over the trivial group, with A listed as
    (0,s0), (1,s0), (0,s1), (1,s1) and B as s0, s1."""
    G = cyclic(1)
    X3, A4, B2, pt = (trivial_gset(G, 3), trivial_gset(G, 4), trivial_gset(G, 2), point(G))
    return Bispan(GMap(A4, X3, (0, 1, 0, 2)), GMap(A4, B2, (0, 0, 1, 1)), GMap(B2, pt, (0, 0)))


def suite_distributor(seed=0, cap=None):
    """Distributor of 3 -> 2 -> 1 against the explicit bispan and a0(a1 + a2)."""
    G = cyclic(1)
    tally = _Tally()
    X3, Y2, pt = trivial_gset(G, 3), trivial_gset(G, 2), point(G)
    f = GMap(X3, Y2, (0, 1, 1))
    g = terminal_map(Y2)
    d = distributor(f, g, cap)
    tally.check((d.A.size, d.B.size) == (4, 2), ("sizes", d.A.size, d.B.size))
    tally.check(d.B.labels == ((0, (0, 1)), (0, (0, 2))), ("B labels", d.B.labels))
    explicit = explicit_distributor_example()
    iso = bispans_isomorphic(d, explicit)
    tally.check(iso is not None and check_bispan_iso(d, explicit, *iso), ("iso", iso))
    Z = FixedPointTambara(G, IntegerRing())
    rng = random.Random(seed)
    triples = [tuple(rng.randint(-9, 9) for _ in range(3)) for _ in range(50)]
    triples += list(itertools.product(range(-2, 3), repeat=3))
    for a in triples:
        expect = (a[0] * (a[1] + a[2]),)
        tally.check(eval_bispan(d, Z, a) == expect, ("eval", a, eval_bispan(d, Z, a)))
        tally.check(eval_bispan(explicit, Z, a) == expect, ("explicit eval", a))
        tally.check(Z.N(g, Z.T(f, a)) == expect, ("N_g T_f", a))
    return _result("distributor", tally)


def suite_presentation(seed=0, cap=None, max_size=4):
    """N_g T_f = T_r N_q R_p, N_gf = N_g N_f and the cartesian-square laws,
    for one composable pair per isomorphism class among C2-sets of size <= max_size."""
    G = cyclic(2)
    rng = random.Random(seed)
    Xs = all_gsets(G, max_size)
    carriers = {k: v for k, v in c2_carriers(G).items()
                if k in ("burnside", "fixed-point Z", "fixed-point ZxZ swap")}
    tally = _Tally()
    pairs = 0
    for f, g in composable_classes(Xs):
        pairs += 1
        d = distributor(f, g, cap)
        gf = compose(g, f)
        P, pr1, pr2 = pullback(gf, g)  # square over Z: X <- P -> Y
        nt = compose_bispans(bispan_N(g), bispan_T(f), cap)
        found = bispans_isomorphic(nt, d)
        tally.check(found is not None and check_bispan_iso(nt, d, *found), ("bispan NT", f, g))
        nn = compose_bispans(bispan_N(g), bispan_N(f), cap)
        found = bispans_isomorphic(nn, bispan_N(gf))
        tally.check(found is not None, ("bispan NN", f, g))
        for name, S in carriers.items():
            for _ in range(2):
                a = S.sample(f.dom, rng)
                lhs = S.N(g, S.T(f, a))
                tally.check(S.eq(g.cod, lhs, eval_bispan(d, S, a)), (name, "NT", f, g, a))
                tally.check(S.eq(g.cod, S.N(gf, a), S.N(g, S.N(f, a))), (name, "NN", f, g, a))
                b = S.sample(g.dom, rng)
                tally.check(S.eq(f.dom, S.R(gf, S.N(g, b)), S.N(pr1, S.R(pr2, b))),
                            (name, "RN", f, g, b))
                tally.check(S.eq(f.dom, S.R(gf, S.T(g, b)), S.T(pr1, S.R(pr2, b))),
                            (name, "RT", f, g, b))
    return _result("presentation", tally, detail=f"{pairs} composable pairs", pairs=pairs)


def random_bispan(rng, X, Y, pool, cap=None):
    """A random bispan X -> Y with carriers drawn from pool."""
    for _ in range(200):
        A, B = rng.choice(pool), rng.choice(pool)
        ps, qs, rs = enumerate_gmaps(A, X), enumerate_gmaps(A, B), enumerate_gmaps(B, Y)
        if ps and qs and rs:
            return Bispan(rng.choice(ps), rng.choice(qs), rng.choice(rs))
    raise AssertionError("no bispan found")


def suite_term_systems(seed=0, cap=None, chains=50):
    """omega_01 = omega_0, omega_02 = omega_1 o omega_0, omega_km o omega_nk = omega_nm."""
    G = cyclic(2)
    rng = random.Random(seed)
    objects = all_gsets(G, 2)
    pool = all_gsets(G, 3)
    Z = FixedPointTambara(G, SwapPairs(lambda g: g != G.identity))
    tally = _Tally()

    def iso(w, v, what):
        found = bispans_isomorphic(w, v)
        tally.check(found is not None and check_bispan_iso(w, v, *found), what)

    for c in range(chains):
        Xs = [rng.choice(objects) for _ in range(4)]
        ws = [random_bispan(rng, Xs[i], Xs[i + 1], pool, cap) for i in range(3)]
        omega = {(n, m): nfold_compose(ws[n:m], cap) for n in range(4) for m in range(n + 1, 4)}
        iso(omega[0, 1], ws[0], ("omega01", c))
        iso(omega[0, 2], compose_bispans(ws[1], ws[0], cap), ("omega02", c))
        for n, k, m in itertools.combinations(range(4), 3):
            iso(compose_bispans(omega[k, m], omega[n, k], cap), omega[n, m], ("omega", n, k, m, c))
        for _ in range(3):
            a = Z.sample(Xs[0], rng)
            seq = a
            for w in ws:
                seq = eval_bispan(w, Z, seq)
            tally.check(Z.eq(Xs[3], eval_bispan(omega[0, 3], Z, a), seq), ("eval", c, a))
    return _result("term-systems", tally, detail=f"{chains} chains")


def _pair_embeddings(E, G):
    Gs, pt = regular_gset(G), point(G)
    return (lambda a: E.make(Gs, [a], [])), (lambda b: E.make(pt, [], [b]))


def _check_FE(tally, name, P, samples_a, samples_b):
    """F(E(P)) against P through a -> E(P)(G), b -> E(P)(pt)."""
    G = cyclic(2)
    E = PairTambara(G, P)
    FE = pair_from_functor(E)
    ia, ib = _pair_embeddings(E, G)
    for a in samples_a:
        tally.check(FE.A.eq(FE.bar(ia(a)), ia(P.bar(a))), (name, "bar", a))
        tally.check(FE.B.eq(FE.trc(ia(a)), ib(P.trc(a))), (name, "trc", a))
        tally.check(FE.B.eq(FE.nrm(ia(a)), ib(P.nrm(a))), (name, "nrm", a))
        for c in samples_a[:4]:
            tally.check(FE.A.eq(FE.A.add(ia(a), ia(c)), ia(P.A.add(a, c))), (name, "A+", a, c))
            tally.check(FE.A.eq(FE.A.mul(ia(a), ia(c)), ia(P.A.mul(a, c))), (name, "A*", a, c))
    for b in samples_b:
        tally.check(FE.A.eq(FE.res(ib(b)), ia(P.res(b))), (name, "res", b))
        for d in samples_b[:4]:
            tally.check(FE.B.eq(FE.B.mul(ib(b), ib(d)), ib(P.B.mul(b, d))), (name, "B*", b, d))


def alpha_preimage(M, E, X, value):
    """The element of M(X) whose orbit components are read off value = (u, v)."""
    G = M.group
    Gs, pt = regular_gset(G), point(G)
    u, v = value
    fixed = E._fixed(X)
    out = M.zero(X)
    for orb in X.orbits:
        x0 = orb[0]
        if len(orb) == 1:
            inc = GMap(pt, X, (x0,))
            out = M.add(X, out, M.T(inc, v[fixed.index(x0)]))
        else:
            inc = GMap(Gs, X, tuple(X.act[c[0]][x0] for c in Gs.labels))
            out = M.add(X, out, M.T(inc, u[x0]))
    return out


def suite_c2_equivalence(seed=0, cap=None, max_size=6):
    """F o E = id on the dual-numbers pair and the Burnside pair; M = EFM on
    C2-sets of size <= max_size; the eleven pair axioms for the dual-numbers pair."""
    G = cyclic(2)
    rng = random.Random(seed)
    tally = _Tally()
    P = dual_numbers_pair()
    sa = [P.A.random(rng) for _ in range(12)] + [P.A.zero, P.A.one]
    sb = [P.B.random(rng) for _ in range(12)] + [P.B.zero, P.B.one]
    for axiom, witness in P.check_axioms(sa, sb).items():
        tally.check(witness is None, ("axiom", axiom, witness))
    for prop, witness in P.check_structure(sa, sb).items():
        tally.check(witness is None, ("structure", prop, witness))
    BG = P.B
    beta, gamma = (0, 1, 0), (0, 0, 1)
    for i, j in itertools.product(range(-4, 5), repeat=2):
        formula = BG.add(BG.add(BG.from_int(i * i), BG.mul(BG.from_int(i * j), beta)),
                         BG.mul(BG.from_int(j * j), gamma))
        tally.check(BG.eq(P.nrm((i, j)), formula), ("nrm(i + j alpha)", i, j))
    _check_FE(tally, "dual numbers", P, sa, sb)
    B = BurnsideTambara(G, cap)
    FB = pair_from_functor(B)
    Gs, pt = regular_gset(G), point(G)
    _check_FE(tally, "burnside", FB, [B.sample(Gs, rng) for _ in range(6)],
              [B.sample(pt, rng) for _ in range(6)])

    models = c2_carriers(G)
    models = {k: models[k] for k in ("burnside", "fixed-point ZxZ swap", "E(dual numbers)")}
    Xs = all_gsets(G, max_size)
    small = all_gsets(G, 3)
    for name, M in models.items():
        E = PairTambara(G, pair_from_functor(M))
        for X in Xs:
            for _ in range(3):
                m = M.sample(X, rng)
                am = alpha(M, E, X, m)
                tally.check(E.is_valid(X, am), (name, "alpha valid", X, m))
                tally.check(M.eq(X, alpha_preimage(M, E, X, am), m), (name, "alpha injective", X, m))
                e = E.sample(X, rng)
                tally.check(E.eq(X, alpha(M, E, X, alpha_preimage(M, E, X, e)), e),
                            (name, "alpha surjective", X, e))
                m2 = M.sample(X, rng)
                tally.check(E.eq(X, alpha(M, E, X, M.add(X, m, m2)),
                                 E.add(X, am, alpha(M, E, X, m2))), (name, "alpha +", X))
                tally.check(E.eq(X, alpha(M, E, X, M.mul(X, m, m2)),
                                 E.mul(X, am, alpha(M, E, X, m2))), (name, "alpha *", X))
        for f in map_classes(small):
            a = M.sample(f.dom, rng)
            b = M.sample(f.cod, rng)
            X, Y = f.dom, f.cod
            tally.check(E.eq(X, alpha(M, E, X, M.R(f, b)), E.R(f, alpha(M, E, Y, b))),
                        (name, "alpha R", f, b))
            tally.check(E.eq(Y, alpha(M, E, Y, M.T(f, a)), E.T(f, alpha(M, E, X, a))),
                        (name, "alpha T", f, a))
            tally.check(E.eq(Y, alpha(M, E, Y, M.N(f, a)), E.N(f, alpha(M, E, X, a))),
                        (name, "alpha N", f, a))
    return _result("c2-equivalence", tally)


def double_coset_product(G, i, j):
    """[G/H_i][G/H_j] = sum over double cosets H_i t H_j of [G/(H_j cap t^-1 H_i t)]."""
    system = subgroup_system(G)
    dc = double_cosets(G, G.whole, system.reps[i], system.reps[j])
    counts = [0] * len(system.reps)
    for M in dc.stabilizers:
        counts[system.class_of(M)] += 1
    return tuple(counts)


def marks_product(G, b1, b2):
    """Solve c . marks = (b1 . marks) * (b2 . marks) over the rationals."""
    marks = subgroup_system(G).marks
    r = len(marks)
    target = [x * y for x, y in zip(phi(G, b1), phi(G, b2))]
    c = [Fraction(0)] * r
    # marks is lower triangular: marks[i][j] = 0 for j > i
    for i in reversed(range(r)):
        rest = target[i] - sum(c[k] * marks[k][i] for k in range(i + 1, r))
        c[i] = Fraction(rest, marks[i][i])
    assert all(x.denominator == 1 for x in c)
    return tuple(int(x) for x in c)


def suite_witt_burnside(seed=0, cap=None):
    """tau carries witt_add / witt_mul on S3 basis vectors to the Burnside ring,
    checked against pullbacks, double cosets and marks."""
    G = symmetric(3)
    system = subgroup_system(G)
    r = len(system.reps)
    tally = _Tally()
    for i in range(r):
        tally.check(tau(G, basis_vector(G, i), cap) == basis_vector(G, i), ("tau basis", i))
    for i, j in itertools.combinations_with_replacement(range(r), 2):
        a, b = basis_vector(G, i), basis_vector(G, j)
        prod = tau(G, witt_mul(G, a, b), cap)
        tally.check(prod == burnside_product_counts(G, tau(G, a), tau(G, b), cap),
                    ("mul vs pullback", i, j, prod))
        tally.check(prod == double_coset_product(G, i, j), ("mul vs double cosets", i, j, prod))
        tally.check(prod == marks_product(G, a, b), ("mul vs marks", i, j, prod))
        total = tau(G, witt_add(G, a, b), cap)
        tally.check(total == tuple(x + y for x, y in zip(a, b)), ("add", i, j, total))
    c2 = 1  # classes of S3: 1, C2, C3, S3
    c3 = 2
    sq2 = tau(G, witt_mul(G, basis_vector(G, c2), basis_vector(G, c2)))
    tally.check(sq2 == (1, 1, 0, 0), ("[G/C2]^2", sq2))
    sq3 = tau(G, witt_mul(G, basis_vector(G, c3), basis_vector(G, c3)))
    tally.check(sq3 == (0, 0, 2, 0), ("[G/C3]^2", sq3))
    return _result("witt-burnside", tally)


def classical_ghost(xs, p):
    """p-typical ghost components w_n = sum_{k <= n} p^k x_k^(p^(n-k))."""
    out = []
    for n in range(len(xs)):
        total = xs[0] * 0
        for k in range(n + 1):
            total = total + p ** k * xs[k] ** (p ** (n - k))
        out.append(total)
    return out


def classical_solve(ws, p):
    """Invert classical_ghost by forward substitution over a polynomial ring."""
    xs = []
    for n, w in enumerate(ws):
        rest = w
        for k in range(n):
            rest = rest - p ** k * xs[k] ** (p ** (n - k))
        for monom, c in rest.terms():
            assert c % p ** n == 0, "classical Witt polynomial is not integral"
        xs.append(rest.quo_ground(p ** n))
    return xs


def suite_witt_classical(seed=0, cap=None):
    """W_C2 and W_C4 over Z against 2-typical Witt vectors of length 2 and 3,
    reindexed so that the classical x_k sits at the subgroup of index 2^k."""
    tally = _Tally()
    for G in (cyclic(2), cyclic(4)):
        polys = witt_universal(G)
        r = len(polys.xs)
        # classes are ordered by order; index 2^k means class r - 1 - k
        cx = [polys.xs[r - 1 - k] for k in range(r)]
        cy = [polys.ys[r - 1 - k] for k in range(r)]
        gx, gy = classical_ghost(cx, 2), classical_ghost(cy, 2)
        csum = classical_solve([u + v for u, v in zip(gx, gy)], 2)
        cprod = classical_solve([u * v for u, v in zip(gx, gy)], 2)
        for k in range(r):
            tally.check(polys.sums[r - 1 - k] == csum[k], (G.name, "sum", k))
            tally.check(polys.prods[r - 1 - k] == cprod[k], (G.name, "prod", k))
    return _result("witt-classical", tally)


WITT_GROUPS = ("cyclic:2", "cyclic:3", "cyclic:4", "cyclic:6", "symmetric:3", "dihedral:4")


def suite_witt_integrality(seed=0, cap=None, groups=WITT_GROUPS):
    """Universal polynomials exist over Z (the triangular solve asserts exact
    division) and satisfy the ghost identities as polynomials."""
    tally = _Tally()
    for spec in groups:
        G = make_group(spec)
        try:
            polys = witt_universal(G)
        except IntegralityError as exc:
            tally.check(False, (spec, "solve", str(exc)))
            continue
        tally.check(all(isinstance(c, type(ZZ(1))) or isinstance(c, int)
                        for c in polys.coefficients()), (spec, "coefficient type"))
        gx, gy = ghost(G, polys.xs), ghost(G, polys.ys)
        tally.check(ghost(G, polys.sums) == tuple(u + v for u, v in zip(gx, gy)), (spec, "sum"))
        tally.check(ghost(G, polys.prods) == tuple(u * v for u, v in zip(gx, gy)), (spec, "prod"))
    return _result("witt-integrality", tally)


def suite_ghost_hom(seed=0, cap=None, groups=WITT_GROUPS, samples=200):
    """ghost(x + y) = ghost x + ghost y and ghost(x y) = ghost x ghost y."""
    rng = random.Random(seed)
    tally = _Tally()
    for spec in groups:
        G = make_group(spec)
        r = len(subgroup_system(G).reps)
        for _ in range(samples):
            x = tuple(rng.randint(-20, 20) for _ in range(r))
            y = tuple(rng.randint(-20, 20) for _ in range(r))
            gx, gy = ghost(G, x), ghost(G, y)
            tally.check(ghost(G, witt_add(G, x, y)) == tuple(u + v for u, v in zip(gx, gy)),
                        (spec, "add", x, y))
            tally.check(ghost(G, witt_mul(G, x, y)) == tuple(u * v for u, v in zip(gx, gy)),
                        (spec, "mul", x, y))
    return _result("ghost-hom", tally)


def suite_completion(seed=0, cap=None, max_size=3):
    """Burnside+ over C2: N_eps(-1) = t - 1, chi(0) = e, chi(a + b) = chi a v chi b,
    R_j chi = N_f, and the completion norm agrees with N on nonnegative values."""
    G = cyclic(2)
    rng = random.Random(seed)
    B = BurnsideTambara(G, cap)
    P = CompletionCarrier(B)
    tally = _Tally()
    Gs, pt = regular_gset(G), point(G)
    eps = terminal_map(Gs)
    minus_one = P.neg(Gs, P.one(Gs))
    t = B.from_counts(pt, (1, 0))
    t_minus_one = (t, B.one(pt))
    got = P.N(eps, minus_one)
    tally.check(P.eq(pt, got, t_minus_one), ("N_eps(-1)", got))
    tally.check(tau(G, (0, -1), cap) == (1, -1), ("tau(-delta_G)", tau(G, (0, -1), cap)))
    Xs = all_gsets(G, max_size)
    maps = [f for X in Xs for Y in Xs for f in enumerate_gmaps(X, Y)]
    for f in maps:
        data = SubsetData(f, cap)
        e = convolution_unit(B, data)
        tally.check(chi(B, data, B.zero(f.dom)) == e, ("chi(0)", f))
        for _ in range(2):
            a, b = B.sample(f.dom, rng), B.sample(f.dom, rng)
            ca, cb = chi(B, data, a), chi(B, data, b)
            tally.check(chi(B, data, B.add(f.dom, a, b)) == convolve(B, data, ca, cb),
                        ("chi additive", f, a, b))
            tally.check(B.R(data.j, ca) == B.N(f, a), ("R_j chi = N_f", f, a))
            tally.check(P.eq(f.cod, completion_norm(P, f, (a, ()), data), (B.N(f, a), ())),
                        ("completion norm on N", f, a))
    return _result("completion", tally, detail=f"{len(maps)} maps")


def suite_norm_frobenius(seed=0, cap=None, max_size=4):
    """N_g(0) = (0, 1) under the image splitting, and T_f(a R_f b) = T_f(a) b,
    on every carrier over C2 and one map per isomorphism class of arrows."""
    G = cyclic(2)
    rng = random.Random(seed)
    tally = _Tally()
    maps = list(map_classes(all_gsets(G, max_size)))
    for name, S in c2_carriers(G).items():
        for g in maps:
            X, Y = g.dom, g.cod
            on_img, off_img = split_along_image(S, g, S.N(g, S.zero(X)))
            img_set, rest_set = _image_sets(g)
            tally.check(S.eq(img_set, on_img, S.zero(img_set)), (name, "N_g(0) on image", g))
            tally.check(S.eq(rest_set, off_img, S.one(rest_set)), (name, "N_g(0) off image", g))
            for _ in range(2):
                a, b = S.sample(X, rng), S.sample(Y, rng)
                lhs = S.T(g, S.mul(X, a, S.R(g, b)))
                tally.check(S.eq(Y, lhs, S.mul(Y, S.T(g, a), b)), (name, "Frobenius", g, a, b))
    return _result("norm-frobenius", tally, detail=f"{len(maps)} maps")


def _image_sets(g):
    img, rest = image_split(g)
    return img.dom, rest.dom


def suite_q_functor(seed=0, cap=None):
    """q(Burnside)(U) = N via |Sec| for each orbit U of S3: an orbit over U has
    one section when it maps isomorphically and none when it is a transfer
    from a larger orbit, and |Sec| is additive."""
    G = symmetric(3)
    system = subgroup_system(G)
    B = BurnsideTambara(G, cap)
    rng = random.Random(seed)
    tally = _Tally()
    for i, H in enumerate(system.reps):
        U = orbit(G, H)
        values = []
        for k, K in enumerate(system.reps):
            V = orbit(G, K)
            for u in enumerate_gmaps(V, U):
                v = B.T(u, B.one(V))
                values.append(v)
                count = B.section_count(U, v)
                if V.size == U.size:
                    tally.check(count == 1, ("iso orbit", i, k, count))
                else:
                    tally.check(count == 0, ("proper transfer", i, k, count))
        tally.check(B.section_count(U, B.one(U)) == 1, ("generator", i))
        for _ in range(10):
            a, b = rng.choice(values), rng.choice(values)
            tally.check(B.section_count(U, B.add(U, a, b))
                        == B.section_count(U, a) + B.section_count(U, b), ("additive", i))
    return _result("q-functor", tally)


def set_partitions(n):
    """All partitions of range(n) as class-index tuples (restricted growth strings)."""
    out = []

    def rec(prefix, m):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for c in range(m + 1):
            rec(prefix + [c], max(m, c + 1))

    rec([], 0)
    return out


def suite_congruence(seed=0, cap=None, max_size=5):
    """Congruence closure against a brute-force least-congruence search on all
    commutative semigroups of size <= max_size with at most two generating pairs."""
    tally = _Tally()
    semigroups = 0
    for n in range(1, max_size + 1):
        parts = set_partitions(n)
        all_pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
        gens = [()] + [(p,) for p in all_pairs] + list(itertools.combinations(all_pairs, 2))
        for table in enumerate_comm_semigroups(n):
            semigroups += 1
            S = FinCommSemigroup(table, None)
            congs = [p for p in parts if is_congruence(S, p)]
            for pairs in gens:
                containing = [p for p in congs if all(p[a] == p[b] for a, b in pairs)]
                finest = max(containing, key=lambda p: max(p))
                # the finest one refines every other candidate
                ok_meet = all(all(q[a] == q[b] for a in range(n) for b in range(n)
                                  if finest[a] == finest[b]) for q in containing)
                tally.check(ok_meet, ("meet", table, pairs))
                E = congruence_closure(S, pairs)
                idx = E.class_index()
                same = all((idx[a] == idx[b]) == (finest[a] == finest[b])
                           for a in range(n) for b in range(n))
                tally.check(same, ("closure", table, pairs, E.classes()))
    for a in range(1, 5):
        T = truncated_naturals(3 * a)
        U = [u for u in range(T.size) if u == 0 or u >= a]
        E = congruence_closure(FinCommSemigroup(T.add_table, 0), [(u, 0) for u in U])
        tally.check(len(E.classes()) == 1, ("N/U_a collapse", a, E.classes()))
    rng = random.Random(seed)
    for _ in range(30):
        n = rng.randint(1, 5)
        S = FinCommSemigroup(rng.choice(enumerate_comm_semigroups(n)), None)
        pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(0, 2))]
        E = congruence_closure(S, pairs)
        sizes = closure_tower(S, pairs)
        expect = sum(len(c) ** 2 for c in E.classes())
        tally.check(sizes[-1] == expect, ("tower", S.add_table, pairs, sizes))
    return _result("congruence", tally, detail=f"{semigroups} semigroups")


class _CountVectors(Semiring):
    """Z^r under componentwise addition."""

    has_negatives = True

    def __init__(self, r):
        self.zero = (0,) * r

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)


def suite_poly_degree(seed=0, cap=None, samples=100):
    """delta[I, a] N_eps vanishes for |I| = 3 on C2, both on Burnside+ and on
    W_C2(Z) (where N_eps(c) is the Witt vector c delta_G)."""
    G = cyclic(2)
    rng = random.Random(seed)
    tally = _Tally()
    B = BurnsideTambara(G, cap)
    P = CompletionCarrier(B)
    Gs, pt = regular_gset(G), point(G)
    eps = terminal_map(Gs)
    cache = {}

    def norm_counts(c):
        if c not in cache:
            pos, neg = P.normalize(pt, nu(P, eps, c))
            cache[c] = tuple(x - y for x, y in zip(B.counts(pos), B.counts(neg)))
        return cache[c]

    Z = IntegerRing()
    W = WittGroup(G)
    draws = [([rng.randint(-3, 3) for _ in range(3)], rng.randint(-3, 3)) for _ in range(samples)]
    ok, witness = polynomial_degree_at_most(norm_counts, 2, draws, Z, _CountVectors(2))
    tally.check(ok, ("burnside+", witness))
    ok, witness = polynomial_degree_at_most(lambda c: (0, c), 2, draws, Z, W)
    tally.check(ok, ("witt", witness))
    for c in range(-3, 4):
        tally.check(tau(G, (0, c)) == norm_counts(c), ("tau(c delta_G) = N_eps(c)", c))
    # degree is exactly two: some second difference is nonzero
    pairs = [(a[:2], x) for a, x in draws]
    ok2, _ = polynomial_degree_at_most(norm_counts, 1, pairs, Z, _CountVectors(2))
    tally.check(not ok2, ("degree one expected to fail", None))
    return _result("poly-degree", tally, detail=f"{samples} samples")


SUITES = {
    "burnside-c2": suite_burnside_c2,
    "distributor": suite_distributor,
    "presentation": suite_presentation,
    "term-systems": suite_term_systems,
    "c2-equivalence": suite_c2_equivalence,
    "witt-burnside": suite_witt_burnside,
    "witt-classical": suite_witt_classical,
    "witt-integrality": suite_witt_integrality,
    "ghost-hom": suite_ghost_hom,
    "completion": suite_completion,
    "norm-frobenius": suite_norm_frobenius,
    "q-functor": suite_q_functor,
    "congruence": suite_congruence,
    "poly-degree": suite_poly_degree,
}


def run_suite(name, seed=0, cap=None):
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    start = time.perf_counter()
    result = SUITES[name](seed=seed, cap=cap)
    result.seconds = time.perf_counter() - start
    return result


def run_all(seed=0, cap=None):
    return [run_suite(name, seed, cap) for name in SUITES]
