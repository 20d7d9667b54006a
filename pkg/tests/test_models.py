import random

import pytest

from tambara.errors import PreconditionError, UnsupportedCarrierError
from tambara.groups import cyclic, subgroup_system, symmetric
from tambara.gsets import (GMap, all_gsets, enumerate_gmaps, gsets_isomorphic, orbit,
                           orbit_type, point, terminal_map, trivial_gset)
from tambara.models.base import MackeyCarrier
from tambara.models.burnside import BurnsideTambara
from tambara.models.c2 import (BetaGamma, PairTambara, alpha, dual_numbers_pair,
                               integer_pair, pair_from_functor, regular_gset)
from tambara.models.change import (Induction, coinduce_carrier, restrict_bispan,
                                   restrict_gset, subgroup_as_group)
from tambara.models.completion import (CompletionCarrier, SubsetData, chi, convolution_unit,
                                       convolve)
from tambara.models.fixed_point import FixedPointTambara
from tambara.models.monoid_burnside import (CoconstantMackey, MonoidBurnside,
                                            coinvariant_classes_brute, constant_mackey)
from tambara.models.qfunctor import burnside_q_class, q_functor
from tambara.bispans import Bispan
from tambara.semirings import IntegerRing, NaturalSemiring, SwapPairs, cyclic_monoid, zmod
from tambara.verify import map_classes

import oracles

C2 = cyclic(2)
S3 = symmetric(3)


def n_times(S, X, a, n):
    out = S.zero(X)
    for _ in range(n):
        out = S.add(X, out, a)
    return out


# ------------------------------------------------------------------ fixed points

def test_fixed_point_integers_norm_and_transfer():
    Z = FixedPointTambara(C2, IntegerRing())
    eps = terminal_map(regular_gset(C2))
    for n in range(-5, 6):
        assert Z.N(eps, (n, n)) == (n * n,)
        assert Z.T(eps, (n, n)) == (2 * n,)
        assert Z.R(eps, (n,)) == (n, n)


def test_fixed_point_values_on_orbits_are_fixed_elements():
    # swap on pairs: on G/1 every pair, on the point only the diagonal
    R = SwapPairs(lambda g: g != C2.identity)
    ring = zmod(3)
    S = FixedPointTambara(C2, ring)
    assert len(S.elements(regular_gset(C2))) == 3
    assert len(S.elements(point(C2))) == 3
    cR = FixedPointTambara(C2, R)
    v = cR.sample(point(C2), random.Random(1))
    assert v[0][0] == v[0][1]


# ------------------------------------------------------------------ Burnside

def test_burnside_c2_t_squared():
    B = BurnsideTambara(C2)
    pt = point(C2)
    t = B.from_counts(pt, (1, 0))
    assert B.mul(pt, t, t) == B.add(pt, t, t)
    assert B.counts(B.one(pt)) == (0, 1)


@pytest.mark.parametrize("n", range(0, 6))
def test_burnside_c2_norm_of_multiples(n):
    # derived by listing the sections of n copies of G over G
    B = BurnsideTambara(C2)
    Gs = regular_gset(C2)
    v = B.N(terminal_map(Gs), n_times(B, Gs, B.one(Gs), n))
    assert B.counts(v) == ((n * n - n) // 2, n)


def test_burnside_s3_c3_square():
    B = BurnsideTambara(S3)
    pt = point(S3)
    a = B.from_counts(pt, (0, 0, 1, 0))
    assert B.counts(B.mul(pt, a, a)) == (0, 0, 2, 0)


@pytest.mark.parametrize("G", [S3, cyclic(4), cyclic(6)], ids=lambda G: G.name)
def test_burnside_products_against_marks_oracle(G):
    B = BurnsideTambara(G)
    pt = point(G)
    r = len(subgroup_system(G).reps)
    T = [list(row) for row in G.mult]
    for i in range(r):
        for j in range(r):
            ei = tuple(int(k == i) for k in range(r))
            ej = tuple(int(k == j) for k in range(r))
            got = B.counts(B.mul(pt, B.from_counts(pt, ei), B.from_counts(pt, ej)))
            assert list(got) == oracles.burnside_product_by_marks(T, ei, ej)


def test_burnside_s3_frozen_products():
    B = BurnsideTambara(S3)
    pt = point(S3)
    frozen = {(1, 1): (1, 1, 0, 0), (2, 2): (0, 0, 2, 0), (0, 0): (6, 0, 0, 0),
              (1, 2): (1, 0, 0, 0), (1, 3): (0, 1, 0, 0), (2, 3): (0, 0, 1, 0)}
    for (i, j), want in frozen.items():
        ei = tuple(int(k == i) for k in range(4))
        ej = tuple(int(k == j) for k in range(4))
        assert B.counts(B.mul(pt, B.from_counts(pt, ei), B.from_counts(pt, ej))) == want


def test_burnside_section_count_matches_brute_force():
    B = BurnsideTambara(C2)
    Gs = regular_gset(C2)
    rng = random.Random(3)
    for X in all_gsets(C2, 3, min_size=1):
        for _ in range(3):
            v = B.sample(X, rng)
            Q, k = B.realize(X, v)
            brute = oracles.sections_brute(list(Q.act), list(X.act), list(k.table))
            assert B.section_count(X, v) == len(brute)
    assert B.section_count(Gs, B.one(Gs)) == 1


# ------------------------------------------------------------------ C2 pairs

def test_pair_of_burnside():
    B = BurnsideTambara(C2)
    P = pair_from_functor(B)
    Gs, pt = regular_gset(C2), point(C2)
    t = B.from_counts(pt, (1, 0))
    assert P.res(t) == B.add(Gs, B.one(Gs), B.one(Gs))
    assert P.trc(B.one(Gs)) == t
    for n in range(5):
        a = n_times(B, Gs, B.one(Gs), n)
        assert B.counts(P.nrm(a)) == ((n * n - n) // 2, n)
        assert P.bar(a) == a


def test_dual_numbers_pair_axioms():
    P = dual_numbers_pair()
    rng = random.Random(0)
    sa = [P.A.random(rng) for _ in range(15)] + [P.A.zero, P.A.one]
    sb = [P.B.random(rng) for _ in range(15)] + [P.B.zero, P.B.one]
    assert all(w is None for w in P.check_axioms(sa, sb).values())
    assert all(w is None for w in P.check_structure(sa, sb).values())
    assert len(P.check_axioms(sa, sb)) == 11


def test_dual_numbers_norm_formula():
    P = dual_numbers_pair()
    BG = BetaGamma()
    for i in range(-3, 4):
        for j in range(-3, 4):
            assert BG.eq(P.nrm((i, j)), (i * i, i * j, (j * j) % 2))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_norm_of_sum_identity(k):
    P = dual_numbers_pair()
    rng = random.Random(k)
    for _ in range(20):
        assert P.norm_of_sum_identity([P.A.random(rng) for _ in range(k)])


def test_broken_pair_reports_a_witness():
    P = integer_pair()
    P.nrm = lambda a: a * a + 1
    report = P.check_axioms([0, 1, 2], [0, 1])
    assert report["nrm(0) = 0"] == ()
    assert report["trc additive"] is None


def test_pair_functor_values_on_orbits():
    P = dual_numbers_pair()
    E = PairTambara(C2, P)
    Gs, pt = regular_gset(C2), point(C2)
    a = (3, -2)
    assert E.make(Gs, [a], []) == ((a, P.bar(a)), ())
    b = (1, 4, 1)
    assert E.make(pt, [], [b]) == ((P.res(b),), (b,))
    rng = random.Random(0)
    for X in all_gsets(C2, 4):
        assert E.is_valid(X, E.sample(X, rng))


def test_pair_functor_needs_order_two():
    with pytest.raises(PreconditionError):
        PairTambara(S3, dual_numbers_pair())
    with pytest.raises(PreconditionError):
        pair_from_functor(BurnsideTambara(S3))


def test_alpha_is_bijective_on_burnside_values():
    B = BurnsideTambara(C2)
    E = PairTambara(C2, pair_from_functor(B))
    rng = random.Random(2)
    for X in all_gsets(C2, 3):
        seen = {}
        for _ in range(8):
            m = B.sample(X, rng)
            key = repr(alpha(B, E, X, m))
            assert seen.setdefault(key, m) == m


# ------------------------------------------------------------------ A[M]

def test_one_point_monoid_gives_burnside():
    M = constant_mackey(C2, cyclic_monoid(1))
    AM = MonoidBurnside(M)
    B = BurnsideTambara(C2)
    rng = random.Random(4)

    def strip(v):
        return tuple((i, z) for i, z, _ in v)

    for f in map_classes(all_gsets(C2, 4)):
        X, Y = f.dom, f.cod
        if X.size > 3:
            continue
        a = AM.sample(X, rng)
        b = AM.sample(Y, rng)
        a2 = AM.sample(X, rng)
        assert strip(AM.T(f, a)) == B.T(f, strip(a))
        assert strip(AM.R(f, b)) == B.R(f, strip(b))
        assert strip(AM.N(f, a)) == B.N(f, strip(a))
        assert strip(AM.mul(X, a, a2)) == B.mul(X, strip(a), strip(a2))


def test_unit_and_triangle_identity():
    M = constant_mackey(C2, zmod(3))
    AM = MonoidBurnside(M)
    rng = random.Random(5)
    for X in all_gsets(C2, 3):
        for m in M.elements(X):
            eta = AM.unit(X, m)
            u, m2 = AM.realize(X, eta)
            assert AM.canonical(u, m2) == eta
        for _ in range(5):
            v = AM.sample(X, rng)
            u, m = AM.realize(X, v)
            # epsilon(A[eta](v)) = T_u [W, 1, m]
            assert AM.T(u, AM.unit(u.dom, m)) == v


class MultiplicativePart(MackeyCarrier):
    """The multiplicative Mackey carrier of a Tambara carrier."""

    def __init__(self, S):
        self.S, self.group = S, S.group

    def zero(self, X):
        return self.S.one(X)

    def add(self, X, a, b):
        return self.S.mul(X, a, b)

    def R(self, f, b):
        return self.S.R(f, b)

    def T(self, f, a):
        return self.S.N(f, a)

    def elements(self, X):
        return self.S.elements(X)


def test_counit_is_a_morphism():
    S = FixedPointTambara(C2, zmod(3))
    AM = MonoidBurnside(MultiplicativePart(S))
    rng = random.Random(6)
    for f in map_classes(all_gsets(C2, 3)):
        X, Y = f.dom, f.cod
        a, a2, b = AM.sample(X, rng), AM.sample(X, rng), AM.sample(Y, rng)
        eps = lambda Z, v: AM.counit(S, Z, v)  # noqa: E731
        assert eps(X, AM.add(X, a, a2)) == S.add(X, eps(X, a), eps(X, a2))
        assert eps(X, AM.mul(X, a, a2)) == S.mul(X, eps(X, a), eps(X, a2))
        assert eps(Y, AM.T(f, a)) == S.T(f, eps(X, a))
        assert eps(X, AM.R(f, b)) == S.R(f, eps(Y, b))
        assert eps(Y, AM.N(f, a)) == S.N(f, eps(X, a))


# ------------------------------------------------------------------ coconstant

NEG3 = [(0, 1, 2), (0, 2, 1)]


@pytest.mark.parametrize("G,A,perms", [
    (C2, cyclic_monoid(3), None),
    (C2, cyclic_monoid(3), NEG3),
    (C2, cyclic_monoid(4), [(0, 1, 2, 3), (0, 3, 2, 1)]),
    (S3, cyclic_monoid(2), None),
], ids=["c2-trivial", "c2-negation", "c2-z4-negation", "s3-trivial"])
def test_coconstant_matches_full_table_closure(G, A, perms):
    dA = CoconstantMackey(G, A, perms)
    for X in all_gsets(G, 3 if G.order == 2 else 6):
        if A.size ** X.size > 5000:
            continue
        brute = coinvariant_classes_brute(G, A, X, perms)
        for m, rep in brute.items():
            assert dA.canon(X, m) == rep
        assert dA.elements(X) == sorted(set(brute.values()))


def test_coconstant_on_orbits():
    # on G/H the coinvariants are A_H; negation on Z/3 collapses A_G to a point
    dA = CoconstantMackey(C2, cyclic_monoid(3), NEG3)
    assert len(dA.elements(regular_gset(C2))) == 3
    assert len(dA.elements(point(C2))) == 1
    assert len(CoconstantMackey(C2, cyclic_monoid(3)).elements(point(C2))) == 3


# ------------------------------------------------------------------ q

def test_q_of_burnside_on_s3_point():
    B = BurnsideTambara(S3)
    pt = point(S3)
    assert burnside_q_class(B, pt, B.from_counts(pt, (0, 1, 0, 0))) == 0
    assert burnside_q_class(B, pt, B.one(pt)) == 1
    assert burnside_q_class(B, pt, B.from_counts(pt, (2, 1, 3, 4))) == 4


@pytest.mark.parametrize("n,on_free,on_point", [(3, 3, 1), (4, 4, 2), (5, 5, 1)])
def test_q_of_fixed_point_carrier(n, on_free, on_point):
    # transfers from G/1 to the point are 2a; on G/1 nothing is larger
    S = FixedPointTambara(C2, zmod(n))
    assert q_functor(S, regular_gset(C2))[0].size == on_free
    assert q_functor(S, point(C2))[0].size == on_point


# ------------------------------------------------------------------ change of groups

def test_subgroup_as_group():
    H = subgroup_system(S3).reps[2]
    Hg, elems = subgroup_as_group(S3, H)
    assert Hg.order == 3 and set(elems) == set(H.elements)


def test_induction_of_point_is_the_orbit():
    for i, H in enumerate(subgroup_system(S3).reps):
        ind = Induction(S3, H)
        X = ind.gset(point(ind.Hg))
        assert X.size == 6 // len(H)
        assert gsets_isomorphic(X, orbit(S3, H))
        assert orbit_type(X) == (i,)


def test_induction_is_functorial_and_equivariant():
    H = subgroup_system(S3).reps[1]
    ind = Induction(S3, H)
    Hg = ind.Hg
    for X in all_gsets(Hg, 3):
        for Y in all_gsets(Hg, 2):
            for f in enumerate_gmaps(X, Y):
                F = ind.map(f)
                F.validate()
                assert F.dom.size == 3 * X.size


def test_restriction_and_adjoint_bispan():
    H = subgroup_system(S3).reps[1]
    ind = Induction(S3, H)
    X = orbit(S3, subgroup_system(S3).reps[2])
    resX = restrict_gset(X, H)
    Y = trivial_gset(ind.Hg, 1)
    p = enumerate_gmaps(resX, resX)[0]
    w0 = Bispan(p, terminal_map(resX), GMap(Y, Y, (0,)))
    w = ind.adjoint_bispan(X, w0)
    for m in (w.p, w.q, w.r):
        m.validate()
    assert w.A.size == 3 * resX.size
    r = restrict_bispan(w, H)
    assert r.A.size == w.A.size


def test_coinduction_of_integers_from_the_trivial_group():
    H = subgroup_system(C2).reps[0]
    Hg, _ = subgroup_as_group(C2, H)
    S = coinduce_carrier(FixedPointTambara(Hg, IntegerRing()), C2, H)
    Gs = regular_gset(C2)
    eps = terminal_map(Gs)
    # the point restricts to one point and G/1 to two
    assert S.N(eps, (2, 5)) == (10,)
    assert S.T(eps, (2, 5)) == (7,)
    assert S.R(eps, (3,)) == (3, 3)


# ------------------------------------------------------------------ completion

def test_completion_needs_a_cancellative_base():
    with pytest.raises(UnsupportedCarrierError):
        CompletionCarrier(FixedPointTambara(C2, zmod(2)))


def test_completion_norm_of_minus_one():
    B = BurnsideTambara(C2)
    P = CompletionCarrier(B)
    Gs, pt = regular_gset(C2), point(C2)
    t = B.from_counts(pt, (1, 0))
    got = P.N(terminal_map(Gs), P.neg(Gs, P.one(Gs)))
    assert P.eq(pt, got, (t, B.one(pt)))


def test_chi_of_zero_and_norm_recovery():
    B = BurnsideTambara(C2)
    rng = random.Random(8)
    for f in map_classes(all_gsets(C2, 3)):
        data = SubsetData(f)
        assert chi(B, data, B.zero(f.dom)) == convolution_unit(B, data)
        a, b = B.sample(f.dom, rng), B.sample(f.dom, rng)
        assert B.R(data.j, chi(B, data, a)) == B.N(f, a)
        assert chi(B, data, B.add(f.dom, a, b)) == convolve(B, data, chi(B, data, a),
                                                            chi(B, data, b))


def test_completion_of_fixed_point_naturals_matches_integers():
    Nplus = CompletionCarrier(FixedPointTambara(C2, NaturalSemiring()))
    Z = FixedPointTambara(C2, IntegerRing())
    eps = terminal_map(regular_gset(C2))
    for a in range(0, 4):
        for b in range(0, 4):
            pos, neg = Nplus.N(eps, ((a, a), (b, b)))
            assert pos[0] - neg[0] == Z.N(eps, (a - b, a - b))[0]
