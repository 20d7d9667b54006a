import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from tambara.errors import PreconditionError, UnsupportedCarrierError, ValidationError
from tambara.semirings import (FinCommSemiring, IntegerRing, MonoidElement, MonoidSemiring,
                               NaturalSemiring, additive_completion, automorphisms,
                               bracket_power, closure_tower, coinvariants, congruence_closure,
                               cyclic_monoid, delta_operator, enumerate_comm_semigroups,
                               enumerate_comm_semirings, field_f4, is_congruence,
                               polynomial_degree_at_most, quotient, truncated_naturals,
                               truncated_naturals_squared, zmod)
from tambara.verify import set_partitions


def brute_least_congruence(S, pairs, mode="semigroup"):
    """Finest partition containing pairs that is a congruence, by scanning all partitions."""
    best = None
    for p in set_partitions(S.size):
        if all(p[a] == p[b] for a, b in pairs) and is_congruence(S, p, mode):
            if best is None or max(p) > max(best):
                best = p
    return best


def blocks(index, n):
    out = {}
    for x in range(n):
        out.setdefault(index[x], []).append(x)
    return sorted(out.values())


# ------------------------------------------------------------------ tables

def test_table_constructors_validate():
    for S in (zmod(1), zmod(4), truncated_naturals(3), truncated_naturals_squared(2), field_f4()):
        S.validate()


def test_f4_is_a_field():
    F = field_f4()
    assert all(any(F.mul(a, b) == F.one for b in range(4)) for a in range(1, 4))


def test_bad_distributivity_rejected():
    S = zmod(3)
    bad = FinCommSemiring(S.add_table, 0, tuple(tuple(1 if a and b else 0 for b in range(3))
                                                 for a in range(3)), 1)
    with pytest.raises(ValidationError):
        bad.validate()


def test_negatives():
    assert zmod(5).has_negatives
    assert zmod(5).neg(2) == 3
    assert not truncated_naturals(3).has_negatives
    with pytest.raises(UnsupportedCarrierError):
        truncated_naturals(3).neg(1)
    with pytest.raises(UnsupportedCarrierError):
        NaturalSemiring().neg(1)


# ------------------------------------------------------------------ congruences

def test_quotient_of_z4_by_two_equals_zero():
    S = zmod(4)
    Q, proj = quotient(S, congruence_closure(S, [(2, 0)]))
    assert Q.size == 2
    assert proj == (0, 1, 0, 1)


def test_empty_generators_give_the_identity_quotient():
    S = zmod(5)
    Q, proj = quotient(S, congruence_closure(S, []))
    assert Q.size == 5
    assert Q.add_table == S.add_table
    assert proj == tuple(range(5))


def test_three_equals_zero_collapses_truncated_naturals():
    S = truncated_naturals(10)
    E = congruence_closure(S, [(3, 0)])
    assert len(E.classes()) == 1
    assert E.rounds >= 1


def test_closure_rejects_unknown_mode():
    with pytest.raises(PreconditionError):
        congruence_closure(zmod(3), [], mode="ring")


CARRIERS = [zmod(4), zmod(6), truncated_naturals(4), truncated_naturals(6),
            truncated_naturals_squared(1), field_f4(), truncated_naturals(7)]


@pytest.mark.parametrize("S", CARRIERS, ids=lambda S: f"size{S.size}")
@pytest.mark.parametrize("mode", ["semigroup", "semiring"])
def test_closure_is_the_least_congruence(S, mode):
    rng = random.Random(S.size)
    for _ in range(3):
        pairs = [(rng.randrange(S.size), rng.randrange(S.size)) for _ in range(rng.randint(0, 2))]
        E = congruence_closure(S, pairs, mode)
        idx = E.class_index()
        assert is_congruence(S, idx, mode)
        assert E.classes() == blocks(brute_least_congruence(S, pairs, mode), S.size)


@pytest.mark.parametrize("S", CARRIERS[:5], ids=lambda S: f"size{S.size}")
def test_tower_stabilizes_at_the_closure(S):
    rng = random.Random(7)
    pairs = [(rng.randrange(S.size), rng.randrange(S.size))]
    sizes = closure_tower(S, pairs)
    E = congruence_closure(S, pairs)
    assert sizes[-1] == sum(len(c) ** 2 for c in E.classes())
    assert sizes == sorted(sizes)


def test_semigroup_enumeration_counts():
    assert [len(enumerate_comm_semigroups(n)) for n in range(1, 6)] == [1, 3, 12, 58, 325]


# ------------------------------------------------------------------ coinvariants

def test_trivial_action_leaves_carrier_alone():
    S = zmod(6)
    Q, proj = coinvariants(S, [tuple(range(6))])
    assert Q.size == 6 and proj == tuple(range(6))


@pytest.mark.parametrize("cap,classes", [(1, 2), (2, 3)])
def test_swap_coinvariants_on_truncated_square(cap, classes):
    # class counts derived by scanning every partition of the carrier
    S = truncated_naturals_squared(cap)
    k = cap + 1
    swap = tuple((a % k) * k + a // k for a in range(S.size))
    Q, _ = coinvariants(S, [tuple(range(S.size)), swap])
    assert Q.size == classes
    pairs = [(a, swap[a]) for a in range(S.size)]
    assert Q.size == max(brute_least_congruence(S, pairs)) + 1


def test_coinvariants_rejects_a_non_automorphism():
    S = truncated_naturals(3)
    with pytest.raises(ValidationError):
        coinvariants(S, [(0, 2, 1, 3)])


def test_semiring_mode_is_a_proper_quotient_on_a_size_four_witness():
    # F_2 x F_2 style ring found by search over the size-four semirings
    S = FinCommSemiring(((0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)), 0,
                        ((0, 0, 0, 0), (0, 1, 2, 3), (0, 2, 2, 0), (0, 3, 0, 3)), 1).validate()
    act = [(0, 1, 2, 3), (0, 1, 3, 2)]
    assert coinvariants(S, act, "semigroup")[0].size == 2
    assert coinvariants(S, act, "semiring")[0].size == 1


def test_semiring_mode_never_finer_than_semigroup_mode():
    found = False
    for n in range(2, 5):
        for S in enumerate_comm_semirings(n):
            for a in automorphisms(S):
                act = [tuple(range(n)), a]
                q1 = coinvariants(S, act, "semigroup")[0].size
                q2 = coinvariants(S, act, "semiring")[0].size
                assert q2 <= q1
                found |= q2 < q1
    assert found


def test_automorphisms_of_f4():
    assert sorted(automorphisms(field_f4())) == [(0, 1, 2, 3), (0, 1, 3, 2)]


# ------------------------------------------------------------------ completion

def test_completion_of_naturals():
    Z = additive_completion(NaturalSemiring())
    assert Z.eq((3, 1), (2, 0))
    assert Z.mul((3, 1), (2, 0)) == (6, 2)
    assert Z.eq((6, 2), (4, 0))


def test_completion_of_naturals_matches_integers_on_a_window():
    Z = additive_completion(NaturalSemiring())
    pairs = [(a, b) for a in range(21) for b in range(21)]
    for x, y in itertools.product(pairs[::7], repeat=2):
        vx, vy = x[0] - x[1], y[0] - y[1]
        assert Z.eq(x, y) == (vx == vy)
        s, p = Z.add(x, y), Z.mul(x, y)
        assert s[0] - s[1] == vx + vy
        assert p[0] - p[1] == vx * vy
    assert Z.eq(Z.from_int(-20), (0, 20))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6])
def test_completion_of_zmod_is_idempotent(n):
    S = zmod(n)
    C = additive_completion(S)
    for a, b in itertools.product(range(n), repeat=2):
        assert C.eq((a, b), ((a - b) % n, 0))
        assert C.eq((a, 0), (b, 0)) == (a == b)


def test_completion_of_truncated_naturals_collapses():
    # saturation makes every pair equal after adding the top element
    C = additive_completion(truncated_naturals(3))
    assert C.eq((1, 0), (0, 0))


# ------------------------------------------------------------------ monoid semirings

def test_bracket_power_example():
    M = cyclic_monoid(2)
    a = MonoidElement(M, {0: 2, 1: 3})
    assert bracket_power(a, 2) == MonoidElement(M, {0: 5})
    assert bracket_power(a, 1) == a
    assert bracket_power(a, 0) == MonoidElement(M, {0: 5})
    with pytest.raises(PreconditionError):
        bracket_power(a, -1)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 4]), st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_square_agrees_with_bracket_square_mod_two(n, coeffs):
    M = cyclic_monoid(n)
    a = MonoidElement(M, {m: c for m, c in zip(range(n), coeffs)})
    diff = a * a - bracket_power(a, 2)
    assert all(c % 2 == 0 for c in diff.coeffs.values())


def test_monoid_semiring_unit():
    R = MonoidSemiring(cyclic_monoid(3))
    x = R.basis(1, 2) + R.basis(2)
    assert R.mul(R.one, x) == x
    assert R.mul(R.basis(1), R.basis(2)) == R.one


# ------------------------------------------------------------------ polynomial maps

def test_constant_has_degree_zero():
    Z = IntegerRing()
    ok, witness = polynomial_degree_at_most(lambda x: 7, 0, [((a,), x) for a in range(-3, 4)
                                                               for x in range(-3, 4)], Z)
    assert ok and witness is None


def test_square_has_degree_two_and_not_one():
    Z = IntegerRing()
    f = lambda x: x * x  # noqa: E731
    samples2 = [((a, b, c), x) for a in (-2, 1, 3) for b in (-1, 2) for c in (1, 4) for x in (0, 5)]
    assert polynomial_degree_at_most(f, 2, samples2, Z) == (True, None)
    ok, witness = polynomial_degree_at_most(f, 1, [((1, 1), 0)], Z)
    assert not ok and witness == ((1, 1), 0, 2)


def test_delta_operator_of_square():
    Z = IntegerRing()
    d = delta_operator(lambda x: x * x, 3, Z)
    assert [d(x) for x in range(4)] == [9, 15, 21, 27]


def test_difference_operators_need_negatives():
    with pytest.raises(UnsupportedCarrierError):
        delta_operator(lambda x: x, 1, NaturalSemiring())
