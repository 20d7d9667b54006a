import itertools

import pytest
from hypothesis import given, settings, strategies as st

from tambara.errors import SizeCapError, ValidationError
from tambara.groups import cyclic, make_group, subgroup_system, symmetric
from tambara.gsets import (GMap, all_gsets, coproduct, enumerate_gmaps, fixed_points, fold_map,
                           gsets_isomorphic, gsets_over_isomorphic, identity_map, orbit,
                           orbit_decomposition, orbit_type, pairing, parse_gset, point, product,
                           projection, pullback, sections, terminal_map,
                           trivial_gset)

import oracles


def s3():
    G = symmetric(3)
    return G, subgroup_system(G).reps


def test_orbit_sizes():
    G, reps = s3()
    assert orbit(G, G.trivial).size == 6
    assert orbit(G, reps[1]).size == 3


def test_projection_fibers():
    G, reps = s3()
    f = projection(G, G.trivial, reps[1])
    assert [len(fib) for fib in f.fibers] == [2, 2, 2]
    f.validate()


def test_fixed_points_of_own_stabilizer():
    G, reps = s3()
    assert len(fixed_points(orbit(G, reps[1]), reps[1])) == 1
    X = orbit(G, reps[1])
    assert fixed_points(X, G.trivial) == tuple(X.points)


def test_pullback_of_two_involution_orbits():
    G, reps = s3()
    X = orbit(G, reps[1])
    P, _, _ = pullback(terminal_map(X), terminal_map(X))
    assert P.size == 9
    assert orbit_type(P) == (0, 1)
    assert sorted(c for c, _ in orbit_decomposition(P)) == [0, 1]


def test_orbit_decomposition_examples():
    G, reps = s3()
    free = orbit(G, G.trivial)
    assert [c for c, _ in orbit_decomposition(free)] == [0]
    X, _, _ = coproduct(orbit(G, reps[1]), point(G))
    assert [c for c, _ in orbit_decomposition(X)] == [1, 3]


def test_self_maps_of_free_orbit():
    G, _ = s3()
    free = orbit(G, G.trivial)
    maps = enumerate_gmaps(free, free)
    assert len(maps) == 6
    assert all(m.is_bijective() for m in maps)


@pytest.mark.parametrize("spec", ["cyclic:2", "cyclic:4", "symmetric:3"])
def test_fold_map_sections(spec):
    G = make_group(spec)
    for X in all_gsets(G, 4):
        assert len(sections(fold_map(X))) == 2 ** len(X.orbits)


def test_free_orbit_over_involution_orbit_has_no_sections():
    G, reps = s3()
    assert sections(projection(G, G.trivial, reps[1])) == []


def test_isomorphism_examples():
    G, reps = s3()
    X = orbit(G, reps[1])
    assert gsets_isomorphic(X, X) is not None
    assert gsets_isomorphic(X, orbit(G, reps[2])) is None


def test_pullback_with_swapped_legs_is_isomorphic_over_base():
    G, reps = s3()
    X = orbit(G, reps[1])
    Y = orbit(G, reps[2])
    f, g = terminal_map(X), terminal_map(Y)
    P, a, b = pullback(f, g)
    Q, c, d = pullback(g, f)
    # P and Q over X x Y (after swapping the legs of Q)
    phi = gsets_over_isomorphic(pairing(a, b), pairing(d, c))
    assert phi is not None and phi.is_bijective()


@pytest.mark.parametrize("spec", ["cyclic:2", "cyclic:3", "cyclic:4", "symmetric:3"])
def test_mark_additivity_and_multiplicativity(spec):
    G = make_group(spec)
    system = subgroup_system(G)
    sets = all_gsets(G, 6 if G.order < 6 else 12)
    for X, Y in itertools.product(sets[:12], repeat=2):
        S, _, _ = coproduct(X, Y)
        P, _, _ = product(X, Y)
        for H in system.reps:
            nx, ny = len(fixed_points(X, H)), len(fixed_points(Y, H))
            assert len(fixed_points(S, H)) == nx + ny
            assert len(fixed_points(P, H)) == nx * ny


@pytest.mark.parametrize("spec", ["cyclic:2", "cyclic:4", "symmetric:3"])
def test_maps_from_orbit_count_fixed_points(spec):
    G = make_group(spec)
    for H in subgroup_system(G).reps:
        U = orbit(G, H)
        for X in all_gsets(G, 6):
            assert len(enumerate_gmaps(U, X)) == len(fixed_points(X, H))


@pytest.mark.parametrize("spec", ["cyclic:2", "cyclic:3", "symmetric:3"])
def test_enumerated_maps_match_brute_force(spec):
    G = make_group(spec)
    sets = all_gsets(G, 4 if G.order < 6 else 6)
    for U, X in itertools.product(sets, repeat=2):
        if U.size > 4 or X.size > 4 and U.size > 2:
            continue
        got = sorted(m.table for m in enumerate_gmaps(U, X))
        assert got == sorted(oracles.equivariant_maps(U.act, X.act))


@pytest.mark.parametrize("spec", ["cyclic:2", "cyclic:4", "symmetric:3"])
def test_sections_match_brute_force(spec):
    G = make_group(spec)
    sets = all_gsets(G, 4)
    for U, V in itertools.product(sets, repeat=2):
        for f in enumerate_gmaps(U, V):
            got = sorted(s.table for s in sections(f))
            assert got == sorted(oracles.sections_brute(U.act, V.act, f.table))


def test_sections_over_an_orbit_need_an_isomorphic_orbit():
    G, reps = s3()
    for H in reps:
        V = orbit(G, H)
        for U in all_gsets(G, 6):
            for f in enumerate_gmaps(U, V):
                iso_orbit = any(len(orb) == V.size for orb in U.orbits)
                assert bool(sections(f)) == iso_orbit


def test_section_cap_aborts():
    X = trivial_gset(cyclic(1), 6)
    with pytest.raises(SizeCapError):
        enumerate_gmaps(X, X, cap=10)
    with pytest.raises(SizeCapError):
        sections(fold_map(X), cap=10)
    assert len(sections(fold_map(X), cap=64)) == 64


def test_bad_map_is_rejected():
    G = cyclic(2)
    free = orbit(G, G.trivial)
    with pytest.raises(ValidationError):
        GMap(free, trivial_gset(G, 2), (0, 1)).validate()


def test_parse_gset_formats():
    G = cyclic(2)
    X = parse_gset(G, "orbits: 0,1")
    assert orbit_type(X) == (0, 1)
    Y = parse_gset(G, "points:2 action: 0 1; 1 0")
    assert gsets_isomorphic(Y, orbit(G, G.trivial)) is not None
    with pytest.raises(ValidationError):
        parse_gset(G, "points:2 action: 0 1; 0 0")
    with pytest.raises(ValidationError):
        parse_gset(G, "orbits: 7")


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["cyclic:2", "cyclic:3", "symmetric:3"]), st.data())
def test_pullback_is_universal_on_points(spec, data):
    G = make_group(spec)
    sets = all_gsets(G, 4, min_size=1)
    X, Y, Z = (data.draw(st.sampled_from(sets)) for _ in range(3))
    fs, gs = enumerate_gmaps(X, Z), enumerate_gmaps(Y, Z)
    if not fs or not gs:
        return
    f, g = data.draw(st.sampled_from(fs)), data.draw(st.sampled_from(gs))
    P, p1, p2 = pullback(f, g)
    P.validate()
    p1.validate()
    p2.validate()
    pairs = sorted(zip(p1.table, p2.table))
    assert pairs == sorted((a, b) for a in X.points for b in Y.points if f.table[a] == g.table[b])


def test_identity_map_is_a_section_of_itself():
    G, _ = s3()
    X = orbit(G, G.trivial)
    assert sections(identity_map(X)) == [identity_map(X)]
