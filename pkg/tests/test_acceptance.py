"""One test per acceptance criterion.  Each runs the named suite, checks the
time bound, and prints a single PASS/FAIL line to the terminal."""

import time

import pytest

from tambara.verify import run_suite

CRITERIA = [
    (1, "burnside-c2", 1, "Burnside C2: t^2 = 2t, res(t) = 2, trc(1) = t"),
    (2, "distributor", 1, "distributor of 3 -> 2 -> 1 against the explicit bispan"),
    (3, "presentation", 30, "presentation relations on composable pairs over C2, sets <= 4"),
    (4, "term-systems", 60, "term systems on 50 random bispan chains"),
    (5, "c2-equivalence", 10, "C2 pairs: FE = id, M = EFM on sets <= 6, pair axioms"),
    (6, "witt-burnside", 5, "S3 Witt operations transported by tau reproduce Burnside+"),
    (7, "witt-classical", 10, "C2 and C4 Witt vectors against classical 2-typical"),
    (8, "witt-integrality", 60, "universal polynomials are integral"),
    (9, "ghost-hom", 30, "ghost is a ring map on 200 random vectors per group"),
    (10, "completion", 30, "Burnside+ over C2: N(-1) = t - 1, chi laws"),
    (11, "norm-frobenius", 30, "norm of zero and Frobenius on every C2 model"),
    (12, "q-functor", 5, "q(Burnside)(U) = N via section counts on S3 orbits"),
    (13, "congruence", 60, "congruence closure against brute force on semigroups <= 5"),
    (14, "poly-degree", 10, "N_eps has degree <= 2 on C2 Witt vectors"),
]


@pytest.mark.parametrize("number,suite,bound,title", CRITERIA,
                         ids=[f"criterion-{c[0]:02d}-{c[1]}" for c in CRITERIA])
def test_criterion(capsys, number, suite, bound, title):
    start = time.perf_counter()
    result = run_suite(suite)
    elapsed = time.perf_counter() - start
    ok = result.ok and elapsed < bound
    status = "PASS" if ok else "FAIL"
    line = (f"{status} criterion {number}: {title} "
            f"[{result.cases} cases, {elapsed:.2f}s of {bound}s]")
    if not result.ok:
        line += f" witness {result.witness!r}"
    with capsys.disabled():
        print("\n" + line)
    assert result.ok, f"suite {suite} failed: {result.witness!r}"
    assert elapsed < bound, f"suite {suite} took {elapsed:.2f}s, bound {bound}s"
    assert result.cases > 0
