"""Acceptance suite: one test per criterion, exact arithmetic throughout.

Run with ``pytest tests/test_acceptance.py -v``; the terminal summary ends
with one PASS/FAIL line per criterion.
"""

import itertools
import math
import random
import time
from fractions import Fraction

import pytest

from oracles import hydrogenic_oracle, naive_partitions
from threej_zeros.census import (
    BOWICK_FIGURE,
    CensusConfig,
    bowick_counts,
    enumerate_symbols,
    format_csv,
    format_jsonl,
    run_census,
    verify_bryant_jahn,
)
from threej_zeros.errors import NotOrderZeroShape, OutOfPhysicalDomain, OutOfRange
from threej_zeros.hydrogenic import HydrogenicState, r_k_expectation
from threej_zeros.hypergeom import vdw_forms
from threej_zeros.labarthe import hardy_ramanujan_estimate, labarthe_value, partition_count
from threej_zeros.pell import cf_sqrt, chebyshev_family, convergents, negative_pell, pell_fundamental, pell_like, pell_solutions
from threej_zeros.threej import (
    PERMUTATIONS,
    ThreeJ,
    _is_prime,
    canonical_form,
    order0_value,
    racah_value,
    recurrence_identities,
    regge_value,
    selection_check,
    series_representation,
    symmetry_orbit,
    to_regge,
)
from threej_zeros.zeros import (
    POLYNOMIAL_ZERO,
    Weight1Params,
    Weight2Instance,
    brudno_family,
    classify,
    weight1_factor,
    weight1_from_params,
    weight2_pell,
    weight2_parametric,
    weight2_Q,
    weight2_regge,
    weight2_variables,
)

SEED = 20240601
_CENSUS: dict = {}


def census(j: int, jobs: int = 4):
    key = (j, jobs)
    if key not in _CENSUS:
        _CENSUS[key] = run_census(CensusConfig(j, jobs=jobs))
    return _CENSUS[key]


def nonsquare(limit: int) -> list[int]:
    return [D for D in range(2, limit + 1) if math.isqrt(D) ** 2 != D]


def test_c01_cross_representation(record_property):
    n_sym = n_forms = n_skipped = 0
    for s in enumerate_symbols(15):
        n_sym += 1
        v = racah_value(s)
        for p in PERMUTATIONS:
            assert series_representation(s, [i + 1 for i in p]) == v, s
        assert labarthe_value(s) == v, s
        for f in vdw_forms(s):
            if not f.params.terminating or f.params.has_pole():
                n_skipped += 1
                continue
            try:
                w = f.assemble()
            except OutOfPhysicalDomain:
                # a Gamma prefactor sits on a pole; the form is not usable here
                n_skipped += 1
                continue
            n_forms += 1
            assert w == v, (s, f.perm)
    record_property("detail", f"{n_sym} symbols, {n_forms} 3F2 forms assembled, {n_skipped} forms not usable")
    assert n_sym == 35700


def test_c02_symmetry_covariance(record_property):
    rng = random.Random(SEED)
    pool = list(enumerate_symbols(20))
    checked = 0
    for s in rng.sample(pool, 500):
        r = to_regge(s)
        v = regge_value(r)
        orbit = symmetry_orbit(r)
        assert len(orbit) == 72
        for sq, ph in orbit:
            assert regge_value(sq) == ph * v
            checked += 1
    record_property("detail", f"500 symbols, {checked} orbit elements")


def _order0_candidates(J_max: int):
    """Every physical symbol with one of the order-0 projection patterns, J <= J_max."""
    patterns = ((0, 0, 0), (-1, 0, 1), (0, 2, -2))
    for tJ in range(0, 2 * J_max + 1, 2):
        for ta in range(tJ + 1):
            for tb in range(tJ - ta + 1):
                tc = tJ - ta - tb
                for m in patterns:
                    s = ThreeJ(ta, tb, tc, *m)
                    rep = selection_check(s)
                    if rep.triangle_ok and rep.projections_in_range and all((t - x) % 2 == 0 for t, x in zip((ta, tb, tc), m)):
                        yield s


def test_c03_closed_forms(record_property):
    shapes = 0
    for s in _order0_candidates(30):
        try:
            v = order0_value(s)
        except NotOrderZeroShape:
            continue
        shapes += 1
        assert v == racah_value(s), s
        assert not v.is_zero(), s
    assert shapes > 1000

    rng = random.Random(SEED + 3)
    pool = list(enumerate_symbols(20))
    good = 0
    while good < 1000:
        s = rng.choice(pool)
        try:
            ok = recurrence_identities(s)
        except OutOfRange:
            continue
        assert ok, s
        good += 1
    record_property("detail", f"{shapes} order-0 shapes, {good} recurrence checks")


def test_c04_brudno_and_weight1(record_property):
    for which in (1, 2):
        for n in range(1, 51):
            assert racah_value(brudno_family(which, n)).is_zero(), (which, n)
    for p in itertools.product(range(1, 7), repeat=4):
        assert regge_value(weight1_from_params(Weight1Params(*p))).is_zero(), p
    deg1 = [r for r in census(30).records if r.degree == 1]
    assert deg1
    for rec in deg1:
        f = weight1_factor(rec.square)
        assert canonical_form(weight1_from_params(f))[0] == rec.square, rec
    record_property("detail", f"{len(deg1)} degree-1 census zeros (J <= 30) factored")


def test_c05_weight2_pell(record_property):
    for u1 in range(2, 21):
        for u2 in range(2, 21):
            w = Weight2Instance(u1, u2)
            D, N = weight2_pell(w)
            assert D == u1 * u2 * (u1 + u2 - 1)
            assert N == -u1 * (u1 - 1) ** 2 * (u2 - 1) * (u1 + u2)
            for sol in weight2_parametric(w):
                assert sol.x**2 - D * sol.y**2 == N

    box_zeros = 0
    for u1 in range(2, 7):
        for u2 in range(2, 7):
            for x1 in range(u2, 41):
                for x2 in range(2, 41):
                    q = weight2_Q(u1, u2, x1, x2) == 0
                    z = regge_value(weight2_regge(u1, u2, x1, x2)).is_zero()
                    assert q == z, (u1, u2, x1, x2)
                    box_zeros += q
    assert box_zeros > 0

    matched = 0
    for rec in census(30).records:
        if rec.degree != 2:
            continue
        for sq, _ in symmetry_orbit(rec.square):
            vars_ = weight2_variables(sq)
            if vars_ is None:
                continue
            u1, u2, x1, x2 = vars_
            if u1 < 2 or u2 < 2 or x1 < u2 or x2 < 2 or weight2_regge(*vars_) != sq:
                continue
            assert weight2_Q(u1, u2, x1, x2) == 0, (rec, vars_)
            matched += 1
    assert matched > 0
    record_property("detail", f"{box_zeros} Q-zeros in the box, {matched} census orbit elements of weight-2 shape")


def test_c06_pell(record_property):
    got = {(s.x, s.y) for s in pell_like(10, 9)}
    assert {(7, 2), (13, 4), (57, 18)} <= got
    assert negative_pell(34) is None
    assert pell_fundamental(2)[:2] == (3, 2)
    for D in nonsquare(50):
        assert list(pell_solutions(D, 10)) == chebyshev_family(D, 10)
        cf = cf_sqrt(D)
        for n, (p, q) in enumerate(convergents(cf, 6 * len(cf.period) + 4)):
            assert p * p - D * q * q == (-1) ** (n + 1) * cf.Q_at(n + 1)
    record_property("detail", f"D=10,N=9 -> {sorted(got)}")


def test_c07_bryant_jahn(record_property):
    rep = census(40)
    assert verify_bryant_jahn(rep)
    assert all(not _is_prime(r.J + 1) for r in rep.records)
    record_property("detail", f"{rep.total} symbols, {len(rep.records)} canonical polynomial zeros")


def test_c08_bowick(record_property):
    rep = census(27)
    allz, reduced = bowick_counts(rep)
    squares = [r.square for r in rep.records]
    assert len(set(squares)) == len(squares)
    for r in rep.records:
        assert racah_value(r.symbol).is_zero()
        assert classify(r.symbol).kind == POLYNOMIAL_ZERO
        assert canonical_form(r.square)[0] == r.square
    msg = f"J <= 27: all canonical polynomial zeros {allz}; degree >= 1 with every entry >= 1 {reduced}; reference {BOWICK_FIGURE}"
    print(msg)
    record_property("detail", msg)


def test_c09_hydrogenic(record_property):
    cases = 0
    for n in range(1, 11):
        for l in range(n):
            for k in range(6):
                assert r_k_expectation(HydrogenicState(n, l), k) == hydrogenic_oracle(n, l, k), (n, l, k)
                cases += 1
    assert r_k_expectation(HydrogenicState(1, 0), 1) == Fraction(3, 2)
    assert r_k_expectation(HydrogenicState(2, 1), 2) == 30
    record_property("detail", f"{cases} (n, l, k) cases against the Laguerre oracle")


def test_c10_partitions(record_property):
    assert partition_count(100) == 190569292 == naive_partitions(100)
    err = {n: abs(hardy_ramanujan_estimate(n) - partition_count(n)) / partition_count(n) for n in range(20, 201)}
    assert max(err.values()) < 0.15
    assert err[200] < err[20]
    record_property("detail", f"relative error {err[20]:.3%} at n=20, {err[200]:.3%} at n=200")


def test_c11_determinism_performance(record_property):
    a = run_census(CensusConfig(27, jobs=1))
    b = census(27, jobs=4)
    assert format_jsonl(a) == format_jsonl(b)
    assert format_csv(a) == format_csv(b)
    t0 = time.perf_counter()
    run_census(CensusConfig(20, jobs=4))
    dt = time.perf_counter() - t0
    assert dt < 300
    record_property("detail", f"J <= 27 output identical for jobs 1 and 4; J <= 20 at jobs=4 in {dt:.2f} s")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
