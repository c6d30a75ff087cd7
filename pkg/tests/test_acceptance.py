"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line; the lines are printed in the pytest
terminal summary (see ``conftest.py``) and when this file is run directly.
"""

import math
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from latticeflaw import formula
from latticeflaw.bijection import verify_bijection
from latticeflaw.enumeration import enumerate_paths, is_member_S, oracle_flaw_table, paths_by_flaws
from latticeflaw.formula import E, H, Partition, c_lambda, catalan, count_flawed, mu, mu_unit_slope, rational_catalan
from latticeflaw.paths import BoundarySpec, LatticePath, boundary_points, count_flaws, rotate180

RESULTS: dict[int, str] = {}

TABLE1 = [7229] * 5 + [6475] * 5 + [6038] * 5 + [5452] * 5
BIJECTION_SPECS = (
    [(1, 1, g) for g in range(1, 5)]
    + [(2, 1, g) for g in range(1, 4)]
    + [(3, 2, g) for g in range(1, 3)]
    + [(4, 3, 1), (5, 2, 2)]
)
INVARIANT_SPECS = BIJECTION_SPECS + [(3, 2, 4), (1, 2, 4), (4, 3, 2), (2, 5, 2)]


@contextmanager
def criterion(number, description):
    try:
        yield
    except BaseException:
        RESULTS[number] = f"FAIL  criterion {number}: {description}"
        raise
    RESULTS[number] = f"PASS  criterion {number}: {description}"


def _clear_caches():
    for fn in (formula.rational_catalan, formula.H, formula.E):
        fn.cache_clear()


def test_1_table_formula():
    with criterion(1, "Table 1 from the closed form, exact, < 1 s"):
        _clear_caches()
        spec = BoundarySpec(3, 2, 4)
        start = time.perf_counter()
        counts = [count_flawed(k, spec) for k in range(spec.length)]
        elapsed = time.perf_counter() - start
        assert counts == TABLE1
        assert [counts[k] - counts[k + 1] for k in (4, 9, 14)] == [754, 437, 586]
        assert elapsed < 1.0


def test_2_table_oracle():
    with criterion(2, "Table 1 by brute force over 125970 paths, exact, < 10 s single-threaded"):
        spec = BoundarySpec(3, 2, 4)
        start = time.perf_counter()
        table = oracle_flaw_table(spec, jobs=1)
        elapsed = time.perf_counter() - start
        assert sum(table.counts) == math.comb(20, 8) == 125970
        assert list(table.counts) == TABLE1
        assert elapsed < 10.0


def test_3_worked_example():
    with criterion(3, "worked example: c_i, c_lambda, H, E, mu exact"):
        _clear_caches()
        assert [rational_catalan(i, 3, 2) for i in range(1, 5)] == [2, 21, Fraction(1001, 3), Fraction(12597, 2)]
        assert c_lambda(Partition.from_parts([1, 1, 2]), 3, 2) == 42
        assert c_lambda(Partition.from_parts([1, 1, 1]), 3, 2) == Fraction(4, 3)
        assert [H(g, 3, 2) for g in range(1, 5)] == [2, 23, 377, 7229]
        assert [E(g, 3, 2) for g in range(1, 5)] == [2, -19, 293, -5452]
        assert [mu(j, 4, 3, 2) for j in range(4)] == [7229, 6475, 6038, 5452]


def test_4_bijection_suite():
    with criterion(4, "phi/psi total, injective, mutually inverse, +-1 flaw, X<->XC and Y<->YC; < 60 s"):
        start = time.perf_counter()
        failures = {}
        for abg in BIJECTION_SPECS:
            report = verify_bijection(BoundarySpec(*abg))
            if not report.passed:
                failures[abg] = report.failures[:3]
        elapsed = time.perf_counter() - start
        assert failures == {}
        assert elapsed < 60.0


def test_5_invariants():
    with criterion(5, "sum = binomial, constant on blocks, strictly decreasing, |N_k|-|S_k| = |N_k+1|"):
        for abg in INVARIANT_SPECS:
            spec = BoundarySpec(*abg)
            a, b, g = abg
            buckets = paths_by_flaws(spec)
            counts = [len(x) for x in buckets]
            assert sum(counts) == math.comb(g * (a + b), g * a), abg
            blocks = [counts[j * (a + b):(j + 1) * (a + b)] for j in range(g)]
            assert all(len(set(block)) == 1 for block in blocks), abg
            assert all(x[0] > y[0] for x, y in zip(blocks, blocks[1:])), abg
            for k in range(spec.max_flaws):
                s_k = sum(1 for p in buckets[k] if is_member_S(p, spec)[0])
                assert counts[k] - s_k == counts[k + 1], (abg, k)


def test_6_integrality_and_identity():
    with criterion(6, "H_g, E_g integral and sum (-1)^i E_i H_(g-i) = 0 for g <= 12; < 5 s"):
        _clear_caches()
        start = time.perf_counter()
        for a, b in [(1, 1), (2, 1), (3, 2), (5, 3), (7, 4)]:
            for g in range(1, 13):
                assert isinstance(H(g, a, b), int) and isinstance(E(g, a, b), int)
                assert sum((-1) ** i * E(i, a, b) * H(g - i, a, b) for i in range(g + 1)) == 0, (a, b, g)
        assert time.perf_counter() - start < 5.0


def test_7_unit_slope():
    with criterion(7, "Catalan convolution equals the general formula for a = b = 1, g <= 10"):
        for g in range(1, 11):
            assert mu(0, g, 1, 1) == catalan(g)
            for j in range(g):
                assert mu_unit_slope(j, g) == mu(j, g, 1, 1), (j, g)


def test_8_g1_uniform():
    with criterion(8, "g = 1: every |N_k(1)| equals binom(a+b, a)/(a+b) for coprime a + b <= 12"):
        for a in range(1, 12):
            for b in range(1, 13 - a):
                if math.gcd(a, b) != 1:
                    continue
                spec = BoundarySpec(a, b, 1)
                expected = Fraction(math.comb(a + b, a), a + b)
                assert expected.denominator == 1
                assert set(oracle_flaw_table(spec).counts) == {expected.numerator}, (a, b)


def test_9_rotation():
    with criterion(9, "rotation maps max-flaw paths onto flawless paths without interior boundary points"):
        for abg in INVARIANT_SPECS:
            spec = BoundarySpec(*abg)
            a, b, g = abg
            max_flaw = {p.steps for p in enumerate_paths(spec) if count_flaws(p, a, b) == spec.max_flaws}
            strict = {
                p.steps for p in enumerate_paths(spec)
                if count_flaws(p, a, b) == 0 and len(boundary_points(p, spec)) == 2
            }
            assert {rotate180(LatticePath(s)).steps for s in max_flaw} == strict
            assert len(max_flaw) == len(strict) == (-1) ** (g + 1) * E(g, a, b), abg


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
