import numpy as np
import pytest

from inv4perm import get_field
from inv4perm.construct import named_subset, random_V, validate_V_exponents
from inv4perm.verify import (QuadraticInstance, Report, check_lemma23, check_lemma24,
                             check_lemma25, check_lemma34, check_lemma48, check_prop35,
                             check_prop35_all, check_prop41, check_theorem36,
                             check_theorem36_cases, check_theorem36_random,
                             check_w_contains_0_1, lemma25_quadratic, lemma25_roots,
                             lemma48_bound, lemma48_sum, partial_fraction_holds,
                             quadratic_roots, quadratic_solvable, solve_alpha)

from oracles import CONWAY_6, clmul_mod, inverse_by_search, trace_by_sum


def test_report_fail_formats_ints():
    r = Report("x", 6)
    r.fail(a=10, flag=True, note="s")
    assert not r.passed
    assert r.counterexamples == [{"a": "0xa", "flag": True, "note": "s"}]
    assert '"passed": false' in r.to_json()


def test_quadratic_solvable_matches_oracle_roots(f6):
    rng = np.random.default_rng(1)
    for a, b, c in rng.integers(0, 64, size=(200, 3)):
        a, b, c = int(a) or 1, int(b) or 1, int(c)
        roots = [x for x in range(64)
                 if clmul_mod(a, clmul_mod(x, x, CONWAY_6), CONWAY_6)
                 ^ clmul_mod(b, x, CONWAY_6) ^ c == 0]
        assert quadratic_roots(f6, a, b, c) == roots
        assert quadratic_solvable(f6, QuadraticInstance(a, b, c)) == (len(roots) == 2)
    with pytest.raises(ValueError):
        quadratic_solvable(f6, QuadraticInstance(0, 1, 1))


def test_solve_alpha(f6):
    for b in range(2, 64):
        alpha = solve_alpha(f6, b)
        has = trace_by_sum(inverse_by_search(b, CONWAY_6), CONWAY_6) == 0
        assert (alpha is not None) == has
        if alpha is not None:
            assert alpha ^ inverse_by_search(alpha, CONWAY_6) == b
    with pytest.raises(ValueError):
        solve_alpha(f6, 1)


def test_lemma25_roots(f6):
    for b in range(2, 64):
        if f6.trace(f6.inv(b ^ 1)):
            with pytest.raises(ValueError):
                lemma25_roots(f6, b)
            continue
        x1, x2 = lemma25_roots(f6, b)
        assert lemma25_quadratic(f6, b, x1) == 0 == lemma25_quadratic(f6, b, x2)
        assert x1 != x2
        r = check_prop35(f6, b)
        assert r["identity1"] and r["identity2"]


def test_partial_fraction(f6, f8):
    for fld in (f6, f8):
        w = fld.element_of_order_3()
        f4 = {0, 1, w, fld.mul(w, w)}
        assert all(partial_fraction_holds(fld, a) for a in range(fld.size) if a not in f4)


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_lemma_sweeps(n):
    fld = get_field(n)
    for rep in (check_lemma23(fld, samples=32), check_lemma24(fld), check_lemma25(fld),
                check_lemma34(fld), check_prop35_all(fld, alpha_samples=50)):
        assert rep.passed, rep.as_dict()
        assert rep.checked > 0


def test_lemma34_details(f6):
    rep = check_lemma34(f6)
    assert rep.details == {"lhs_size": 32, "rhs_size": 32, "two_to_one": True}


@pytest.mark.parametrize("n", [6, 8, 10, 12, 14, 16])
def test_prop41(n):
    rep = check_prop41(get_field(n))
    assert rep.passed
    lo, hi = rep.details["bounds"]
    assert lo <= rep.details["vm_size"] <= hi


def test_theorem36_named_exhaustive(f6, f8):
    for fld in (f6, f8):
        for name in ("G1", "G2", "G3", "GM"):
            rep = check_theorem36(named_subset(fld, name))
            assert rep.passed, rep.counterexamples
            assert rep.details["max_solutions"] == 4


def test_theorem36_random():
    rep = check_theorem36_random(get_field(6), specs=10, seed=3)
    assert rep.passed and rep.details["exhaustive"]
    rep = check_theorem36_random(get_field(12), specs=2, seed=3, a_samples=8)
    assert rep.passed and not rep.details["exhaustive"]


def test_theorem36_cases_classify(f6):
    spec = validate_V_exponents(f6, [21, 42])
    u = spec.u_indicator
    for a in (1, 5, 17):
        for b in range(64):
            r = check_theorem36_cases(spec, a, b)
            assert r.equations_hold
            assert sorted(r.case1 + r.case2) == r.solutions
            assert r.count in (0, 2, 4)
            for s in r.case2:
                assert u[s] != u[s ^ a]
    with pytest.raises(ValueError):
        check_theorem36_cases(spec, 0, 1)


def test_theorem36_special_subcases(f8):
    spec = random_V(f8, 4, seed=1)
    v = set(spec.v_elements)
    seen_v = seen_out = 0
    for a in range(1, f8.size):
        if a in v:
            r = check_theorem36_cases(spec, a, f8.inv(a))
            assert r.eq5_roots == []
            seen_v += 1
        if not spec.u_indicator[a] and f8.trace(f8.inv(a ^ 1)) == 0:
            r = check_theorem36_cases(spec, a, f8.inv(a) ^ 1)
            assert len(r.eq4_roots) == 2
            assert f8.trace(r.eq4_roots[0]) != f8.trace(r.eq4_roots[1])
            seen_out += 1
    assert seen_v == 8 and seen_out > 0


def test_lemma48(f6):
    assert lemma48_bound(6) == 52
    for a in range(1, 64, 7):
        for b in range(1, 64, 5):
            for c in (0, 1):
                assert abs(lemma48_sum(f6, a, b, c)) <= 52
    rep = check_lemma48(get_field(10), samples=10)
    assert rep.passed and rep.details["max_abs"] <= rep.details["bound"]


def test_lemma48_sum_against_definition(f6):
    tr = lambda v: trace_by_sum(v, CONWAY_6)
    inv = lambda v: inverse_by_search(v, CONWAY_6)
    a, b, c = 7, 19, 1
    total = 0
    for x in range(64):
        if tr(x) != c:
            continue
        e = tr(clmul_mod(a, x, CONWAY_6) ^ clmul_mod(b, inv(x), CONWAY_6) ^ inv(x ^ 1))
        e ^= tr(inv(x)) & tr(inv(x ^ 1))
        total += -1 if e else 1
    assert lemma48_sum(f6, a, b, c) == total


def test_w_contains_0_1():
    for n in (6, 8, 10, 12):
        assert check_w_contains_0_1(get_field(n))
