import pytest
import sympy

from lieverify import checks
from lieverify.checks import (
    GRID,
    basis_base_degrees,
    basis_census,
    closed_form_euPO,
    euPO_numerator_degrees,
    f2_module,
    hilbert_F2k,
    hilbert_omega2,
    hilbert_omegaJ,
    verify_beta_squared,
    verify_bockstein_leibniz,
    verify_euPO,
    verify_filtration,
    verify_homOSL,
    verify_sigma2L,
    verify_sigmaF2,
    verify_sll,
    verify_smashKL,
)
from lieverify.dgmod import WedgeSummary, paper_L, suspend, tensor
from lieverify.gradedlie import GeneratorSet, chi_symmetric
from lieverify.series import PowerSeries

from oracles import expand_product, rational_expansion

t = sympy.Symbol("t")


def S(terms, cap):
    return PowerSeries.from_terms(terms, cap)


# -- commutator generators ----------------------------------------------------


def test_closed_form_numerator():
    assert euPO_numerator_degrees(1, 5) == [2, 9, 10, 11, 17, 18, 18, 19]


def test_closed_form_low_degrees():
    assert closed_form_euPO(1, 5, 12) == S({2: 1, 9: 1, 10: 2, 11: 1}, 12)


@pytest.mark.parametrize("n,p", GRID)
def test_closed_form_matches_sympy(n, p):
    num = sum(t**d for d in euPO_numerator_degrees(n, p))
    expected = rational_expansion(num / (1 - t ** (2 * (n * p - 1))), 60)
    got = closed_form_euPO(n, p, 60)
    assert got == S(expected, 60)
    assert got.valuation() == 4 * n - 2


@pytest.mark.parametrize("n,p", GRID)
def test_verify_euPO(n, p):
    r = verify_euPO(n, p, 60)
    assert r.passed, r.detail


@pytest.mark.parametrize("n,p", GRID)
def test_verify_euPO_negative_control(n, p):
    bad = closed_form_euPO(n, p, 60) - PowerSeries.monomial(4 * n - 2, 60)
    r = verify_euPO(n, p, 60, closed_form=bad)
    assert not r.passed
    assert r.discrepancy_degree == 4 * n - 2
    assert (r.detail["left"], r.detail["right"]) == (1, 0)


def test_basis_base_degrees():
    assert basis_base_degrees(1, 5) == [2, 9, 10, 17, 18, 18, 19, 11]


@pytest.mark.parametrize("n,p", GRID)
def test_basis_census(n, p):
    r = basis_census(n, p, 60)
    assert r.passed
    assert r.detail["matches_closed_form_numerator"]


def test_basis_census_negative_control():
    families = checks.BASIS_FAMILIES[1:]
    r = basis_census(1, 5, 60, families=families)
    assert not r.passed and r.discrepancy_degree == 2


def test_homOSL_example():
    r = verify_homOSL(1, 5, 60, 12)
    assert r.passed
    assert r.detail["oracle"]["commutator_dims"] == [[2, 1], [9, 1], [10, 2], [11, 2], [12, 2]]
    assert r.detail["oracle"]["coefficient_at_cap"] == [5, 5]


@pytest.mark.parametrize("n,p", GRID)
def test_homOSL_grid(n, p):
    r = verify_homOSL(n, p, 60)
    assert r.passed
    assert r.detail["series"]["status"] == "pass"


def test_homOSL_negative_control():
    gens = GeneratorSet.paper(1, 5)
    from lieverify.gradedlie import chi_W

    bad = chi_W(gens, 60) - PowerSeries.monomial(2, 60)
    r = verify_homOSL(1, 5, 60, 12, chi_w=bad)
    assert not r.passed
    assert r.discrepancy_degree == 2
    assert r.detail["series"]["status"] == "fail"
    assert r.detail["oracle"]["status"] == "fail"


# -- homology series ----------------------------------------------------------


def test_hilbert_omega2_example():
    expected = expand_product([{0: 1, 1: 1}, {0: 1, 9: 1}, {0: 1, 8: 1}], 10)
    assert hilbert_omega2(1, 5, 10) == S(expected, 10)
    assert expected == {0: 1, 1: 1, 8: 1, 9: 2, 10: 1}
    assert hilbert_omega2(1, 5, 60)[0] == 1
    assert hilbert_omega2(2, 5, 60).terms()[1] == (3, 1)


@pytest.mark.parametrize("n,p", GRID)
def test_omega2_against_sympy(n, p):
    cap = 60
    expr = sympy.Integer(1)
    for j in range(4):
        expr *= 1 + t ** (2 * n * p**j - 1)
        if j >= 1:
            expr /= 1 - t ** (2 * n * p**j - 2)
    assert hilbert_omega2(n, p, cap) == S(rational_expansion(expr, cap), cap)


@pytest.mark.parametrize("n,p", GRID)
def test_F2_is_symmetric_algebra(n, p):
    assert hilbert_F2k(n, p, 1, 60) == chi_symmetric(GeneratorSet.paper(n, p), 60)
    assert hilbert_F2k(n, p, 0, 60) == S({0: 1, 2 * n - 1: 1}, 60)


def test_F2_agrees_with_omega2_below_48():
    f2, om = hilbert_F2k(1, 5, 1, 60), hilbert_omega2(1, 5, 60)
    assert f2.truncate(47) == om.truncate(47)
    assert f2[48] != om[48]


def test_omegaJ_examples():
    # OmegaJ_{p-1}: no exterior factor beyond j=0, one polynomial factor
    assert hilbert_omegaJ(1, 5, 1, 30) == S(rational_expansion((1 + t) / (1 - t**8), 30), 30)
    assert hilbert_omegaJ(1, 5, 0, 30) == PowerSeries.one(30)


@pytest.mark.parametrize("n,p", GRID)
def test_filtration(n, p):
    r = verify_filtration(n, p, 60)
    assert r.passed
    assert r.detail["levels_checked"] == [k for k in range(4) if 2 * n * p**k - 2 <= 60]


def test_filtration_negative_control():
    def drop_y(n, p, k, cap):
        s = hilbert_F2k(n, p, k, cap)
        if k == 1:
            s = s - PowerSeries.monomial(2 * n * p - 2, cap, s[2 * n * p - 2])
        return s

    r = verify_filtration(1, 5, 60, f2k=drop_y)
    assert not r.passed
    assert r.discrepancy_degree == 8


# -- decompositions -----------------------------------------------------------


def test_sll_examples():
    r = verify_sll(1, 5)
    assert r.passed
    assert r.detail["computed"] == [["S", 3], ["P", 11, 5], ["P", 11, 5], ["P", 18, 5], ["P", 19, 5]]
    assert checks.sll_target(2, 5) == WedgeSummary.of(5, [7], [23, 23, 38, 39])
    assert verify_sll(2, 5).passed
    assert verify_sll(1, 7).passed


def test_sll_negative_control():
    L = paper_L(1, 5)
    r = verify_sll(1, 5, module=suspend(tensor(L, L), 1).with_zero_beta())
    assert not r.passed
    assert r.discrepancy_degree == 10


def test_smashKL_examples():
    r = verify_smashKL(1, 5)
    assert r.passed
    assert r.detail["computed"] == [["S", 3], ["S", 10], ["P", 11, 5], ["P", 18, 5]]
    assert verify_smashKL(2, 5).passed
    assert verify_smashKL(1, 5, swap=True).detail["computed"] == r.detail["computed"]


def test_sigma2L_examples():
    assert verify_sigma2L(1, 5).detail["computed"] == [["S", 3], ["P", 11, 5]]
    assert verify_sigma2L(3, 5).detail["computed"] == [["S", 7], ["P", 31, 5]]
    assert verify_sigma2L(1, 7).passed


def test_sigma2L_negative_control():
    r = verify_sigma2L(1, 5, module=suspend(paper_L(1, 5), 2).with_zero_beta())
    assert not r.passed and r.discrepancy_degree == 10


def test_f2_module_census():
    m = f2_module(1, 5, 20)
    assert m.dims() == {1: 1, 8: 1, 9: 2, 10: 1, 16: 1, 17: 2, 18: 1}
    assert m.beta["x·v"] == {"x·u": 4}
    assert m.beta["v·u"] == {"u^2": 1}


@pytest.mark.parametrize("n,p", GRID)
def test_sigmaF2(n, p):
    cap = 60
    r = verify_sigmaF2(n, p, cap)
    assert r.passed
    assert r.detail["sigma_L"] == [["S", 2 * n], ["P", 2 * n * p, p]]
    # tops of the pairs x v u^k -> x u^(k+1) and v u^k -> u^(k+1), k >= 1, suspended
    dx, du, dv = 2 * n - 1, 2 * n * p - 2, 2 * n * p - 1
    tops = [dx + dv + k * du + 1 for k in range(cap)] + [dv + k * du + 1 for k in range(1, cap)]
    assert r.detail["moore_degrees"] == sorted(q for q in tops if q <= cap + 1)


def test_sigmaF2_negative_control():
    r = verify_sigmaF2(1, 5, 60, zero_beta=True)
    assert not r.passed
    assert r.discrepancy_degree == 10


@pytest.mark.parametrize("n,p", GRID)
def test_differential_sanity(n, p):
    assert verify_beta_squared(n, p, 60).passed
    assert verify_bockstein_leibniz(n, p).passed


def test_leibniz_negative_control():
    r = verify_bockstein_leibniz(1, 5, sign_flip=True)
    assert not r.passed
    # first tree with a nonzero beta on its left factor: [x, v] in degree 10, beta -> degree 9
    assert r.discrepancy_degree == 9


@pytest.mark.parametrize("check", ["eupo", "basis", "filtration", "sigma-f2", "homosl"])
def test_checks_monotone_in_cap(check):
    for cap in (5, 12, 30, 47, 60):
        assert checks.run_check(check, 1, 5, cap, oracle_cap=12).passed


def test_run_all_deterministic():
    a = [r.to_dict() for r in checks.run_all(1, 5)]
    b = [r.to_dict() for r in checks.run_all(1, 5)]
    assert a == b
    assert {r["check"] for r in a} == set(checks.CHECK_NAMES)


def test_unknown_check():
    with pytest.raises(KeyError):
        checks.run_check("theorem-a", 1, 5)
