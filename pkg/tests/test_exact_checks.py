from fractions import Fraction

from cp2ricci.exact import checks
from cp2ricci.exact import identities as ids
from cp2ricci.exact.mpoly import RationalExpr, exact_divide
from cp2ricci.exact.resultant import sylvester_resultant


def test_kappa_closed_forms_satisfy_both_relations():
    out = checks.check_kappa()
    assert out.ok and out.exact
    assert out.detail == {"residual_a": "0", "residual_b": "0"}


def test_kappa_detects_mutated_numerator_sign():
    bad_k1 = RationalExpr(-ids.KAPPA1_CLOSED.num, ids.D_DENOM)
    ra, rb = checks._kappa_residuals(bad_k1, ids.KAPPA3_CLOSED)
    assert not (ra.is_zero() and rb.is_zero())


def test_emergence_factorization_and_constants():
    out = checks.check_f_emergence()
    assert out.ok and out.exact
    # regression: cleared relation = 2 * D * (mu - gamma) * F_POLY
    assert out.detail["c"] == "2"
    assert out.detail["denominator_power"] == 1
    assert out.detail["beta_power"] == 0
    assert out.detail["vanishes_at_mu_eq_gamma"] is True


def test_emergence_cleared_numerator_vanishes_at_mu_eq_gamma():
    w = checks.cleared_gauss_numerator()
    assert w.subs_poly("mu", ids.GAMMA).is_zero()


def test_derivative_factorization_and_constants():
    out = checks.check_f_derivative()
    assert out.ok and out.exact
    # regression: cleared derivative = beta * companion (no D power)
    assert out.detail["c"] == "1"
    assert out.detail["beta_power"] == 1
    assert out.detail["denominator_power"] == 0


def test_derivative_mutation_reports_single_term_difference(monkeypatch):
    mutated = ids.F_E3_DERIVED + ids.BETA**2 * ids.GAMMA**3
    monkeypatch.setattr(ids, "F_E3_DERIVED", mutated)
    out = checks.check_f_derivative()
    assert not out.ok
    assert out.detail["divisible"] is False
    assert len(out.detail["difference_terms"]) == 1


def test_resultant_matches_factored_target_exactly():
    out = checks.check_resultant()
    assert out.ok and out.exact
    assert out.detail["sign"] == 1  # regression: our row order reproduces it
    assert out.detail["total_degree"] == 26
    assert out.detail["n_terms"] == 21


def test_resultant_direct_equality():
    res = sylvester_resultant(ids.F_POLY, ids.F_E3_DERIVED, "gamma")
    assert res == ids.RESULTANT_TARGET


def test_resultant_specializes_consistently():
    # spot-check the factored form at rational points through evaluation
    res = ids.RESULTANT_TARGET
    for beta, mu in [(Fraction(1, 2), Fraction(2)), (Fraction(3), Fraction(1, 3))]:
        point = {"beta": beta, "gamma": 0, "mu": mu, "kappa1": 0, "kappa3": 0}
        expected = (
            202500
            * (mu**2 - 1) ** 4
            * beta**4
            * mu**6
            * (4 * mu**2 * beta**2 + (mu**2 - 1) ** 2) ** 2
        )
        assert res.evaluate(point) == expected


def test_mu1_branch():
    out = checks.check_mu1()
    assert out.ok and out.exact
    d = out.detail
    assert d["f_factorization_exact"] is True
    assert d["companion_divisible"] is True
    assert d["companion_quotient_is_denominator"] is True  # quotient (g-1)^2 + b^2
    assert d["quadratic_at_root"] == "0" and d["quartic_at_root"] == "0"
    assert d["disc_middle"] == "-176" and d["disc_tail"] == "-336"
    assert d["unique_real_solution"] is True


def test_mu1_factorization_spelled_out():
    f1 = ids.F_POLY.subs_poly("mu", 1)
    product = ids.MU1_QUADRATIC * ((ids.GAMMA - 1) ** 2 + ids.BETA**2)
    assert f1 == product
    q = exact_divide(ids.F_E3_DERIVED.subs_poly("mu", 1), ids.MU1_QUARTIC)
    assert q == (ids.GAMMA - 1) ** 2 + ids.BETA**2


def test_mu0_branch():
    out = checks.check_mu0()
    assert out.ok and out.exact
    assert out.detail["reduction_exact"] is True
    assert out.detail["root_counts_at_samples"] == [1, 1, 1, 1]


def test_mu0_reduction_spelled_out():
    f0 = ids.F_POLY.subs_poly("mu", 0)
    assert f0 == ids.GAMMA**3 + (ids.BETA**2 + 1) * ids.GAMMA
    assert f0 == ids.MU0_PRODUCT


def test_run_checks_all_exact():
    outs = checks.run_checks()
    assert [o.name for o in outs] == [
        "kappa",
        "f_emergence",
        "f_derivative",
        "resultant",
        "mu1",
        "mu0",
    ]
    assert all(o.ok and o.exact for o in outs)


def test_run_checks_subset_and_unknown():
    outs = checks.run_checks(["mu0"])
    assert len(outs) == 1 and outs[0].name == "mu0"
    import pytest

    with pytest.raises(KeyError):
        checks.run_checks(["nope"])
