from dataclasses import replace

import pytest

from conftest import four_variable_fixture, random_germ, random_line_germ
from lenewton import (ConsistencyError, HypothesisViolation, InconclusiveError,
                      InputError, PurePowerError, StabilizationError, choose_exponents,
                      compare, consistency_check, estimate_critical_dimension,
                      euler_characteristic, le_numbers, newton_number,
                      parse_polynomial,
                      plan_from_alphas, run)
from lenewton.degeneracy import degeneracy_witness_search
from lenewton.lenumbers import lambdas_from, milnor_from_lambdas, modified_numbers


def test_six_golden(six):
    r = le_numbers(six, 1)
    assert r.alphas == (5,)
    assert r.lambdas == (18, 3)
    assert (r.nu0, r.nutilde) == (16, (3,))
    assert r.euler == 15
    assert r.mu_fd == r.newton_fd == 30
    assert r.accepted
    assert [c.name for c in r.checks] == [
        "stabilization", "telescoping", "euler_agreement", "iomdine_le_massey"]


def test_line_singularity():
    f = parse_polynomial("z2^2", 2)
    r = run(f, d=1, alphas=[5])
    assert r.lambdas == (0, 1) and r.nu0 == -2 and r.nutilde == (1,)
    assert r.euler == 1 and r.mu_fd == 4


def test_choose_exponents(six):
    plan = choose_exponents(six, 1)
    assert plan.alphas == (5,) and plan.boosted_alphas == (10,)
    assert plan.provenance[0]["homogeneous_degree"] == 4
    # non-homogeneous: only the m-bound and the floor 3 count
    plan = choose_exponents(parse_polynomial("z2^2 + z1*z2^3", 2), 1)
    assert plan.provenance[0]["homogeneous_degree"] is None
    assert plan.alphas[0] >= 3


def test_plan_from_alphas(six):
    assert plan_from_alphas(six, [9]).alphas == (9,)
    with pytest.raises(InputError):
        plan_from_alphas(six, [4])


def test_d_out_of_range(six):
    with pytest.raises(InputError):
        le_numbers(six, 3)
    with pytest.raises(InputError):
        le_numbers(six, 0)
    with pytest.raises(InputError):
        run(six, d=2, alphas=[5])


def test_pure_power_gate():
    f = parse_polynomial("z1^3 + z2^2", 2)
    with pytest.raises(PurePowerError) as info:
        le_numbers(f, 1)
    assert info.value.reason == "pure_power_term"
    assert isinstance(info.value, HypothesisViolation)


def test_estimate_critical_dimension(six):
    assert estimate_critical_dimension(six) == 1
    assert estimate_critical_dimension(parse_polynomial("z2^2", 2)) == 1
    assert estimate_critical_dimension(parse_polynomial("z3^2", 3)) == 2
    assert estimate_critical_dimension(parse_polynomial("z1^2 + z2^2", 2)) == 0
    with pytest.raises(InconclusiveError):
        estimate_critical_dimension(parse_polynomial("z1^2*z2^2", 2))


def test_run_estimates_d():
    r = run(parse_polynomial("z3^2", 3))
    assert r.d == 2 and r.lambdas == (0, 0, 1)
    assert r.d_source.startswith("estimated")
    with pytest.raises(InputError):
        run(parse_polynomial("z1^2 + z2^2", 2))


def test_two_dimensional_critical_locus():
    r = run(parse_polynomial("z1^2*z3^2 + z2^2*z3^2 + z3^4", 3))
    assert r.d == 2 and r.lambdas == (6, 4, 1) and r.accepted


def test_lambda_formulas():
    assert lambdas_from(3, 16, (3,)) == (18, 3)
    assert lambdas_from(3, 1, (5, 2)) == (-1 + 1 + 5, 3, -2)
    assert milnor_from_lambdas((18, 3), (5,)) == 30
    assert milnor_from_lambdas((1, 2, 3), (3, 4)) == 1 + 2 * 2 + 2 * 3 * 3


def test_corrupted_lambda_fails_consistency(six):
    plan = choose_exponents(six, 1)
    good = le_numbers(six, 1, plan)
    bad = replace(good, lambdas=(18, 4))
    check = consistency_check(six, plan, bad)
    assert not check.passed and "mu_rec=34" in check.detail
    with pytest.raises(ConsistencyError):
        euler_characteristic(bad)


def test_stabilization_failure_detected(monkeypatch, six):
    import lenewton.lenumbers as mod

    real = mod.modified_numbers

    def drifting(f, alphas, order_seed=None):
        nu0, nt = real(f, alphas, order_seed)
        return (nu0 + 1, nt) if alphas[0] > 5 else (nu0, nt)

    monkeypatch.setattr(mod, "modified_numbers", drifting)
    with pytest.raises(StabilizationError):
        le_numbers(six, 1)


def test_negative_lambda_rejected():
    f = parse_polynomial("z1^2*z2 + z2*z3^2", 3)
    with pytest.raises(HypothesisViolation) as info:
        le_numbers(f, 2)
    assert "[1, 1, -1]" in str(info.value)


def test_degenerate_germ_needs_witness():
    # (z2 + z3)^2 is degenerate; the diagram alone cannot tell
    f = parse_polynomial("z2^2 + 2*z2*z3 + z3^2", 3)
    assert run(f, d=1).accepted
    assert degeneracy_witness_search(f) is not None


def test_order_independence():
    f = four_variable_fixture()
    plan = choose_exponents(f, 1)
    values = {modified_numbers(f, plan.alphas, s) for s in (None, 1, 2, 3, 4, 5)}
    assert len(values) == 1


def test_compare(six):
    g = parse_polynomial("3*z1^2*z2^2 - 2*z2^4 + 1/2*z3^4", 3)
    rep = compare(six, g)
    assert rep.diagrams_equal and rep.verdict == "PASS" and rep.lambda_g == (18, 3)
    other = compare(six, parse_polynomial("z1^2*z2^2 + z2^4 + z3^5", 3))
    assert not other.diagrams_equal and other.verdict == "NO_VERDICT"
    with pytest.raises(InputError):
        compare(six, parse_polynomial("z2^2", 2))


def test_degeneracy_witness():
    w = degeneracy_witness_search(parse_polynomial("z1^2 + 2*z1*z2 + z2^2", 2))
    assert w is not None and w.residual < 1e-8
    assert set(w.face) == {(2, 0), (0, 2)}
    assert degeneracy_witness_search(parse_polynomial("z1^2*z2^2 + z2^4 + z3^4", 3)) is None
    assert degeneracy_witness_search(parse_polynomial("z1^7", 1)) is None


@pytest.mark.parametrize("seed", range(100))
def test_random_runs_are_consistent(seed):
    """Germs missing only axis 1: every run is accepted, the Lê numbers
    rebuild the Newton number of f_d, and neither a shuffled triangulation
    nor doubled exponents change them."""
    f = random_line_germ(seed)
    d = estimate_critical_dimension(f)
    if d == 0:
        assert newton_number(f).is_finite
        return
    r = run(f, d=d)
    assert r.accepted
    assert r.mu_fd == r.newton_fd
    assert run(f, d=d, order_seed=seed).lambdas == r.lambdas
    assert run(f, alphas=[2 * a for a in r.alphas]).lambdas == r.lambdas


@pytest.mark.parametrize("seed", [17, 23, 25])
def test_wrong_d_is_not_accepted(seed):
    # critical locus of dimension > 1: f_1 is still not convenient
    f = random_germ(seed, convenient=False)
    r = run(f, d=1)
    assert not r.accepted
    (failed,) = [c for c in r.checks if not c.passed]
    assert failed.name == "iomdine_le_massey" and r.newton_fd is None
