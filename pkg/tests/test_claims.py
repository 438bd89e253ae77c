import cmath
import math

import numpy as np
import pytest

from cyclodft.claims import (
    AUDIT,
    CAVEAT,
    CONSISTENT,
    IDENTITY,
    REFUTED,
    VERIFIED,
    WITNESS,
    check_D1_dft_suite,
    check_E1_equatorial_laws,
    check_E3_equatorial_dft,
    check_P1_pairwise,
    check_Q1_qubit_equatorial,
    check_Q2_embedding,
    check_T1_impossibility,
    claim_ids,
    cross_validate,
    dft_coefficient_rows,
    equatorial_dft_matrix,
    float_status,
    grid_probe_coefficients,
    is_valid_claim_id,
    pairwise_matrix,
    preservation_residual,
    preservation_sides,
    run_all,
    solve_E2_coefficients,
)
from cyclodft.cyclo import CyclotomicNumber, root_of_unity
from cyclodft.phasepoly import constant, variable
from cyclodft.qstates import DimensionError, computational_basis, counterexample_families, equatorial_family, inner_product

G, G2 = root_of_unity(3, 1), root_of_unity(3, 2)
I = root_of_unity(4, 1)
g = cmath.exp(2j * math.pi / 3)


def numpy_counterexample(dk=0.0, pk=0.0, dj=0.0, pj=0.0):
    """Counterexample triples typed in directly with numpy."""
    e = cmath.exp
    v = [
        np.array([1, 2 * e(1j * dk), e(1j * pk)]) / math.sqrt(6),
        np.array([1, e(1j * dk), -3 * e(1j * pk)]) / math.sqrt(11),
        np.array([7, -4 * e(1j * dk), e(1j * pk)]) / math.sqrt(66),
    ]
    w = [np.array([1, g ** r * e(1j * dj), g ** (2 * r) * e(1j * pj)]) / math.sqrt(3) for r in range(3)]
    return v, w


def preservation_oracle(factor, **phases):
    v, w = numpy_counterexample(**phases)
    lhs = np.vdot(v[0], w[0])
    rhs = factor * sum(np.vdot(v[a], w[b]) for a in range(3) for b in range(3))
    return lhs - rhs


# -- preservation residual --------------------------------------------------


def test_preservation_zero_for_genuine_unitary():
    basis = computational_basis(3)
    assert preservation_residual(dft_coefficient_rows(3), basis, basis).is_zero()


def test_preservation_nonzero_for_counterexample():
    v, w = counterexample_families()
    res = preservation_residual(dft_coefficient_rows(3), v, w)
    assert not res.is_zero()
    zero = {k: 0.0 for k in res.variables}
    assert abs(res.evaluate(zero) - preservation_oracle(1 / 3)) < 1e-9
    phases = dict(dk=0.3, pk=1.7, dj=4.1, pj=2.9)
    a = {"delta_k": 0.3, "phi_k": 1.7, "delta_j": 4.1, "phi_j": 2.9}
    assert abs(res.evaluate(a) - preservation_oracle(1 / 3, **phases)) < 1e-9


def test_preservation_zero_for_equatorial_solution():
    v = equatorial_family(3, ("delta_k", "phi_k"))
    w = equatorial_family(3, ("delta_j", "phi_j"))
    assert preservation_residual([[1, G, G]], v, w).is_zero()
    assert preservation_residual([[1, G2, G2]], v, w).is_zero()
    assert not preservation_residual([[1, 1, 1]], v, w).is_zero()


def test_preservation_dimension_mismatch():
    with pytest.raises(DimensionError):
        preservation_residual(dft_coefficient_rows(3), computational_basis(3), computational_basis(2))


# -- T1 ------------------------------------------------------------------------


def test_T1_verified_with_witness():
    res = check_T1_impossibility()
    assert res.status == VERIFIED
    w = res.residual("preservation_witness")
    assert w.kind == WITNESS and not w.exact_zero
    zero_val = res.residual("witness_at_zero_phase").value.constant_value()
    assert abs(complex(zero_val) - preservation_oracle(1 / 3)) < 1e-9
    single = res.residual("preservation_witness_single_factor").value
    assert abs(single.evaluate({k: 0.0 for k in single.variables}) - preservation_oracle(1 / math.sqrt(3))) < 1e-9


def test_T1_negative_control():
    basis = computational_basis(3)
    res = check_T1_impossibility(v=basis, w=basis)
    assert res.residual("preservation_witness").exact_zero
    assert res.status == REFUTED


# -- E1 ------------------------------------------------------------------------


def test_E1_verified():
    res = check_E1_equatorial_laws()
    assert res.status == VERIFIED
    laws = [r for r in res.residuals if r.kind == IDENTITY]
    assert len(laws) == 6 and all(r.exact_zero for r in laws)


def test_E1_common_value():
    res = check_E1_equatorial_laws()
    dk, dj, pk, pj = (variable(n) for n in ("delta_k", "delta_j", "phi_k", "phi_j"))
    expected = (1 + dk.conjugate() * dj + pk.conjugate() * pj) / 3
    assert res.residual("law1 common value").value == expected


def test_E1_negative_control():
    res = check_E1_equatorial_laws(inject_fault=True)
    assert res.status == REFUTED
    assert any(r.kind == IDENTITY and not r.exact_zero for r in res.residuals)


# -- E2 ------------------------------------------------------------------------

# Frozen from the exhaustive enumeration; the float grid probe below finds
# the same six points independently.
E2_SOLUTIONS_12 = [(0, 4), (0, 8), (4, 0), (4, 4), (8, 0), (8, 8)]


def test_E2_solution_snapshot():
    sols, res = solve_E2_coefficients(12)
    assert [(s.alpha_root.exponent, s.beta_root.exponent) for s in sols] == E2_SOLUTIONS_12
    assert res.status == VERIFIED


def test_E2_contains_paper_solutions_and_rejects_one():
    sols, res = solve_E2_coefficients(12)
    pairs = [(s.alpha, s.beta) for s in sols]
    assert any(a == G and b == G for a, b in pairs)
    assert any(a == G2 and b == G2 for a, b in pairs)
    assert not any(a == 1 and b == 1 for a, b in pairs)
    assert res.residual("(1, 1): second constraint").value == 3


def test_E2_solutions_reverified_by_substitution():
    sols, _ = solve_E2_coefficients(12)
    for s in sols:
        a, b = s.alpha, s.beta
        assert (a * a.conjugate() + b * b.conjugate() - 2).is_zero()
        assert (a + b.conjugate() + b * a.conjugate()).is_zero()
        assert (b + a.conjugate() + a * b.conjugate()).is_zero()


def test_E2_conjugation_closed():
    for order in (3, 6, 12, 24):
        sols, _ = solve_E2_coefficients(order)
        pairs = [(s.alpha, s.beta) for s in sols]
        for a, b in pairs:
            assert any(x == a.conjugate() and y == b.conjugate() for x, y in pairs)


def test_E2_grid_probe_agrees():
    hits = grid_probe_coefficients(360, 1e-6)
    expected = [(30.0 * a, 30.0 * b) for a, b in E2_SOLUTIONS_12]
    assert hits == expected


def test_E2_low_order_fails():
    _, res = solve_E2_coefficients(2)
    assert res.status == REFUTED


# -- E3 ------------------------------------------------------------------------


@pytest.mark.parametrize("variant", ["g1", "g2"])
def test_E3_verified(variant):
    res = check_E3_equatorial_dft(variant)
    assert res.status == VERIFIED
    assert sum(1 for r in res.residuals if r.name.startswith("action")) == 9
    assert sum(1 for r in res.residuals if r.name.startswith("output gram")) == 9


def test_E3_component_identity():
    assert (2 + G2) * G == 2 * G + 1


@pytest.mark.parametrize("variant", ["g1", "g2"])
def test_E3_mutated_matrix_refuted(variant):
    res = check_E3_equatorial_dft(variant, inject_fault=True)
    assert res.status == REFUTED
    assert any(r.name.startswith("action") and not r.exact_zero for r in res.residuals)


def test_E3_explicit_mutation():
    from cyclodft.qstates import diagonal_matrix

    U = diagonal_matrix([2 * G + 1, 2 + G, 2 + G2], 3)
    assert check_E3_equatorial_dft("g1", U=U).status == REFUTED
    assert equatorial_dft_matrix("g1", mutated=True).entries[1][1] == 2 + G


# -- Q1, Q2 --------------------------------------------------------------------


def test_Q1():
    res = check_Q1_qubit_equatorial()
    assert res.status == VERIFIED
    assert ((1 + I) * (1 + I).conjugate()) / 2 == 1
    assert ((1 - I) * (1 - I).conjugate()) / 2 == 1
    assert check_Q1_qubit_equatorial(inject_fault=True).status == REFUTED


def test_Q2():
    assert check_Q2_embedding().status == VERIFIED
    assert pairwise_matrix(2).entries[1][1] == 1 - I
    assert pairwise_matrix(2).entries[0][0] == 1 + I
    assert check_Q2_embedding(inject_fault=True).status == REFUTED


# -- P1 ------------------------------------------------------------------------


def numpy_pairwise(n):
    gam = cmath.exp(2j * math.pi / n)
    U = np.diag([1 + 1j * gam ** k for k in range(n)]) / math.sqrt(2)
    psi = [np.array([gam ** (r * k) for k in range(n)]) / math.sqrt(n) for r in range(n)]
    return U, psi


def test_P1_qubit_case():
    res = check_P1_pairwise(2)
    assert res.status == VERIFIED
    assert all(r.exact_zero for r in res.residuals if r.kind == AUDIT)


def test_P1_qutrit_overlap():
    res = check_P1_pairwise(3)
    w = [r for r in res.residuals if r.kind == WITNESS]
    assert len(w) == 1 and not w[0].exact_zero
    assert w[0].value == -I / 2
    U, psi = numpy_pairwise(3)
    assert abs(np.vdot(U @ psi[0], U @ psi[1]) - (-0.5j)) < 1e-12
    assert dict(res.conditions)["n=3 overlap <U psi0|U psi1> equals -i/2"]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_P1_unitarity_residual_from_exact_computation(n):
    res = check_P1_pairwise(n)
    U, _ = numpy_pairwise(n)
    direct = U.conj().T @ U - np.eye(n)
    audits = [r for r in res.residuals if r.kind == AUDIT]
    for k, r in enumerate(audits):
        assert abs(r.value.evaluate({}) - direct[k // n, k % n]) < 1e-12
    unitary = all(r.exact_zero for r in audits)
    assert res.status == (VERIFIED if unitary else CAVEAT)


@pytest.mark.parametrize("n", range(2, 13))
def test_P1_actions_hold_for_all_small_n(n):
    res = check_P1_pairwise(n)
    actions = [r for r in res.residuals if r.name.startswith("action")]
    assert len(actions) == n * n and all(r.exact_zero for r in actions)
    assert all(r.exact_zero for r in res.residuals if r.name.startswith("norm^2"))


def test_P1_paper_qudit_family_without_phases():
    res = check_P1_pairwise(4, phases=())
    assert all(r.exact_zero for r in res.residuals if r.kind == IDENTITY)


def test_P1_mutation_and_errors():
    assert check_P1_pairwise(3, inject_fault=True).status == REFUTED
    with pytest.raises(DimensionError):
        check_P1_pairwise(1)


# -- D1 ------------------------------------------------------------------------


def test_D1():
    res = check_D1_dft_suite(12)
    assert res.status == VERIFIED
    assert res.residual("dft3 vs display[1][2]").exact_zero
    assert check_D1_dft_suite(12, inject_fault=True).status == REFUTED
    assert check_D1_dft_suite(2).status == VERIFIED


# -- catalog and cross-validation ---------------------------------------------


def test_catalog_order():
    assert claim_ids() == ["T1", "E1", "E2", "E3-g1", "E3-g2", "Q1", "P1-2", "P1-3", "P1-4", "P1-5", "Q2", "D1"]
    assert is_valid_claim_id("P1-12") and not is_valid_claim_id("P1-1") and not is_valid_claim_id("X9")


@pytest.fixture(scope="module")
def all_results():
    return run_all()


def test_run_all_statuses(all_results):
    assert [r.claim_id for r in all_results] == claim_ids()
    assert all(r.status in (VERIFIED, CAVEAT) for r in all_results)


def test_verified_identities_pass_float_checks(all_results):
    for res in all_results:
        for r, c in zip(res.residuals, res.float_checks):
            assert r.name == c.name
            if r.kind == IDENTITY and r.exact_zero:
                assert c.mode == "max_abs_over_samples" and c.value < 1e-9
            if r.kind == WITNESS:
                assert not r.exact_zero and c.value > 1e-6


def test_float_backend_reports_consistency_only():
    for res in run_all(backend="float", pairwise_dims=(3,)):
        assert res.status == CONSISTENT


def test_cross_validate_is_seeded():
    a = cross_validate(check_E1_equatorial_laws(), seed=5)
    b = cross_validate(check_E1_equatorial_laws(), seed=5)
    assert a.float_checks == b.float_checks
    assert a.float_seed == "5:E1"


def test_float_detects_corrupted_witness():
    from dataclasses import replace

    from cyclodft.claims import Residual

    res = check_T1_impossibility()
    broken = replace(res, residuals=res.residuals + (Residual("fake", constant(1), IDENTITY, lambda a: 1.0),))
    assert float_status(cross_validate(broken)) != CONSISTENT
