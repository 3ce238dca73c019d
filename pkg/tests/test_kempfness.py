import numpy as np
import pytest

from amecode import catalog
from amecode.kempfness import (FloatState, apply_sitewise, criticality_equivalence,
                               critical_state_pool, gell_mann_basis,
                               gradient_check, is_critical,
                               kempf_ness_inequality_test, log_norm_gradient,
                               norm_minimization_flow, random_group_element,
                               site_reductions)
from amecode.kempfness import _random_unitary


def test_gell_mann_basis():
    for d in (2, 3):
        basis = gell_mann_basis(d)
        assert len(basis) == d * d - 1
        for a, la in enumerate(basis):
            assert abs(np.trace(la)) < 1e-14
            assert np.allclose(la, la.conj().T)
            for b, lb in enumerate(basis):
                want = 2.0 if a == b else 0.0
                assert abs(np.trace(la @ lb) - want) < 1e-12


def test_critical_states():
    phi = FloatState.from_exact(catalog.ame_state())
    rep = is_critical(phi, 1e-10)
    assert rep.critical and rep.residual_lie < 1e-12

    s1 = FloatState.from_exact(catalog.code_basis()[0])
    assert is_critical(s1, 1e-10).critical

    k000 = FloatState.from_exact(catalog.ket("000", 3, 12))
    rep = is_critical(k000, 1e-10)
    assert not rep.critical
    assert rep.residual_marginal > 0.5

    with pytest.raises(ValueError):
        is_critical(phi, tol=0)


def test_site_reductions_trace_one():
    rng = np.random.default_rng(0)
    v = FloatState.random((3, 3, 3), rng)
    for rho in site_reductions(v):
        assert abs(np.trace(rho) - 1) < 1e-12
        assert np.allclose(rho, rho.conj().T)


def test_flow_from_critical_state_is_immediate():
    phi = FloatState.from_exact(catalog.ame_state())
    rep = norm_minimization_flow(phi, tol=1e-7)
    assert rep.converged and rep.iterations == 0


def test_flow_converges_from_perturbed_starts():
    phi = FloatState.from_exact(catalog.ame_state())
    rng = np.random.default_rng(42)
    for _ in range(5):
        g = random_group_element(phi.dims, rng, scale=1.0)
        rep = norm_minimization_flow(apply_sitewise(g, phi),
                                     max_iters=5000, tol=1e-8)
        assert rep.converged
        assert rep.monotone
        assert rep.criticality_residual < 1e-6
        # the orbit minimum is the exact norm of the critical representative
        assert abs(rep.final_norm_sq - 1.0) < 1e-6
        assert rep.final_norm_sq <= rep.initial_norm_sq + 1e-9


def test_flow_norm_collapse_reported():
    k001 = FloatState.from_exact(catalog.ket("001", 2, 24))
    rep = norm_minimization_flow(k001, max_iters=400, tol=1e-8)
    assert not rep.converged
    assert rep.monotone
    assert rep.final_norm_sq < 1e-3
    # strictly decreasing norm trace witnesses the unattained infimum
    assert rep.norm_trace[-1] < rep.norm_trace[0]


def test_flow_rejects_bad_parameters():
    phi = FloatState.from_exact(catalog.ame_state())
    with pytest.raises(ValueError):
        norm_minimization_flow(phi, max_iters=0)


def test_inequality_on_critical_state():
    phi = FloatState.from_exact(catalog.ame_state())
    rep = kempf_ness_inequality_test(phi, samples=300, seed=7)
    assert rep.all_above_one
    assert rep.min_ratio >= 1 - 1e-9


def test_inequality_identity_ratio():
    phi = FloatState.from_exact(catalog.ame_state())
    ident = [np.eye(3, dtype=complex)] * 4
    ratio = apply_sitewise(ident, phi).norm_sq() / phi.norm_sq()
    assert abs(ratio - 1) < 1e-14


def test_inequality_converse_on_noncritical():
    k000 = FloatState.from_exact(catalog.ket("000", 3, 12))
    # explicit witness: squeeze site 1 along |0>
    g = [np.diag([0.5, 2.0, 1.0]).astype(complex),
         np.eye(3, dtype=complex), np.eye(3, dtype=complex)]
    ratio = apply_sitewise(g, k000).norm_sq() / k000.norm_sq()
    assert ratio < 1
    rep = kempf_ness_inequality_test(k000, samples=200, seed=3,
                                     require_critical=False)
    assert not rep.all_above_one
    with pytest.raises(ValueError):
        kempf_ness_inequality_test(k000, samples=10)


def test_group_elements_have_unit_determinant():
    rng = np.random.default_rng(1)
    for dims in ((3, 3, 3), (2, 2, 2, 2)):
        for m in random_group_element(dims, rng):
            assert abs(np.linalg.det(m) - 1) < 1e-9


def test_gradient_matches_finite_differences():
    rep = gradient_check(seed=5, pairs=10)
    assert rep.max_rel_error < 1e-5
    assert rep.max_antihermitian_derivative < 1e-6


def test_gradient_formula_direct():
    # one direction by hand: d/dt log||exp(tL)_1 psi||^2 = 2 tr(rho_1 L)
    rng = np.random.default_rng(2)
    v = FloatState.random((3, 3), rng)
    lam = gell_mann_basis(3)[4]
    grad = log_norm_gradient(v)[0][4]
    h = 1e-6
    from amecode.kempfness import _expm_hermitian
    plus = apply_sitewise([_expm_hermitian(lam, h), np.eye(3)], v)
    minus = apply_sitewise([_expm_hermitian(lam, -h), np.eye(3)], v)
    fd = (np.log(plus.norm_sq()) - np.log(minus.norm_sq())) / (2 * h)
    assert abs(grad - fd) < 1e-8


def test_criticality_equivalence():
    rep = criticality_equivalence(100, seed=0, tol=1e-8)
    assert rep.ok, rep.disagreements


def test_criticality_lu_invariance():
    rng = np.random.default_rng(9)
    for base in critical_state_pool():
        mats = [_random_unitary(d, rng) for d in base.dims]
        assert is_critical(apply_sitewise(mats, base), 1e-8).critical
