"""Floating-point norm minimization over products of determinant-1 groups.

A state is critical when every single-site reduction is maximally mixed,
equivalently when the expectation of every traceless single-site operator
vanishes.  Critical states minimize the norm in their orbit under products
of determinant-1 matrices; the flow here performs multiplicative gradient
descent on log <v|g^dag g|v> with per-site matrix exponentials, determinant
renormalization, and a backtracking line search, so the squared norm is
non-increasing along every run.

This module is deliberately floating point; tolerances default to 1e-8 for
criticality and 1e-6 for flow convergence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np


@dataclass(frozen=True)
class FloatState:
    dims: tuple
    vec: np.ndarray  # flattened complex amplitudes, site 1 slowest

    @classmethod
    def from_exact(cls, state) -> FloatState:
        return cls(tuple(state.dims), np.array(state.to_complex(), dtype=complex))

    @classmethod
    def random(cls, dims, rng: np.random.Generator) -> FloatState:
        size = math.prod(dims)
        v = rng.standard_normal(size) + 1j * rng.standard_normal(size)
        return cls(tuple(dims), v)

    def norm_sq(self) -> float:
        return float(np.vdot(self.vec, self.vec).real)

    def tensor(self) -> np.ndarray:
        return self.vec.reshape(self.dims)


def gell_mann_basis(d: int):
    """Traceless Hermitian basis of d x d matrices, tr(L_a L_b) = 2 delta_ab."""
    return [m.copy() for m in _gell_mann_cached(d)]


@lru_cache(maxsize=None)
def _gell_mann_cached(d: int):
    out = []
    for j in range(d):
        for k in range(j + 1, d):
            m = np.zeros((d, d), dtype=complex)
            m[j, k] = m[k, j] = 1.0
            out.append(m)
            m = np.zeros((d, d), dtype=complex)
            m[j, k] = -1j
            m[k, j] = 1j
            out.append(m)
    for l in range(1, d):
        m = np.zeros((d, d), dtype=complex)
        for i in range(l):
            m[i, i] = 1.0
        m[l, l] = -l
        m *= math.sqrt(2.0 / (l * (l + 1)))
        out.append(m)
    return tuple(out)


def site_reductions(state: FloatState):
    """Normalized single-site reduced densities."""
    t = state.tensor()
    ns = state.norm_sq()
    if ns <= 0:
        raise ValueError("zero state")
    sites = len(state.dims)
    out = []
    for k in range(sites):
        axes = [i for i in range(sites) if i != k]
        rho = np.tensordot(t, t.conj(), axes=(axes, axes)) / ns
        out.append(rho)
    return out


@dataclass
class CriticalityReport:
    critical: bool
    residual_lie: float
    residual_marginal: float


def is_critical(state: FloatState, tol: float = 1e-8) -> CriticalityReport:
    """Evaluate both criticality conditions: vanishing traceless
    expectations (residual_lie) and maximally mixed single-site reductions
    in spectral norm (residual_marginal); critical iff both <= tol."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    res_lie = 0.0
    res_marg = 0.0
    for k, rho in enumerate(site_reductions(state)):
        d = state.dims[k]
        for lam in _gell_mann_cached(d):
            res_lie = max(res_lie, float(abs(np.trace(rho @ lam))))
        dev = rho - np.eye(d) / d
        res_marg = max(res_marg, float(np.max(np.abs(np.linalg.eigvalsh(dev)))))
    return CriticalityReport(bool(res_lie <= tol and res_marg <= tol),
                             res_lie, res_marg)


def apply_sitewise(mats, state: FloatState) -> FloatState:
    t = state.tensor()
    sites = len(state.dims)
    for k, m in enumerate(mats):
        t = np.moveaxis(np.tensordot(m, t, axes=([1], [k])), 0, k)
    return FloatState(state.dims, t.reshape(-1))


def _renorm_det(m: np.ndarray) -> np.ndarray:
    d = m.shape[0]
    det = np.linalg.det(m)
    return m / det ** (1.0 / d)


def random_group_element(dims, rng: np.random.Generator, scale: float = 1.0):
    """One determinant-1 matrix per site: exp of a random traceless matrix
    of spectral norm <= scale."""
    mats = []
    for d in dims:
        m = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
        m -= np.trace(m) / d * np.eye(d)
        m *= rng.uniform(0.0, 1.0) * scale / np.linalg.norm(m, 2)
        g = _expm(m)
        mats.append(_renorm_det(g))
    return mats


def _expm(m: np.ndarray) -> np.ndarray:
    # scaling and squaring on the Taylor series; fine at these sizes
    norm = np.linalg.norm(m, 2)
    s = max(0, int(np.ceil(np.log2(norm / 0.5))) if norm > 0.5 else 0)
    a = m / (2 ** s)
    out = np.eye(m.shape[0], dtype=complex)
    term = np.eye(m.shape[0], dtype=complex)
    for k in range(1, 20):
        term = term @ a / k
        out = out + term
    for _ in range(s):
        out = out @ out
    return out


def _expm_hermitian(h: np.ndarray, t: float) -> np.ndarray:
    w, u = np.linalg.eigh(h)
    return (u * np.exp(t * w)) @ u.conj().T


@dataclass
class FlowReport:
    initial_norm_sq: float
    final_norm_sq: float
    iterations: int
    criticality_residual: float
    converged: bool
    norm_trace: list = field(default_factory=list)

    @property
    def monotone(self) -> bool:
        return all(b <= a * (1 + 1e-12) + 1e-15
                   for a, b in zip(self.norm_trace, self.norm_trace[1:]))


def norm_minimization_flow(state: FloatState, max_iters: int = 5000,
                           step: float = 1.0, tol: float = 1e-7) -> FlowReport:
    """Minimize the squared norm over the orbit of `state` under products of
    determinant-1 matrices.

    Each iteration moves every site by exp(-eta * (rho_k - I/d_k)) with
    backtracking on eta, then renormalizes determinants.  Halts when the
    traceless-expectation residual of the current state drops below tol.
    Runs that drive the norm toward zero without ever meeting the residual
    (orbits whose infimum is not attained) end with converged=False and the
    descent trace as evidence.
    """
    if max_iters < 1 or step <= 0 or tol <= 0:
        raise ValueError("parameters must be positive")
    cur = state
    norms = [cur.norm_sq()]
    eta = step
    residual = is_critical(cur, tol).residual_lie
    iterations = 0
    converged = residual <= tol
    while not converged and iterations < max_iters:
        iterations += 1
        rhos = site_reductions(cur)
        hs = [rho - np.eye(d) / d for rho, d in zip(rhos, cur.dims)]
        accepted = None
        while eta > 1e-14:
            mats = [_renorm_det(_expm_hermitian(h, -eta)) for h in hs]
            cand = apply_sitewise(mats, cur)
            if cand.norm_sq() <= norms[-1] * (1 + 1e-12):
                accepted = cand
                break
            eta *= 0.5
        if accepted is None:
            break
        cur = accepted
        norms.append(cur.norm_sq())
        if norms[-1] < 1e-30:  # norm collapse: infimum not attained on the orbit
            converged = False
            break
        eta = min(eta * 1.5, step)
        residual = is_critical(cur, tol).residual_lie
        converged = residual <= tol
    return FlowReport(norms[0], norms[-1], iterations, residual, converged, norms)


@dataclass
class InequalityReport:
    samples: int
    min_ratio: float
    all_above_one: bool
    witness_below: float | None


def kempf_ness_inequality_test(state: FloatState, samples: int = 1000,
                               seed: int = 0, scale: float = 1.0,
                               require_critical: bool = True,
                               slack: float = 1e-9) -> InequalityReport:
    """Sample random determinant-1 products g and compare <v|g^dag g|v>
    against <v|v>.  For critical v every ratio must be >= 1 - slack; passing
    require_critical=False allows probing non-critical states, where ratios
    below 1 exhibit the converse direction."""
    if require_critical and not is_critical(state, 1e-6).critical:
        raise ValueError("state is not critical; pass require_critical=False to probe")
    rng = np.random.default_rng(seed)
    base = state.norm_sq()
    min_ratio = np.inf
    witness = None
    for _ in range(samples):
        g = random_group_element(state.dims, rng, scale)
        ratio = apply_sitewise(g, state).norm_sq() / base
        if ratio < min_ratio:
            min_ratio = ratio
        if ratio < 1 - slack and witness is None:
            witness = ratio
    return InequalityReport(samples, float(min_ratio), witness is None, witness)


@dataclass
class GradientReport:
    pairs: int
    max_rel_error: float
    max_antihermitian_derivative: float


def log_norm_gradient(state: FloatState):
    """Per-site gradient of log <v|v> along the Hermitian traceless basis:
    entries 2 * tr(rho_k L_a) (real)."""
    out = []
    for k, rho in enumerate(site_reductions(state)):
        d = state.dims[k]
        out.append(np.array([2.0 * np.trace(rho @ lam).real
                             for lam in _gell_mann_cached(d)]))
    return out


def gradient_check(seed: int = 0, pairs: int = 20, h: float = 1e-5,
                   dims=(3, 3, 3)) -> GradientReport:
    """Compare the analytic gradient of log <v|g^dag g|v> against central
    finite differences at random (state, group element) pairs.

    The error is measured relative to the full gradient vector per pair.
    Anti-Hermitian directions generate unitaries, so their derivatives must
    vanish; the maximum such derivative is reported as well.
    """
    rng = np.random.default_rng(seed)
    max_rel = 0.0
    max_anti = 0.0
    for _ in range(pairs):
        v = FloatState.random(dims, rng)
        g = random_group_element(dims, rng, scale=0.5)
        psi = apply_sitewise(g, v)
        analytic = log_norm_gradient(psi)
        for k, d in enumerate(dims):
            basis = _gell_mann_cached(d)
            fd = np.zeros(len(basis))
            for a, lam in enumerate(basis):
                plus = [m.copy() for m in g]
                minus = [m.copy() for m in g]
                plus[k] = _expm_hermitian(lam, h) @ g[k]
                minus[k] = _expm_hermitian(lam, -h) @ g[k]
                fp = math.log(apply_sitewise(plus, v).norm_sq())
                fm = math.log(apply_sitewise(minus, v).norm_sq())
                fd[a] = (fp - fm) / (2 * h)
                anti = [m.copy() for m in g]
                anti[k] = _expm(1j * lam * h) @ g[k]
                fa = math.log(apply_sitewise(anti, v).norm_sq())
                f0 = math.log(psi.norm_sq())
                max_anti = max(max_anti, abs(fa - f0) / h)
            rel = np.linalg.norm(analytic[k] - fd) / np.linalg.norm(analytic[k])
            max_rel = max(max_rel, float(rel))
    return GradientReport(pairs, max_rel, float(max_anti))


@dataclass
class EquivalenceReport:
    count: int
    agreements: int
    disagreements: list

    @property
    def ok(self) -> bool:
        return self.agreements == self.count


def _random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def critical_state_pool():
    """Exactly critical reference states converted to floats."""
    from . import catalog
    from .tensor import PureState
    from .cyclo import default_conductor
    n2 = default_conductor(2)
    ghz2 = PureState(n2, (2, 2, 2), [1, 0, 0, 0, 0, 0, 0, 1])
    bell = PureState(n2, (2, 2), [1, 0, 0, 1])
    return [
        FloatState.from_exact(catalog.ame_state(normalized=False)),
        FloatState.from_exact(catalog.code_basis()[0]),
        FloatState.from_exact(ghz2),
        FloatState.from_exact(bell),
    ]


def criticality_equivalence(count: int = 100, seed: int = 0,
                            tol: float = 1e-8) -> EquivalenceReport:
    """Classify a seeded corpus of states by both criticality conditions and
    count agreements.  The corpus alternates generic random states with
    random local-unitary images of exactly critical ones, so both classes
    are represented away from the tolerance boundary."""
    rng = np.random.default_rng(seed)
    pool = critical_state_pool()
    agreements = 0
    disagreements = []
    dims_cycle = [(3, 3, 3), (3, 3, 3, 3), (2, 2, 2)]
    for i in range(count):
        if i % 2 == 0:
            state = FloatState.random(dims_cycle[i % len(dims_cycle)], rng)
        else:
            base = pool[(i // 2) % len(pool)]
            mats = [_random_unitary(d, rng) for d in base.dims]
            state = apply_sitewise(mats, base)
        rep = is_critical(state, tol)
        lie_says = rep.residual_lie <= tol
        marg_says = rep.residual_marginal <= tol
        if lie_says == marg_says:
            agreements += 1
        else:
            disagreements.append((i, rep.residual_lie, rep.residual_marginal))
    return EquivalenceReport(count, agreements, disagreements)
