"""The two maps between codes and highly entangled states: purify a
D-dimensional code on n-1 sites to an n-site state, and reduce a state to
the code spanned by its first-site contractions.

With the conventions used here (new site prepended, basis order matching
the code basis) the round trip is exact on representatives, not merely
orbit-level.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclo import Cyclotomic, sqrt_of_rational
from .qecc import CodeSubspace, kl_check, r_uniform_check
from .tensor import PureState, contract_site, inner, orthonormalize


@dataclass
class CorrespondenceReport:
    direction: str            # "code->state->code" or "state->code->state"
    input_description: str
    output_description: str
    ame_verified: bool
    kl_verified: bool
    roundtrip_exact: bool


def purify_code(code: CodeSubspace) -> PureState:
    """(1/sqrt(D)) * sum_i |i> tensor |basis_i>, the new site prepended as
    site 1; output has norm exactly 1."""
    d = code.local_dim
    if code.dimension != d:
        raise ValueError(f"need K = D = {d} basis states, got {code.dimension}")
    n = code.conductor
    amp = sqrt_of_rational(1, n) / sqrt_of_rational(d, n)
    amps = []
    for v in code.basis:
        amps.extend(amp * a for a in v.amps)
    return PureState(n, (d,) + code.basis[0].dims, amps)


def reduce_state(v: PureState) -> CodeSubspace:
    """Code spanned by sqrt(D) * <i|_1 v for 0 <= i < D; equals the image of
    D * Tr_1(|v><v|).  Raises if the site-1 matricization is rank-deficient
    (the state is not 1-uniform at site 1)."""
    d = v.dims[0]
    n = v.n
    root_d = sqrt_of_rational(d, n)
    cols = [contract_site(i, 1, v).scale(root_d) for i in range(d)]
    gram_ok = True
    for i in range(d):
        for j in range(d):
            val = inner(cols[i], cols[j])
            want = Cyclotomic.one(n) if i == j else Cyclotomic.zero(n)
            if val != want:
                gram_ok = False
    if not gram_ok:
        try:
            cols = orthonormalize(cols)
        except ValueError:
            raise ValueError("reduction is rank-deficient: state is not "
                             "1-uniform at site 1") from None
    if any((d0 := v.dims[1]) != dd for dd in v.dims[1:]):
        raise ValueError("mixed local dimensions")
    return CodeSubspace(len(v.dims) - 1, v.dims[1], cols)


def _describe_code(code: CodeSubspace) -> str:
    return f"code n={code.n_sites} D={code.local_dim} K={code.dimension}"


def _describe_state(v: PureState) -> str:
    return f"state dims={v.dims}"


def roundtrip(obj) -> CorrespondenceReport:
    """Run both maps starting from a code or a state and check exact
    recovery: span equality for code -> state -> code, amplitude equality
    for state -> code -> state."""
    if isinstance(obj, CodeSubspace):
        state = purify_code(obj)
        back = reduce_state(state)
        half = state.sites // 2
        ame = (state.sites % 2 == 0
               and r_uniform_check(state, half).uniform)
        kl = kl_check(back, half).is_pure if state.sites % 2 == 0 else False
        return CorrespondenceReport(
            direction="code->state->code",
            input_description=_describe_code(obj),
            output_description=_describe_state(state),
            ame_verified=ame,
            kl_verified=kl,
            roundtrip_exact=obj.span_equal(back),
        )
    if isinstance(obj, PureState):
        code = reduce_state(obj)
        back = purify_code(code)
        half = obj.sites // 2
        ame = obj.sites % 2 == 0 and r_uniform_check(obj, half).uniform
        kl = kl_check(code, half).is_pure if obj.sites % 2 == 0 else False
        return CorrespondenceReport(
            direction="state->code->state",
            input_description=_describe_state(obj),
            output_description=_describe_code(code),
            ame_verified=ame,
            kl_verified=kl,
            roundtrip_exact=back == obj,
        )
    raise TypeError(f"cannot round-trip {type(obj).__name__}")
