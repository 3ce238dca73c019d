"""JSON file formats for states, operators, gate matrices and codes.

Every scalar is serialized exactly as {conductor, coeffs: ["p/q", ...]} in
the power basis, so files round-trip bit-exactly.  `ingest` validates the
structural invariants of whatever it loads (orthonormality for codes,
canonical factored form for operators) and raises IngestError with the
failing check named.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .cyclo import Cyclotomic
from .linalg import Matrix
from .qecc import CodeSubspace
from .tensor import LocalOperator, PureState


class IngestError(ValueError):
    pass


# -- to dict ---------------------------------------------------------------


def matrix_to_dict(m: Matrix) -> dict:
    d = {"format": "matrix", "conductor": m.n}
    d.update(m.to_dict())
    return d


def to_dict(obj) -> dict:
    if isinstance(obj, (PureState, LocalOperator, CodeSubspace)):
        return obj.to_dict()
    if isinstance(obj, Matrix):
        return matrix_to_dict(obj)
    if isinstance(obj, (list, tuple)):
        items = [to_dict(o) for o in obj]
        kinds = {i["format"] for i in items}
        if kinds == {"operator"}:
            return {"format": "operator-list", "operators": items}
        if kinds == {"matrix"}:
            return {"format": "matrix-list", "matrices": items}
        raise ValueError(f"cannot serialize a mixed list: {kinds}")
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dump(obj, path) -> None:
    Path(path).write_text(dumps(obj))


def dumps(obj) -> str:
    return json.dumps(to_dict(obj), indent=1, sort_keys=True) + "\n"


# -- from dict ---------------------------------------------------------------


def _state_from_dict(data: dict) -> PureState:
    n = int(data["conductor"])
    amps = [Cyclotomic.from_dict(a) for a in data["amps"]]
    if any(a.n != n for a in amps):
        raise IngestError("amplitude conductor differs from the file conductor")
    try:
        return PureState(n, data["dims"], amps)
    except ValueError as exc:
        raise IngestError(f"invalid state: {exc}") from None


def _operator_from_dict(data: dict) -> LocalOperator:
    n = int(data["conductor"])
    scalar = Cyclotomic.from_dict(data["scalar"])
    factors = [Matrix(n, [[Cyclotomic.from_dict(e) for e in row] for row in f])
               for f in data["factors"]]
    op = LocalOperator(n, scalar, factors)
    stored = LocalOperator(n, scalar, factors, _canonical=True)
    if op != stored:
        raise IngestError("operator factors are not in canonical leading-1 form")
    return op


def _matrix_from_dict(data: dict) -> Matrix:
    n = int(data["conductor"])
    return Matrix(n, [[Cyclotomic.from_dict(e) for e in row]
                      for row in data["entries"]])


def _code_from_dict(data: dict) -> CodeSubspace:
    basis = [_state_from_dict(s) for s in data["basis"]]
    claimed = data.get("claimed_d")
    try:
        return CodeSubspace(int(data["n"]), int(data["D"]), basis,
                            claimed_d=None if claimed is None else int(claimed))
    except ValueError as exc:
        raise IngestError(f"invalid code: {exc}") from None


def from_dict(data: dict):
    kind = data.get("format")
    if kind == "state":
        return _state_from_dict(data)
    if kind == "operator":
        return _operator_from_dict(data)
    if kind == "matrix":
        return _matrix_from_dict(data)
    if kind == "code":
        return _code_from_dict(data)
    if kind == "operator-list":
        return [_operator_from_dict(o) for o in data["operators"]]
    if kind == "matrix-list":
        return [_matrix_from_dict(m) for m in data["matrices"]]
    raise IngestError(f"unknown or missing format field: {kind!r}")


def ingest(path):
    """Load and validate a data file; returns the typed object."""
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise IngestError(f"cannot read {path}: {exc}") from None
    obj = from_dict(data)
    return obj


def describe(obj) -> str:
    if isinstance(obj, PureState):
        return f"state on dims {obj.dims}, conductor {obj.n}, norm^2 = {obj.norm_sq()}"
    if isinstance(obj, CodeSubspace):
        return (f"code n={obj.n_sites} D={obj.local_dim} K={obj.dimension}"
                f" claimed_d={obj.claimed_d}")
    if isinstance(obj, LocalOperator):
        return f"product operator on dims {obj.dims}, conductor {obj.n}"
    if isinstance(obj, Matrix):
        return f"matrix {obj.shape[0]}x{obj.shape[1]}, conductor {obj.n}"
    if isinstance(obj, list):
        return f"list of {len(obj)}: " + "; ".join(describe(o) for o in obj)
    return repr(obj)


# -- shipped data -------------------------------------------------------------

SHIPPED = ("phi.state", "c332.code", "weyl-generators.ops",
           "fig1-generators.ops", "coset-reps.ops")


def shipped_path(name: str) -> Path:
    if name not in SHIPPED:
        raise KeyError(f"unknown data file {name!r}; have {SHIPPED}")
    return Path(str(resources.files("amecode").joinpath("data", name)))


def load_shipped(name: str):
    return ingest(shipped_path(name))
