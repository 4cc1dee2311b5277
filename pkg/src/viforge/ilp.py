"""Exact integer programs over a handful of variables.

Instances carry finite bounds for every variable (callers must supply them;
this module never invents bounds), linear constraints with <=, >= or ==, and
an optional min/max objective.  Solving is depth-first branch and bound with
interval propagation, so answers are exact and deterministic: variables
branch in model order, values ascend, and for maximisation the first
objective-carrying variable descends.  Certificates are the first optimum in
that canonical search order.
"""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ._kernels import ilp_scan

RELATIONS = ("<=", ">=", "==")


class IlpInputError(ValueError):
    pass


@dataclass(frozen=True)
class IlpInstance:
    bounds: tuple = ()
    constraints: tuple = field(default_factory=tuple)
    objective: Optional[tuple] = None  # (coeffs, "min" | "max")

    def __post_init__(self):
        object.__setattr__(self, "bounds", tuple((int(a), int(b)) for (a, b) in self.bounds))
        norm = []
        for (coeffs, rel, rhs) in self.constraints:
            coeffs = tuple(int(x) for x in coeffs)
            if len(coeffs) != self.p:
                raise IlpInputError("constraint arity mismatch")
            if rel not in RELATIONS:
                raise IlpInputError(f"unknown relation {rel!r}")
            norm.append((coeffs, rel, int(rhs)))
        object.__setattr__(self, "constraints", tuple(norm))
        if self.objective is not None:
            coeffs, sense = self.objective
            coeffs = tuple(int(x) for x in coeffs)
            if len(coeffs) != self.p:
                raise IlpInputError("objective arity mismatch")
            if sense not in ("min", "max"):
                raise IlpInputError(f"unknown sense {sense!r}")
            object.__setattr__(self, "objective", (coeffs, sense))

    @property
    def p(self) -> int:
        return len(self.bounds)

    def trivially_infeasible(self) -> bool:
        return any(a > b for (a, b) in self.bounds)


def _check_finite(inst: IlpInstance):
    for (a, b) in inst.bounds:
        if not (isinstance(a, int) and isinstance(b, int)):
            raise IlpInputError("bounds must be finite integers")


def _rows(inst: IlpInstance):
    """Normalise to A x <= b."""
    rows = []
    for (coeffs, rel, rhs) in inst.constraints:
        if rel in ("<=", "=="):
            rows.append((coeffs, rhs))
        if rel in (">=", "=="):
            rows.append((tuple(-c for c in coeffs), -rhs))
    return rows


def _run(inst: IlpInstance, minimise_coeffs, find_opt: bool):
    _check_finite(inst)
    if inst.trivially_infeasible():
        return None
    p = inst.p
    rows = _rows(inst)
    if p == 0:
        if any(0 > rhs for (_, rhs) in rows):
            return None
        return (), 0
    A = np.zeros((len(rows), p), dtype=np.int64)
    b = np.zeros(len(rows), dtype=np.int64)
    for i, (coeffs, rhs) in enumerate(rows):
        A[i, :] = coeffs
        b[i] = rhs
    lo = np.array([a for (a, _) in inst.bounds], dtype=np.int64)
    hi = np.array([bnd for (_, bnd) in inst.bounds], dtype=np.int64)
    c = np.array(minimise_coeffs, dtype=np.int64)
    desc = np.zeros(p, dtype=np.uint8)
    if inst.objective is not None and inst.objective[1] == "max":
        for j, cj in enumerate(inst.objective[0]):
            if cj != 0:
                desc[j] = 1
                break
    found, x, val = ilp_scan(A, b, lo, hi, c, find_opt, desc)
    if not found:
        return None
    return tuple(int(v) for v in x), int(val)


def feasible(inst: IlpInstance) -> Optional[tuple]:
    """First feasible point in canonical search order, or None."""
    got = _run(inst, (0,) * inst.p, find_opt=False)
    return got[0] if got is not None else None


def optimize(inst: IlpInstance) -> Optional[tuple]:
    """(point, objective value) for the first optimum in canonical order,
    or None when infeasible.  Requires an objective."""
    if inst.objective is None:
        raise IlpInputError("optimize needs an objective")
    coeffs, sense = inst.objective
    mincoeffs = coeffs if sense == "min" else tuple(-c for c in coeffs)
    got = _run(inst, mincoeffs, find_opt=True)
    if got is None:
        return None
    x, val = got
    return x, (val if sense == "min" else -val)


def debug_dump(inst: IlpInstance) -> str:
    """Readable listing, one bound or constraint per line."""
    lines = []
    if inst.objective is not None:
        coeffs, sense = inst.objective
        lines.append(f"{sense} " + _linear(coeffs))
    for j, (a, b) in enumerate(inst.bounds):
        lines.append(f"{a} <= x{j} <= {b}")
    for (coeffs, rel, rhs) in inst.constraints:
        lines.append(f"{_linear(coeffs)} {rel} {rhs}")
    return "\n".join(lines)


def _linear(coeffs) -> str:
    terms = [f"{c:+d}*x{j}" for j, c in enumerate(coeffs) if c != 0]
    return " ".join(terms) if terms else "0"
