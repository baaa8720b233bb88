from __future__ import annotations

from dataclasses import dataclass, field
from typing import TextIO

import numpy as np
from numpy.polynomial import legendre as npleg
from scipy.linalg import eigvalsh

from ..config import Config
from ..models import OperatorSet
from .legendre import modal_mass


def sbp_residual(ops: OperatorSet) -> float:
    """Max-norm of ``M D + D^T M - R^T B R``."""
    md = ops.M @ ops.D
    return float(np.max(np.abs(md + md.T - ops.R.T @ ops.B @ ops.R)))


def monomial_coefficients(ops: OperatorSet, k: int) -> np.ndarray:
    """Coefficients of ``x^k`` in the basis of ``ops``."""
    if ops.kind.is_nodal:
        return ops.nodes**k
    power = np.zeros(k + 1)
    power[k] = 1.0
    coeffs = np.zeros(ops.n)
    legendre = npleg.poly2leg(power)
    coeffs[: legendre.size] = legendre
    return coeffs


@dataclass
class OperatorCheck:
    name: str
    value: float
    tolerance: float

    @property
    def ok(self) -> bool:
        return bool(np.isfinite(self.value)) and self.value <= self.tolerance


@dataclass
class OperatorReport:
    ops: OperatorSet
    checks: list[OperatorCheck] = field(default_factory=list)
    eig_min: float = float("nan")
    eig_max: float = float("nan")

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)

    @property
    def failures(self) -> list[OperatorCheck]:
        return [check for check in self.checks if not check.ok]


def check_operator_set(ops: OperatorSet) -> OperatorReport:
    tol = Config.tol_sbp(ops.p)
    report = OperatorReport(ops=ops)
    add = report.checks.append

    add(OperatorCheck("sbp_residual", sbp_residual(ops), tol))

    mass_scale = float(np.max(np.abs(ops.M)))
    add(OperatorCheck("mass_symmetry", float(np.max(np.abs(ops.M - ops.M.T))), 1e-14 * mass_scale))
    eigenvalues = eigvalsh(ops.M)
    report.eig_min, report.eig_max = float(eigenvalues[0]), float(eigenvalues[-1])
    # reported as a defect so that ok means positive definite
    add(OperatorCheck("mass_definiteness", 0.0 if report.eig_min > 0.0 else -report.eig_min, 0.0))

    one = ops.one
    add(OperatorCheck("derivative_of_constant", float(np.max(np.abs(ops.D @ one))), tol))
    add(OperatorCheck("measure", abs(float(one @ ops.M @ one) - 2.0), 1e-12))

    derivative_error = 0.0
    restriction_error = 0.0
    for k in range(ops.p + 1):
        monomial = monomial_coefficients(ops, k)
        expected = k * monomial_coefficients(ops, k - 1) if k > 0 else np.zeros(ops.n)
        derivative_error = max(derivative_error, float(np.max(np.abs(ops.D @ monomial - expected))))
        boundary = np.array([(-1.0) ** k, 1.0])
        restriction_error = max(restriction_error, float(np.max(np.abs(ops.R @ monomial - boundary))))
    add(OperatorCheck("derivative_exactness", derivative_error, 1e-10))
    add(OperatorCheck("restriction_exactness", restriction_error, 1e-10))

    if ops.kind.is_dense_norm:
        transformed = ops.V.T @ ops.M @ ops.V
        add(OperatorCheck("mass_transform", float(np.max(np.abs(transformed - modal_mass(ops.p)))), 1e-12))

    if ops.nodes is not None:
        ordered = bool(np.all(np.diff(ops.nodes) > 0.0)) and bool(np.all(np.abs(ops.nodes) <= 1.0))
        add(OperatorCheck("node_order", 0.0 if ordered else 1.0, 0.0))

    return report


def dump_operator_set(ops: OperatorSet, stream: TextIO) -> None:
    """Write ``V, M, D, R, B`` as plain-text blocks headed ``# <name> <rows>x<cols>``."""
    digits = Config.CSV_DIGITS
    blocks = [("V", ops.V), ("M", ops.M), ("D", ops.D), ("R", ops.R), ("B", ops.B)]
    if ops.nodes is not None:
        blocks.insert(0, ("nodes", ops.nodes.reshape(1, -1)))
    for name, matrix in blocks:
        rows, cols = matrix.shape
        stream.write(f"# {name} {rows}x{cols}\n")
        for row in matrix:
            stream.write(" ".join(f"{value:.{digits}g}" for value in row) + "\n")
