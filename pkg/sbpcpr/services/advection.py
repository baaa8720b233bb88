"""Linear advection ``u_t + u_x = 0`` on curvilinear element mappings.

On the reference element the transported equation reads
``J du/dt + D u + M^-1 R^T B (f_num - R u) = 0`` with the Jacobian operator
``J`` and the central flux.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import LinAlgError, eigvalsh, lu_factor, lu_solve

from ..bases import gauss_quadrature, vandermonde
from ..bases.base import OperatorConstructionError
from ..fluxes import central_flux
from ..models import BlowUpDetected, JacobianStrategy, Mapping, Mesh1D, OperatorSet, SolutionField
from .burgers import interface_states, lift
from .mesh import map_element

logger = logging.getLogger(__name__)

SYMMETRY_TOL = 1e-11


@dataclass(frozen=True, eq=False)
class JacobianOperator:
    """Discrete ``dx/dxi`` of one element, factorized once."""

    J: np.ndarray
    lu: tuple = field(init=False, repr=False)

    def __post_init__(self) -> None:
        J = np.array(self.J, dtype=np.float64)
        J.setflags(write=False)
        object.__setattr__(self, "J", J)
        try:
            lu = lu_factor(J, check_finite=True)
        except (LinAlgError, ValueError) as exc:
            raise OperatorConstructionError("Jacobian operator is singular") from exc
        pivots = np.abs(np.diag(lu[0]))
        if pivots.min() <= np.finfo(float).eps * J.shape[0] * np.abs(J).max():
            raise OperatorConstructionError("Jacobian operator is numerically singular")
        object.__setattr__(self, "lu", lu)

    def solve(self, rhs: np.ndarray) -> np.ndarray:
        return lu_solve(self.lu, rhs)


def build_jacobian(
    ops: OperatorSet,
    strategy: JacobianStrategy,
    mapping: Mapping,
    xmin: float,
    xmax: float,
) -> JacobianOperator:
    if strategy is JacobianStrategy.NODAL_DIAGONAL:
        if not ops.kind.is_nodal:
            raise ValueError("the nodal diagonal Jacobian requires a nodal basis")
        _, dxdxi = map_element(mapping, xmin, xmax, ops.nodes)
        return JacobianOperator(np.diag(dxdxi))

    if strategy is JacobianStrategy.VIA_GAUSS_TRANSFORM:
        gauss, _ = gauss_quadrature(ops.n)
        _, dxdxi = map_element(mapping, xmin, xmax, gauss)
        vg = vandermonde(gauss, ops.p)
        # modal J_hat = V_G^-1 diag(dxdxi) V_G, then J = V J_hat V^-1
        modal = np.linalg.solve(vg, dxdxi[:, None] * vg)
        if not ops.kind.is_nodal:
            return JacobianOperator(modal)
        nodal = np.linalg.solve(ops.V.T, (ops.V @ modal).T).T
        return JacobianOperator(nodal)

    raise ValueError(f"Unsupported Jacobian strategy: {strategy}")


def build_jacobians(ops: OperatorSet, mesh: Mesh1D, strategy: JacobianStrategy) -> list[JacobianOperator]:
    return [build_jacobian(ops, strategy, mesh.mapping, *mesh.element_bounds(k)) for k in range(mesh.elements)]


@dataclass(frozen=True)
class MJStructure:
    symmetry_defect: float
    min_eigenvalue: float

    @property
    def symmetric(self) -> bool:
        return self.symmetry_defect <= SYMMETRY_TOL

    @property
    def positive_definite(self) -> bool:
        return self.min_eigenvalue > 0.0

    @property
    def stable_structure(self) -> bool:
        return self.symmetric and self.positive_definite


def mj_structure(ops: OperatorSet, jac: JacobianOperator) -> MJStructure:
    """Relative symmetry defect of ``M J`` and the smallest eigenvalue of its symmetric part."""
    mj = ops.M @ jac.J
    scale = np.abs(mj).sum(axis=1).max()
    defect = np.abs(mj - mj.T).sum(axis=1).max() / scale
    return MJStructure(
        symmetry_defect=float(defect),
        min_eigenvalue=float(eigvalsh(0.5 * (mj + mj.T))[0]),
    )


def advection_rhs(field: SolutionField, jacobians: list[JacobianOperator]) -> np.ndarray:
    ops = field.ops
    u = field.coeffs
    if not np.all(np.isfinite(u)):
        raise BlowUpDetected("non-finite coefficients in advection right-hand side")

    u_minus, u_plus = interface_states(field)
    f_interface = central_flux(u_minus, u_plus)
    f_num = np.column_stack([np.roll(f_interface, 1), f_interface])
    spatial = u @ ops.D.T + lift(ops, f_num - u @ ops.R.T)

    out = np.empty_like(u)
    for k, jac in enumerate(jacobians):
        out[k] = -jac.solve(spatial[k])
    return out


def advection_momentum(field: SolutionField, jacobians: list[JacobianOperator]) -> float:
    """``sum_k 1^T M J_k u_k``, the physical integral of ``u``."""
    ops = field.ops
    total = 0.0
    for u_k, jac in zip(field.coeffs, jacobians):
        total += float(ops.one @ ops.M @ jac.J @ u_k)
    return total


def advection_energy(field: SolutionField, jacobians: list[JacobianOperator]) -> float:
    ops = field.ops
    total = 0.0
    for u_k, jac in zip(field.coeffs, jacobians):
        total += float(u_k @ ops.M @ jac.J @ u_k)
    return total


def advection_momentum_rate(
    field: SolutionField, jacobians: list[JacobianOperator], dudt: np.ndarray
) -> float:
    return advection_momentum(field.with_coeffs(dudt), jacobians)


def advection_energy_rate(
    field: SolutionField, jacobians: list[JacobianOperator], dudt: np.ndarray
) -> float:
    """Time derivative of :func:`advection_energy` along ``dudt``."""
    ops = field.ops
    total = 0.0
    for u_k, du_k, jac in zip(field.coeffs, dudt, jacobians):
        mj = ops.M @ jac.J
        total += float(u_k @ (mj + mj.T) @ du_k)
    return total
