"""Skew-symmetric SBP CPR semidiscretization of inviscid Burgers' equation.

Per element with affine map of width ``dx``::

    du/dt = -(2/dx) [ D (u^2/2) + c_div + M^-1 R^T B (f_num - R (u^2/2) - c_res) ]

where ``u^2/2`` is ``U u / 2`` with the basis multiplication operator ``U``.
"""

from __future__ import annotations

import logging

import numpy as np
from scipy.linalg import cho_solve

from ..bases import basis_for
from ..fluxes import burgers_flux, entropy_condition
from ..models import BlowUpDetected, CorrectionMode, FluxKind, OperatorSet, SolutionField
from ..multiplication import apply_m_adjoint

logger = logging.getLogger(__name__)


def correction_div(ops: OperatorSet, u: np.ndarray, adjoint: bool = True) -> np.ndarray:
    """``(1/3) (U* D u - (1/2) D U u)`` with ``U*`` the M-adjoint of ``U``.

    With ``adjoint=False`` the plain ``U`` replaces ``U*``.
    """
    basis = basis_for(ops.kind, ops.p)
    u = np.asarray(u, dtype=np.float64)
    du = u @ ops.D.T
    if adjoint:
        first = apply_m_adjoint(ops, u, du)
    else:
        first = basis.multiply(u, du)
    return (first - 0.5 * basis.multiply(u, u) @ ops.D.T) / 3.0


def correction_res(ops: OperatorSet, u: np.ndarray) -> np.ndarray:
    """``(1/6) ((R u)^2 - R U u)`` on the two element boundaries."""
    basis = basis_for(ops.kind, ops.p)
    u = np.asarray(u, dtype=np.float64)
    traces = u @ ops.R.T
    return (traces**2 - basis.multiply(u, u) @ ops.R.T) / 6.0


def interface_states(field: SolutionField) -> tuple[np.ndarray, np.ndarray]:
    """``(u_minus, u_plus)`` at the right boundary of each element, periodic."""
    traces = field.coeffs @ field.ops.R.T
    return traces[:, 1], np.roll(traces[:, 0], -1)


def lift(ops: OperatorSet, boundary: np.ndarray) -> np.ndarray:
    """``M^-1 R^T B`` applied to per-element boundary 2-vectors."""
    weighted = (boundary * np.diag(ops.B)) @ ops.R
    return cho_solve(ops.m_factor, weighted.T).T


def burgers_rhs(
    field: SolutionField,
    flux: FluxKind,
    mode: CorrectionMode = CorrectionMode.BOTH,
    adjoint: bool = True,
) -> np.ndarray:
    ops = field.ops
    u = field.coeffs
    if not np.all(np.isfinite(u)):
        raise BlowUpDetected("non-finite coefficients in Burgers right-hand side")
    basis = basis_for(ops.kind, ops.p)

    half_square = 0.5 * basis.multiply(u, u)
    volume = half_square @ ops.D.T
    if mode.uses_div:
        volume = volume + correction_div(ops, u, adjoint=adjoint)

    u_minus, u_plus = interface_states(field)
    f_interface = burgers_flux(flux, u_minus, u_plus)
    f_num = np.column_stack([np.roll(f_interface, 1), f_interface])
    boundary = f_num - half_square @ ops.R.T
    if mode.uses_res:
        boundary = boundary - correction_res(ops, u)

    scale = 2.0 / field.mesh.widths
    return -scale[:, None] * (volume + lift(ops, boundary))


def _ordered_sum(values: np.ndarray) -> float:
    total = 0.0
    for value in values:
        total += float(value)
    return total


def momentum(field: SolutionField) -> float:
    """``sum_k (dx_k/2) 1^T M u_k`` in ascending element order."""
    ops = field.ops
    per_element = 0.5 * field.mesh.widths * (field.coeffs @ ops.M @ ops.one)
    return _ordered_sum(per_element)


def energy(field: SolutionField) -> float:
    """``sum_k (dx_k/2) u_k^T M u_k`` in ascending element order."""
    u = field.coeffs
    per_element = 0.5 * field.mesh.widths * np.einsum("ki,ij,kj->k", u, field.ops.M, u)
    return _ordered_sum(per_element)


def momentum_rate(field: SolutionField, dudt: np.ndarray) -> float:
    return momentum(field.with_coeffs(dudt))


def energy_rate(field: SolutionField, dudt: np.ndarray) -> float:
    """Time derivative of :func:`energy` along ``dudt``."""
    u = field.coeffs
    per_element = field.mesh.widths * np.einsum("ki,ij,kj->k", u, field.ops.M, dudt)
    return _ordered_sum(per_element)


def burgers_interface_energy(field: SolutionField, flux: FluxKind) -> np.ndarray:
    """Energy production ``(1/6)(u-^3 - u+^3) - (u- - u+) f_num`` at each interface."""
    u_minus, u_plus = interface_states(field)
    return entropy_condition(flux, u_minus, u_plus)
