"""Discrete multiplication operators and their adjoints in the M scalar product."""

from __future__ import annotations

import numpy as np
from scipy.linalg import cho_solve

from .bases import basis_for
from .models import OperatorSet


def mult_operator(ops: OperatorSet, u: np.ndarray) -> np.ndarray:
    """Matrix ``U`` with ``U v`` the product ``u v`` projected onto the basis.

    Nodal kinds multiply pointwise at the nodes (``U = diag(u)``); the modal
    kind multiplies exactly and projects orthogonally onto degree <= p.
    """
    u = np.asarray(u, dtype=np.float64)
    if u.shape != (ops.n,):
        raise ValueError(f"expected a coefficient vector of length {ops.n}, got {u.shape}")
    return basis_for(ops.kind, ops.p).mult_matrix(u)


def m_adjoint(ops: OperatorSet, U: np.ndarray) -> np.ndarray:
    """``M^-1 U^T M``, solved against the Cholesky factor of ``M``."""
    return cho_solve(ops.m_factor, np.asarray(U).T @ ops.M)


def apply_m_adjoint(ops: OperatorSet, u: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Apply the M-adjoint of multiplication by ``u`` to ``w``, row by row."""
    basis = basis_for(ops.kind, ops.p)
    rhs = basis.multiply_transpose(u, np.asarray(w) @ ops.M)
    return cho_solve(ops.m_factor, rhs.T).T
