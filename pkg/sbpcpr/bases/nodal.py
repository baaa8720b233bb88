from __future__ import annotations

import numpy as np
from scipy.linalg import LinAlgError, lu_factor, lu_solve

from ..models import BasisKind, OperatorSet
from .base import Basis, OperatorConstructionError
from .legendre import (
    gauss_quadrature,
    legendre_table,
    lobatto_quadrature,
    modal_derivative,
    modal_mass,
    modal_restriction,
    vandermonde,
)


def compute_nodes(kind: BasisKind, p: int) -> np.ndarray:
    """Interpolation nodes of a nodal basis kind, ascending."""
    if p < 1:
        raise ValueError("nodal bases need p >= 1")
    i = np.arange(p + 1)
    if kind is BasisKind.CHEBYSHEV1_ROOTS:
        nodes = np.cos((2.0 * i + 1.0) * np.pi / (2.0 * p + 2.0))
    elif kind is BasisKind.CHEBYSHEV1_EXTREMA:
        nodes = np.cos(i * np.pi / p)
    elif kind is BasisKind.CHEBYSHEV2_ROOTS:
        nodes = np.cos((i + 1.0) * np.pi / (p + 2.0))
    elif kind is BasisKind.GAUSS_LEGENDRE:
        return gauss_quadrature(p + 1)[0]
    elif kind is BasisKind.LOBATTO_LEGENDRE:
        return lobatto_quadrature(p)[0]
    else:
        raise ValueError(f"{kind.value} has no interpolation nodes")
    # the closed forms run from +1 towards -1; symmetric pairs are made exact
    nodes = nodes[::-1].copy()
    nodes = 0.5 * (nodes - nodes[::-1])
    return nodes


class NodalBasis(Basis):
    """Lagrange basis at ``compute_nodes(kind, p)``; coefficients are point values."""

    def __init__(self, kind: BasisKind, p: int) -> None:
        super().__init__(kind, p)
        self.nodes = compute_nodes(kind, p)
        self.V = vandermonde(self.nodes, p)
        try:
            self._lu = lu_factor(self.V, check_finite=True)
        except (LinAlgError, ValueError) as exc:
            raise OperatorConstructionError(f"Vandermonde matrix of {kind.value} p={p} is singular") from exc
        if np.any(np.abs(np.diag(self._lu[0])) < np.finfo(float).eps * np.abs(self.V).max()):
            raise OperatorConstructionError(f"Vandermonde matrix of {kind.value} p={p} is singular")

    def _to_nodal(self, modal: np.ndarray) -> np.ndarray:
        """Transform a modal operator ``A_hat`` into ``V A_hat V^-1``."""
        # (V A_hat V^-1)^T = V^-T (V A_hat)^T
        return lu_solve(self._lu, (self.V @ modal).T, trans=1).T

    def _restriction(self) -> np.ndarray:
        return lu_solve(self._lu, modal_restriction(self.p).T, trans=1).T

    def mass_matrix(self) -> np.ndarray:
        raise NotImplementedError

    def build(self) -> OperatorSet:
        return OperatorSet(
            kind=self.kind,
            p=self.p,
            nodes=self.nodes,
            M=self.mass_matrix(),
            D=self._to_nodal(modal_derivative(self.p)),
            R=self._restriction(),
            V=self.V,
        )

    def interpolation_points(self, via: BasisKind | None = None) -> np.ndarray:
        return self.nodes.copy()

    def coefficients(self, point_values: np.ndarray, via: BasisKind | None = None) -> np.ndarray:
        return np.array(point_values, dtype=np.float64)

    def evaluate(self, coeffs: np.ndarray, xi: np.ndarray) -> np.ndarray:
        coeffs = np.asarray(coeffs, dtype=np.float64)
        modal = lu_solve(self._lu, coeffs.T).T
        return modal @ legendre_table(self.p, xi).T

    def multiply(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        return np.asarray(u) * np.asarray(v)

    def multiply_transpose(self, u: np.ndarray, w: np.ndarray) -> np.ndarray:
        return np.asarray(u) * np.asarray(w)

    def mult_matrix(self, u: np.ndarray) -> np.ndarray:
        return np.diag(np.asarray(u, dtype=np.float64))


class DiagonalNormBasis(NodalBasis):
    """Gauss-Legendre or Lobatto-Legendre nodes with the quadrature weights as norm."""

    def mass_matrix(self) -> np.ndarray:
        if self.kind is BasisKind.GAUSS_LEGENDRE:
            _, weights = gauss_quadrature(self.n)
        else:
            _, weights = lobatto_quadrature(self.p)
        return np.diag(weights)


class DenseNormBasis(NodalBasis):
    """Chebyshev nodes with the exact L2 mass matrix ``V^-T M_hat V^-1``."""

    def mass_matrix(self) -> np.ndarray:
        mass = self._to_nodal_bilinear(modal_mass(self.p))
        return 0.5 * (mass + mass.T)

    def _to_nodal_bilinear(self, modal: np.ndarray) -> np.ndarray:
        left = lu_solve(self._lu, modal, trans=1)
        return lu_solve(self._lu, left.T, trans=1).T
