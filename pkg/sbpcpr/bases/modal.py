from __future__ import annotations

import numpy as np
from scipy.linalg import lu_factor, lu_solve

from ..models import BasisKind, OperatorSet
from .base import Basis
from .legendre import (
    legendre_product_tensor,
    legendre_table,
    modal_derivative,
    modal_mass,
    modal_restriction,
)
from .nodal import compute_nodes


class ModalLegendreBasis(Basis):
    """Legendre polynomials ``P_0..P_p``; products are L2-projected onto degree <= p."""

    def __init__(self, p: int) -> None:
        super().__init__(BasisKind.MODAL_LEGENDRE, p)
        self.tensor = legendre_product_tensor(p)

    def build(self) -> OperatorSet:
        return OperatorSet(
            kind=self.kind,
            p=self.p,
            nodes=None,
            M=modal_mass(self.p),
            D=modal_derivative(self.p),
            R=modal_restriction(self.p),
            V=np.eye(self.n),
        )

    def interpolation_points(self, via: BasisKind | None = None) -> np.ndarray:
        return compute_nodes(via or BasisKind.GAUSS_LEGENDRE, self.p)

    def coefficients(self, point_values: np.ndarray, via: BasisKind | None = None) -> np.ndarray:
        points = self.interpolation_points(via)
        lu = lu_factor(legendre_table(self.p, points))
        values = np.asarray(point_values, dtype=np.float64)
        return lu_solve(lu, values.T).T

    def evaluate(self, coeffs: np.ndarray, xi: np.ndarray) -> np.ndarray:
        return np.asarray(coeffs, dtype=np.float64) @ legendre_table(self.p, xi).T

    def multiply(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        return np.einsum("kij,...i,...j->...k", self.tensor, u, v)

    def multiply_transpose(self, u: np.ndarray, w: np.ndarray) -> np.ndarray:
        return np.einsum("kij,...i,...k->...j", self.tensor, u, w)

    def mult_matrix(self, u: np.ndarray) -> np.ndarray:
        return np.einsum("kij,i->kj", self.tensor, np.asarray(u, dtype=np.float64))
