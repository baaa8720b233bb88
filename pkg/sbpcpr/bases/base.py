from __future__ import annotations

from abc import ABC, abstractmethod

import numpy as np

from ..models import BasisKind, OperatorSet


class OperatorConstructionError(RuntimeError):
    """Raised when an SBP operator set cannot be constructed or validated."""

    def __init__(self, message: str, residual: float | None = None) -> None:
        super().__init__(message)
        self.residual = residual


class Basis(ABC):
    """Polynomial basis of degree <= p on the reference element [-1, 1].

    Batched methods take coefficient arrays of shape ``(K, n)`` (one row per
    element) and also accept a single vector of shape ``(n,)``.
    """

    def __init__(self, kind: BasisKind, p: int) -> None:
        self.kind = kind
        self.p = p

    @property
    def n(self) -> int:
        return self.p + 1

    @abstractmethod
    def build(self) -> OperatorSet:
        """Assemble the operator matrices for this basis."""

    @abstractmethod
    def interpolation_points(self, via: BasisKind | None = None) -> np.ndarray:
        """Reference points whose values determine the coefficients."""

    @abstractmethod
    def coefficients(self, point_values: np.ndarray, via: BasisKind | None = None) -> np.ndarray:
        """Convert values at :meth:`interpolation_points` to coefficients."""

    @abstractmethod
    def evaluate(self, coeffs: np.ndarray, xi: np.ndarray) -> np.ndarray:
        """Evaluate the represented polynomials at reference points ``xi``."""

    @abstractmethod
    def multiply(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """Apply the multiplication operator of ``u`` to ``v``."""

    @abstractmethod
    def multiply_transpose(self, u: np.ndarray, w: np.ndarray) -> np.ndarray:
        """Apply the transpose of the multiplication operator of ``u`` to ``w``."""

    @abstractmethod
    def mult_matrix(self, u: np.ndarray) -> np.ndarray:
        """Matrix of the multiplication operator of a single vector ``u``."""
