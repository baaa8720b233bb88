from __future__ import annotations

from functools import lru_cache

from scipy.linalg import LinAlgError

from ..config import Config
from ..models import BasisKind, OperatorSet
from ..validation import validate_degree
from .base import Basis, OperatorConstructionError
from .checks import OperatorReport, check_operator_set, dump_operator_set, sbp_residual
from .legendre import gauss_quadrature, legendre_eval, lobatto_quadrature, vandermonde
from .modal import ModalLegendreBasis
from .nodal import DenseNormBasis, DiagonalNormBasis, compute_nodes


@lru_cache(maxsize=None)
def basis_for(kind: BasisKind, p: int) -> Basis:
    kind = BasisKind(kind)
    p = validate_degree(p, p_max=Config.P_MAX)
    if kind is BasisKind.MODAL_LEGENDRE:
        return ModalLegendreBasis(p)
    if kind.is_diagonal_norm:
        return DiagonalNormBasis(kind, p)
    if kind.is_dense_norm:
        return DenseNormBasis(kind, p)
    raise ValueError(f"Unsupported basis kind: {kind}")


@lru_cache(maxsize=None)
def build_operator_set(kind: BasisKind, p: int) -> OperatorSet:
    """Build and validate the SBP operator set of ``kind`` with degree ``p``."""
    basis = basis_for(kind, p)
    try:
        ops = basis.build()
    except LinAlgError as exc:
        raise OperatorConstructionError(f"{basis.kind.value} p={p}: norm matrix is not positive definite") from exc

    residual = sbp_residual(ops)
    tol = Config.tol_sbp(p)
    if not residual <= tol:
        raise OperatorConstructionError(
            f"{basis.kind.value} p={p}: SBP residual {residual:.3e} exceeds {tol:.3e}",
            residual=residual,
        )
    return ops


__all__ = [
    "Basis",
    "OperatorConstructionError",
    "OperatorReport",
    "basis_for",
    "build_operator_set",
    "check_operator_set",
    "compute_nodes",
    "dump_operator_set",
    "gauss_quadrature",
    "legendre_eval",
    "lobatto_quadrature",
    "sbp_residual",
    "vandermonde",
]
