"""Legendre polynomials, Gauss-type quadrature and modal operator matrices.

Legendre polynomials are normalized by ``P_j(1) = 1``. Modal coefficient
vectors expand a polynomial as ``sum_j c_j P_j``.
"""

from __future__ import annotations

import logging
from functools import lru_cache

import numpy as np

from ..config import Config
from .base import OperatorConstructionError

logger = logging.getLogger(__name__)

LEGENDRE_DEGREE_CAP = 128


def legendre_eval(j: int, x: float | np.ndarray) -> float | np.ndarray:
    """Evaluate ``P_j(x)`` with the three-term recurrence."""
    if j < 0 or j > LEGENDRE_DEGREE_CAP:
        raise ValueError(f"Legendre degree must satisfy 0 <= j <= {LEGENDRE_DEGREE_CAP}")
    values = legendre_table(j, x)
    result = values[..., j]
    return float(result) if np.ndim(result) == 0 else result


def legendre_table(p: int, x: float | np.ndarray) -> np.ndarray:
    """Return ``P_0(x), ..., P_p(x)`` stacked along the last axis."""
    x = np.asarray(x, dtype=np.float64)
    table = np.empty(x.shape + (p + 1,))
    table[..., 0] = 1.0
    if p >= 1:
        table[..., 1] = x
    for k in range(2, p + 1):
        table[..., k] = ((2 * k - 1) * x * table[..., k - 1] - (k - 1) * table[..., k - 2]) / k
    return table


def _legendre_with_derivative(n: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    table = legendre_table(n, x)
    value = table[..., n]
    previous = table[..., n - 1] if n >= 1 else np.zeros_like(x)
    # P_n'(x) (x^2 - 1) = n (x P_n - P_{n-1}); undefined at x = +-1, which Gauss nodes avoid
    derivative = n * (x * value - previous) / (x * x - 1.0)
    return value, derivative


def _newton(update_fn, guess: np.ndarray, what: str) -> np.ndarray:
    nodes = guess.copy()
    for _ in range(Config.NEWTON_MAX_ITER):
        update = update_fn(nodes)
        nodes = nodes + update
        if np.max(np.abs(update), initial=0.0) <= Config.NEWTON_TOL:
            return nodes
    raise OperatorConstructionError(
        f"Newton iteration for {what} did not converge in {Config.NEWTON_MAX_ITER} iterations"
    )


@lru_cache(maxsize=None)
def _gauss_rule(n: int) -> tuple[np.ndarray, np.ndarray]:
    if n < 1:
        raise ValueError("a Gauss rule needs at least one node")
    # Chebyshev roots as initial guess, ascending
    guess = -np.cos((2.0 * np.arange(n) + 1.0) * np.pi / (2.0 * n))

    def update(x: np.ndarray) -> np.ndarray:
        value, derivative = _legendre_with_derivative(n, x)
        return -value / derivative

    nodes = _newton(update, guess, f"the {n}-point Gauss-Legendre rule")
    _, derivative = _legendre_with_derivative(n, nodes)
    weights = 2.0 / ((1.0 - nodes * nodes) * derivative * derivative)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def gauss_quadrature(n: int) -> tuple[np.ndarray, np.ndarray]:
    """n-point Gauss-Legendre rule on [-1, 1], exact up to degree 2n - 1."""
    nodes, weights = _gauss_rule(n)
    return nodes.copy(), weights.copy()


@lru_cache(maxsize=None)
def _lobatto_rule(p: int) -> tuple[np.ndarray, np.ndarray]:
    if p < 1:
        raise ValueError("a Lobatto rule needs p >= 1")
    # Chebyshev extrema as initial guess; x P_p - P_{p-1} vanishes at +-1 and at the roots of P_p'
    guess = -np.cos(np.pi * np.arange(p + 1) / p)

    def update(x: np.ndarray) -> np.ndarray:
        table = legendre_table(p, x)
        return -(x * table[..., p] - table[..., p - 1]) / ((p + 1) * table[..., p])

    nodes = _newton(update, guess, f"the {p + 1}-point Lobatto-Legendre rule")
    nodes[0], nodes[-1] = -1.0, 1.0
    weights = 2.0 / (p * (p + 1) * legendre_table(p, nodes)[..., p] ** 2)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def lobatto_quadrature(p: int) -> tuple[np.ndarray, np.ndarray]:
    """(p+1)-point Lobatto-Legendre rule on [-1, 1], exact up to degree 2p - 1."""
    nodes, weights = _lobatto_rule(p)
    return nodes.copy(), weights.copy()


def vandermonde(nodes: np.ndarray, p: int) -> np.ndarray:
    """``V[i, j] = P_j(nodes[i])``: maps Legendre coefficients to nodal values."""
    nodes = np.asarray(nodes, dtype=np.float64)
    if nodes.shape != (p + 1,):
        raise ValueError(f"expected {p + 1} nodes, got {nodes.shape}")
    matrix = legendre_table(p, nodes)
    if p >= 1:
        condition = np.linalg.cond(matrix)
        if condition > Config.VANDERMONDE_COND_WARN:
            logger.warning("Vandermonde matrix for p=%d is ill-conditioned (cond=%.3e)", p, condition)
    return matrix


def modal_mass(p: int) -> np.ndarray:
    return np.diag(2.0 / (2.0 * np.arange(p + 1) + 1.0))


def modal_derivative(p: int) -> np.ndarray:
    i, j = np.indices((p + 1, p + 1))
    return np.where((j > i) & ((i + j) % 2 == 1), 2.0 * i + 1.0, 0.0)


def modal_restriction(p: int) -> np.ndarray:
    j = np.arange(p + 1)
    return np.vstack([(-1.0) ** j, np.ones(p + 1)])


@lru_cache(maxsize=None)
def legendre_product_tensor(p: int) -> np.ndarray:
    """``T[k, i, j]``: coefficient of ``P_k`` in the L2 projection of ``P_i P_j``.

    The integrands ``P_i P_j P_k`` have degree <= 3p, so a Gauss rule with
    ceil((3p + 1) / 2) + 1 nodes integrates them exactly.
    """
    n_quad = -(-(3 * p + 1) // 2) + 1
    nodes, weights = _gauss_rule(n_quad)
    table = legendre_table(p, nodes)
    scale = (2.0 * np.arange(p + 1) + 1.0) / 2.0
    tensor = np.einsum("q,qk,qi,qj->kij", weights, table, table, table) * scale[:, None, None]
    tensor.setflags(write=False)
    return tensor
