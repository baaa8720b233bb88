"""Initial data and preset configurations of the two reference experiments."""

from __future__ import annotations

from typing import Any

import numpy as np

from ..models import (
    BasisKind,
    ConfigurationError,
    Equation,
    FluxKind,
    GridKind,
    JacobianStrategy,
    Mapping,
)
from ..config import ExperimentConfig

FIG2_CASES: dict[str, tuple[BasisKind, JacobianStrategy]] = {
    "a": (BasisKind.CHEBYSHEV2_ROOTS, JacobianStrategy.VIA_GAUSS_TRANSFORM),
    "b": (BasisKind.CHEBYSHEV2_ROOTS, JacobianStrategy.NODAL_DIAGONAL),
    "c": (BasisKind.LOBATTO_LEGENDRE, JacobianStrategy.VIA_GAUSS_TRANSFORM),
    "d": (BasisKind.LOBATTO_LEGENDRE, JacobianStrategy.NODAL_DIAGONAL),
    "e": (BasisKind.GAUSS_LEGENDRE, JacobianStrategy.NODAL_DIAGONAL),
}


def burgers_initial(x: np.ndarray) -> np.ndarray:
    return np.sin(np.pi * x) + 0.01


def advection_initial(x: np.ndarray) -> np.ndarray:
    return np.exp(-20.0 * x**2)


def _merge(defaults: dict[str, Any], overrides: dict[str, Any]) -> dict[str, Any]:
    merged = dict(defaults)
    merged.update({key: value for key, value in overrides.items() if value is not None})
    return merged


def fig1_preset(basis: BasisKind | str, **overrides: Any) -> ExperimentConfig:
    """Burgers on [0, 2]: 20 elements, p = 7, LLF flux, 10000 RK4 steps up to t = 3."""
    defaults = {
        "equation": Equation.BURGERS,
        "basis": BasisKind(basis),
        "p": 7,
        "elements": 20,
        "flux": FluxKind.LOCAL_LAX_FRIEDRICHS,
        "t_final": 3.0,
        "steps": 10000,
        "xmin": 0.0,
        "xmax": 2.0,
        "out": f"fig1_{BasisKind(basis).value}",
    }
    return ExperimentConfig(**_merge(defaults, overrides))


def fig2_preset(case: str, **overrides: Any) -> ExperimentConfig:
    """Advection on [-1, 1]: 5 elements, p = 9, central flux, 10000 RK4 steps up to t = 4.

    The grid defaults to the geometric one and the mapping to the quadratic one;
    both can be overridden.
    """
    if case not in FIG2_CASES:
        raise ConfigurationError(f"unknown preset case {case!r}; expected one of {', '.join(FIG2_CASES)}")
    basis, jacobian = FIG2_CASES[case]
    defaults = {
        "equation": Equation.ADVECTION,
        "basis": basis,
        "p": 9,
        "elements": 5,
        "flux": FluxKind.CENTRAL,
        "grid": GridKind.GEOMETRIC,
        "mapping": Mapping.QUADRATIC,
        "jacobian": jacobian,
        "t_final": 4.0,
        "steps": 10000,
        "xmin": -1.0,
        "xmax": 1.0,
        "out": f"fig2{case}",
    }
    return ExperimentConfig(**_merge(defaults, overrides))
