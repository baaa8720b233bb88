from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..bases import basis_for, gauss_quadrature
from ..config import Config
from ..models import BasisKind, Mesh1D, OperatorSet, SolutionField
from .mesh import physical_points

InitialCondition = Callable[[np.ndarray], np.ndarray]


def interpolate_field(
    ops: OperatorSet,
    mesh: Mesh1D,
    func: InitialCondition,
    via: BasisKind | None = None,
) -> SolutionField:
    """Interpolate ``func`` element by element.

    Nodal kinds take point values at their nodes. The modal kind interpolates
    at the nodes of ``via`` (Gauss-Legendre by default) and transforms to
    Legendre coefficients.
    """
    basis = basis_for(ops.kind, ops.p)
    xi = basis.interpolation_points(via)
    values = func(physical_points(mesh, xi))
    return SolutionField(mesh=mesh, ops=ops, coeffs=basis.coefficients(values, via))


@dataclass
class SolutionSample:
    x: np.ndarray
    u: np.ndarray
    kind: list[str]


def sample_solution(field: SolutionField) -> SolutionSample:
    """Point values for output.

    Nodal kinds are sampled at their nodes. The modal kind is sampled at p+1
    Gauss-Legendre nodes plus a uniform overlay of ``Config.OVERLAY_POINTS``
    points per element.
    """
    ops = field.ops
    basis = basis_for(ops.kind, ops.p)
    if ops.kind.is_nodal:
        x = physical_points(field.mesh, ops.nodes)
        return SolutionSample(x=x.ravel(), u=field.coeffs.ravel(), kind=["node"] * x.size)

    gauss, _ = gauss_quadrature(ops.n)
    overlay = np.linspace(-1.0, 1.0, Config.OVERLAY_POINTS)
    xs, us, kinds = [], [], []
    for xi, label in ((gauss, "node"), (overlay, "overlay")):
        x = physical_points(field.mesh, xi)
        xs.append(x.ravel())
        us.append(basis.evaluate(field.coeffs, xi).ravel())
        kinds.extend([label] * x.size)
    return SolutionSample(x=np.concatenate(xs), u=np.concatenate(us), kind=kinds)
