from __future__ import annotations

import logging
import sys
from typing import TextIO

import numpy as np

from ..bases import build_operator_set
from ..config import ExperimentConfig
from ..models import Equation
from ..services.advection import (
    advection_energy,
    advection_momentum,
    advection_rhs,
    build_jacobians,
    mj_structure,
)
from ..services.fields import interpolate_field
from ..services.integrator import integrate
from ..services.mesh import build_mesh
from .burgers import RunReport, classification, snapshots
from .export import write_outputs
from .presets import advection_initial

logger = logging.getLogger(__name__)


def cmd_advection(config: ExperimentConfig, stream: TextIO | None = None) -> RunReport:
    """Transport ``u0 = exp(-20 x^2)`` with unit speed on a periodic curvilinear mesh."""
    if config.equation is not Equation.ADVECTION:
        raise ValueError("cmd_advection needs an advection configuration")
    stream = stream or sys.stdout

    ops = build_operator_set(config.basis, config.p)
    mesh = build_mesh(config.xmin, config.xmax, config.elements, config.grid, config.mapping)
    jacobians = build_jacobians(ops, mesh, config.jacobian)
    for k, jac in enumerate(jacobians):
        structure = mj_structure(ops, jac)
        level = logging.INFO if structure.stable_structure else logging.WARNING
        logger.log(
            level,
            "element %d: M J symmetry defect %.3e, min eigenvalue of symmetric part %.3e",
            k,
            structure.symmetry_defect,
            structure.min_eigenvalue,
        )

    via = None if config.basis.is_nodal else config.interp_basis
    initial = interpolate_field(ops, mesh, advection_initial, via=via)

    def rhs(u: np.ndarray) -> np.ndarray:
        return advection_rhs(initial.with_coeffs(u), jacobians)

    def diagnostics(u: np.ndarray) -> tuple[float, float]:
        current = initial.with_coeffs(u)
        return advection_momentum(current, jacobians), advection_energy(current, jacobians)

    result = integrate(rhs, initial.coeffs, config.integration, diagnostics)
    final = initial.with_coeffs(result.state)
    t_end = config.t_final * result.steps_completed / config.steps
    shots = snapshots(initial, final, t_end)
    paths = write_outputs(config.out, result.series, shots)

    report = RunReport(config=config, result=result, paths=paths)
    emit = report.lines.append
    emit(
        f"advection {config.basis.value} p={config.p} grid={config.grid.value} "
        f"mapping={config.mapping.value} jacobian={config.jacobian.value}"
    )
    emit(classification(result))
    if not result.blown_up:
        deviation = float(np.max(np.abs(shots[1][1].u - shots[0][1].u)))
        emit(f"linf_deviation {deviation:.6e}")
    emit(f"wrote {paths.diagnostics}")
    emit(f"wrote {paths.solution}")
    stream.write("\n".join(report.lines) + "\n")
    return report
