from __future__ import annotations

import logging
import sys
from dataclasses import dataclass, field
from typing import TextIO

import numpy as np

from ..bases import build_operator_set
from ..config import ExperimentConfig
from ..models import Equation, SolutionField
from ..services.burgers import burgers_rhs, energy, momentum
from ..services.fields import interpolate_field, sample_solution
from ..services.integrator import IntegrationResult, integrate
from ..services.mesh import build_mesh
from .export import OutputPaths, write_outputs
from .presets import burgers_initial

logger = logging.getLogger(__name__)


@dataclass
class RunReport:
    config: ExperimentConfig
    result: IntegrationResult
    paths: OutputPaths
    lines: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return 4 if self.result.blown_up else 0


def classification(result: IntegrationResult) -> str:
    if result.blown_up:
        return f"BLOWUP t={result.blowup_time:.6g}"
    return "STABLE"


def snapshots(initial: SolutionField, final: SolutionField, t_end: float):
    return [(0.0, sample_solution(initial)), (t_end, sample_solution(final))]


def cmd_burgers(config: ExperimentConfig, stream: TextIO | None = None) -> RunReport:
    """Run inviscid Burgers with ``u0 = sin(pi x) + 0.01`` on a periodic uniform mesh."""
    if config.equation is not Equation.BURGERS:
        raise ValueError("cmd_burgers needs a Burgers configuration")
    stream = stream or sys.stdout

    ops = build_operator_set(config.basis, config.p)
    mesh = build_mesh(config.xmin, config.xmax, config.elements)
    via = None if config.basis.is_nodal else config.interp_basis
    initial = interpolate_field(ops, mesh, burgers_initial, via=via)
    logger.info(
        "burgers basis=%s p=%d elements=%d flux=%s corrections=%s adjoint=%s",
        config.basis.value,
        config.p,
        config.elements,
        config.flux.value,
        config.corrections.value,
        config.adjoint,
    )

    def rhs(u: np.ndarray) -> np.ndarray:
        return burgers_rhs(initial.with_coeffs(u), config.flux, config.corrections, adjoint=config.adjoint)

    def diagnostics(u: np.ndarray) -> tuple[float, float]:
        current = initial.with_coeffs(u)
        return momentum(current), energy(current)

    result = integrate(rhs, initial.coeffs, config.integration, diagnostics)
    final = initial.with_coeffs(result.state)
    t_end = config.t_final * result.steps_completed / config.steps
    paths = write_outputs(config.out, result.series, snapshots(initial, final, t_end))

    report = RunReport(config=config, result=result, paths=paths)
    _, moment, energies = result.series.as_arrays()
    emit = report.lines.append
    emit(f"burgers {config.basis.value} p={config.p} elements={config.elements} flux={config.flux.value}")
    if moment.size:
        emit(f"momentum drift {np.max(np.abs(moment - moment[0])):.3e}")
        emit(f"energy {energies[0]:.12g} -> {energies[-1]:.12g}")
    emit(classification(result))
    emit(f"wrote {paths.diagnostics}")
    emit(f"wrote {paths.solution}")
    stream.write("\n".join(report.lines) + "\n")
    return report
