from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..config import IntegrationConfig
from ..models import BlowUpDetected, DiagnosticsSeries

logger = logging.getLogger(__name__)

Rhs = Callable[[np.ndarray], np.ndarray]
Diagnostics = Callable[[np.ndarray], tuple[float, float]]


def rk4_step(rhs: Rhs, u: np.ndarray, dt: float) -> np.ndarray:
    """One step of the classical four-stage Runge-Kutta method."""
    k1 = rhs(u)
    k2 = rhs(u + 0.5 * dt * k1)
    k3 = rhs(u + 0.5 * dt * k2)
    k4 = rhs(u + dt * k3)
    return u + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


@dataclass
class IntegrationResult:
    state: np.ndarray
    series: DiagnosticsSeries
    steps_completed: int

    @property
    def blowup_time(self) -> float | None:
        return self.series.blowup_time

    @property
    def blown_up(self) -> bool:
        return self.series.blown_up


def _diverged(u: np.ndarray, threshold: float) -> bool:
    return not np.all(np.isfinite(u)) or float(np.max(np.abs(u), initial=0.0)) > threshold


def integrate(
    rhs: Rhs,
    u0: np.ndarray,
    config: IntegrationConfig,
    diagnostics: Diagnostics | None = None,
) -> IntegrationResult:
    """Advance ``u0`` by ``config.steps`` fixed RK4 steps up to ``config.t_final``.

    Diagnostics are sampled at t = 0, every ``config.sample_every`` steps and at
    the final step. A non-finite state or one exceeding ``config.blowup_threshold``
    in magnitude stops the run; the returned state is the last one before
    divergence and ``blowup_time`` is the time at which it was detected.
    """
    dt = config.dt
    series = DiagnosticsSeries()
    u = np.array(u0, dtype=np.float64, copy=True)

    def sample(step: int) -> None:
        if diagnostics is not None:
            series.record(config.t_final * step / config.steps, *diagnostics(u))

    sample(0)
    progress_every = max(1, config.steps // 10)
    for step in range(1, config.steps + 1):
        t = config.t_final * step / config.steps
        try:
            with np.errstate(over="ignore", invalid="ignore"):
                candidate = rk4_step(rhs, u, dt)
        except BlowUpDetected:
            candidate = None
        if candidate is None or _diverged(candidate, config.blowup_threshold):
            series.blowup_time = t
            logger.warning("solution diverged at t=%.6g after %d of %d steps", t, step - 1, config.steps)
            return IntegrationResult(state=u, series=series, steps_completed=step - 1)

        u = candidate
        if step % config.sample_every == 0 or step == config.steps:
            sample(step)
        if step % progress_every == 0:
            logger.debug("step %d/%d t=%.6g", step, config.steps, t)

    return IntegrationResult(state=u, series=series, steps_completed=config.steps)
