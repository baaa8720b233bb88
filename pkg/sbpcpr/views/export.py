from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

from ..config import Config
from ..models import DiagnosticsSeries
from ..services.fields import SolutionSample


@dataclass(frozen=True)
class OutputPaths:
    diagnostics: Path
    solution: Path


def output_paths(prefix: str) -> OutputPaths:
    """``<prefix>_diag.csv`` and ``<prefix>_solution.csv``.

    A bare file stem is placed under ``Config.OUTPUT_DIR``; a prefix with a
    directory component is used as given.
    """
    stem = Path(prefix)
    if not stem.is_absolute() and stem.parent == Path("."):
        stem = Config.OUTPUT_DIR / stem
    return OutputPaths(
        diagnostics=stem.with_name(f"{stem.name}_diag.csv"),
        solution=stem.with_name(f"{stem.name}_solution.csv"),
    )


def _fmt(value: float) -> str:
    return f"{value:.{Config.CSV_DIGITS}g}"


def _writer(path: Path, header: list[str]):
    path.parent.mkdir(parents=True, exist_ok=True)
    handle = path.open("w", newline="", encoding="ascii")
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(header)
    return handle, writer


def write_diagnostics(path: Path, series: DiagnosticsSeries) -> None:
    handle, writer = _writer(path, ["t", "momentum", "energy"])
    with handle:
        for t, momentum, energy in series.samples:
            writer.writerow([_fmt(t), _fmt(momentum), _fmt(energy)])


def write_solution(path: Path, snapshots: list[tuple[float, SolutionSample]]) -> None:
    handle, writer = _writer(path, ["x", "u", "kind", "t"])
    with handle:
        for t, sample in snapshots:
            for x, u, kind in zip(sample.x, sample.u, sample.kind):
                writer.writerow([_fmt(x), _fmt(u), kind, _fmt(t)])


def write_outputs(
    prefix: str,
    series: DiagnosticsSeries,
    snapshots: list[tuple[float, SolutionSample]],
) -> OutputPaths:
    paths = output_paths(prefix)
    write_diagnostics(paths.diagnostics, series)
    write_solution(paths.solution, snapshots)
    return paths
