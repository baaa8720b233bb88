from __future__ import annotations

import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import TextIO

from ..bases import (
    OperatorConstructionError,
    OperatorReport,
    build_operator_set,
    check_operator_set,
    dump_operator_set,
)
from ..config import Config
from ..models import BasisKind, ConfigurationError
from ..validation import validate_degree

logger = logging.getLogger(__name__)


@dataclass
class OpsCheckReport:
    basis: BasisKind
    p: int
    report: OperatorReport | None = None
    error: str | None = None
    lines: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.error is None and self.report is not None and self.report.ok

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 3


def cmd_ops_check(
    basis: BasisKind | str,
    p: int,
    dump: str | None = None,
    stream: TextIO | None = None,
) -> OpsCheckReport:
    """Build the operator set, print its invariant checks and optionally dump its matrices.

    ``dump`` is a file path, or ``-`` for the output stream.
    """
    stream = stream or sys.stdout
    try:
        kind = BasisKind(basis)
    except ValueError as exc:
        raise ConfigurationError(f"unknown basis kind {basis!r}") from exc
    validate_degree(p, p_max=Config.P_MAX)

    result = OpsCheckReport(basis=kind, p=p)
    emit = result.lines.append
    emit(f"ops-check {kind.value} p={p}")
    try:
        ops = build_operator_set(kind, p)
    except OperatorConstructionError as exc:
        result.error = str(exc)
        if exc.residual is not None:
            emit(f"sbp_residual {exc.residual:.3e} FAIL")
        emit(f"FAIL {exc}")
        stream.write("\n".join(result.lines) + "\n")
        return result

    report = check_operator_set(ops)
    result.report = report
    for check in report.checks:
        status = "ok" if check.ok else "FAIL"
        emit(f"{check.name} {check.value:.3e} <= {check.tolerance:.3e} {status}")
    emit(f"eig(M) min={report.eig_min:.6e} max={report.eig_max:.6e}")
    emit("PASS" if report.ok else "FAIL " + ", ".join(check.name for check in report.failures))
    stream.write("\n".join(result.lines) + "\n")

    if dump == "-":
        dump_operator_set(ops, stream)
    elif dump:
        path = Path(dump)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="ascii", newline="\n") as handle:
            dump_operator_set(ops, handle)
        logger.info("operator matrices written to %s", path)
        stream.write(f"wrote {path}\n")
    return result
