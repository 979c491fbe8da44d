"""Adapter for an external SAT solver process.

The solver is invoked as ``<command...> <path.cnf>``. Its stdout must contain
a status line (``SAT``/``UNSAT``, or the competition forms ``s SATISFIABLE``
/ ``s UNSATISFIABLE``) and, when satisfiable, the model as space-separated
literals, optionally on ``v``-prefixed lines and optionally 0-terminated.
"""

from __future__ import annotations

import os
import shlex
import subprocess
import tempfile
from typing import Iterable, Optional, Sequence

from .dimacs import dimacs_text
from .solver import SolverError


def parse_solver_output(text: str, num_vars: int) -> Optional[list[int]]:
    status = None
    lits: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("s "):
            line = line[2:].strip()
        if line in ("SAT", "SATISFIABLE"):
            status = True
            continue
        if line in ("UNSAT", "UNSATISFIABLE"):
            status = False
            continue
        if line.startswith("v "):
            line = line[2:]
        try:
            lits.extend(int(tok) for tok in line.split())
        except ValueError:
            raise SolverError(f"unexpected solver output line: {raw!r}") from None
    if status is None:
        raise SolverError("solver reported neither SAT nor UNSAT")
    if not status:
        return None
    value = {abs(l): l for l in lits if l != 0}
    # unmentioned variables are unconstrained; pick false
    return [value.get(v, -v) for v in range(1, num_vars + 1)]


class ExternalSession:
    def __init__(self, command: Sequence[str], num_vars: int, clauses: Iterable[Sequence[int]] = (), timeout: Optional[float] = None):
        self.command = list(command)
        self.num_vars = num_vars
        self.timeout = timeout
        self._clauses = [list(c) for c in clauses]

    def add_clause(self, lits: Iterable[int]) -> None:
        self._clauses.append(list(lits))

    def solve(self, assumptions: Sequence[int] = ()) -> Optional[list[int]]:
        clauses = self._clauses + [[lit] for lit in assumptions]
        fd, path = tempfile.mkstemp(suffix=".cnf")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(dimacs_text(self.num_vars, clauses))
            try:
                proc = subprocess.run(
                    self.command + [path],
                    capture_output=True,
                    text=True,
                    timeout=self.timeout,
                )
            except (OSError, subprocess.TimeoutExpired) as exc:
                raise SolverError(f"external solver failed: {exc}") from exc
        finally:
            os.unlink(path)
        # 10/20 are the conventional SAT/UNSAT exit codes
        if proc.returncode not in (0, 10, 20):
            raise SolverError(f"external solver exited with status {proc.returncode}: {proc.stderr.strip()}")
        return parse_solver_output(proc.stdout, self.num_vars)


class ExternalBackend:
    name = "external"

    def __init__(self, command, timeout: Optional[float] = None):
        self.command = shlex.split(command) if isinstance(command, str) else list(command)
        if not self.command:
            raise SolverError("empty solver command")
        self.timeout = timeout

    def session(self, num_vars: int, clauses: Iterable[Sequence[int]] = ()) -> ExternalSession:
        return ExternalSession(self.command, num_vars, clauses, self.timeout)
