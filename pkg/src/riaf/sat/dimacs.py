"""DIMACS CNF serialization with a variable-map comment block."""

from __future__ import annotations

from typing import Iterable, Optional, Sequence, TextIO

from ..core import RIAFError
from .encoding import CnfFormula


def _comment(key: tuple, var: int) -> str:
    return "c " + " ".join(key) + f" {var}"


def dimacs_text(num_vars: int, clauses: Iterable[Sequence[int]], comments: Iterable[str] = ()) -> str:
    clauses = list(clauses)
    lines = list(comments)
    lines.append(f"p cnf {num_vars} {len(clauses)}")
    for clause in clauses:
        lines.append(" ".join(str(lit) for lit in clause) + " 0" if clause else "0")
    return "\n".join(lines) + "\n"


def emit_dimacs(cnf: CnfFormula, sink: Optional[TextIO] = None) -> str:
    """Render ``cnf`` as DIMACS, preceded by ``c <kind> <args...> <index>``
    comments; also written to ``sink`` when given."""
    comments = [_comment(key, var) for key, var in cnf.varspace.items()]
    text = dimacs_text(cnf.num_vars, cnf.clauses, comments)
    if sink is not None:
        try:
            sink.write(text)
        except OSError as exc:
            raise RIAFError(f"cannot write DIMACS output: {exc}") from exc
    return text


def read_variable_map(text: str) -> dict[tuple, int]:
    """Recover the semantic variable map from an emitted file's comments."""
    out = {}
    for line in text.splitlines():
        parts = line.split()
        if len(parts) >= 3 and parts[0] == "c" and parts[1] in ("y", "r", "x", "z", "t"):
            out[tuple(parts[1:-1])] = int(parts[-1])
    return out
