"""Routes reasoning tasks to the SAT procedures or to the oracle."""

from __future__ import annotations

import enum
from typing import Optional

from . import reasoning
from .core import RichIAF
from .reasoning import ProblemKind, QueryError, QueryVerdict
from .sat import cegar_nca, cegar_psa_stb, solve_nsa_stb_sat, solve_pca_sat
from .sat.solver import Backend
from .semantics import Semantics


class Engine(enum.Enum):
    ENUM = "enum"
    SAT = "sat"
    AUTO = "auto"


_CRED = (Semantics.AD, Semantics.CO, Semantics.PR, Semantics.STB)

# (problem, semantics) pairs that have a SAT procedure; everything else,
# including all verification problems and grounded semantics, is oracle-only
SAT_ROUTES = {
    **{(ProblemKind.PCA, s): lambda r, a, s=s, b=None: solve_pca_sat(r, a, s, b) for s in _CRED},
    **{(ProblemKind.NCA, s): lambda r, a, s=s, b=None: cegar_nca(r, a, s, b) for s in _CRED},
    (ProblemKind.NSA, Semantics.STB): lambda r, a, b=None: solve_nsa_stb_sat(r, a, b),
    (ProblemKind.PSA, Semantics.STB): lambda r, a, b=None: cegar_psa_stb(r, a, b),
}


def has_sat_path(problem: ProblemKind, sem: Semantics) -> bool:
    return (problem, sem) in SAT_ROUTES


def solve(
    problem: ProblemKind,
    riaf: RichIAF,
    query,
    sem: Semantics,
    engine: Engine = Engine.AUTO,
    backend: Optional[Backend] = None,
    allow_uncertain: bool = False,
) -> QueryVerdict:
    use_sat = has_sat_path(problem, sem)
    if use_sat and allow_uncertain and isinstance(query, str) and query in riaf.uncertain_args:
        # the encodings assume a certain query argument
        use_sat = False
    if engine is Engine.SAT:
        if not use_sat:
            raise QueryError(f"no SAT procedure for {problem.value}-{sem.value}")
    elif engine is Engine.ENUM:
        use_sat = False
    if use_sat:
        if not isinstance(query, str):
            raise QueryError(f"{problem.value} takes a single argument")
        return SAT_ROUTES[(problem, sem)](riaf, query, b=backend)
    return reasoning.decide(problem, riaf, query, sem, allow_uncertain=allow_uncertain)
