"""SAT-based decision procedures for the acceptance problems.

First-level problems take a single call. The second-level ones run a
counterexample-guided loop: one session proposes candidate completions, a
second session checks each candidate under assumptions fixing its y/r
variables, and rejected candidates are blocked by negating their full y/r
assignment.
"""

from __future__ import annotations

from typing import Optional

from ..core import RichIAF
from ..reasoning import QueryError, QueryVerdict, check_query_argument
from ..semantics import Semantics, complete_closure, enumerate_extensions
from .encoding import (
    VarSpace,
    decode_completion,
    decode_extension,
    encode_ad,
    encode_stb,
    encode_structure,
    structure_assignment,
)
from .solver import Backend, default_backend

SAT_CREDULOUS = (Semantics.AD, Semantics.CO, Semantics.PR, Semantics.STB)


def _semantic_encoder(sem: Semantics):
    if sem is Semantics.STB:
        return encode_stb
    if sem in (Semantics.AD, Semantics.CO, Semantics.PR):
        # any admissible set extends to a complete/preferred extension
        return encode_ad
    raise QueryError(f"no SAT procedure for {sem.value}")


class _Encoding:
    def __init__(self, riaf: RichIAF, sem: Optional[Semantics]):
        self.vs = VarSpace(riaf, defeat=sem is not None)
        self.structure = encode_structure(riaf, self.vs).clauses
        self.semantic = _semantic_encoder(sem)(riaf, self.vs).clauses if sem else []

    def open(self, backend: Backend, with_semantics: bool = True):
        clauses = self.structure + (self.semantic if with_semantics else [])
        return backend.session(len(self.vs), clauses)


def _lift_extension(af, ext: frozenset[str], sem: Semantics) -> frozenset[str]:
    """Turn an admissible certificate into a ``sem``-extension containing it."""
    if sem in (Semantics.AD, Semantics.STB):
        return ext
    if sem is Semantics.PR:
        for pr in enumerate_extensions(af, Semantics.PR):
            if ext <= pr:
                return pr
    return complete_closure(af, ext)


def solve_pca_sat(riaf: RichIAF, a: str, sem: Semantics, backend: Optional[Backend] = None) -> QueryVerdict:
    check_query_argument(riaf, a)
    enc = _Encoding(riaf, sem)
    backend = backend or default_backend()
    model = enc.open(backend).solve([enc.vs.x(a)])
    if model is None:
        return QueryVerdict(False, iterations=1)
    af = decode_completion(enc.vs, model)
    ext = _lift_extension(af, decode_extension(enc.vs, model), sem)
    return QueryVerdict(True, af, ext, iterations=1)


def solve_nsa_stb_sat(riaf: RichIAF, a: str, backend: Optional[Backend] = None) -> QueryVerdict:
    check_query_argument(riaf, a)
    enc = _Encoding(riaf, Semantics.STB)
    backend = backend or default_backend()
    model = enc.open(backend).solve([-enc.vs.x(a)])
    if model is None:
        return QueryVerdict(True, iterations=1)
    return QueryVerdict(
        False, decode_completion(enc.vs, model), decode_extension(enc.vs, model), iterations=1
    )


def cegar_psa_stb(riaf: RichIAF, a: str, backend: Optional[Backend] = None) -> QueryVerdict:
    """Possible skeptical acceptance under stable semantics.

    Phase one looks for a completion with a stable extension containing
    ``a`` and none avoiding it. If that abstraction runs dry, phase two
    looks for a completion with no stable extension at all, where ``a`` is
    skeptically accepted vacuously.
    """
    check_query_argument(riaf, a)
    backend = backend or default_backend()
    enc = _Encoding(riaf, Semantics.STB)
    xa = enc.vs.x(a)
    abstraction = enc.open(backend)
    checker = enc.open(backend)
    blocked: list[list[int]] = []
    iterations = 0

    while True:
        model = abstraction.solve([xa])
        if model is None:
            break
        iterations += 1
        cand = structure_assignment(enc.vs, model)
        if checker.solve(cand + [-xa]) is None:
            return QueryVerdict(True, decode_completion(enc.vs, model), iterations=iterations)
        block = [-lit for lit in cand]
        blocked.append(block)
        abstraction.add_clause(block)

    # every blocked completion has a stable extension, so skip it here too
    candidates = enc.open(backend, with_semantics=False)
    for block in blocked:
        candidates.add_clause(block)
    while True:
        model = candidates.solve()
        if model is None:
            return QueryVerdict(False, iterations=iterations)
        iterations += 1
        cand = structure_assignment(enc.vs, model)
        if checker.solve(cand) is None:
            return QueryVerdict(True, decode_completion(enc.vs, model), iterations=iterations)
        candidates.add_clause([-lit for lit in cand])


def cegar_nca(riaf: RichIAF, a: str, sem: Semantics, backend: Optional[Backend] = None) -> QueryVerdict:
    check_query_argument(riaf, a)
    backend = backend or default_backend()
    enc = _Encoding(riaf, sem)
    xa = enc.vs.x(a)
    candidates = enc.open(backend, with_semantics=False)
    checker = enc.open(backend)
    iterations = 0
    while True:
        model = candidates.solve()
        if model is None:
            return QueryVerdict(True, iterations=iterations)
        iterations += 1
        cand = structure_assignment(enc.vs, model)
        if checker.solve(cand + [xa]) is None:
            return QueryVerdict(False, decode_completion(enc.vs, model), iterations=iterations)
        candidates.add_clause([-lit for lit in cand])
