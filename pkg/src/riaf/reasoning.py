"""Brute-force oracle for the possible/necessary reasoning problems.

Every problem is answered by explicit quantification over the completion
stream. Existential problems stop at the first witness, universal ones at
the first counterexample, so witnesses are deterministic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .completions import iter_completions
from .core import ArgumentationFramework, RichIAF, RIAFError
from .semantics import (
    Semantics,
    acceptance_sets,
    enumerate_extensions,
    grounded_extension,
    is_extension,
)


class QueryError(RIAFError):
    pass


class ProblemKind(enum.Enum):
    INC_PV = "IncPV"
    INC_NV = "IncNV"
    INC_PV_STAR = "IncPVstar"
    INC_NV_STAR = "IncNVstar"
    PCA = "PCA"
    NCA = "NCA"
    PSA = "PSA"
    NSA = "NSA"

    @property
    def is_verification(self) -> bool:
        return self in _VERIFICATION

    @property
    def is_possible(self) -> bool:
        return self in _POSSIBLE

    @classmethod
    def parse(cls, token: str) -> "ProblemKind":
        for kind in cls:
            if kind.value.lower() == token.lower():
                return kind
        raise RIAFError(f"unknown problem: {token!r}")


_VERIFICATION = {
    ProblemKind.INC_PV,
    ProblemKind.INC_NV,
    ProblemKind.INC_PV_STAR,
    ProblemKind.INC_NV_STAR,
}
_POSSIBLE = {ProblemKind.INC_PV, ProblemKind.INC_PV_STAR, ProblemKind.PCA, ProblemKind.PSA}


@dataclass(frozen=True)
class QueryVerdict:
    answer: bool
    witness: Optional[ArgumentationFramework] = None
    extension_witness: Optional[frozenset[str]] = None
    iterations: int = 0

    def __bool__(self) -> bool:
        return self.answer


# --- verification ---------------------------------------------------------


def _check_set(riaf: RichIAF, s: Iterable[str]) -> frozenset[str]:
    s = frozenset(s)
    unknown = s - riaf.all_args
    if unknown:
        raise QueryError(f"undeclared argument(s) in query set: {', '.join(sorted(unknown))}")
    return s


def _verify_i(s: frozenset[str], sem: Semantics) -> Callable[[ArgumentationFramework], Optional[frozenset[str]]]:
    def check(af: ArgumentationFramework):
        t = s & af.arguments
        return t if is_extension(af, t, sem) else None

    return check


def _verify_star(s: frozenset[str], sem: Semantics) -> Callable[[ArgumentationFramework], Optional[frozenset[str]]]:
    def check(af: ArgumentationFramework):
        if not s <= af.arguments:
            return None
        return s if is_extension(af, s, sem) else None

    return check


def _exists(riaf: RichIAF, check) -> QueryVerdict:
    for af in iter_completions(riaf):
        ext = check(af)
        if ext is not None:
            return QueryVerdict(True, af, ext)
    return QueryVerdict(False)


def _forall(riaf: RichIAF, check, counter=None) -> QueryVerdict:
    for af in iter_completions(riaf):
        if check(af) is None:
            return QueryVerdict(False, af, counter(af) if counter else None)
    return QueryVerdict(True)


def inc_pv(riaf: RichIAF, s: Iterable[str], sem: Semantics) -> QueryVerdict:
    return _exists(riaf, _verify_i(_check_set(riaf, s), sem))


def inc_nv(riaf: RichIAF, s: Iterable[str], sem: Semantics) -> QueryVerdict:
    return _forall(riaf, _verify_i(_check_set(riaf, s), sem))


def inc_pv_star(riaf: RichIAF, s: Iterable[str], sem: Semantics) -> QueryVerdict:
    return _exists(riaf, _verify_star(_check_set(riaf, s), sem))


def inc_nv_star(riaf: RichIAF, s: Iterable[str], sem: Semantics) -> QueryVerdict:
    return _forall(riaf, _verify_star(_check_set(riaf, s), sem))


# --- acceptance -----------------------------------------------------------


def check_query_argument(riaf: RichIAF, a: str, allow_uncertain: bool = False) -> None:
    if a in riaf.certain_args:
        return
    if a in riaf.uncertain_args:
        if allow_uncertain:
            return
        raise QueryError(f"query argument {a} is uncertain; acceptance queries need a certain argument")
    raise QueryError(f"undeclared query argument: {a}")


def _acceptance_sem(sem: Semantics) -> None:
    if sem is Semantics.CF:
        raise QueryError("acceptance problems are not defined for cf")


def _credulous_witness(a: str, sem: Semantics):
    """Per-completion check returning an extension that contains ``a``."""

    def check(af: ArgumentationFramework):
        if a not in af.arguments:
            return None
        if sem is Semantics.GR:
            g = grounded_extension(af)
            return g if a in g else None
        for ext in enumerate_extensions(af, sem):
            if a in ext:
                return ext
        return None

    return check


def _skeptical_check(a: str, sem: Semantics):
    def check(af: ArgumentationFramework):
        if a not in af.arguments:
            return None
        if sem is Semantics.GR:
            g = grounded_extension(af)
            return g if a in g else None
        if a in acceptance_sets(af, sem).skeptical:
            return frozenset()  # sentinel: accepted, no single certificate
        return None

    return check


def _rejecting_extension(a: str, sem: Semantics):
    """An extension of ``af`` that does not contain ``a`` (None if none)."""

    def find(af: ArgumentationFramework):
        if sem is Semantics.GR:
            return grounded_extension(af)
        for ext in enumerate_extensions(af, sem):
            if a not in ext:
                return ext
        return None

    return find


def pca(riaf: RichIAF, a: str, sem: Semantics, allow_uncertain: bool = False) -> QueryVerdict:
    check_query_argument(riaf, a, allow_uncertain)
    _acceptance_sem(sem)
    return _exists(riaf, _credulous_witness(a, sem))


def nca(riaf: RichIAF, a: str, sem: Semantics, allow_uncertain: bool = False) -> QueryVerdict:
    check_query_argument(riaf, a, allow_uncertain)
    _acceptance_sem(sem)
    return _forall(riaf, _credulous_witness(a, sem))


def psa(riaf: RichIAF, a: str, sem: Semantics, allow_uncertain: bool = False) -> QueryVerdict:
    check_query_argument(riaf, a, allow_uncertain)
    _acceptance_sem(sem)
    if sem is Semantics.AD:
        # the empty set is admissible everywhere
        return QueryVerdict(False)
    verdict = _exists(riaf, _skeptical_check(a, sem))
    if verdict.answer and sem is not Semantics.GR:
        return QueryVerdict(True, verdict.witness)
    return verdict


def nsa(riaf: RichIAF, a: str, sem: Semantics, allow_uncertain: bool = False) -> QueryVerdict:
    check_query_argument(riaf, a, allow_uncertain)
    _acceptance_sem(sem)
    if sem is Semantics.AD:
        first = next(iter_completions(riaf))
        return QueryVerdict(False, first, frozenset())
    return _forall(riaf, _skeptical_check(a, sem), _rejecting_extension(a, sem))


_DISPATCH = {
    ProblemKind.INC_PV: inc_pv,
    ProblemKind.INC_NV: inc_nv,
    ProblemKind.INC_PV_STAR: inc_pv_star,
    ProblemKind.INC_NV_STAR: inc_nv_star,
    ProblemKind.PCA: pca,
    ProblemKind.NCA: nca,
    ProblemKind.PSA: psa,
    ProblemKind.NSA: nsa,
}


def decide(problem: ProblemKind, riaf: RichIAF, query, sem: Semantics, allow_uncertain: bool = False) -> QueryVerdict:
    """Answer ``problem`` with the oracle; ``query`` is a set or an argument."""
    fn = _DISPATCH[problem]
    if problem.is_verification:
        if isinstance(query, str):
            raise QueryError(f"{problem.value} takes a set of arguments")
        return fn(riaf, query, sem)
    if not isinstance(query, str):
        raise QueryError(f"{problem.value} takes a single argument")
    return fn(riaf, query, sem, allow_uncertain=allow_uncertain)
