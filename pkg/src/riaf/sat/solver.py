"""SAT backends.

A backend opens *sessions*. Each session owns a clause database that may
grow between calls; ``solve(assumptions)`` returns a model (a list of
literals, one per variable) or ``None``.

:class:`DPLLSolver` is the embedded default: DPLL with two watched literals
and chronological backtracking. Assumptions are pushed as decisions that are
never flipped.
"""

from __future__ import annotations

from typing import Iterable, Optional, Protocol, Sequence

from ..core import RIAFError


class SolverError(RIAFError):
    pass


class Session(Protocol):
    def add_clause(self, lits: Iterable[int]) -> None: ...

    def solve(self, assumptions: Sequence[int] = ()) -> Optional[list[int]]: ...


class Backend(Protocol):
    name: str

    def session(self, num_vars: int, clauses: Iterable[Sequence[int]] = ()) -> Session: ...


class DPLLSolver:
    def __init__(self, num_vars: int, clauses: Iterable[Sequence[int]] = ()):
        self.num_vars = num_vars
        self._clauses: list[list[int]] = []
        self._units: list[int] = []
        self._watches: dict[int, list[int]] = {}
        for v in range(1, num_vars + 1):
            self._watches[v] = []
            self._watches[-v] = []
        self._inconsistent = False
        # variable order: most frequent first
        self._occurrences = [0] * (num_vars + 1)
        self._order: Optional[list[int]] = None
        for c in clauses:
            self.add_clause(c)

    def add_clause(self, lits: Iterable[int]) -> None:
        clause = list(dict.fromkeys(lits))
        for lit in clause:
            if lit == 0 or abs(lit) > self.num_vars:
                raise SolverError(f"literal {lit} out of range")
            if -lit in clause:
                return
        for lit in clause:
            self._occurrences[abs(lit)] += 1
        self._order = None
        if not clause:
            self._inconsistent = True
        elif len(clause) == 1:
            self._units.append(clause[0])
        else:
            idx = len(self._clauses)
            self._clauses.append(clause)
            self._watches[clause[0]].append(idx)
            self._watches[clause[1]].append(idx)

    def _value(self, lit: int) -> int:
        v = self._val[abs(lit)]
        return v if lit > 0 else -v

    def _assign(self, lit: int) -> None:
        self._val[abs(lit)] = 1 if lit > 0 else -1
        self._trail.append(lit)

    def _propagate(self) -> bool:
        """Unit propagation; False on conflict."""
        val = self._val
        clauses = self._clauses
        watches = self._watches
        while self._qhead < len(self._trail):
            lit = self._trail[self._qhead]
            self._qhead += 1
            false_lit = -lit
            ws = watches[false_lit]
            keep: list[int] = []
            i = 0
            n = len(ws)
            while i < n:
                ci = ws[i]
                i += 1
                c = clauses[ci]
                if c[0] == false_lit:
                    c[0], c[1] = c[1], c[0]
                first = c[0]
                fv = val[abs(first)]
                if (fv if first > 0 else -fv) == 1:
                    keep.append(ci)
                    continue
                moved = False
                for k in range(2, len(c)):
                    lk = c[k]
                    vk = val[abs(lk)]
                    if (vk if lk > 0 else -vk) != -1:
                        c[1], c[k] = lk, false_lit
                        watches[lk].append(ci)
                        moved = True
                        break
                if moved:
                    continue
                keep.append(ci)
                if (fv if first > 0 else -fv) == -1:
                    keep.extend(ws[i:])
                    watches[false_lit] = keep
                    return False
                self._assign(first)
            watches[false_lit] = keep
        return True

    def _pick(self) -> int:
        if self._order is None:
            occ = self._occurrences
            self._order = sorted(range(1, self.num_vars + 1), key=lambda v: (-occ[v], v))
        val = self._val
        for v in self._order:
            if val[v] == 0:
                return v
        return 0

    def _undo_to(self, size: int) -> None:
        trail = self._trail
        val = self._val
        while len(trail) > size:
            val[abs(trail.pop())] = 0
        self._qhead = size

    def solve(self, assumptions: Sequence[int] = ()) -> Optional[list[int]]:
        if self._inconsistent:
            return None
        self._val = [0] * (self.num_vars + 1)
        self._trail: list[int] = []
        self._qhead = 0
        for lit in list(self._units) + list(assumptions):
            if abs(lit) > self.num_vars or lit == 0:
                raise SolverError(f"literal {lit} out of range")
            v = self._value(lit)
            if v == -1:
                return None
            if v == 0:
                self._assign(lit)
                if not self._propagate():
                    return None
        # decision stack: (trail size before decision, literal, flipped)
        stack: list[tuple[int, int, bool]] = []
        while True:
            var = self._pick()
            if var == 0:
                return [v if self._val[v] == 1 else -v for v in range(1, self.num_vars + 1)]
            lit = -var
            stack.append((len(self._trail), lit, False))
            self._assign(lit)
            while not self._propagate():
                while stack and stack[-1][2]:
                    stack.pop()
                if not stack:
                    return None
                size, lit, _ = stack.pop()
                self._undo_to(size)
                stack.append((size, -lit, True))
                self._assign(-lit)


class EmbeddedBackend:
    name = "dpll"

    def session(self, num_vars: int, clauses: Iterable[Sequence[int]] = ()) -> DPLLSolver:
        return DPLLSolver(num_vars, clauses)


def default_backend() -> Backend:
    return EmbeddedBackend()
