"""Clausal encodings of RIAF structure and of cf/ad/stb semantics.

Variables:

* ``y(a)``   argument ``a`` is present in the completion
* ``r(a,b)`` the attack ``(a,b)`` is present in the completion
* ``x(a)``   ``a`` belongs to the candidate extension
* ``z(a)``   ``a`` is attacked by the candidate extension
* ``t(b,a)`` auxiliary for ``x(b) & y(b) & r(b,a)``

Allocation is blockwise y, r, x, z, t, each block in lexicographic order,
so indices of y/r/x do not depend on whether z/t are allocated. The z
definitions are one-directional (z implies some attacker is in), which is
enough because z only occurs positively elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from ..core import ArgumentationFramework, RichIAF, RIAFError

Clause = tuple[int, ...]


class VarSpace:
    def __init__(self, riaf: RichIAF, defeat: bool = False):
        self.riaf = riaf
        self.defeat = defeat
        self._index: dict[tuple, int] = {}
        self._names: list[tuple] = [()]
        args = sorted(riaf.all_args)
        pairs = sorted(riaf.all_pairs)
        for a in args:
            self._alloc(("y", a))
        for p in pairs:
            self._alloc(("r",) + p)
        for a in args:
            self._alloc(("x", a))
        if defeat:
            for a in args:
                self._alloc(("z", a))
            for p in pairs:
                self._alloc(("t",) + p)

    def _alloc(self, key: tuple) -> None:
        self._index[key] = len(self._names)
        self._names.append(key)

    def __len__(self) -> int:
        return len(self._names) - 1

    def _get(self, key: tuple) -> int:
        try:
            return self._index[key]
        except KeyError:
            raise RIAFError(f"variable {key[0]}({','.join(key[1:])}) is not allocated") from None

    def y(self, a: str) -> int:
        return self._get(("y", a))

    def r(self, a: str, b: str) -> int:
        return self._get(("r", a, b))

    def x(self, a: str) -> int:
        return self._get(("x", a))

    def z(self, a: str) -> int:
        return self._get(("z", a))

    def t(self, b: str, a: str) -> int:
        return self._get(("t", b, a))

    def name(self, var: int) -> tuple:
        """Semantic key of ``var``, e.g. ``('r', 'a', 'b')``."""
        return self._names[var]

    def items(self) -> Iterator[tuple[tuple, int]]:
        for var in range(1, len(self._names)):
            yield self._names[var], var

    def structure_vars(self) -> list[int]:
        """All y and r variables, in index order."""
        return [v for key, v in self.items() if key[0] in ("y", "r")]


@dataclass
class CnfFormula:
    varspace: VarSpace
    clauses: list[Clause] = field(default_factory=list)

    @property
    def num_vars(self) -> int:
        return len(self.varspace)

    def add(self, lits: Iterable[int]) -> None:
        clause = tuple(dict.fromkeys(lits))
        for lit in clause:
            if lit == 0 or abs(lit) > self.num_vars:
                raise RIAFError(f"literal {lit} out of range")
        self.clauses.append(clause)

    def __len__(self) -> int:
        return len(self.clauses)


def _space(riaf: RichIAF, defeat: bool, varspace: Optional[VarSpace]) -> VarSpace:
    if varspace is None:
        return VarSpace(riaf, defeat)
    if varspace.riaf != riaf:
        raise RIAFError("variable space belongs to a different framework")
    if defeat and not varspace.defeat:
        raise RIAFError("encoding needs z/t variables")
    return varspace


def encode_structure(riaf: RichIAF, varspace: Optional[VarSpace] = None) -> CnfFormula:
    vs = _space(riaf, False, varspace)
    cnf = CnfFormula(vs)
    for a in sorted(riaf.certain_args):
        cnf.add([vs.y(a)])
    for a, b in sorted(riaf.certain_attacks):
        cnf.add([vs.r(a, b)])
    for a, b in riaf.conflict_pairs:
        # oriented at least one way whenever both endpoints are present
        guard = [-vs.y(u) for u in (a, b) if u in riaf.uncertain_args]
        cnf.add([vs.r(a, b), vs.r(b, a)] + guard)
    for a in sorted(riaf.uncertain_args):
        cnf.add([vs.y(a), -vs.x(a)])
        incident = set()
        for p in riaf.uncertain_attacks | riaf.uncertain_conflicts:
            if a in p:
                incident.add(p)
        for b, c in sorted(incident):
            cnf.add([vs.y(a), -vs.r(b, c)])
    return cnf


def encode_cf(riaf: RichIAF, varspace: Optional[VarSpace] = None) -> CnfFormula:
    vs = _space(riaf, False, varspace)
    cnf = CnfFormula(vs)
    for a, b in sorted(riaf.all_pairs):
        cnf.add([-vs.y(a), -vs.y(b), -vs.r(a, b), -vs.x(a), -vs.x(b)])
    return cnf


def encode_defeat_defs(riaf: RichIAF, varspace: Optional[VarSpace] = None) -> CnfFormula:
    vs = _space(riaf, True, varspace)
    cnf = CnfFormula(vs)
    for a in sorted(riaf.all_args):
        attackers = riaf.potential_attackers(a)
        cnf.add([-vs.z(a)] + [vs.t(b, a) for b in attackers])
        for b in attackers:
            t = vs.t(b, a)
            cnf.add([-t, vs.x(b)])
            cnf.add([-t, vs.y(b)])
            cnf.add([-t, vs.r(b, a)])
    return cnf


def encode_ad(riaf: RichIAF, varspace: Optional[VarSpace] = None) -> CnfFormula:
    vs = _space(riaf, True, varspace)
    cnf = encode_cf(riaf, vs)
    for b, a in sorted(riaf.all_pairs):
        cnf.add([-vs.x(a), -vs.y(a), -vs.y(b), -vs.r(b, a), vs.z(b)])
    cnf.clauses += encode_defeat_defs(riaf, vs).clauses
    return cnf


def encode_stb(riaf: RichIAF, varspace: Optional[VarSpace] = None) -> CnfFormula:
    vs = _space(riaf, True, varspace)
    cnf = encode_cf(riaf, vs)
    for a in sorted(riaf.all_args):
        cnf.add([vs.x(a), -vs.y(a), vs.z(a)])
    cnf.clauses += encode_defeat_defs(riaf, vs).clauses
    return cnf


def conjoin(*formulas: CnfFormula) -> CnfFormula:
    """Conjunction over the widest of the operands' variable spaces."""
    if not formulas:
        raise RIAFError("nothing to conjoin")
    riaf = formulas[0].varspace.riaf
    if any(f.varspace.riaf != riaf for f in formulas):
        raise RIAFError("formulas over different frameworks")
    vs = max((f.varspace for f in formulas), key=len)
    out = CnfFormula(vs)
    for f in formulas:
        out.clauses.extend(f.clauses)
    return out


_SEMANTIC_ENCODERS = {"ad": encode_ad, "stb": encode_stb, "cf": encode_cf}


def encode_task(riaf: RichIAF, sem: str) -> CnfFormula:
    """Structure formula, conjoined with the semantics formula unless
    ``sem == 'structure'``."""
    if sem == "structure":
        return encode_structure(riaf)
    try:
        enc = _SEMANTIC_ENCODERS[sem]
    except KeyError:
        raise RIAFError(f"no encoding for semantics {sem!r}") from None
    semantic = enc(riaf)
    return conjoin(encode_structure(riaf, semantic.varspace), semantic)


# --- model decoding -------------------------------------------------------


def _true_set(model: Iterable[int]) -> set[int]:
    return {lit for lit in model if lit > 0}


def decode_completion(vs: VarSpace, model: Iterable[int]) -> ArgumentationFramework:
    true = _true_set(model)
    riaf = vs.riaf
    present = frozenset(a for a in riaf.all_args if vs.y(a) in true)
    attacks = frozenset(
        (a, b)
        for a, b in riaf.all_pairs
        if a in present and b in present and vs.r(a, b) in true
    )
    return ArgumentationFramework(present, attacks)


def decode_extension(vs: VarSpace, model: Iterable[int]) -> frozenset[str]:
    true = _true_set(model)
    return frozenset(a for a in vs.riaf.all_args if vs.x(a) in true)


def structure_assignment(vs: VarSpace, model: Iterable[int]) -> list[int]:
    """The model's literals over the y and r variables."""
    true = _true_set(model)
    return [v if v in true else -v for v in vs.structure_vars()]
