"""Extension-based semantics on plain argumentation frameworks.

Sets are handled internally as bitmasks over the lexicographically sorted
argument list; the public API speaks frozensets of names.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from typing import Iterable, NamedTuple

from .core import ArgumentationFramework, RIAFError


class Semantics(enum.Enum):
    CF = "cf"
    AD = "ad"
    CO = "co"
    GR = "gr"
    PR = "pr"
    STB = "stb"

    @classmethod
    def parse(cls, token: str) -> "Semantics":
        try:
            return cls(token.lower())
        except ValueError:
            raise RIAFError(f"unknown semantics: {token!r}") from None


class AcceptanceStatus(enum.Enum):
    SKEPTICAL = "skeptical"
    CREDULOUS = "credulous"
    REJECTED = "rejected"


class AcceptanceSets(NamedTuple):
    skeptical: frozenset[str]
    credulous: frozenset[str]
    rejected: frozenset[str]


class _Graph:
    __slots__ = ("names", "index", "n", "full", "out", "into")

    def __init__(self, af: ArgumentationFramework):
        self.names = sorted(af.arguments)
        self.index = {name: i for i, name in enumerate(self.names)}
        self.n = len(self.names)
        self.full = (1 << self.n) - 1
        self.out = [0] * self.n
        self.into = [0] * self.n
        for a, b in af.attacks:
            i, j = self.index[a], self.index[b]
            self.out[i] |= 1 << j
            self.into[j] |= 1 << i

    def mask(self, names: Iterable[str]) -> int:
        m = 0
        for name in names:
            try:
                m |= 1 << self.index[name]
            except KeyError:
                raise RIAFError(f"undeclared argument: {name}") from None
        return m

    def unmask(self, m: int) -> frozenset[str]:
        return frozenset(self.names[i] for i in range(self.n) if m >> i & 1)

    def attacked_by(self, s: int) -> int:
        hit = 0
        i = 0
        while s:
            if s & 1:
                hit |= self.out[i]
            s >>= 1
            i += 1
        return hit

    def defended(self, s: int) -> int:
        """Arguments all of whose attackers are attacked by ``s``."""
        hit = self.attacked_by(s)
        d = 0
        for c in range(self.n):
            if self.into[c] & ~hit == 0:
                d |= 1 << c
        return d

    def conflict_free(self, s: int) -> bool:
        return self.attacked_by(s) & s == 0

    def admissible(self, s: int) -> bool:
        return self.conflict_free(s) and s & ~self.defended(s) == 0

    def complete(self, s: int) -> bool:
        return self.conflict_free(s) and self.defended(s) == s

    def stable(self, s: int) -> bool:
        hit = self.attacked_by(s)
        return hit & s == 0 and (hit | s) == self.full

    def grounded(self) -> int:
        s = 0
        while True:
            nxt = self.defended(s)
            if nxt == s:
                return s
            s = nxt

    def conflict_free_sets(self) -> list[int]:
        out: list[int] = []
        n = self.n
        self_att = [self.out[i] >> i & 1 for i in range(n)]

        def grow(i: int, s: int) -> None:
            if i == n:
                out.append(s)
                return
            grow(i + 1, s)
            if self_att[i]:
                return
            if (self.out[i] | self.into[i]) & s:
                return
            grow(i + 1, s | 1 << i)

        grow(0, 0)
        return out


@lru_cache(maxsize=8192)
def _graph(af: ArgumentationFramework) -> _Graph:
    return _Graph(af)


def _sort_key(ext: frozenset[str]) -> tuple:
    return (len(ext), sorted(ext))


def _check_member(af: ArgumentationFramework, names: Iterable[str]) -> None:
    for name in names:
        if name not in af.arguments:
            raise RIAFError(f"undeclared argument: {name}")


def attacks(af: ArgumentationFramework, s: Iterable[str], b: str) -> bool:
    s = frozenset(s)
    _check_member(af, s | {b})
    return any((a, b) in af.attacks for a in s)


def defends_against(af: ArgumentationFramework, s: Iterable[str], c: str, b: str) -> bool:
    """True iff ``s`` attacks ``b``, an attacker of ``c``.

    This is the per-attacker reading; when ``b`` does not attack ``c`` the
    result is False.
    """
    s = frozenset(s)
    _check_member(af, s | {b, c})
    return (b, c) in af.attacks and attacks(af, s, b)


def defends(af: ArgumentationFramework, s: Iterable[str], c: str) -> bool:
    """True iff ``s`` counter-attacks every attacker of ``c``."""
    s = frozenset(s)
    _check_member(af, s | {c})
    return all(attacks(af, s, b) for b, target in af.attacks if target == c)


def is_extension(af: ArgumentationFramework, s: Iterable[str], sem: Semantics) -> bool:
    g = _graph(af)
    m = g.mask(s)
    if sem is Semantics.CF:
        return g.conflict_free(m)
    if sem is Semantics.AD:
        return g.admissible(m)
    if sem is Semantics.CO:
        return g.complete(m)
    if sem is Semantics.GR:
        return m == g.grounded()
    if sem is Semantics.STB:
        return g.stable(m)
    if sem is Semantics.PR:
        if not g.complete(m):
            return False
        # maximality: no admissible proper superset
        rest = [i for i in range(g.n) if not m >> i & 1]
        for k in range(1, 1 << len(rest)):
            extra = 0
            for j, i in enumerate(rest):
                if k >> j & 1:
                    extra |= 1 << i
            if g.admissible(m | extra):
                return False
        return True
    raise RIAFError(f"unsupported semantics: {sem}")


@lru_cache(maxsize=16384)
def _extension_masks(af: ArgumentationFramework, sem: Semantics) -> tuple[int, ...]:
    g = _graph(af)
    if sem is Semantics.GR:
        return (g.grounded(),)
    cf = g.conflict_free_sets()
    if sem is Semantics.CF:
        return tuple(cf)
    if sem is Semantics.STB:
        return tuple(s for s in cf if g.stable(s))
    adm = [s for s in cf if s & ~g.defended(s) == 0]
    if sem is Semantics.AD:
        return tuple(adm)
    if sem is Semantics.CO:
        return tuple(s for s in adm if g.defended(s) == s)
    if sem is Semantics.PR:
        adm.sort(key=lambda s: -bin(s).count("1"))
        maximal: list[int] = []
        for s in adm:
            if not any(s & t == s for t in maximal):
                maximal.append(s)
        return tuple(maximal)
    raise RIAFError(f"unsupported semantics: {sem}")


def enumerate_extensions(af: ArgumentationFramework, sem: Semantics) -> list[frozenset[str]]:
    """All ``sem``-extensions, sorted by cardinality then lexicographically."""
    g = _graph(af)
    exts = [g.unmask(m) for m in _extension_masks(af, sem)]
    return sorted(exts, key=_sort_key)


def grounded_extension(af: ArgumentationFramework) -> frozenset[str]:
    g = _graph(af)
    return g.unmask(g.grounded())


def complete_closure(af: ArgumentationFramework, admissible: Iterable[str]) -> frozenset[str]:
    """Least complete extension containing an admissible set."""
    g = _graph(af)
    m = g.mask(admissible)
    while True:
        nxt = m | g.defended(m)
        if nxt == m:
            return g.unmask(m)
        m = nxt


def acceptance_sets(af: ArgumentationFramework, sem: Semantics) -> AcceptanceSets:
    if sem is Semantics.CF:
        raise RIAFError("acceptance status is not defined for cf")
    g = _graph(af)
    masks = _extension_masks(af, sem)
    cred = 0
    for m in masks:
        cred |= m
    if sem is Semantics.AD:
        sk = 0
    elif not masks:
        sk = g.full
    else:
        sk = g.full
        for m in masks:
            sk &= m
    return AcceptanceSets(g.unmask(sk), g.unmask(cred), g.unmask(g.full & ~cred))


def credulously_accepted(af: ArgumentationFramework, a: str, sem: Semantics) -> bool:
    if sem is Semantics.GR:
        return a in grounded_extension(af)
    return a in acceptance_sets(af, sem).credulous


def skeptically_accepted(af: ArgumentationFramework, a: str, sem: Semantics) -> bool:
    if sem is Semantics.GR:
        return a in grounded_extension(af)
    return a in acceptance_sets(af, sem).skeptical


def status(af: ArgumentationFramework, a: str, sem: Semantics) -> AcceptanceStatus:
    sets = acceptance_sets(af, sem)
    if a in sets.skeptical and a in sets.credulous:
        return AcceptanceStatus.SKEPTICAL
    if a in sets.credulous:
        return AcceptanceStatus.CREDULOUS
    return AcceptanceStatus.REJECTED
