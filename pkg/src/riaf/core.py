"""Framework data model: plain AFs and rich incomplete AFs."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Tuple

Pair = Tuple[str, str]

_NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")


class RIAFError(ValueError):
    """Base class for all errors raised by this package."""


class ValidationError(RIAFError):
    pass


def check_name(name: str) -> str:
    if not isinstance(name, str) or not _NAME_RE.match(name):
        raise ValidationError(f"invalid argument name: {name!r}")
    return name


def sorted_pairs(pairs: Iterable[Pair]) -> list[Pair]:
    return sorted(pairs)


def restrict(pairs: Iterable[Pair], args: Iterable[str]) -> frozenset[Pair]:
    """Keep only the pairs whose endpoints both lie in ``args``."""
    args = frozenset(args)
    return frozenset((a, b) for a, b in pairs if a in args and b in args)


@dataclass(frozen=True)
class ArgumentationFramework:
    arguments: frozenset[str] = frozenset()
    attacks: frozenset[Pair] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "arguments", frozenset(self.arguments))
        object.__setattr__(self, "attacks", frozenset(tuple(p) for p in self.attacks))
        for name in self.arguments:
            check_name(name)
        for a, b in self.attacks:
            if a not in self.arguments or b not in self.arguments:
                raise ValidationError(f"attack ({a},{b}) has an undeclared endpoint")

    def __repr__(self) -> str:
        args = ",".join(sorted(self.arguments))
        atts = ",".join(f"({a},{b})" for a, b in sorted(self.attacks))
        return f"AF({{{args}}}, {{{atts}}})"


def _symmetric_closure(pairs: Iterable[Pair]) -> frozenset[Pair]:
    out = set()
    for a, b in pairs:
        out.add((a, b))
        out.add((b, a))
    return frozenset(out)


@dataclass(frozen=True)
class RichIAF:
    """A rich incomplete AF ``<A, A?, R, R?, <->?>``.

    ``uncertain_conflicts`` is stored symmetrically closed; a one-directional
    declaration is accepted and closed on construction.
    """

    certain_args: frozenset[str] = frozenset()
    uncertain_args: frozenset[str] = frozenset()
    certain_attacks: frozenset[Pair] = frozenset()
    uncertain_attacks: frozenset[Pair] = frozenset()
    uncertain_conflicts: frozenset[Pair] = frozenset()
    _attackers: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        norm = lambda ps: frozenset(tuple(p) for p in ps)  # noqa: E731
        object.__setattr__(self, "certain_args", frozenset(self.certain_args))
        object.__setattr__(self, "uncertain_args", frozenset(self.uncertain_args))
        object.__setattr__(self, "certain_attacks", norm(self.certain_attacks))
        object.__setattr__(self, "uncertain_attacks", norm(self.uncertain_attacks))
        object.__setattr__(
            self, "uncertain_conflicts", _symmetric_closure(norm(self.uncertain_conflicts))
        )
        self._validate()

    def _validate(self) -> None:
        for name in self.certain_args | self.uncertain_args:
            check_name(name)
        both = self.certain_args & self.uncertain_args
        if both:
            raise ValidationError(
                f"arguments both certain and uncertain: {', '.join(sorted(both))}"
            )
        for (n1, s1), (n2, s2) in (
            (("certain attacks", self.certain_attacks), ("uncertain attacks", self.uncertain_attacks)),
            (("certain attacks", self.certain_attacks), ("uncertain conflicts", self.uncertain_conflicts)),
            (("uncertain attacks", self.uncertain_attacks), ("uncertain conflicts", self.uncertain_conflicts)),
        ):
            overlap = s1 & s2
            if overlap:
                a, b = min(overlap)
                raise ValidationError(f"pair ({a},{b}) occurs in both {n1} and {n2}")
        universe = self.all_args
        for a, b in self.certain_attacks | self.uncertain_attacks | self.uncertain_conflicts:
            for end in (a, b):
                if end not in universe:
                    raise ValidationError(f"pair ({a},{b}) mentions undeclared argument {end}")
        for a, b in self.uncertain_conflicts:
            if a == b:
                raise ValidationError(f"self-pair ({a},{a}) is not allowed as an uncertain conflict")

    @property
    def all_args(self) -> frozenset[str]:
        return self.certain_args | self.uncertain_args

    @property
    def all_pairs(self) -> frozenset[Pair]:
        """R | R? | <->? as ordered pairs."""
        return self.certain_attacks | self.uncertain_attacks | self.uncertain_conflicts

    @property
    def conflict_pairs(self) -> list[Pair]:
        """Unordered uncertain conflicts, smaller endpoint first, sorted."""
        return sorted((a, b) for a, b in self.uncertain_conflicts if a < b)

    def potential_attackers(self, target: str) -> list[str]:
        if self._attackers is None:
            table: dict[str, list[str]] = {a: [] for a in self.all_args}
            for b, a in sorted(self.all_pairs):
                table[a].append(b)
            object.__setattr__(self, "_attackers", table)
        return self._attackers[target]

    @property
    def has_uncertainty(self) -> bool:
        return bool(self.uncertain_args or self.uncertain_attacks or self.uncertain_conflicts)

    def to_af(self) -> ArgumentationFramework:
        """The single completion of an uncertainty-free RIAF."""
        if self.has_uncertainty:
            raise ValidationError("framework has uncertain elements")
        return ArgumentationFramework(self.certain_args, self.certain_attacks)


def validate_riaf(raw) -> RichIAF:
    """Validate a RIAF candidate.

    ``raw`` is either a :class:`RichIAF` or a 5-tuple
    ``(A, A?, R, R?, <->?)`` of iterables.
    """
    if isinstance(raw, RichIAF):
        parts = (
            raw.certain_args,
            raw.uncertain_args,
            raw.certain_attacks,
            raw.uncertain_attacks,
            raw.uncertain_conflicts,
        )
    else:
        parts = tuple(raw)
        if len(parts) != 5:
            raise ValidationError("a RIAF has exactly five components")
    return RichIAF(*parts)


def lift_af(af: ArgumentationFramework) -> RichIAF:
    return RichIAF(af.arguments, frozenset(), af.attacks)


def lift_iaf(certain_args, uncertain_args, certain_attacks, uncertain_attacks) -> RichIAF:
    return RichIAF(certain_args, uncertain_args, certain_attacks, uncertain_attacks, frozenset())
