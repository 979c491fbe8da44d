"""Completions of a rich incomplete argumentation framework."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping

from .core import ArgumentationFramework, Pair, RichIAF, restrict


class Orientation(enum.Enum):
    FORWARD = "forward"  # (a, b) with a < b
    BACKWARD = "backward"
    BOTH = "both"


_ORIENTATIONS = (Orientation.FORWARD, Orientation.BACKWARD, Orientation.BOTH)


@dataclass(frozen=True)
class CompletionChoice:
    included_uncertain_args: frozenset[str]
    included_uncertain_attacks: frozenset[Pair]
    conflict_orientation: Mapping[Pair, Orientation]

    def __hash__(self) -> int:
        return hash(
            (
                self.included_uncertain_args,
                self.included_uncertain_attacks,
                frozenset(self.conflict_orientation.items()),
            )
        )

    def to_af(self, riaf: RichIAF) -> ArgumentationFramework:
        present = riaf.certain_args | self.included_uncertain_args
        attacks = set(restrict(riaf.certain_attacks, present))
        attacks |= self.included_uncertain_attacks
        for (a, b), how in self.conflict_orientation.items():
            if how is not Orientation.BACKWARD:
                attacks.add((a, b))
            if how is not Orientation.FORWARD:
                attacks.add((b, a))
        return ArgumentationFramework(present, frozenset(attacks))


def _subsets(items: list) -> Iterator[frozenset]:
    for bits in itertools.product((False, True), repeat=len(items)):
        yield frozenset(x for x, keep in zip(items, bits) if keep)


def iter_choices(riaf: RichIAF) -> Iterator[CompletionChoice]:
    """Yield every completion choice once, in the canonical order.

    Uncertain attacks and conflicts with an absent endpoint are never
    branched on, so distinct choices always give distinct completions.
    """
    uncertain = sorted(riaf.uncertain_args)
    for chosen in _subsets(uncertain):
        present = riaf.certain_args | chosen
        optional = sorted(restrict(riaf.uncertain_attacks, present))
        pairs = [(a, b) for a, b in riaf.conflict_pairs if a in present and b in present]
        for attacks in _subsets(optional):
            for orient in itertools.product(_ORIENTATIONS, repeat=len(pairs)):
                yield CompletionChoice(chosen, attacks, dict(zip(pairs, orient)))


def iter_completions(riaf: RichIAF) -> Iterator[ArgumentationFramework]:
    for choice in iter_choices(riaf):
        yield choice.to_af(riaf)


def enumerate_completions(riaf: RichIAF) -> list[ArgumentationFramework]:
    return list(iter_completions(riaf))


def is_completion(riaf: RichIAF, af: ArgumentationFramework) -> bool:
    present = af.arguments
    if not riaf.certain_args <= present <= riaf.all_args:
        return False
    required = restrict(riaf.certain_attacks, present)
    allowed = required | restrict(riaf.uncertain_attacks, present) | restrict(
        riaf.uncertain_conflicts, present
    )
    if not required <= af.attacks <= allowed:
        return False
    for a, b in restrict(riaf.uncertain_conflicts, present):
        if (a, b) not in af.attacks and (b, a) not in af.attacks:
            return False
    return True


def completion_count_bound(riaf: RichIAF) -> int:
    n = len(riaf.uncertain_args) + len(riaf.uncertain_attacks)
    return 2**n * 3 ** (len(riaf.uncertain_conflicts) // 2)
