"""Seeded random RIAF instances for differential testing."""

from __future__ import annotations

import random

from .core import RichIAF, RIAFError


def generate_riaf(
    n_args: int,
    n_uncertain: int = 0,
    attack_prob: float = 0.0,
    uncertain_attack_prob: float = 0.0,
    sym_prob: float = 0.0,
    seed: int = 0,
) -> RichIAF:
    """Sample a RIAF over ``a0 .. a{n-1}``.

    Each ordered pair (self-pairs included) goes to R with probability
    ``attack_prob``, otherwise to R? with ``uncertain_attack_prob``; each
    unordered pair untouched in both directions then becomes an uncertain
    conflict with ``sym_prob``.
    """
    if not 0 <= n_uncertain <= n_args:
        raise RIAFError("need 0 <= uncertain args <= args")
    for name, p in (
        ("attack", attack_prob),
        ("uncertain attack", uncertain_attack_prob),
        ("sym", sym_prob),
    ):
        if not 0.0 <= p <= 1.0:
            raise RIAFError(f"{name} probability must lie in [0, 1]")
    rng = random.Random(seed)
    names = [f"a{i}" for i in range(n_args)]
    uncertain = set(rng.sample(names, n_uncertain))
    certain_att, uncertain_att, conflicts = set(), set(), set()
    for a in names:
        for b in names:
            if rng.random() < attack_prob:
                certain_att.add((a, b))
            elif rng.random() < uncertain_attack_prob:
                uncertain_att.add((a, b))
    used = certain_att | uncertain_att
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            if (a, b) in used or (b, a) in used:
                continue
            if rng.random() < sym_prob:
                conflicts.add((a, b))
    return RichIAF(set(names) - uncertain, uncertain, certain_att, uncertain_att, conflicts)


def generate_bounded(
    rng: random.Random,
    n_args: int,
    n_uncertain_args: int = 0,
    n_uncertain_attacks: int = 0,
    n_sym: int = 0,
    attack_prob: float = 0.25,
) -> RichIAF:
    """Sample a RIAF with exact counts of uncertain elements.

    Counts are capped by what the argument set can hold.
    """
    names = [f"a{i}" for i in range(n_args)]
    uncertain = set(rng.sample(names, min(n_uncertain_args, n_args)))
    ordered = [(a, b) for a in names for b in names]
    certain_att = {p for p in ordered if rng.random() < attack_prob}
    free = [p for p in ordered if p not in certain_att]
    uncertain_att = set(rng.sample(free, min(n_uncertain_attacks, len(free))))
    used = certain_att | uncertain_att
    open_pairs = [
        (a, b)
        for i, a in enumerate(names)
        for b in names[i + 1 :]
        if (a, b) not in used and (b, a) not in used
    ]
    conflicts = set(rng.sample(open_pairs, min(n_sym, len(open_pairs))))
    return RichIAF(set(names) - uncertain, uncertain, certain_att, uncertain_att, conflicts)
