import random

import pytest

from riaf import ProblemKind, QueryError, RichIAF, Semantics, lift_af
from riaf.completions import enumerate_completions, is_completion
from riaf.generate import generate_bounded
from riaf.reasoning import decide, inc_nv, inc_nv_star, inc_pv, inc_pv_star, nca, nsa, pca, psa
from riaf.semantics import is_extension

from conftest import base_af
from oracles import naive_problem

S = Semantics
P = ProblemKind
ACCEPT_SEMS = [S.AD, S.CO, S.GR, S.PR, S.STB]


def test_inc_pv_iaf_stable(iaf):
    v = inc_pv(iaf, {"d", "e", "f"}, S.STB)
    assert v.answer
    assert is_completion(iaf, v.witness)
    assert is_extension(v.witness, v.extension_witness, S.STB)
    assert v.extension_witness == {"d", "e", "f"} & v.witness.arguments


def test_inc_pv_plain_af():
    assert inc_pv(lift_af(base_af()), {"d", "e"}, S.STB).answer


def test_empty_set_conflict_free_everywhere(rich):
    assert inc_pv(rich, set(), S.CF).answer
    assert inc_nv(rich, set(), S.CF).answer


def test_inc_nv_grounded(iaf):
    assert inc_nv(lift_af(base_af()), {"e"}, S.GR).answer
    v = inc_nv(iaf, {"e"}, S.GR)
    assert not v.answer
    # first failing completion in enumeration order: no f, no (e,a)
    assert v.witness == enumerate_completions(iaf)[0]


def test_star_variants_iaf(iaf):
    pv = inc_pv_star(iaf, {"d", "e", "f"}, S.STB)
    assert pv.answer and "f" in pv.witness.arguments and ("f", "d") not in pv.witness.attacks
    nv = inc_nv_star(iaf, {"d", "e", "f"}, S.STB)
    assert not nv.answer and "f" not in nv.witness.arguments


@pytest.mark.parametrize("sem", [S.AD, S.STB, S.GR, S.CO])
def test_star_linked_pair_never_extension(rich, sem):
    assert not inc_pv_star(rich, {"a", "b"}, sem).answer


def test_star_equals_verification_without_uncertainty(base):
    r = lift_af(base)
    for sem in S:
        for s in [set(), {"e"}, {"d", "e"}, {"b", "c", "e"}, {"a"}]:
            expected = is_extension(base, s, sem)
            assert inc_pv_star(r, s, sem).answer == expected
            assert inc_nv_star(r, s, sem).answer == expected


def test_acceptance_examples(iaf):
    assert nsa(iaf, "e", S.GR).answer
    v = nca(iaf, "d", S.CO)
    assert not v.answer
    assert "f" in v.witness.arguments and ("f", "d") in v.witness.attacks
    for a in sorted(iaf.certain_args):
        assert not psa(iaf, a, S.AD).answer
        assert not nsa(iaf, a, S.AD).answer


def test_pca_witness_carries_extension(iaf):
    v = pca(iaf, "a", S.STB)
    assert v.answer and "a" in v.extension_witness
    assert is_extension(v.witness, v.extension_witness, S.STB)


def test_query_argument_checks(iaf):
    with pytest.raises(QueryError, match="uncertain"):
        pca(iaf, "f", S.CO)
    with pytest.raises(QueryError, match="undeclared"):
        pca(iaf, "zz", S.CO)
    with pytest.raises(QueryError):
        inc_pv(iaf, {"zz"}, S.CO)
    with pytest.raises(QueryError):
        pca(iaf, "a", S.CF)


def test_relaxed_uncertain_query(iaf):
    # f is unattacked whenever present, absent otherwise
    assert pca(iaf, "f", S.GR, allow_uncertain=True).answer
    assert not nca(iaf, "f", S.GR, allow_uncertain=True).answer


def test_decide_checks_query_kind(iaf):
    with pytest.raises(QueryError):
        decide(P.PCA, iaf, {"a"}, S.CO)
    with pytest.raises(QueryError):
        decide(P.INC_PV, iaf, "a", S.CO)


def random_instances(seed, count, max_args=6):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_args)
        yield rng, generate_bounded(rng, n, rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 1))


def test_oracle_matches_naive_definitions():
    for rng, r in random_instances(21, 40, max_args=5):
        comps = [(c.arguments, c.attacks) for c in enumerate_completions(r)]
        args = sorted(r.all_args)
        for sem in ACCEPT_SEMS:
            for a in sorted(r.certain_args):
                for problem in (P.PCA, P.NCA, P.PSA, P.NSA):
                    assert decide(problem, r, a, sem).answer == naive_problem(problem.value, comps, a, sem.value)
            for _ in range(3):
                s = frozenset(x for x in args if rng.random() < 0.4)
                for problem in (P.INC_PV, P.INC_NV, P.INC_PV_STAR, P.INC_NV_STAR):
                    assert decide(problem, r, s, sem).answer == naive_problem(problem.value, comps, s, sem.value)


def test_witnesses_are_completions():
    for rng, r in random_instances(22, 30):
        for sem in ACCEPT_SEMS:
            for a in sorted(r.certain_args):
                for problem in (P.PCA, P.NCA, P.PSA, P.NSA):
                    v = decide(problem, r, a, sem)
                    if v.witness is not None:
                        assert is_completion(r, v.witness)
                    if v.extension_witness is not None and problem is not P.PSA:
                        assert is_extension(v.witness, v.extension_witness, sem)


def test_problem_implications():
    for rng, r in random_instances(23, 40):
        args = sorted(r.all_args)
        for sem in ACCEPT_SEMS:
            for a in sorted(r.certain_args):
                assert not decide(P.NCA, r, a, sem) or decide(P.PCA, r, a, sem)
                assert not decide(P.NSA, r, a, sem) or decide(P.PSA, r, a, sem)
                if sem in (S.CO, S.GR, S.PR):
                    assert not decide(P.PSA, r, a, sem) or decide(P.PCA, r, a, sem)
            s = frozenset(x for x in args if rng.random() < 0.5)
            assert not decide(P.INC_NV, r, s, sem) or decide(P.INC_PV, r, s, sem)
            assert not decide(P.INC_NV_STAR, r, s, sem) or decide(P.INC_PV_STAR, r, s, sem)


def test_possible_equals_necessary_without_uncertainty():
    rng = random.Random(24)
    for _ in range(20):
        r = generate_bounded(rng, rng.randint(1, 6), 0, 0, 0)
        for sem in ACCEPT_SEMS:
            for a in sorted(r.certain_args):
                assert decide(P.PCA, r, a, sem).answer == decide(P.NCA, r, a, sem).answer
                assert decide(P.PSA, r, a, sem).answer == decide(P.NSA, r, a, sem).answer


def rename(r: RichIAF, mapping):
    m = lambda ps: {(mapping[a], mapping[b]) for a, b in ps}  # noqa: E731
    return RichIAF(
        {mapping[a] for a in r.certain_args},
        {mapping[a] for a in r.uncertain_args},
        m(r.certain_attacks),
        m(r.uncertain_attacks),
        m(r.uncertain_conflicts),
    )


def test_renaming_invariance():
    for rng, r in random_instances(25, 30):
        args = sorted(r.all_args)
        shuffled = args[:]
        rng.shuffle(shuffled)
        mapping = {a: "z" + b for a, b in zip(args, shuffled)}
        r2 = rename(r, mapping)
        for sem in ACCEPT_SEMS:
            for a in sorted(r.certain_args):
                for problem in (P.PCA, P.NCA, P.PSA, P.NSA):
                    assert decide(problem, r, a, sem).answer == decide(problem, r2, mapping[a], sem).answer
            s = frozenset(args[: len(args) // 2])
            s2 = frozenset(mapping[x] for x in s)
            for problem in (P.INC_PV, P.INC_NV, P.INC_PV_STAR, P.INC_NV_STAR):
                assert decide(problem, r, s, sem).answer == decide(problem, r2, s2, sem).answer
