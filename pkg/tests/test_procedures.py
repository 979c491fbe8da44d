import random
import sys
from pathlib import Path

import pytest

from riaf import RichIAF, lift_af
from riaf.completions import enumerate_completions, is_completion
from riaf.engine import Engine, SAT_ROUTES, has_sat_path, solve
from riaf.generate import generate_bounded
from riaf.reasoning import ProblemKind, QueryError
from riaf.sat import ExternalBackend, cegar_nca, cegar_psa_stb, solve_nsa_stb_sat, solve_pca_sat
from riaf.semantics import Semantics, is_extension, skeptically_accepted

from conftest import base_af
from oracles import naive_problem, riaf_completions_by_definition

SCRIPT = Path(__file__).parent / "pysat_solver.py"
SAT_SEMS = (Semantics.AD, Semantics.CO, Semantics.PR, Semantics.STB)


def oracle(problem, riaf, a, sem):
    comps = riaf_completions_by_definition(
        riaf.certain_args, riaf.uncertain_args, riaf.certain_attacks,
        riaf.uncertain_attacks, riaf.uncertain_conflicts,
    )
    return naive_problem(problem.value, sorted(comps, key=repr), a, sem.value)


def test_pca_examples(iaf, base_lifted):
    v = solve_pca_sat(iaf, "a", Semantics.STB)
    assert v.answer and is_completion(iaf, v.witness)
    assert "a" in v.extension_witness and is_extension(v.witness, v.extension_witness, Semantics.STB)
    assert not solve_pca_sat(base_lifted, "a", Semantics.PR).answer
    assert solve_pca_sat(RichIAF({"a"}), "a", Semantics.AD).answer


@pytest.mark.parametrize("sem", [Semantics.CO, Semantics.PR])
def test_pca_lifts_admissible_certificate(base_lifted, sem):
    v = solve_pca_sat(base_lifted, "b", sem)
    assert v.answer and is_extension(v.witness, v.extension_witness, sem)
    assert "b" in v.extension_witness


def test_nsa_stb_examples(base_lifted):
    assert solve_nsa_stb_sat(base_lifted, "e").answer
    v = solve_nsa_stb_sat(base_lifted, "d")
    assert not v.answer and v.extension_witness == frozenset("bce")
    r = RichIAF({"a", "b"}, set(), {("b", "a")})
    assert not solve_nsa_stb_sat(r, "a").answer


def test_psa_stb_examples(base_lifted, sympair):
    v = cegar_psa_stb(base_lifted, "e")
    assert v.answer and v.iterations == 1
    assert not cegar_psa_stb(base_lifted, "d").answer
    v = cegar_psa_stb(sympair, "a")
    assert v.answer and v.witness.attacks == {("a", "b")}


def test_psa_stb_vacuous_completion():
    # with b present, {b} is the only stable extension and a is out; without
    # b the self-attacking c leaves no stable extension, so a is accepted
    # vacuously and only the second phase can find that completion
    r = RichIAF({"a", "c"}, {"b"}, {("c", "c"), ("b", "a"), ("b", "c")})
    v = cegar_psa_stb(r, "a")
    assert v.answer and oracle(ProblemKind.PSA, r, "a", Semantics.STB)
    assert v.witness.arguments == frozenset("ac")
    assert skeptically_accepted(v.witness, "a", Semantics.STB)


def test_nca_examples(iaf, base_lifted):
    v = cegar_nca(iaf, "d", Semantics.CO)
    assert not v.answer
    assert v.witness.arguments == frozenset("abcdef") and ("f", "d") in v.witness.attacks
    assert cegar_nca(base_lifted, "e", Semantics.STB).answer
    r = RichIAF({"a", "b"}, {"c"}, set(), {("c", "b")}, {("a", "b")})
    v = cegar_nca(r, "a", Semantics.PR)
    assert not v.answer and v.witness.attacks == {("b", "a")}
    r = RichIAF({"a", "b"}, {"c"}, set(), {("c", "b")})
    v = cegar_nca(r, "a", Semantics.PR)
    assert v.answer and v.iterations <= len(enumerate_completions(r))


def test_unsupported_semantics(iaf):
    with pytest.raises(QueryError):
        solve_pca_sat(iaf, "a", Semantics.GR)
    with pytest.raises(QueryError):
        cegar_nca(iaf, "a", Semantics.CF)


def test_uncertain_query_rejected(iaf):
    with pytest.raises(QueryError):
        solve_pca_sat(iaf, "f", Semantics.STB)


def random_instances(seed, count, max_args=6):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_args)
        budget = rng.randint(0, 4)
        ua = rng.randint(0, min(budget, n))
        us = rng.randint(0, budget - ua)
        yield generate_bounded(rng, n, ua, budget - ua - us, us, attack_prob=rng.choice((0.15, 0.3)))


def test_routes_agree_with_oracle():
    for riaf in random_instances(51, 40):
        n_comps = len(enumerate_completions(riaf))
        for (problem, sem), route in SAT_ROUTES.items():
            for a in sorted(riaf.certain_args):
                v = route(riaf, a)
                assert v.answer == oracle(problem, riaf, a, sem), (problem, sem, a, riaf)
                assert v.iterations <= n_comps + 1 if problem is ProblemKind.PSA else v.iterations <= n_comps
                if v.witness is not None:
                    assert is_completion(riaf, v.witness)
                if v.answer and problem is ProblemKind.PCA:
                    assert a in v.extension_witness
                    assert is_extension(v.witness, v.extension_witness, sem)


def test_psa_iterations_bounded_by_completions():
    for riaf in random_instances(52, 40):
        n_comps = len(enumerate_completions(riaf))
        for a in sorted(riaf.certain_args):
            assert cegar_psa_stb(riaf, a).iterations <= n_comps


def test_external_backend_agrees():
    backend = ExternalBackend([sys.executable, str(SCRIPT)])
    for riaf in random_instances(53, 3, max_args=4):
        for (problem, sem), route in SAT_ROUTES.items():
            a = min(riaf.certain_args, default=None)
            if a is None:
                continue
            assert route(riaf, a, b=backend).answer == oracle(problem, riaf, a, sem)


def test_engine_dispatch(iaf):
    assert has_sat_path(ProblemKind.PCA, Semantics.PR)
    assert not has_sat_path(ProblemKind.PSA, Semantics.PR)
    assert not has_sat_path(ProblemKind.INC_PV, Semantics.STB)
    with pytest.raises(QueryError):
        solve(ProblemKind.PCA, iaf, "a", Semantics.GR, engine=Engine.SAT)
    for engine in Engine:
        assert solve(ProblemKind.PCA, iaf, "a", Semantics.STB, engine=engine).answer
    assert solve(ProblemKind.INC_PV, iaf, frozenset("def"), Semantics.STB).answer
    v = solve(ProblemKind.PCA, iaf, "f", Semantics.STB, allow_uncertain=True)
    assert v.answer == oracle(ProblemKind.PCA, iaf, "f", Semantics.STB)
