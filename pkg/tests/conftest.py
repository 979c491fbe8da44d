from pathlib import Path

import pytest

from riaf import ArgumentationFramework, RichIAF, lift_af, read_riaf

DATA = Path(__file__).parent / "data"

BASE_ATTACKS = {("b", "a"), ("c", "a"), ("c", "d"), ("d", "b"), ("d", "c"), ("e", "a")}


def base_af() -> ArgumentationFramework:
    return ArgumentationFramework(set("abcde"), BASE_ATTACKS)


def iaf_riaf() -> RichIAF:
    return RichIAF(
        set("abcde"),
        {"f"},
        {("b", "a"), ("c", "a"), ("d", "b"), ("d", "c")},
        {("e", "a"), ("f", "d")},
    )


def rich_riaf() -> RichIAF:
    return RichIAF(
        set("abcde"),
        {"f"},
        {("c", "a"), ("d", "b"), ("d", "c")},
        {("e", "a"), ("f", "d")},
        {("a", "b")},
    )


def sympair_riaf() -> RichIAF:
    return RichIAF({"a", "b"}, set(), set(), set(), {("a", "b")})


@pytest.fixture
def base():
    return base_af()


@pytest.fixture
def base_lifted():
    return lift_af(base_af())


@pytest.fixture
def iaf():
    return iaf_riaf()


@pytest.fixture
def rich():
    return rich_riaf()


@pytest.fixture
def sympair():
    return sympair_riaf()


@pytest.fixture
def data_dir() -> Path:
    return DATA


def af(args, attacks=()) -> ArgumentationFramework:
    return ArgumentationFramework(frozenset(args), frozenset(attacks))


_CRITERIA: dict[str, str] = {}


@pytest.fixture
def report():
    """Record one PASS/FAIL line per acceptance criterion."""

    def record(label: str, ok: bool, detail: str = "") -> bool:
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
        _CRITERIA[label] = line
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for label in sorted(_CRITERIA):
            terminalreporter.write_line(_CRITERIA[label])
