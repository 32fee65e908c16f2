import pytest

from rauzy import Substitution, build_language

FIB = Substitution(("a", "b"), {"a": "ab", "b": "a"})
TRIB = Substitution(("a", "b", "c"), {"a": "ab", "b": "ac", "c": "a"})
THUE_MORSE = Substitution(("a", "b"), {"a": "ab", "b": "ba"})
PAPER_EXAMPLE = Substitution(tuple("abcd"), {"a": "ab", "b": "cda", "c": "cd", "d": "abc"})

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def fib():
    return build_language(FIB, 40)


@pytest.fixture(scope="session")
def trib():
    return build_language(TRIB, 40)


@pytest.fixture(scope="session")
def thue_morse():
    return build_language(THUE_MORSE, 40)


@pytest.fixture(scope="session")
def paper_example():
    return build_language(PAPER_EXAMPLE, 40)


@pytest.fixture(scope="session")
def periodic_ab():
    return build_language("ab", 40)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
