from pathlib import Path

import pytest
from hypothesis import strategies as st

from monoring.cli import parse_ideal
from monoring.homology import GF2, RATIONALS
from monoring.monomials import normalize_generators

FIXTURES = Path(__file__).parent / "fixtures"
CORPUS_FILES = sorted((FIXTURES / "corpus").glob("*.ideal"))
FIELDS = [RATIONALS, GF2]


def load(path):
    return parse_ideal(Path(path).read_text())


def gens(text, t=None):
    """Build a generator set from a compact string like ``"xy yz zx"``.

    Letters map to variables in alphabetical order of ``"xyzwuv"`` ; a digit
    after a letter is its exponent, so ``"x2 xy"`` is {x^2, xy}.
    """
    letters = "xyzwuv"
    raw = []
    width = t
    for word in text.split():
        a = [0] * 6
        i = 0
        while i < len(word):
            v = letters.index(word[i])
            e = 1
            if i + 1 < len(word) and word[i + 1].isdigit():
                e = int(word[i + 1])
                i += 1
            a[v] += e
            i += 1
        raw.append(a)
    if width is None:
        width = max(max((j for j in range(6) if a[j]), default=0) + 1 for a in raw)
    return normalize_generators([tuple(a[:width]) for a in raw], t=width)


@pytest.fixture(scope="session")
def corpus():
    return {p.stem: load(p) for p in CORPUS_FILES}


def corpus_params():
    return [pytest.param(p, id=p.stem) for p in CORPUS_FILES]


def ideals(t=4, max_n=5, top=2):
    """Hypothesis strategy for generator sets with exponents up to ``top``."""
    mono = st.lists(st.integers(0, top), min_size=t, max_size=t).map(tuple).filter(lambda a: sum(a) >= 2)
    return st.lists(mono, min_size=1, max_size=max_n).map(lambda raw: normalize_generators(raw, t=t))


def pytest_terminal_summary(terminalreporter):
    import sys

    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance.summary_lines():
        terminalreporter.write_line(line)
