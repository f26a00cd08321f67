import random
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from knotrecon.braids import BraidWord, braid_closure, parse_braid_word
from knotrecon.diagram import parse_pd

# closures and sympy oracles are slow on the first call; timing is not under test
settings.register_profile("repo", deadline=None)
settings.load_profile("repo")

FIXTURES = Path(__file__).parent / "fixtures"

# PASS/FAIL lines collected by test_acceptance, echoed in the terminal summary
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda ln: int(ln.split()[1])):
            terminalreporter.write_line(line)


def load_pd(name):
    return parse_pd((FIXTURES / name).read_text())


def random_full_braid(rng, max_strands=5, max_len=12, positive=False):
    """Random braid in which every generator column occurs."""
    n = rng.randint(2, max_strands)
    length = rng.randint(n - 1, max(n - 1, max_len))
    letters = list(range(1, n)) + [rng.randint(1, n - 1) for _ in range(length - (n - 1))]
    rng.shuffle(letters)
    if not positive:
        letters = [v * rng.choice((-1, 1)) for v in letters]
    return BraidWord(n, tuple(letters))


@st.composite
def full_braids(draw, max_strands=5, max_len=12, positive=False):
    n = draw(st.integers(2, max_strands))
    extra = draw(st.lists(st.integers(1, n - 1), max_size=max_len - (n - 1)))
    letters = draw(st.permutations(list(range(1, n)) + extra))
    if not positive:
        signs = draw(st.lists(st.sampled_from((-1, 1)), min_size=len(letters),
                              max_size=len(letters)))
        letters = [v * s for v, s in zip(letters, signs)]
    return BraidWord(n, tuple(letters))


@st.composite
def braids(draw, max_strands=5, max_len=12):
    n = draw(st.integers(1, max_strands))
    if n == 1:
        return BraidWord(1, ())
    letters = draw(st.lists(st.integers(1, n - 1).flatmap(
        lambda g: st.sampled_from((g, -g))), max_size=max_len))
    return BraidWord(n, tuple(letters))


def permutation_cycles(b):
    """Independent component count: cycles of the braid's strand permutation."""
    perm = list(range(b.strands))
    for v in b.letters:
        i = abs(v) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    seen, cycles = set(), 0
    for p in range(b.strands):
        if p in seen:
            continue
        cycles += 1
        while p not in seen:
            seen.add(p)
            p = perm[p]
    return cycles


@pytest.fixture
def trefoil():
    return braid_closure(parse_braid_word("2 | 1 1 1"))


@pytest.fixture
def rng():
    return random.Random(20261016)
