import random
from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ltlbuchi.formula import (Always, And, Eventually, Next, Not, Or, Release,
                              Until, atom, ff, negate, tt)
from ltlbuchi.oracle import sample_lassos
from ltlbuchi.randgen import GenConfig, gen_many

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

APS = ("a", "b", "c")


def formulas(aps=APS, max_leaves=6):
    """Arbitrary (not necessarily PNF) formulae over ``aps``."""
    leaves = st.one_of(st.sampled_from([atom(p) for p in aps]),
                       st.sampled_from([tt(), ff()]))

    def extend(sub):
        un = st.tuples(st.sampled_from([Not, Next, Eventually, Always]), sub)
        bi = st.tuples(st.sampled_from([And, Or, Until, Release]), sub, sub)
        return st.one_of(un.map(lambda t: t[0](t[1])),
                         bi.map(lambda t: t[0](t[1], t[2])))

    return st.recursive(leaves, extend, max_leaves=max_leaves)


@lru_cache(maxsize=None)
def corpus(count=120, lo=3, hi=10, props=3, seed=2024):
    """Random NNF formulae plus their negations."""
    fs = gen_many(GenConfig(size=(lo, hi), props=props, seed=seed), count)
    return tuple(fs) + tuple(negate(f) for f in fs)


@lru_cache(maxsize=None)
def lassos_for(aps: tuple, seed=0, count=60):
    return tuple(sample_lassos(list(aps), random.Random(seed), count=count))


@pytest.fixture
def rng():
    return random.Random(1234)


# -- acceptance report ----------------------------------------------------------------

_RESULTS = pytest.StashKey[list]()


class _Criterion:
    def __init__(self, sink, number, title):
        self.sink, self.number, self.title = sink, number, title
        self.detail = ""

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        status = "PASS" if exc_type is None else "FAIL"
        why = self.detail if exc_type is None else (str(exc).splitlines() or [""])[0]
        self.sink.append(f"criterion {self.number} {status}: {self.title}"
                         + (f" ({why})" if why else ""))
        return False


@pytest.fixture
def criterion(request):
    sink = request.config.stash.setdefault(_RESULTS, [])
    return lambda number, title: _Criterion(sink, number, title)


def pytest_terminal_summary(terminalreporter):
    lines = terminalreporter.config.stash.get(_RESULTS, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
