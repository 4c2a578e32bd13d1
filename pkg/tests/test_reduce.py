import pytest
from hypothesis import given

from conftest import corpus, formulas
from ltlbuchi.formula import (Always, And, Eventually, Next, Or, Until, atom, to_pnf)
from ltlbuchi.oracle import enumerate_lassos, evaluate
from ltlbuchi.parser import parse
from ltlbuchi.reduce import BASE_RULES, Reducer, RuleSet, implies_syntactic, reduce

a, b, c = (atom(x) for x in "abc")
GFa = Always(Eventually(a))


def test_implication_g_to_x():
    assert implies_syntactic(Always(a), Next(a))


def test_implication_x_to_f():
    assert implies_syntactic(Next(a), Eventually(a))


def test_independent_atoms_do_not_imply():
    assert not implies_syntactic(a, b)


@pytest.mark.parametrize("f,expected", [
    (Eventually(GFa), GFa),
    (Next(GFa), GFa),
    (Or(Next(a), Next(b)), Next(Or(a, b))),
    (Until(And(a, b), Always(Eventually(c))), Always(Eventually(c))),
])
def test_alternating_rules(f, expected):
    assert reduce(f) == expected


def test_base_only_keeps_alternating_shape():
    assert reduce(Next(GFa), RuleSet(BASE_RULES)) != GFa


def test_rules_can_be_switched_off():
    f = Eventually(GFa)
    assert reduce(f, RuleSet.none()) == f


def test_requires_pnf():
    with pytest.raises(ValueError):
        reduce(parse("!(a U b)"))


def test_fixpoint():
    for f in corpus():
        r = reduce(f)
        assert reduce(r) == r


def _lassos():
    return list(enumerate_lassos(["a", "b", "c"], 1, 2))


LASSOS = None


def _check_same(f, g):
    global LASSOS
    if LASSOS is None:
        LASSOS = _lassos()
    for w in LASSOS:
        assert evaluate(f, w) == evaluate(g, w), (f, g, w)


@pytest.mark.parametrize("idx", range(0, 240, 8))
def test_reduce_preserves_semantics_on_corpus(idx):
    for f in corpus()[idx: idx + 8]:
        _check_same(f, reduce(f))


@given(formulas())
def test_reduce_preserves_semantics(f):
    f = to_pnf(f)
    _check_same(f, reduce(f))


@given(formulas())
def test_reduce_never_grows(f):
    f = to_pnf(f)
    assert reduce(f).size <= f.size


@given(formulas(max_leaves=4), formulas(max_leaves=4))
def test_implies_syntactic_is_sound(f, g):
    f, g = to_pnf(f), to_pnf(g)
    if implies_syntactic(f, g):
        for w in enumerate_lassos(["a", "b", "c"], 1, 2):
            assert not evaluate(f, w) or evaluate(g, w), (f, g, w)


def test_reducer_terminates_within_pass_bound(caplog):
    r = Reducer(RuleSet())
    for f in corpus():
        r(f)
    assert "stopped after" not in caplog.text
