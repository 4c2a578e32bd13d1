import random

from hypothesis import given

from conftest import corpus, formulas
from closure_checks import check_formula
from ltlbuchi.formula import classify, subformulae, to_pnf


def test_classified_corpus_subformulae():
    rng = random.Random(7)
    seen = set()
    checked = 0
    for f in corpus():
        for g in subformulae(f):
            if g in seen:
                continue
            seen.add(g)
            assert check_formula(g, rng, lassos=20) == [], g
            checked += classify(g).alternating
    assert checked >= 20


@given(formulas())
def test_closure_properties(f):
    assert check_formula(to_pnf(f), random.Random(0), lassos=30) == []
