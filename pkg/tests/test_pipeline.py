import itertools
import random

import pytest

from conftest import corpus
from differential import check_formula
from ltlbuchi.emit import emit
from ltlbuchi.families import FAMILIES, family
from ltlbuchi.oracle import ba_accepts, evaluate, sample_lassos
from ltlbuchi.pipeline import InvariantViolation, PipelineConfig, translate

GROUPS = list(itertools.product([False, True], repeat=4))


def test_defaults_are_full_pipeline():
    assert PipelineConfig() == PipelineConfig.groups(True, True, True, True)


@pytest.mark.parametrize("idx", range(0, 240, 20))
def test_master_property(idx):
    for f in corpus()[idx: idx + 20]:
        assert check_formula(f) == [], f


@pytest.mark.parametrize("groups", GROUPS, ids=lambda g: "".join("1" if x else "0" for x in g))
def test_flag_matrix(groups):
    cfg = PipelineConfig.groups(*groups)
    rng = random.Random(sum(groups))
    for f in corpus()[::6]:
        b = translate(f, cfg).ba
        for w in sample_lassos(sorted(f.aps) or ["a"], rng, count=40):
            assert ba_accepts(b, w) == evaluate(f, w), (f, w)


@pytest.mark.parametrize("cfg", [
    PipelineConfig(reduce=False), PipelineConfig(temporal_progress=False),
    PipelineConfig(vwaa_simplify="off"), PipelineConfig(mode="original", suspend=False),
])
def test_other_switches(cfg):
    for f in corpus()[1::8]:
        assert check_formula(f, cfg) == [], f


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_families_small(name):
    for n in (1, 2, 3):
        assert check_formula(family(name, n)) == [], (name, n)


def test_reproducible():
    for f in corpus()[:30]:
        assert emit(translate(f).ba, "hoa") == emit(translate(f).ba, "hoa")


def test_stage_stops_early():
    t = translate("a U b", stage="vwaa")
    assert t.tgba is None and t.ba is None
    with pytest.raises(ValueError):
        translate("a", stage="nope")


def test_invariant_violation_is_raised(monkeypatch):
    import ltlbuchi.pipeline as p

    def drop_acceptance(g):
        g.acceptance = ()  # marks now refer to undeclared sets
        return g
    monkeypatch.setattr(p, "simplify_tgba", drop_acceptance)
    with pytest.raises(InvariantViolation):
        translate("<>a")
