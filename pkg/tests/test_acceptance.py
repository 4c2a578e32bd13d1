"""The eight acceptance criteria, one test each.

Every test records a pass/fail line that is printed in the terminal
summary.  Run alone with ``pytest tests/test_acceptance.py -v``.
"""
import random
import time
from functools import lru_cache

from differential import check_formula
from closure_checks import check_formula as check_closure
from ltlbuchi.emit import emit
from ltlbuchi.families import family
from ltlbuchi.formula import Always, Eventually, Next, Or, Until, atom, classify, negate, subformulae
from ltlbuchi.oracle import ba_accepts, evaluate, parse_lasso, sample_lassos, tgba_accepts
from ltlbuchi.pipeline import PipelineConfig, translate
from ltlbuchi.randgen import GenConfig, gen_many
from ltlbuchi.vwaa import build_vwaa, simplify_vwaa
from validators import check_hoa, check_never_claim


@lru_cache(maxsize=None)
def random_corpus():
    """500 formulae with the default operator weights, size 5..12 over 3 props."""
    return tuple(gen_many(GenConfig(size=(5, 12), props=3, seed=20240501), 500))


def full_corpus():
    fs = random_corpus()
    return fs + tuple(negate(f) for f in fs)


def _vwaa_table(aut):
    return {q: {(lab.bits, o) for lab, o in aut.trans[q]} for q in aut.states}


def _tgba_table(g):
    return {g.state_name(s): {(lab.guard(), g.state_name(t), g.marks_name(m))
                              for lab, t, m in g.trans[s]} for s in g.states}


def test_criterion_1_vwaa_goldens(criterion):
    with criterion(1, "VWAA goldens for (GF a) U b and X(a || b)"):
        a, b = atom("a"), atom("b")
        gfa, fa = Always(Eventually(a)), Eventually(a)
        phi = Until(gfa, b)
        aut = simplify_vwaa(build_vwaa(phi, "improved"), "general")
        A, B = aut.space.var("a"), aut.space.var("b")
        e = frozenset
        assert _vwaa_table(aut) == {
            phi: {(B.bits, e()), ((~B).bits, e({phi, gfa}))},
            gfa: {(A.bits, e({gfa})), ((~A).bits, e({gfa, fa}))},
            fa: {(A.bits, e()), ((~A).bits, e({fa}))},
        }, "(GF a) U b mismatch"
        x = Next(Or(a, b))
        aut2 = simplify_vwaa(build_vwaa(x, "improved"), "general")
        sp = aut2.space
        assert _vwaa_table(aut2) == {
            x: {(sp.top.bits, e({Or(a, b)}))},
            Or(a, b): {((sp.var("a") | sp.var("b")).bits, e())},
        }, "X(a || b) mismatch"


def test_criterion_2_tgba_golden(criterion):
    with criterion(2, "TGBA golden for GF a && F b") as c:
        g = translate("[]<>a && <>b", PipelineConfig(vwaa_simplify="basic")).tgba
        assert _tgba_table(g) == {
            "{1,2}": {("1", "{1,2}", "{}"), ("b", "{1}", "{2,3}")},
            "{1}": {("a", "{1}", "{2,3}"), ("1", "{1}", "{2}")},
        }
        c.detail = "2 states, marks as drawn"


def test_criterion_3_soundness_regression(criterion):
    with criterion(3, "suspension counterexample rejected") as c:
        phi = "((X((p1 V p2) || (!p1 U p3))) U p1) && []<>q"
        w = parse_lasso("|{p1 p2}{p3}")
        t = translate(phi)
        assert not evaluate(t.source, w)
        assert not tgba_accepts(t.tgba, w), "TGBA accepts the counterexample"
        assert not ba_accepts(t.ba, w), "BA accepts the counterexample"
        c.detail = "TGBA and BA reject"


def test_criterion_4_master_differential(criterion):
    with criterion(4, "master differential suite") as c:
        t0 = time.perf_counter()
        fs = full_corpus()
        failures = [(f, p) for f in fs for p in [check_formula(f)] if p]
        elapsed = time.perf_counter() - t0
        assert not failures, f"{len(failures)} failures, first: {failures[0]}"
        assert elapsed < 300, f"took {elapsed:.0f}s"
        c.detail = f"{len(fs)} formulae, 100% pass, {elapsed:.0f}s"


ABLATION = [("none", (False, False, False, False)), ("1", (True, False, False, False)),
            ("1+2", (True, True, False, False)), ("1+2+3", (True, True, True, False)),
            ("1+2+3+4", (True, True, True, True))]


def test_criterion_5_ablation_trend(criterion):
    with criterion(5, "ablation trend") as c:
        rows = {}
        for name, groups in ABLATION:
            cfg = PipelineConfig.groups(*groups)
            s = t = d = 0
            for f in full_corpus():
                st = translate(f, cfg).stats
                s, t, d = s + st.states, t + st.transitions, d + st.deterministic
            rows[name] = (s, t, d)
        csv = ["groups,states,transitions,deterministic"]
        csv += [f"{k},{s},{t},{d}" for k, (s, t, d) in rows.items()]
        print("\n".join(csv))
        full, off = rows["1+2+3+4"], rows["none"]
        c.detail = "; ".join(csv[1:])
        assert full[0] <= off[0], "more states with all modifications"
        assert full[2] >= off[2], "fewer deterministic automata with all modifications"


def test_criterion_6_parametric_scaling(criterion):
    with criterion(6, "parametric scaling") as c:
        notes, errors = [], []
        worst = 0.0
        for n in range(1, 9):
            t0 = time.perf_counter()
            translate(family("theta", n))
            worst = max(worst, time.perf_counter() - t0)
        notes.append(f"theta_8 worst {worst:.2f}s")
        if worst >= 60:
            errors.append(f"theta_n took {worst:.0f}s")
        counts = {}
        for n in range(1, 7):
            f = family("psi", n)
            b = translate(f).ba
            counts[n] = len(b.states)
            for w in sample_lassos(sorted(f.aps), random.Random(n), count=100):
                assert ba_accepts(b, w) == evaluate(f, w), f"psi_{n} wrong on {w}"
        notes.append("psi states " + " ".join(f"{n}:{k}" for n, k in counts.items()))
        if any(k != n for n, k in counts.items()):
            errors.append("psi_n state counts differ from n: "
                          + ", ".join(f"n={n} has {k}" for n, k in counts.items() if k != n))
        s_counts = [len(translate(family("s", n)).ba.states) for n in range(1, 11)]
        if any(k != 1 for k in s_counts):
            errors.append(f"S(n) state counts {s_counts}")
        notes.append("S(n) single state" if not any(k != 1 for k in s_counts) else "")
        c.detail = "; ".join(x for x in notes if x)
        assert not errors, "; ".join(errors)


def test_criterion_7_classifier_closure_properties(criterion):
    with criterion(7, "closure, prefix invariance and X-invariance of classified formulae") as c:
        rng = random.Random(77)
        subs = {g for f in full_corpus() for g in subformulae(f)}
        classified = sorted((g for g in subs if any((classify(g).alternating,
                             classify(g).pure_eventuality, classify(g).pure_universality))),
                            key=lambda g: g.key)
        bad = [(g, p) for g in classified for p in [check_closure(g, rng, lassos=40)] if p]
        assert not bad, f"{len(bad)} violations, first: {bad[0]}"
        c.detail = f"{len(classified)} classified formulae"


def test_criterion_8_emitter_validity(criterion):
    with criterion(8, "never claim and HOA validity") as c:
        n = 0
        for f in full_corpus():
            t = translate(f)
            text = str(f)
            errs = check_never_claim(emit(t.ba, "never", text))
            assert not errs, f"never claim for {f}: {errs}"
            for obj in (t.ba, t.tgba):
                errs = check_hoa(emit(obj, "hoa", text))
                assert not errs, f"HOA for {f}: {errs}"
            n += 1
        c.detail = f"{n} formulae"
