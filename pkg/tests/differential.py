"""Translation against the oracle: the master differential property."""
import random

from ltlbuchi.formula import negate
from ltlbuchi.oracle import ba_accepts, evaluate, product_empty, sample_lassos, tgba_accepts
from ltlbuchi.pipeline import PipelineConfig, translate


def check_formula(f, cfg: PipelineConfig | None = None, seed: int = 0) -> list[str]:
    """Compare eval, TGBA and BA on the sampling budget, and BA(f) with BA(!f)."""
    cfg = cfg or PipelineConfig()
    pos = translate(f, cfg)
    neg = translate(negate(f), cfg)
    problems = []
    aps = sorted(f.aps) or ["a"]
    for w in sample_lassos(aps, random.Random(seed)):
        truth = evaluate(f, w)
        g, b = tgba_accepts(pos.tgba, w), ba_accepts(pos.ba, w)
        if not truth == g == b:
            problems.append(f"{w}: eval={truth} tgba={g} ba={b}")
        if ba_accepts(neg.ba, w) == b:
            problems.append(f"{w}: BA(f) and BA(!f) agree")
        if len(problems) > 3:
            break
    if not product_empty(pos.ba, neg.ba):
        problems.append("BA(f) and BA(!f) intersect")
    return problems
