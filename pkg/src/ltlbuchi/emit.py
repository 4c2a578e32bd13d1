"""Text output: SPIN never claims, HOA v1 and Graphviz DOT."""
from __future__ import annotations

from .ba import Ba
from .tgba import Tgba
from .vwaa import Vwaa

FORMATS = ("never", "hoa", "dot")


class UnsupportedOutput(ValueError):
    pass


def emit(obj, fmt: str, title: str = "") -> str:
    if fmt not in FORMATS:
        raise UnsupportedOutput(f"unknown format {fmt!r}")
    if fmt == "never":
        if not isinstance(obj, Ba):
            raise UnsupportedOutput("never claims can only be written for Büchi automata")
        return never_claim(obj, title)
    if fmt == "hoa":
        if isinstance(obj, Ba):
            return hoa_ba(obj, title)
        if isinstance(obj, Tgba):
            return hoa_tgba(obj, title)
        raise UnsupportedOutput("HOA output is not available for alternating automata")
    if isinstance(obj, Ba):
        return dot_ba(obj, title)
    if isinstance(obj, Tgba):
        return dot_tgba(obj, title)
    if isinstance(obj, Vwaa):
        return dot_vwaa(obj, title)
    raise UnsupportedOutput(f"cannot emit {type(obj).__name__}")


# -- never claim ---------------------------------------------------------------

def _is_accepting_sink(b: Ba, q: int) -> bool:
    ts = b.trans[q]
    return q in b.accepting and len(ts) == 1 and ts[0][1] == q and ts[0][0].is_top


def _never_names(b: Ba) -> dict[int, str]:
    names = {}
    init = b.initial[0]
    for q in b.states:
        acc = q in b.accepting
        if q == init:
            names[q] = "accept_init" if acc else "T0_init"
        elif _is_accepting_sink(b, q):
            names[q] = "accept_all"
        else:
            names[q] = f"accept_S{q}" if acc else f"T0_S{q}"
    return names


def never_claim(b: Ba, title: str = "") -> str:
    if len(b.initial) != 1:
        raise UnsupportedOutput("a never claim needs exactly one initial state")
    names = _never_names(b)
    init = b.initial[0]
    order = [init] + [q for q in b.states if q != init]
    lines = [f"never {{ /* {title} */"]
    for q in order:
        lines.append(f"{names[q]}:")
        ts = b.trans[q]
        if _is_accepting_sink(b, q):
            lines.append("\tskip")
        elif not ts:
            lines.append("\tfalse;")
        else:
            lines.append("\tif")
            for lab, t in ts:
                lines.append(f"\t:: ({lab.guard()}) -> goto {names[t]}")
            lines.append("\tfi;")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- HOA --------------------------------------------------------------------------

def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _hoa_header(space, n: int, starts, title: str) -> list[str]:
    out = ["HOA: v1"]
    if title:
        out.append(f"name: {_quote(title)}")
    out.append(f"States: {n}")
    for s in starts:
        out.append(f"Start: {s}")
    out.append(f"AP: {len(space.aps)}" + "".join(" " + _quote(p) for p in space.aps))
    return out


def hoa_ba(b: Ba, title: str = "") -> str:
    idx = {q: k for k, q in enumerate(b.states)}
    out = _hoa_header(b.space, len(b.states), [idx[q] for q in b.initial], title)
    out += ["acc-name: Buchi", "Acceptance: 1 Inf(0)",
            "properties: trans-labels explicit-labels state-acc", "--BODY--"]
    for q in b.states:
        out.append(f"State: {idx[q]}" + (" {0}" if q in b.accepting else ""))
        for lab, t in b.trans[q]:
            out.append(f"[{lab.guard('hoa')}] {idx[t]}")
    out.append("--END--")
    return "\n".join(out) + "\n"


def hoa_tgba(g: Tgba, title: str = "") -> str:
    idx = {s: k for k, s in enumerate(g.states)}
    acc = {f: k for k, f in enumerate(g.acceptance)}
    m = len(acc)
    out = _hoa_header(g.space, len(g.states), [idx[s] for s in g.initial], title)
    if m == 0:
        out += ["acc-name: all", "Acceptance: 0 t"]
    else:
        out += [f"acc-name: generalized-Buchi {m}",
                f"Acceptance: {m} " + "&".join(f"Inf({k})" for k in range(m))]
    out += ["properties: trans-labels explicit-labels trans-acc", "--BODY--"]
    for s in g.states:
        out.append(f"State: {idx[s]} {_quote(g.state_name(s))}")
        for lab, t, marks in g.trans[s]:
            sets = sorted(acc[f] for f in marks)
            suffix = " {" + " ".join(map(str, sets)) + "}" if sets else ""
            out.append(f"[{lab.guard('hoa')}] {idx[t]}{suffix}")
    out.append("--END--")
    return "\n".join(out) + "\n"


# -- DOT -----------------------------------------------------------------------------

def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def dot_ba(b: Ba, title: str = "") -> str:
    out = ["digraph ba {", "  rankdir=LR;", f'  label="{_dot_escape(title)}";',
           '  init [shape=point];']
    for q in b.states:
        shape = "doublecircle" if q in b.accepting else "circle"
        out.append(f'  {q} [shape={shape}, label="{q}"];')
    for q in b.initial:
        out.append(f"  init -> {q};")
    for q, lab, t in b.edges():
        out.append(f'  {q} -> {t} [label="{_dot_escape(lab.guard())}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def dot_tgba(g: Tgba, title: str = "") -> str:
    idx = {s: k for k, s in enumerate(g.states)}
    out = ["digraph tgba {", "  rankdir=LR;", f'  label="{_dot_escape(title)}";',
           '  init [shape=point];']
    for s in g.states:
        out.append(f'  {idx[s]} [shape=box, style=rounded, label="{g.state_name(s)}"];')
    for s in g.initial:
        out.append(f"  init -> {idx[s]};")
    for s, lab, t, marks in g.edges():
        text = f"{lab.guard()}:{g.marks_name(marks)}"
        out.append(f'  {idx[s]} -> {idx[t]} [label="{_dot_escape(text)}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def dot_vwaa(a: Vwaa, title: str = "") -> str:
    ids = a.state_ids()
    out = ["digraph vwaa {", f'  label="{_dot_escape(title)}";']
    for q in a.states:
        shape = "doublecircle" if q in a.accepting else "circle"
        text = _dot_escape(f"{ids[q]}: {q.unicode()}")
        out.append(f'  s{ids[q]} [shape={shape}, label="{text}"];')
    hub = 0
    for o in a.initial:
        out.append(f"  i{hub} [shape=point];")
        for r in sorted(o, key=lambda f: ids[f]):
            out.append(f"  i{hub} -> s{ids[r]};")
        hub += 1
    for q in a.states:
        for lab, o in a.trans[q]:
            text = _dot_escape(lab.guard())
            targets = sorted(o, key=lambda f: ids[f])
            if len(targets) == 1:
                out.append(f'  s{ids[q]} -> s{ids[targets[0]]} [label="{text}"];')
                continue
            out.append(f"  h{hub} [shape=point];")
            if not targets:  # the transition ends the branch
                out.append(f'  s{ids[q]} -> h{hub} [label="{text}"];')
                hub += 1
                continue
            out.append(f'  s{ids[q]} -> h{hub} [label="{text}", arrowhead=none];')
            for r in targets:
                out.append(f"  h{hub} -> s{ids[r]};")
            hub += 1
    out.append("}")
    return "\n".join(out) + "\n"
