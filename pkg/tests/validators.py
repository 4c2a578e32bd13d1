"""Independent checkers for the emitted text formats."""
import re

_IDENT = r"[A-Za-z_][A-Za-z0-9_]*"
_LABEL = re.compile(rf"^({_IDENT}):$")
_ARM = re.compile(rf"^\s*::\s*\((.+)\)\s*->\s*goto\s+({_IDENT})\s*$")
_GUARD_TOKEN = re.compile(rf"\s*(\(|\)|&&|\|\||!|true|false|1|0|{_IDENT})")


def _guard_ok(text: str) -> bool:
    """Recursive descent over SPIN boolean expressions."""
    toks, pos = [], 0
    while pos < len(text):
        m = _GUARD_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "":
                break
            return False
        toks.append(m.group(1))
        pos = m.end()
    i = 0

    def atom():
        nonlocal i
        if i >= len(toks):
            return False
        t = toks[i]
        i += 1
        if t == "!":
            return atom()
        if t == "(":
            if not disj() or i >= len(toks) or toks[i] != ")":
                return False
            i += 1
            return True
        return t not in (")", "&&", "||")

    def chain(op, sub):
        nonlocal i
        if not sub():
            return False
        while i < len(toks) and toks[i] == op:
            i += 1
            if not sub():
                return False
        return True

    def conj():
        return chain("&&", atom)

    def disj():
        return chain("||", conj)

    return disj() and i == len(toks)


def check_never_claim(text: str) -> list[str]:
    """Return a list of problems; empty when ``text`` is a well-formed claim."""
    errs = []
    lines = [ln.rstrip() for ln in text.strip().splitlines()]
    if not lines or not re.match(r"^never\s*\{(\s*/\*.*\*/)?\s*$", lines[0]):
        return ["missing never header"]
    if lines[-1] != "}":
        errs.append("missing closing brace")
    body = lines[1:-1]
    labels, gotos = [], []
    i = 0
    while i < len(body):
        m = _LABEL.match(body[i].strip())
        if not m:
            errs.append(f"expected a state label, got {body[i]!r}")
            i += 1
            continue
        labels.append(m.group(1))
        i += 1
        stmt = body[i].strip() if i < len(body) else ""
        if stmt in ("skip", "false;"):
            i += 1
            continue
        if stmt != "if":
            errs.append(f"state {m.group(1)} has no if block")
            continue
        i += 1
        arms = 0
        while i < len(body) and body[i].strip() != "fi;":
            a = _ARM.match(body[i])
            if not a:
                errs.append(f"bad arm {body[i]!r}")
            else:
                arms += 1
                if not _guard_ok(a.group(1)):
                    errs.append(f"bad guard {a.group(1)!r}")
                gotos.append(a.group(2))
            i += 1
        if i >= len(body):
            errs.append("unterminated if")
        i += 1
        if arms == 0:
            errs.append(f"state {m.group(1)} has an empty if")
    if len(set(labels)) != len(labels):
        errs.append("duplicate state labels")
    if not labels or not labels[0].endswith("init"):
        errs.append("first state is not the initial one")
    if sum(lb.endswith("_init") for lb in labels) != 1:
        errs.append("need exactly one _init state")
    for g in gotos:
        if g not in labels:
            errs.append(f"goto to undefined label {g}")
    return errs


_HOA_LABEL = re.compile(r"^\[([^\]]*)\]\s+(\d+)(?:\s+\{([\d\s]*)\})?\s*$")
_HOA_GUARD_TOKEN = re.compile(r"\s*(\(|\)|&|\||!|t|f|\d+)")


def _hoa_guard_ok(text: str, naps: int) -> bool:
    toks, pos = [], 0
    while pos < len(text):
        m = _HOA_GUARD_TOKEN.match(text, pos)
        if not m:
            return False
        toks.append(m.group(1))
        pos = m.end()
    depth = 0
    prev = None
    for t in toks:
        if t.isdigit() and int(t) >= naps:
            return False
        if t == "(":
            depth += 1
        elif t == ")":
            depth -= 1
            if depth < 0:
                return False
        starts = t.isdigit() or t in ("t", "f", "(", "!")
        if starts and prev is not None and (prev.isdigit() or prev in ("t", "f", ")")):
            return False
        if t in ("&", "|", ")") and (prev is None or prev in ("&", "|", "(", "!")):
            return False
        prev = t
    return depth == 0 and bool(toks)


def check_hoa(text: str) -> list[str]:
    """Structural validation of a HOA v1 automaton with explicit labels."""
    errs = []
    lines = text.strip().splitlines()
    if not lines or lines[0] != "HOA: v1":
        return ["first line must be 'HOA: v1'"]
    try:
        body_at = lines.index("--BODY--")
    except ValueError:
        return ["missing --BODY--"]
    if lines[-1] != "--END--":
        errs.append("missing --END--")
    header = {}
    starts = []
    for ln in lines[1:body_at]:
        key, _, val = ln.partition(":")
        if key == "Start":
            starts.append(int(val))
        else:
            header[key] = val.strip()
    for k in ("States", "AP", "Acceptance"):
        if k not in header:
            errs.append(f"missing header {k}")
    if errs:
        return errs
    n = int(header["States"])
    ap = header["AP"].split()
    naps = int(ap[0])
    if len(ap) - 1 != naps:
        errs.append("AP count does not match names")
    acc = header["Acceptance"].split(None, 1)
    nsets = int(acc[0])
    used = {int(x) for x in re.findall(r"(?:Inf|Fin)\((\d+)\)", acc[1] if len(acc) > 1 else "")}
    if used != set(range(nsets)):
        errs.append("Acceptance condition does not use exactly its declared sets")
    name = header.get("acc-name", "")
    if name == "Buchi" and acc != ["1", "Inf(0)"]:
        errs.append("Buchi acc-name with a different condition")
    if name.startswith("generalized-Buchi") and int(name.split()[1]) != nsets:
        errs.append("generalized-Buchi arity mismatch")
    if not starts or any(not 0 <= s < n for s in starts):
        errs.append("bad Start")
    seen = set()
    cur = None
    for ln in lines[body_at + 1:-1]:
        if ln.startswith("State:"):
            parts = ln.split()
            cur = int(parts[1])
            if cur in seen or not 0 <= cur < n:
                errs.append(f"bad state id {cur}")
            seen.add(cur)
            unquoted = re.sub(r'"(?:[^"\\]|\\.)*"', "", ln)
            sets = re.search(r"\{([\d\s]*)\}", unquoted)
            if sets and any(int(x) >= nsets for x in sets.group(1).split()):
                errs.append("state acceptance set out of range")
            continue
        m = _HOA_LABEL.match(ln)
        if cur is None or not m:
            errs.append(f"bad edge line {ln!r}")
            continue
        if not _hoa_guard_ok(m.group(1), naps):
            errs.append(f"bad label {m.group(1)!r}")
        if not 0 <= int(m.group(2)) < n:
            errs.append("edge target out of range")
        if m.group(3) and any(int(x) >= nsets for x in m.group(3).split()):
            errs.append("edge acceptance set out of range")
    if seen != set(range(n)):
        errs.append("not every state is listed")
    return errs
