"""Parametric benchmark formulae."""
from __future__ import annotations

from typing import Callable

from .formula import (Always, And, Eventually, Formula, Next, Not, Or, Until,
                      atom, conj, disj)


def _p(i: int, base: str = "p") -> Formula:
    return atom(f"{base}{i}")


def _gf(f: Formula) -> Formula:
    return Always(Eventually(f))


def _fg(f: Formula) -> Formula:
    return Eventually(Always(f))


def theta(n: int) -> Formula:
    # !((GF p1 && ... && GF pn) -> G(q -> F r))
    lhs = conj(_gf(_p(i)) for i in range(1, n + 1))
    rhs = Always(Or(Not(atom("q")), Eventually(atom("r"))))
    return Not(Or(Not(lhs), rhs))


def u1(n: int) -> Formula:
    f = _p(1)
    for i in range(2, n + 1):
        f = Until(f, _p(i))
    return f


def u2(n: int) -> Formula:
    f = _p(n)
    for i in range(n - 1, 0, -1):
        f = Until(_p(i), f)
    return f


def r(n: int) -> Formula:
    return conj(Or(_gf(_p(i)), _fg(_p(i + 1))) for i in range(1, n + 1))


def s(n: int) -> Formula:
    return conj(Always(_p(i)) for i in range(1, n + 1))


def e(n: int) -> Formula:
    return conj(Eventually(_p(i)) for i in range(1, n + 1))


def c1(n: int) -> Formula:
    return disj(_gf(_p(i)) for i in range(1, n + 1))


def c2(n: int) -> Formula:
    return conj(_gf(_p(i)) for i in range(1, n + 1))


def q(n: int) -> Formula:
    return conj(Or(Eventually(_p(i)), Always(_p(i + 1))) for i in range(1, n + 1))


def _nested_f(names: list[Formula]) -> Formula:
    # F(x1 && F(x2 && ... && F xn))
    f = Eventually(names[-1])
    for x in reversed(names[:-1]):
        f = Eventually(And(x, f))
    return f


def alpha(n: int) -> Formula:
    return And(_nested_f([_p(i) for i in range(1, n + 1)]),
               _nested_f([_p(i, "q") for i in range(1, n + 1)]))


def _nested_x(x: Formula, n: int) -> Formula:
    # x && X(x && X(... && X x))
    f = x
    for _ in range(n - 1):
        f = And(x, Next(f))
    return f


def beta(n: int) -> Formula:
    return And(Eventually(_nested_x(atom("p"), n)), Eventually(_nested_x(atom("q"), n)))


def _x_power(x: Formula, k: int) -> Formula:
    for _ in range(k):
        x = Next(x)
    return x


def beta_strict(n: int) -> Formula:
    def block(x):
        return Eventually(conj(_x_power(x, k) for k in range(n)))
    return And(block(atom("p")), block(atom("q")))


def psi(n: int) -> Formula:
    return c2(n)


def xi(n: int) -> Formula:
    return disj(_fg(_p(i)) for i in range(1, n + 1))


FAMILIES: dict[str, Callable[[int], Formula]] = {
    "theta": theta, "u1": u1, "u2": u2, "r": r, "s": s, "e": e,
    "c1": c1, "c2": c2, "q": q, "alpha": alpha, "beta": beta,
    "beta_strict": beta_strict, "psi": psi, "xi": xi,
}


def family(name: str, n: int) -> Formula:
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
    if n < 1:
        raise ValueError("family parameter must be at least 1")
    return FAMILIES[name](n)
