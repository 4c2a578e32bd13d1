"""Graph utilities shared by the automaton simplifiers and the oracle."""
from __future__ import annotations

from typing import Callable, Hashable, Iterable


def reachable(roots: Iterable[Hashable], succ: Callable) -> list:
    """Nodes reachable from ``roots`` in breadth-first discovery order."""
    seen = {}
    queue = []
    for r in roots:
        if r not in seen:
            seen[r] = None
            queue.append(r)
    i = 0
    while i < len(queue):
        for n in succ(queue[i]):
            if n not in seen:
                seen[n] = None
                queue.append(n)
        i += 1
    return queue


def sccs(roots: Iterable[Hashable], succ: Callable) -> list[list]:
    """Strongly connected components of the part reachable from ``roots``.

    Iterative Tarjan; components come out in reverse topological order.
    """
    index: dict = {}
    low: dict = {}
    on_stack: set = set()
    stack: list = []
    out: list[list] = []
    counter = 0
    for root in roots:
        if root in index:
            continue
        work = [(root, iter(succ(root)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for nxt in it:
                if nxt not in index:
                    index[nxt] = low[nxt] = counter
                    counter += 1
                    stack.append(nxt)
                    on_stack.add(nxt)
                    work.append((nxt, iter(succ(nxt))))
                    advanced = True
                    break
                if nxt in on_stack and index[nxt] < low[node]:
                    low[node] = index[nxt]
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[node] < low[parent]:
                    low[parent] = low[node]
            if low[node] == index[node]:
                comp = []
                while True:
                    n = stack.pop()
                    on_stack.discard(n)
                    comp.append(n)
                    if n == node:
                        break
                out.append(comp)
    return out
