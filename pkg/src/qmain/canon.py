"""Isomorphism-invariant codes for trees and connected unicyclic graphs.

Both codes are built from AHU parenthesis strings of rooted trees. Trees
are rooted at their center (minimum over the two choices for bicentral
trees). Unicyclic graphs are cut into the rooted trees hanging off their
unique cycle, and the cyclic sequence of those codes is minimized over
rotations and reflections.
"""

from __future__ import annotations

from .errors import NotATree, NotUnicyclic
from .graph import Graph, _bits, is_connected


def _rooted_code(g: Graph, root: int, blocked: int = 0) -> bytes:
    """AHU code of the tree reached from ``root`` without entering ``blocked``."""
    order = [root]
    parent = {root: -1}
    seen = blocked | 1 << root
    for v in order:
        nbrs = g.rows[v] & ~seen
        seen |= nbrs
        for u in _bits(nbrs):
            parent[u] = v
            order.append(u)
    children: dict[int, list[bytes]] = {v: [] for v in order}
    code = b""
    for v in reversed(order):
        parts = children.pop(v)
        parts.sort()
        code = b"(" + b"".join(parts) + b")"
        if parent[v] >= 0:
            children[parent[v]].append(code)
    return code


def _peel_leaves(g: Graph) -> tuple[int, list[int]]:
    """Repeatedly strip degree-1 vertices.

    Returns the bitmask of what survives and the last nonempty layer
    removed (the tree center when nothing survives).
    """
    alive = (1 << g.n) - 1
    deg = list(g.degrees)
    layer = [v for v in range(g.n) if deg[v] <= 1]
    last = layer
    while layer and alive:
        last = layer
        nxt = []
        for v in layer:
            alive &= ~(1 << v)
        for v in layer:
            for u in _bits(g.rows[v] & alive):
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    return alive, last


def tree_centers(g: Graph) -> list[int]:
    if g.n <= 2:
        return list(range(g.n))
    alive, last = _peel_leaves(g)
    return sorted(last)


def tree_canonical_code(g: Graph) -> bytes:
    if g.m != g.n - 1 or not is_connected(g):
        raise NotATree(f"graph with n={g.n}, m={g.m} is not a tree")
    return min(_rooted_code(g, c) for c in tree_centers(g))


def cycle_vertices(g: Graph) -> list[int]:
    """Vertices of the unique cycle, in walking order starting at the smallest."""
    if g.m != g.n or not is_connected(g):
        raise NotUnicyclic(f"graph with n={g.n}, m={g.m} is not connected unicyclic")
    alive, _ = _peel_leaves(g)
    start = (alive & -alive).bit_length() - 1
    cycle = [start]
    prev, cur = -1, start
    while True:
        nxt = [u for u in _bits(g.rows[cur] & alive) if u != prev]
        step = min(nxt)
        if step == start:
            break
        cycle.append(step)
        prev, cur = cur, step
        if len(cycle) > g.n:
            raise NotUnicyclic("cycle walk did not close")
    return cycle


def unicyclic_canonical_code(g: Graph) -> bytes:
    cycle = cycle_vertices(g)
    mask = 0
    for c in cycle:
        mask |= 1 << c
    seq = [_rooted_code(g, c, mask & ~(1 << c)) for c in cycle]
    r = len(seq)
    best = None
    for s in (seq, seq[::-1]):
        for k in range(r):
            cand = tuple(s[k:] + s[:k])
            if best is None or cand < best:
                best = cand
    return b"[" + b"".join(best) + b"]"
