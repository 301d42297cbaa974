"""Throttling on trees: the sqrt(n) placement algorithm, its variant with
pre-coloured vertices, the k-radius shortcut, and the unicyclic composite.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import INF, Graph, bits, is_tree, k_center, mask_of, popcount, shortest_cycle
from .pursuit import ThrottleResult
from .zero_forcing import pt_value


class NotATree(ValueError):
    pass


def _require_tree(t: Graph) -> None:
    if not is_tree(t):
        raise NotATree("input graph is not a tree")


def _walk(t: Graph, root: int, alive: int, skip: int) -> tuple[dict[int, int], dict[int, int]]:
    """Distances from ``root`` inside ``alive``; entering a ``skip`` vertex is free."""
    dist = {root: 0}
    parent = {root: -1}
    stack = [root]
    while stack:
        x = stack.pop()
        for y in bits(t.adj[x] & alive):
            if y not in dist:
                dist[y] = dist[x] + (0 if skip >> y & 1 else 1)
                parent[y] = x
                stack.append(y)
    return dist, parent


def _center(t: Graph, alive: int, skip: int) -> tuple[int, int]:
    best_v, best_r = -1, INF
    for v in bits(alive):
        r = max(_walk(t, v, alive, skip)[0].values())
        if r < best_r:
            best_v, best_r = v, r
    return best_v, best_r


def _component_with(t: Graph, alive: int, v: int) -> int:
    dist, _ = _walk(t, v, alive, 0)
    return mask_of(dist)


def algorithm1_modified(t: Graph, x: int = 0) -> int:
    """PSD forcing set ``S ⊇ X`` for a tree with ``X`` (bitmask) already blue.

    Distances ignore ``X`` vertices and ``t = floor(sqrt(n - |X|))``.  While the
    current subtree's radius ``r`` exceeds ``t``: take the lowest-indexed vertex
    ``v`` at distance ``r`` from the centre ``c``, put into ``S`` the vertex ``u``
    on the ``v``-``c`` path lying ``t`` (non-``X``) steps from ``v``, and keep the
    component of ``T' - u`` containing ``c``.  Finally the last centre joins ``S``.
    Ties (centre, ``v``) go to the lowest index.
    """
    _require_tree(t)
    if x & ~t.full:
        raise ValueError("X contains vertices outside the tree")
    budget = math.isqrt(t.n - popcount(x))
    s = x
    alive = t.full
    c, r = _center(t, alive, x)
    while r > budget:
        dist, parent = _walk(t, c, alive, x)
        v = min(w for w, d in dist.items() if d == r)
        path = [v]
        while path[-1] != c:
            path.append(parent[path[-1]])
        # nearest to c with the right count is never an X vertex
        u = next(w for w in reversed(path) if dist[w] == r - budget)
        s |= 1 << u
        alive = _component_with(t, alive & ~(1 << u), c)
        c, r = _center(t, alive, x)
    return s | (1 << c)


def algorithm1(t: Graph) -> int:
    """PSD forcing set with at most floor(sqrt n) vertices and propagation time at most floor(sqrt n)."""
    return algorithm1_modified(t, 0)


def tree_cop_throttle(t: Graph) -> ThrottleResult:
    """th_c(T) = min_k (k + rad_k(T)), with a k-centre as witness."""
    _require_tree(t)
    best, best_k, witness = t.n + 1, t.n, tuple(range(t.n))
    table: dict[int, float] = {}
    for k in range(1, t.n + 1):
        if k >= best:
            break
        rad, w = k_center(t, k)
        table[k] = rad
        if k + rad < best:
            best, best_k, witness = k + rad, k, w
    return ThrottleResult(int(best), best_k, tuple(witness), table)


# ---------------------------------------------------------------- unicyclic graphs

def cycle_forcing_set(k: int) -> tuple[int, int]:
    """Best evenly spaced PSD set on C_k: returns (mask over positions 0..k-1, th_+ value)."""
    from .families import cycle

    ck = cycle(k)
    best_mask, best = ck.full, k
    for size in range(1, k):
        m = mask_of(sorted({(i * k) // size for i in range(size)}))
        value = size + pt_value(ck, m)
        if value < best:
            best_mask, best = m, value
    return best_mask, int(best)


@dataclass
class UnicyclicStrategy:
    forcing_set: tuple[int, ...]
    propagation_time: int
    staged_bound: int
    cycle: list[int]

    @property
    def value(self) -> int:
        return len(self.forcing_set) + self.propagation_time


def unicyclic_strategy(g: Graph) -> UnicyclicStrategy:
    """Composite PSD strategy for a connected unicyclic graph.

    Force the cycle with an optimal cycle set, contract the cycle to a vertex
    ``x`` and run :func:`algorithm1_modified` on the resulting tree with
    ``X = {x}``.  ``value`` is the exact ``|S| + pt_+(G; S)`` of the union;
    ``staged_bound`` is the cost of running the two phases one after the other.
    """
    if g.n < 3 or g.num_edges != g.n:
        raise ValueError("graph is not unicyclic")
    cyc = shortest_cycle(g)
    if cyc is None:
        raise ValueError("graph is not unicyclic")
    cyc_mask = mask_of(cyc)
    others = [v for v in range(g.n) if not cyc_mask >> v & 1]
    label = {v: i + 1 for i, v in enumerate(others)}
    edges = set()
    for u, v in g.edges():
        a = label.get(u, 0)
        b = label.get(v, 0)
        if a != b:
            edges.add((min(a, b), max(a, b)))
    tree = Graph.from_edges(len(others) + 1, sorted(edges))
    if not is_tree(tree):
        raise ValueError("graph is not unicyclic")

    pos_mask, cycle_value = cycle_forcing_set(len(cyc))
    s_tree = algorithm1_modified(tree, 1)
    pt_tree = pt_value(tree, s_tree)
    s = mask_of(cyc[i] for i in bits(pos_mask)) | mask_of(others[i - 1] for i in bits(s_tree) if i)
    pt = pt_value(g, s)
    if pt == INF:
        raise AssertionError("composite set failed to force the graph")
    staged = cycle_value + popcount(s_tree) - 1 + pt_tree
    return UnicyclicStrategy(tuple(bits(s)), int(pt), int(staged), cyc)
