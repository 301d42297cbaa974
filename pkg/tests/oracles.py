"""Slow, independent reference implementations used only by the tests.

Everything here works on plain adjacency dictionaries of Python sets and
shares no code with the package.
"""
from __future__ import annotations

import math
from collections import deque
from itertools import combinations, combinations_with_replacement, product

INF = math.inf


def adjacency(g) -> dict[int, set[int]]:
    return {v: {u for u in range(g.n) if g.adj[v] >> u & 1} for v in range(g.n)}


def decode_graph6(text: str) -> tuple[int, set[tuple[int, int]]]:
    """Hand decoder written straight from the format description."""
    data = [ord(c) - 63 for c in text]
    if data[0] == 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        data = data[4:]
    else:
        n = data[0]
        data = data[1:]
    bitstream = []
    for x in data:
        bitstream += [(x >> (5 - i)) & 1 for i in range(6)]
    edges = set()
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bitstream[k]:
                edges.add((i, j))
            k += 1
    return n, edges


def bfs(adj, s) -> dict[int, int]:
    dist = {s: 0}
    q = deque([s])
    while q:
        x = q.popleft()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                q.append(y)
    return dist


def dist_matrix(adj):
    n = len(adj)
    out = [[INF] * n for _ in range(n)]
    for v in range(n):
        for u, d in bfs(adj, v).items():
            out[v][u] = d
    return out


def closed(adj, v):
    return adj[v] | {v}


def domination(adj) -> int:
    n = len(adj)
    for k in range(1, n + 1):
        for s in combinations(range(n), k):
            cov = set()
            for v in s:
                cov |= closed(adj, v)
            if len(cov) == n:
                return k
    return 0


def k_radius(adj, k):
    d = dist_matrix(adj)
    n = len(adj)
    return min(max(min(d[v][s] for s in S) for v in range(n)) for S in combinations(range(n), k))


def girth(adj):
    """Shortest cycle by removing each edge and measuring the detour."""
    best = INF
    for u in adj:
        for v in adj[u]:
            if u < v:
                adj[u].discard(v)
                adj[v].discard(u)
                dv = bfs(adj, u).get(v)
                adj[u].add(v)
                adj[v].add(u)
                if dv is not None:
                    best = min(best, dv + 1)
    return best


def cop_game(adj, k):
    """Capture time for every sorted k-tuple of cops (robber chooses the start)."""
    n = len(adj)
    configs = list(combinations_with_replacement(range(n), k))
    moves = {}
    for c in configs:
        moves[c] = {tuple(sorted(m)) for m in product(*(sorted(closed(adj, v)) for v in c))}
    # win[t]: cop-to-move states won within t rounds
    value = {}
    for c in configs:
        for r in range(n):
            if r in c:
                value[(c, r)] = 0
    t = 0
    while True:
        t += 1
        new = {}
        for c in configs:
            for r in range(n):
                if (c, r) in value:
                    continue
                for c2 in moves[c]:
                    if r in c2 or all(r2 in c2 or value.get((c2, r2), INF) <= t - 1 for r2 in closed(adj, r)):
                        new[(c, r)] = t
                        break
        if not new:
            break
        value.update(new)
    return {c: max(value.get((c, r), INF) for r in range(n)) for c in configs}


def capt_k(adj, k):
    return min(cop_game(adj, k).values())


def cop_number(adj):
    k = 1
    while capt_k(adj, k) == INF:
        k += 1
    return k


def thc(adj):
    n = len(adj)
    return min(k + capt_k(adj, k) for k in range(1, n + 1))


def white_components(adj, blue):
    seen = set()
    comps = []
    for v in adj:
        if v in blue or v in seen:
            continue
        comp = set()
        stack = [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.add(x)
            for y in adj[x]:
                if y not in blue and y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(comp)
    return comps


def pt(adj, s, psd=True):
    blue = set(s)
    n = len(adj)
    t = 0
    while len(blue) < n:
        forced = set()
        if psd:
            comps = white_components(adj, blue)
            for v in blue:
                for comp in comps:
                    w = adj[v] & comp
                    if len(w) == 1:
                        forced |= w
        else:
            for v in blue:
                w = adj[v] - blue
                if len(w) == 1:
                    forced |= w
        if not forced:
            return INF
        blue |= forced
        t += 1
    return t


def throttle(adj, psd=True):
    n = len(adj)
    return min(k + pt(adj, s, psd) for k in range(1, n + 1) for s in combinations(range(n), k))


def zero_forcing(adj, psd=True):
    n = len(adj)
    for k in range(1, n + 1):
        for s in combinations(range(n), k):
            if pt(adj, s, psd) < INF:
                return k
    return 0


def burning(adj):
    """Smallest m with a valid sequence, by trying every ordered choice."""
    n = len(adj)
    for m in range(1, n + 1):
        def go(burned, i):
            if i == m:
                return len(burned) == n
            spread = set(burned)
            for v in burned:
                spread |= adj[v]
            if i == 0:
                return any(go({v}, 1) for v in range(n))
            return any(go(spread | {u}, i + 1) for u in range(n) if u not in burned)

        if go(set(), 0):
            return m
    return 0


def is_dismantlable(adj):
    alive = set(adj)
    while len(alive) > 1:
        for u in sorted(alive):
            nu = (adj[u] | {u}) & alive
            if any(nu <= ((adj[v] | {v}) & alive) for v in alive if v != u):
                alive.discard(u)
                break
        else:
            return False
    return True
