"""Graph representation, graph6 I/O and baseline invariants.

Vertices are ``0..n-1`` and every vertex set is a Python ``int`` bitmask
(bit ``v`` set means ``v`` is in the set).  Distances between different
components are :data:`INF`, which is ``math.inf`` and never a large integer.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _accel
from .limits import check_subsets

INF = math.inf
MAX_SHORT_N = 62


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the 0-based byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


# ---------------------------------------------------------------- bitmasks

def bits(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def to_int64(masks: Sequence[int]) -> np.ndarray:
    """Pack Python-int masks (up to 64 bits) into an int64 array, bit-exact."""
    return np.array([m & 0xFFFFFFFFFFFFFFFF for m in masks], dtype=np.uint64).view(np.int64)


# ---------------------------------------------------------------- Graph

@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    ``adj[v]`` is the open neighbourhood of ``v`` as a bitmask.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for v, a in enumerate(self.adj):
            if a & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if a >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for w in bits(a):
                if not self.adj[w] >> v & 1:
                    raise ValueError(f"edge {v}-{w} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def closed(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def closed_of(self, mask: int) -> int:
        """Closed neighbourhood N[S] of a vertex set."""
        out = mask
        for v in bits(mask):
            out |= self.adj[v]
        return out

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def min_degree(self) -> int:
        return min((self.degree(v) for v in range(self.n)), default=0)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def induced(self, mask: int) -> "Graph":
        """Induced subgraph on ``mask``, relabelled in increasing order."""
        verts = list(bits(mask))
        pos = {v: i for i, v in enumerate(verts)}
        return Graph.from_edges(
            len(verts), [(pos[u], pos[v]) for u, v in self.edges() if u in pos and v in pos]
        )

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        return tuple(self.adj[v] | (1 << v) for v in range(self.n))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges}, g6={encode_graph6(self)!r})"


# ---------------------------------------------------------------- graph6

def _n_prefix(n: int) -> str:
    if n <= MAX_SHORT_N:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise ValueError(f"graph6 cannot encode n={n} here")


def encode_graph6(g: Graph) -> str:
    out = [_n_prefix(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one headerless graph6 line (a ``>>graph6<<`` header is tolerated)."""
    s = text.rstrip("\r\n")
    start = 0
    if s.startswith(">>graph6<<"):
        start = len(">>graph6<<")
    if start >= len(s):
        raise Graph6Error("empty graph6 string", start)
    for i in range(start, len(s)):
        if not 63 <= ord(s[i]) <= 126:
            raise Graph6Error(f"non-graph6 character {s[i]!r}", i)
    pos = start
    if s[pos] == "~":
        if pos + 1 < len(s) and s[pos + 1] == "~":
            raise Graph6Error("8-byte size prefix not supported", pos)
        if pos + 4 > len(s):
            raise Graph6Error("truncated size prefix", len(s))
        n = 0
        for c in s[pos + 1:pos + 4]:
            n = (n << 6) | (ord(c) - 63)
        if n <= MAX_SHORT_N:
            raise Graph6Error("long size prefix used for small n", pos)
        pos += 4
    else:
        n = ord(s[pos]) - 63
        pos += 1
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[pos:]
    if len(body) < need:
        raise Graph6Error(f"expected {need} data bytes, got {len(body)}", len(s))
    if len(body) > need:
        raise Graph6Error("trailing bytes after graph6 data", pos + need)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if need and nbits % 6:
        pad = (ord(body[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6Error("nonzero padding bits", pos + need - 1)
    return Graph(n, tuple(adj))


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse ``u v`` pairs, one per line; ``#`` starts a comment.

    A line with a single integer declares isolated vertex count when ``n`` is
    not given (the largest index otherwise decides the order).
    """
    edges = []
    top = -1
    declared = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"line {lineno}: expected integers, got {raw!r}") from None
        if len(nums) == 1 and declared is None and not edges:
            declared = nums[0]
            continue
        if len(nums) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        edges.append((nums[0], nums[1]))
        top = max(top, *nums)
    order = n if n is not None else (declared if declared is not None else top + 1)
    return Graph.from_edges(order, edges)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- distances

class DistanceTable:
    """All-pairs hop distances; unreachable pairs hold :data:`INF`."""

    def __init__(self, rows: list[list[float]]):
        self.d = rows
        self.n = len(rows)

    def __getitem__(self, uv: tuple[int, int]) -> float:
        u, v = uv
        return self.d[u][v]

    def eccentricity(self, v: int) -> float:
        return max(self.d[v], default=0)

    def radius(self) -> float:
        return min((self.eccentricity(v) for v in range(self.n)), default=0)

    def diameter(self) -> float:
        return max((self.eccentricity(v) for v in range(self.n)), default=0)

    def center(self) -> list[int]:
        r = self.radius()
        return [v for v in range(self.n) if self.eccentricity(v) == r]

    def to_set(self, v: int, mask: int) -> float:
        return min((self.d[v][s] for s in bits(mask)), default=INF)

    def max_to_set(self, mask: int) -> float:
        """max over v of dist(v, S)."""
        return max((self.to_set(v, mask) for v in range(self.n)), default=0)


def bfs_layers(g: Graph, source_mask: int) -> list[int]:
    """Layers of a multi-source BFS as bitmasks (layer 0 is the source set)."""
    layers = [source_mask]
    seen = source_mask
    frontier = source_mask
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        if not nxt:
            break
        layers.append(nxt)
        seen |= nxt
        frontier = nxt
    return layers


def distances(g: Graph) -> DistanceTable:
    rows = []
    for s in range(g.n):
        row: list[float] = [INF] * g.n
        for d, layer in enumerate(bfs_layers(g, 1 << s)):
            for v in bits(layer):
                row[v] = d
        rows.append(row)
    return DistanceTable(rows)


def ball_masks(g: Graph, radius: int) -> list[int]:
    """``out[v]`` = vertices within ``radius`` hops of ``v``."""
    out = []
    for v in range(g.n):
        layers = bfs_layers(g, 1 << v)
        m = 0
        for layer in layers[:radius + 1]:
            m |= layer
        out.append(m)
    return out


def components_avoiding(g: Graph, blue: int = 0) -> list[int]:
    """Connected components of ``G - blue`` as bitmasks, ordered by lowest vertex."""
    rest = g.full & ~blue
    comps = []
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            nxt &= rest & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


def components(g: Graph) -> list[int]:
    return components_avoiding(g, 0)


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.num_edges == g.n - 1 and is_connected(g)


# ---------------------------------------------------------------- girth

def shortest_cycle(g: Graph) -> list[int] | None:
    """A cycle of minimum length as a vertex list, or ``None`` for forests."""
    best: list[int] | None = None
    for u, v in g.edges():
        # shortest u->v path avoiding edge uv
        parent = {u: -1}
        q = deque([u])
        while q and v not in parent:
            x = q.popleft()
            for y in bits(g.adj[x]):
                if (x == u and y == v) or y in parent:
                    continue
                parent[y] = x
                q.append(y)
        if v not in parent:
            continue
        path = [v]
        while path[-1] != u:
            path.append(parent[path[-1]])
        if best is None or len(path) < len(best):
            best = path[::-1]
            if len(best) == 3:
                break
    return best


def girth(g: Graph) -> float:
    """Length of a shortest cycle; :data:`INF` for forests.

    Uses per-root BFS: a non-tree edge between levels ``a`` and ``b`` closes a
    closed walk of length ``a + b + 1`` and the minimum over roots is exact.
    """
    best = INF
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        q = deque([root])
        while q:
            x = q.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in bits(g.adj[x]):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    q.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def is_cycle_in(g: Graph, cycle: Sequence[int]) -> bool:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        return False
    return all(g.adj[cycle[i]] >> cycle[(i + 1) % len(cycle)] & 1 for i in range(len(cycle)))


# ---------------------------------------------------------------- covering searches

@_accel.njit
def _first_cover_kernel(masks, k, full):
    n = masks.shape[0]
    idx = np.empty(k, np.int64)
    acc = np.zeros(k + 1, np.int64)
    if k == 0 or k > n:
        return False, idx
    depth = 0
    idx[0] = -1
    while depth >= 0:
        idx[depth] += 1
        if idx[depth] > n - (k - depth):
            depth -= 1
            continue
        acc[depth + 1] = acc[depth] | masks[idx[depth]]
        if depth == k - 1:
            if acc[k] == full:
                return True, idx
        else:
            depth += 1
            idx[depth] = idx[depth - 1]
    return False, idx


def first_cover(masks: Sequence[int], k: int, full: int) -> tuple[int, ...] | None:
    """Lexicographically first ``k``-subset of indices whose masks OR to ``full``."""
    if k < 1 or k > len(masks):
        return None
    check_subsets(len(masks), k)
    if _accel.use_numba():
        ok, idx = _first_cover_kernel(to_int64(masks), k, to_int64([full])[0])
        return tuple(int(i) for i in idx) if ok else None
    for combo in combinations(range(len(masks)), k):
        acc = 0
        for i in combo:
            acc |= masks[i]
        if acc == full:
            return combo
    return None


def domination_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact domination number with a lexicographically first minimum witness."""
    if g.n == 0:
        return 0, ()
    masks = g.closed_masks
    for k in range(1, g.n + 1):
        w = first_cover(masks, k, g.full)
        if w is not None:
            return k, w
    raise AssertionError("V always dominates itself")


def is_dominating(g: Graph, mask: int) -> bool:
    return g.closed_of(mask) == g.full


def k_center(g: Graph, k: int) -> tuple[float, tuple[int, ...] | None]:
    """``rad_k(G)`` together with a witness ``k``-set (``None`` when infinite).

    Finds the least ``d`` for which ``k`` balls of radius ``d`` cover ``V``.
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"k must lie in 1..{g.n}, got {k}")
    if len(components(g)) > k:
        return INF, None
    for d in range(g.n):
        w = first_cover(ball_masks(g, d), k, g.full)
        if w is not None:
            return d, w
    raise AssertionError("unreachable: radius n-1 balls cover each component")


def k_radius(g: Graph, k: int) -> float:
    return k_center(g, k)[0]


# ---------------------------------------------------------------- cop-win

def dismantling_order(g: Graph) -> list[int] | None:
    """Corner-deletion order (lowest index first), or ``None`` if not dismantlable.

    The returned list holds all ``n`` vertices; each of the first ``n - 1``
    is a corner of the graph induced by itself and the vertices after it.
    """
    if g.n == 0:
        return None
    alive = g.full
    order = []
    while popcount(alive) > 1:
        for u in bits(alive):
            nu = g.closed(u) & alive
            if any(v != u and nu & ~g.closed(v) == 0 for v in bits(alive)):
                order.append(u)
                alive &= ~(1 << u)
                break
        else:
            return None
    order.append(next(bits(alive)))
    return order


def is_cop_win(g: Graph) -> bool:
    return dismantling_order(g) is not None


def is_corner_sequence(g: Graph, order: Sequence[int]) -> bool:
    """Check that ``order`` is a valid dismantling of ``g``."""
    if sorted(order) != list(range(g.n)):
        return False
    alive = g.full
    for u in order[:-1]:
        nu = g.closed(u) & alive
        if not any(v != u and nu & ~g.closed(v) == 0 for v in bits(alive)):
            return False
        alive &= ~(1 << u)
    return True
