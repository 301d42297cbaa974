"""Replay the throttling inequalities and closed formulas on concrete graphs.

Every check becomes a :class:`Row` with the exact left and right hand sides and
a verdict.  Instances too large for the state budget are reported as skipped.
"""
from __future__ import annotations

import json
import math
import random
import time
from dataclasses import asdict, dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable, Sequence

from . import families as fam
from .burning import burning_number
from .graph import (
    INF,
    Graph,
    ball_masks,
    bits,
    distances,
    domination_number,
    first_cover,
    girth,
    is_connected,
    is_cop_win,
    is_cycle_in,
    is_tree,
    k_radius,
    mask_of,
    shortest_cycle,
)
from .pursuit import (
    BudgetExceeded,
    capture_time_of_set,
    cop_number,
    cop_throttle,
    k_capture_time,
    psd_shadow_capture,
)
from .tree_throttling import tree_cop_throttle
from .zero_forcing import forcing_number, propagation_time, pt_value, throttle


def sqrt_formula(n: int) -> int:
    """ceil(sqrt(2n) - 1/2), computed without floating point error."""
    # smallest t with t >= sqrt(2n) - 1/2, i.e. (2t + 1)^2 >= 8n
    t = max(0, math.isqrt(8 * n) // 2 - 1)
    while (2 * t + 1) ** 2 < 8 * n:
        t += 1
    return t


def _json_value(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    if isinstance(x, (list, tuple)):
        return [_json_value(y) for y in x]
    return x


# ---------------------------------------------------------------- reports

@dataclass
class Row:
    claim: str
    paper_ref: str
    instance: str
    lhs: object
    rhs: object
    verdict: str  # "pass", "fail", "discrepancy" or "skipped"
    runtime_ms: float
    note: str = ""

    def as_dict(self) -> dict:
        d = asdict(self)
        d["lhs"] = _json_value(self.lhs)
        d["rhs"] = _json_value(self.rhs)
        return d


@dataclass
class Report:
    rows: list[Row] = field(default_factory=list)

    def check(self, claim: str, ref: str, instance: str, fn: Callable[[], tuple]) -> Row:
        """Run ``fn() -> (lhs, rhs, ok[, note])`` and record the outcome.

        ``ok`` is a bool or an explicit verdict string such as ``"discrepancy"``.
        """
        t0 = time.perf_counter()
        try:
            lhs, rhs, ok, *extra = fn()
            verdict = ok if isinstance(ok, str) else ("pass" if ok else "fail")
            note = extra[0] if extra else ""
        except BudgetExceeded as exc:
            lhs = rhs = None
            verdict, note = "skipped", str(exc)
        row = Row(claim, ref, instance, lhs, rhs, verdict, round((time.perf_counter() - t0) * 1000, 3), note)
        self.rows.append(row)
        return row

    def extend(self, other: "Report") -> "Report":
        self.rows.extend(other.rows)
        return self

    @property
    def failures(self) -> list[Row]:
        return [r for r in self.rows if r.verdict == "fail"]

    @property
    def skipped(self) -> list[Row]:
        return [r for r in self.rows if r.verdict == "skipped"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        counts = {"pass": 0, "fail": 0, "discrepancy": 0, "skipped": 0}
        for r in self.rows:
            counts[r.verdict] += 1
        return counts

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps({"summary": self.summary(), "rows": [r.as_dict() for r in self.rows]}, indent=indent)

    def to_table(self) -> str:
        head = ("claim", "instance", "lhs", "rhs", "verdict", "ms")
        body = [
            (r.claim, r.instance, str(_json_value(r.lhs)), str(_json_value(r.rhs)), r.verdict, f"{r.runtime_ms:.1f}")
            for r in self.rows
        ]
        widths = [max(len(x) for x in col) for col in zip(head, *body)]
        lines = ["  ".join(x.ljust(w) for x, w in zip(line, widths)).rstrip() for line in [head, *body]]
        lines.insert(1, "  ".join("-" * w for w in widths))
        s = self.summary()
        lines.append(f"{s['pass']} passed, {s['fail']} failed, {s['discrepancy']} discrepancies, {s['skipped']} skipped")
        lines += [f"note [{r.instance}] {r.claim}: {r.note}" for r in self.rows if r.note]
        return "\n".join(lines)


# ---------------------------------------------------------------- girth projection

def girth_projection(g: Graph, cycle: Sequence[int], v: int) -> int:
    """A cycle vertex ``x`` with dist(x, u) <= dist(v, u) for every ``u`` on ``cycle``.

    ``cycle`` must be a shortest cycle of ``g``.  When ``v`` is at distance at
    least floor(g/2) from the cycle any vertex works and ``cycle[0]`` is
    returned.  Otherwise ``y`` is the lowest-indexed nearest cycle vertex and
    ``x`` is taken on the cycle at distance dist(v, y) from ``y``.
    """
    cycle = list(cycle)
    if not is_cycle_in(g, cycle):
        raise ValueError(f"{cycle} is not a cycle of the graph")
    if len(cycle) != girth(g):
        raise ValueError(f"cycle has length {len(cycle)} but the girth is {girth(g)}")
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    d = distances(g)
    m = len(cycle)
    if v in cycle:
        candidates = [v]
    else:
        dv = min(d[v, u] for u in cycle)
        if dv >= m // 2:
            candidates = list(cycle)
        else:
            y = min((u for u in cycle if d[v, u] == dv), key=lambda u: u)
            i = cycle.index(y)
            candidates = sorted({cycle[(i + dv) % m], cycle[(i - dv) % m]})
    for x in candidates:
        if all(d[x, u] <= d[v, u] for u in cycle):
            return x
    raise AssertionError(f"no projection of {v} onto {cycle} dominates its distances")


# ---------------------------------------------------------------- per-graph facts

class _Facts:
    """Lazily computed invariants of one graph, shared between rows."""

    def __init__(self, g: Graph):
        self.g = g

    @cached_property
    def gamma(self) -> int:
        return domination_number(self.g)[0]

    @cached_property
    def thc(self):
        return cop_throttle(self.g)

    @cached_property
    def thplus(self):
        return throttle(self.g, "psd")

    @cached_property
    def zplus(self) -> int:
        return forcing_number(self.g, "psd")[0]

    @cached_property
    def cop_number(self) -> int:
        return cop_number(self.g)

    @cached_property
    def girth(self):
        return girth(self.g)

    @cached_property
    def radius(self):
        return distances(self.g).radius()


def random_psd_set(g: Graph, rng: random.Random) -> int:
    """A minimal PSD forcing set grown from a random vertex order."""
    order = list(range(g.n))
    rng.shuffle(order)
    s = 0
    for v in order:
        s |= 1 << v
        if pt_value(g, s) < INF:
            break
    for v in order:
        if s >> v & 1 and pt_value(g, s & ~(1 << v)) < INF:
            s &= ~(1 << v)
    return s


def leaf_free_witness(t: Graph, target: int) -> tuple[int, ...] | None:
    """Vertex set avoiding leaves with |S| + max dist(v, S) = ``target``, if any."""
    inner = [v for v in range(t.n) if t.degree(v) >= 2]
    for k in range(1, min(target, len(inner)) + 1):
        r = target - k
        masks = ball_masks(t, r)
        found = first_cover([masks[v] for v in inner], k, t.full)
        if found is not None:
            return tuple(inner[i] for i in found)
    return None


def verify_inequality_suite(g: Graph, instance: str = "", seed: int = 0, psd_sets: int = 5, max_k: int = 3) -> Report:
    """Every general inequality that applies to ``g``, evaluated exactly."""
    name = instance or repr(g)
    f = _Facts(g)
    rep = Report()
    rep.check("th_c <= gamma + 1", "th_c(G) <= gamma(G) + 1", name,
              lambda: (f.thc.value, f.gamma + 1, f.thc.value <= f.gamma + 1))
    rep.check("th_c <= th_+", "th_c(G) <= th_+(G)", name,
              lambda: (f.thc.value, f.thplus.value, f.thc.value <= f.thplus.value))
    rep.check("c <= Z_+", "c(G) <= Z_+(G)", name,
              lambda: (f.cop_number, f.zplus, f.cop_number <= f.zplus))

    rng = random.Random(seed)
    for i in range(psd_sets):
        s = random_psd_set(g, rng)
        cops = tuple(bits(s))

        def capt_vs_pt(s=s, cops=cops):
            pt, record = propagation_time(g, s)
            shadow = psd_shadow_capture(g, s, record)
            try:
                capt = capture_time_of_set(g, cops)
            except BudgetExceeded:
                # the shadow strategy is itself a cop strategy, so it bounds capt(G;S)
                return (None, shadow), pt, shadow <= pt, "full game over budget; bounded by the shadow strategy"
            return (capt, shadow), pt, capt <= shadow <= pt

        rep.check("capt(G;S) <= shadow <= pt_+(G;S)", "capt(G;S) <= pt_+(G;S)", f"{name} S={list(cops)}", capt_vs_pt)

    for k in range(1, min(max_k, g.n) + 1):
        def capt_vs_rad(k=k):
            capt = k_capture_time(g, k)[0]
            rad = k_radius(g, k)
            return capt, rad, capt >= rad

        rep.check(f"capt_{k} >= rad_{k}", "capt_k(G) >= rad_k(G)", name, capt_vs_rad)

    if f.girth < INF:
        rep.check("th_c >= ceil(sqrt(2g) - 1/2)", "th_c(G) >= ceil(sqrt(2 girth) - 1/2)", name,
                  lambda: (f.thc.value, sqrt_formula(int(f.girth)), f.thc.value >= sqrt_formula(int(f.girth))))
    if f.girth >= 5:
        delta = g.min_degree()
        rep.check("girth >= 5 implies th_c >= delta", "girth >= 5 => th_c(G) >= delta(G)", name,
                  lambda: (f.thc.value, delta, f.thc.value >= delta))
    if is_connected(g):
        rep.check("cop-win iff c = 1", "cop-win <=> dismantlable", name,
                  lambda: (is_cop_win(g), f.cop_number == 1, is_cop_win(g) == (f.cop_number == 1)))
    if is_tree(g):
        rep.extend(_tree_rows(g, name, f, max_k))
    return rep


def _tree_rows(t: Graph, name: str, f: _Facts, max_k: int) -> Report:
    rep = Report()
    for k in range(1, min(max_k, t.n) + 1):
        def eq(k=k):
            capt, rad = k_capture_time(t, k)[0], k_radius(t, k)
            return capt, rad, capt == rad

        rep.check(f"tree: capt_{k} = rad_{k}", "capt_k(T) = rad_k(T)", name, eq)
    rep.check("tree: th_c = th_+", "th_c(T) = th_+(T)", name,
              lambda: (f.thc.value, f.thplus.value, f.thc.value == f.thplus.value))
    rep.check("tree: th_c = min_k (k + rad_k)", "th_c(T) = min_k (k + rad_k(T))", name,
              lambda: (tree_cop_throttle(t).value, f.thc.value, tree_cop_throttle(t).value == f.thc.value))

    def burn():
        b = burning_number(t)[0]
        return f.thplus.value, 2 * b - 1, f.thplus.value <= 2 * b - 1

    rep.check("tree: th_+ <= 2b - 1", "th_+(T) <= 2 b(T) - 1", name, burn)
    if t.n >= 3:
        def leafless():
            w = leaf_free_witness(t, f.thc.value)
            return (list(w) if w else None), f.thc.value, w is not None

        rep.check("tree: optimal placement avoiding leaves", "optimal S with no leaf", name, leafless)
    r = int(f.radius)

    def sandwich():
        lo, th = sqrt_formula(2 * r + 1), f.thc.value
        if lo <= th <= r + 1:
            return (lo, th, r + 1), None, True
        # a tree of radius r may have diameter 2r - 1, so only P_{diam+1} is guaranteed inside
        diam = int(distances(t).diameter())
        path_lo = sqrt_formula(diam + 1)
        if path_lo <= th <= r + 1:
            note = (f"stated lower bound {lo} exceeds th_c = {th} (diameter {diam} = 2r - 1); "
                    f"the longest-path bound {path_lo} holds")
            return (lo, th, r + 1), None, "discrepancy", note
        return (lo, th, r + 1), None, False

    rep.check("tree: ceil(sqrt(2(2r+1)) - 1/2) <= th_c <= r + 1", "radius sandwich for trees", name, sandwich)
    return rep


def verify_subtree_monotonicity(pairs: int = 100, seed: int = 0, max_n: int = 30) -> Report:
    """th_c(T') <= th_c(T) for seeded random trees and random subtrees."""
    rep = Report()
    rng = random.Random(seed)
    for i in range(pairs):
        n = rng.randint(1, max_n)
        t = fam.random_tree(n, rng.randrange(1 << 30))
        sub = fam.random_subtree(t, rng.randrange(1 << 30))

        def mono(t=t, sub=sub):
            a, b = tree_cop_throttle(sub).value, tree_cop_throttle(t).value
            return a, b, a <= b

        rep.check("subtree: th_c(T') <= th_c(T)", "th_c monotone under subtrees", f"pair {i} n={n} n'={sub.n}", mono)
    return rep


# ---------------------------------------------------------------- clique sums

def _cliques(g: Graph, m: int) -> list[tuple[int, ...]]:
    return [c for c in combinations(range(g.n), m)
            if all(g.adj[a] >> b & 1 for a, b in combinations(c, 2))]


def random_clique_sum(seed: int, max_part: int = 5) -> tuple[Graph, Graph, Graph, int]:
    """Two seeded random connected graphs glued along a common clique of size 1..3."""
    rng = random.Random(seed)
    while True:
        g1 = fam.random_graph(rng.randint(2, max_part), rng.uniform(0.2, 0.8), rng.randrange(1 << 30))
        g2 = fam.random_graph(rng.randint(2, max_part), rng.uniform(0.2, 0.8), rng.randrange(1 << 30))
        sizes = [m for m in (1, 2, 3) if m < min(g1.n, g2.n) and _cliques(g1, m) and _cliques(g2, m)]
        if sizes:
            break
    m = rng.choice(sizes)
    k1 = list(rng.choice(_cliques(g1, m)))
    k2 = list(rng.choice(_cliques(g2, m)))
    rng.shuffle(k2)
    return g1, g2, fam.clique_sum(g1, k1, g2, k2), m


def verify_clique_sum(g1: Graph, g2: Graph, g: Graph, instance: str) -> Report:
    rep = Report()
    t1, t2 = cop_throttle(g1), cop_throttle(g2)
    t = cop_throttle(g)
    rep.check("clique sum: max(th_c(G1), th_c(G2)) <= th_c(G)", "clique-sum lower bound", instance,
              lambda: (max(t1.value, t2.value), t.value, max(t1.value, t2.value) <= t.value))
    rep.check("clique sum: th_c(G) <= th_c(G1) + th_c(G2)", "clique-sum upper bound", instance,
              lambda: (t.value, t1.value + t2.value, t.value <= t1.value + t2.value))
    p1, p2 = t1.value - t1.k, t2.value - t2.k
    bound = t1.k + t2.k + max(p1, p2)
    rep.check("clique sum: th_c(G) <= k1 + k2 + max(p1, p2)", "clique-sum bound with optimal (k, p)", instance,
              lambda: (t.value, bound, t.value <= bound))
    return rep


def verify_random_clique_sums(count: int = 50, seed: int = 0) -> Report:
    rep = Report()
    for i in range(count):
        g1, g2, g, m = random_clique_sum(seed * 100003 + i)
        rep.extend(verify_clique_sum(g1, g2, g, f"sum {i} (m={m}, n={g.n})"))
    return rep


# ---------------------------------------------------------------- closed formulas

def _eq(a, b):
    return a, b, a == b


def _formula_path(rep: Report, ns: Iterable[int]) -> None:
    for n in ns:
        rep.check("th_c(P_n) = ceil(sqrt(2n) - 1/2)", "path formula", f"P_{n}",
                  lambda n=n: _eq(cop_throttle(fam.path(n)).value, sqrt_formula(n)))


def _formula_cycle(rep: Report, ns: Iterable[int]) -> None:
    for n in ns:
        def both(n=n):
            g = fam.cycle(n)
            a, b = cop_throttle(g).value, throttle(g, "psd").value
            return (a, b), sqrt_formula(n), a == b == sqrt_formula(n)

        rep.check("th_c(C_n) = th_+(C_n) = ceil(sqrt(2n) - 1/2)", "cycle formula", f"C_{n}", both)


def _formula_binary_tree(rep: Report, hs: Iterable[int], game_max_h: int = 3) -> None:
    for h in hs:
        t = fam.full_binary_tree(h)
        rep.check("th_c(T_B(h)) = h + 1 (tree shortcut)", "binary tree formula", f"T_B({h})",
                  lambda t=t, h=h: _eq(tree_cop_throttle(t).value, h + 1))
        if h <= game_max_h:
            rep.check("th_c(T_B(h)) = h + 1 (game solver)", "binary tree formula", f"T_B({h})",
                      lambda t=t, h=h: _eq(cop_throttle(t).value, h + 1))


def _formula_stellated(rep: Report, ms: Iterable[int]) -> None:
    for m in ms:
        g = fam.stellated_wheel(m)
        inst = f"SW_{2 * m + 1}"
        rep.check("th_c(SW) = 3", "stellated wheel", inst, lambda g=g: _eq(cop_throttle(g).value, 3))
        rep.check("gamma(SW_{2m+1}) = ceil(m/2)", "stellated wheel", inst,
                  lambda g=g, m=m: _eq(domination_number(g)[0], -(-m // 2)))
        rep.check("capt(SW; {center}) = 2", "stellated wheel", inst,
                  lambda g=g: _eq(capture_time_of_set(g, (0,)), 2))


def _formula_grid(rep: Report, sides: Iterable[int]) -> None:
    sides = list(sides)
    for a in sides:
        for b in sides:
            if b < a:
                continue
            rep.check("capt_2(P_a x P_b) = floor((a+b)/2) - 1", "grid capture time", f"P_{a} x P_{b}",
                      lambda a=a, b=b: _eq(k_capture_time(fam.grid(a, b), 2)[0], (a + b) // 2 - 1))


def _formula_hypercube(rep: Report, ms: Iterable[int]) -> None:
    for m in ms:
        def cops(m=m):
            c = cop_number(fam.hypercube(m))
            stated, classical = (m + 1) // 2, (m + 2) // 2
            if c == stated:
                return c, stated, True
            if c == classical:
                return c, stated, "discrepancy", f"exact value matches ceil((m+1)/2) = {classical}"
            return c, stated, False

        rep.check("c(Q_m) = floor((m+1)/2)", "hypercube cop number", f"Q_{m}", cops)


def _formula_projective(rep: Report, qs: Iterable[int]) -> None:
    for q in qs:
        g = fam.projective_incidence(q)
        inst = f"IG(P_{q})"
        N = q * q + q + 1
        rep.check("|IG(P_q)| = 2(q^2+q+1)", "projective plane", inst, lambda g=g, N=N: _eq(g.n, 2 * N))
        rep.check("IG(P_q) is (q+1)-regular", "projective plane", inst,
                  lambda g=g, q=q: _eq(sorted({g.degree(v) for v in range(g.n)}), [q + 1]))
        rep.check("girth(IG(P_q)) = 6", "projective plane", inst, lambda g=g: _eq(girth(g), 6))
        rep.check("c(IG(P_q)) = q + 1", "projective plane", inst, lambda g=g, q=q: _eq(cop_number(g), q + 1))
        rep.check("capt_{q+1}(IG(P_q)) <= 3", "projective plane", inst,
                  lambda g=g, q=q: (k_capture_time(g, q + 1)[0], 3, k_capture_time(g, q + 1)[0] <= 3))


def _formula_meyniel(rep: Report, ns: Iterable[int]) -> None:
    for n in ns:
        def bound(n=n):
            g = fam.meyniel_extremal(n)
            q = max(p for p in range(2, n) if fam.is_prime(p) and 2 * (p * p + p + 1) <= n)
            ig = fam.projective_incidence(q)
            k = n - ig.n + 1
            lhs = cop_throttle(g).value
            rhs = cop_throttle(fam.path(k)).value + cop_throttle(ig).value
            return lhs, rhs, lhs <= rhs

        rep.check("th_c(G_n) <= th_c(P_k) + th_c(IG(P_q))", "vertex-sum upper bound", f"G_{n}", bound)


def _formula_hn(rep: Report, ns: Iterable[int]) -> None:
    for n in ns:
        g = fam.max_capture_Hn(n)
        rep.check("H_n is cop-win", "H_n family", f"H_{n}", lambda g=g: _eq(is_cop_win(g), True))
        rep.check("capt_1(H_n) = n - 4", "H_n family", f"H_{n}",
                  lambda g=g, n=n: _eq(k_capture_time(g, 1)[0], n - 4))
    rep.check("th_c(H_7) = 3", "H_n family", "H_7", lambda: _eq(cop_throttle(fam.h7()).value, 3))


def _formula_gadgets(rep: Report, ms: Iterable[int]) -> None:
    for m in ms:
        rep.check("upper tightness gadget has th_c = 4", "clique-sum tightness", f"m={m}",
                  lambda m=m: _eq(cop_throttle(fam.clique_sum_upper_gadget(m)).value, 4))
        rep.check("lower tightness gadget has th_c = 2", "clique-sum tightness", f"m={m}",
                  lambda m=m: _eq(cop_throttle(fam.clique_sum_lower_gadget(m)).value, 2))


def _formula_figures(rep: Report, _unused=None) -> None:
    t2 = fam.figure2_tree()
    rep.check("figure 2 tree: rad_1..rad_4 = 4, 3, 2, 1", "figure 2", "figure2_tree",
              lambda: _eq([k_radius(t2, k) for k in range(1, 5)], [4, 3, 2, 1]))
    rep.check("figure 2 tree: th_c = 5", "figure 2", "figure2_tree", lambda: _eq(cop_throttle(t2).value, 5))
    g3 = fam.figure3_unicyclic()
    cops = (7, 8)  # labels 8 and 9
    rep.check("figure 3: th_c = 4", "figure 3", "figure3_unicyclic", lambda: _eq(cop_throttle(g3).value, 4))
    rep.check("figure 3: th_+ = 5", "figure 3", "figure3_unicyclic", lambda: _eq(throttle(g3, "psd").value, 5))
    rep.check("figure 3: capt(G; {8, 9}) = 2", "figure 3", "figure3_unicyclic",
              lambda: _eq(capture_time_of_set(g3, cops), 2))
    rep.check("figure 3: pt_+(G; {8, 9}) = 3", "figure 3", "figure3_unicyclic",
              lambda: _eq(pt_value(g3, mask_of(cops)), 3))
    rep.check("figure 3: gamma = 4", "figure 3", "figure3_unicyclic", lambda: _eq(domination_number(g3)[0], 4))
    t4 = fam.figure4_tree()
    rep.check("figure 4 tree: b = 2", "figure 4", "figure4_tree", lambda: _eq(burning_number(t4)[0], 2))
    rep.check("figure 4 tree: th_+ = 3", "figure 4", "figure4_tree", lambda: _eq(throttle(t4, "psd").value, 3))


FORMULAS: dict[str, tuple[Callable[..., None], tuple]] = {
    "path": (_formula_path, tuple(range(1, 13))),
    "cycle": (_formula_cycle, tuple(range(4, 12))),
    "full_binary_tree": (_formula_binary_tree, (1, 2, 3, 4)),
    "stellated_wheel": (_formula_stellated, tuple(range(3, 9))),
    "grid": (_formula_grid, (2, 3, 4)),
    "hypercube": (_formula_hypercube, (3, 4)),
    "projective_incidence": (_formula_projective, (2,)),
    "meyniel_extremal": (_formula_meyniel, (20,)),
    "max_capture_Hn": (_formula_hn, (7, 8, 9, 10)),
    "clique_sum_gadgets": (_formula_gadgets, (3,)),
    "figures": (_formula_figures, ()),
}


def verify_formula(family: str, params: Iterable[int] | None = None) -> Report:
    """Compare exact values with the closed formula for ``family`` over ``params``."""
    if family not in FORMULAS:
        raise KeyError(f"no formula for {family!r}; known: {', '.join(FORMULAS)}")
    fn, default = FORMULAS[family]
    rep = Report()
    fn(rep, default if params is None else params)
    return rep


def verify_all_formulas() -> Report:
    rep = Report()
    for name in FORMULAS:
        rep.extend(verify_formula(name))
    return rep


# ---------------------------------------------------------------- default corpus

def desk_families() -> list[tuple[str, Graph]]:
    """Named family members small enough for every exact solver."""
    out = [(f"P_{n}", fam.path(n)) for n in (1, 2, 5, 8)]
    out += [(f"C_{n}", fam.cycle(n)) for n in (3, 5, 8)]
    out += [(f"K_{n}", fam.complete(n)) for n in (1, 4)]
    out += [("3K_1", fam.empty(3)), ("K_1,4", fam.star(5)), ("W_6", fam.wheel(5))]
    out += [(f"SW_{2 * m + 1}", fam.stellated_wheel(m)) for m in (3, 4)]
    out += [(f"T_B({h})", fam.full_binary_tree(h)) for h in (1, 2)]
    out += [("P_3 x P_3", fam.grid(3, 3)), ("Q_3", fam.hypercube(3)), ("Petersen", fam.petersen())]
    out += [("IG(P_2)", fam.projective_incidence(2)), ("H_7", fam.h7()), ("H_8", fam.max_capture_Hn(8))]
    out += [("figure2_tree", fam.figure2_tree()), ("figure3_unicyclic", fam.figure3_unicyclic()),
            ("figure4_tree", fam.figure4_tree())]
    out += [("upper gadget m=3", fam.clique_sum_upper_gadget(3)), ("lower gadget m=3", fam.clique_sum_lower_gadget(3))]
    return out


def random_corpus(count: int = 200, seed: int = 0, max_n: int = 10) -> list[tuple[str, Graph]]:
    """Seeded random connected graphs with 1..max_n vertices and varied density."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(1, max_n)
        p = rng.choice((0.0, 0.15, 0.3, 0.5, 0.7))
        s = rng.randrange(1 << 30)
        out.append((f"random[{i}] n={n} p={p}", fam.random_graph(n, p, s)))
    return out


def verify_inequalities(corpus: Sequence[tuple[str, Graph]] | None = None, seed: int = 0,
                        subtree_pairs: int = 100, clique_sums: int = 50) -> Report:
    """The inequality suite over a corpus, plus the subtree and clique-sum checks."""
    if corpus is None:
        corpus = desk_families() + random_corpus(seed=seed)
    rep = Report()
    for i, (name, g) in enumerate(corpus):
        rep.extend(verify_inequality_suite(g, name, seed=seed + i))
    if subtree_pairs:
        rep.extend(verify_subtree_monotonicity(subtree_pairs, seed))
    if clique_sums:
        rep.extend(verify_random_clique_sums(clique_sums, seed))
    return rep


def girth_projection_check(count: int = 100, seed: int = 0, max_n: int = 12) -> Report:
    """Projection property for every vertex of random graphs that contain a cycle."""
    rep = Report()
    rng = random.Random(seed)
    done = 0
    while done < count:
        n = rng.randint(3, max_n)
        g = fam.random_graph(n, rng.uniform(0.1, 0.5), rng.randrange(1 << 30))
        cyc = shortest_cycle(g)
        if cyc is None:
            continue
        done += 1

        def all_vertices(g=g, cyc=cyc):
            xs = [girth_projection(g, cyc, v) for v in range(g.n)]
            return len(xs), g.n, True

        rep.check("girth projection exists for every vertex", "girth projection", f"graph {done} n={n} g={len(cyc)}",
                  all_vertices)
    return rep
