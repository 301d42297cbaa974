"""Exact Cops and Robbers solver.

Rules: cops are placed on a multiset of vertices, then the robber picks a
vertex.  Each round every cop may step to a neighbour or stay, then the
robber may do the same.  The robber is caught when a cop shares the robber's vertex.
A robber placed on a cop is caught in 0 rounds; capture during the cops'
half of round ``t`` counts as ``t`` rounds.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import _game
from .limits import DEFAULT_BUDGET, BudgetExceeded, check_budget, get_budget, set_budget  # noqa: F401
from .graph import INF, Graph, bits, components_avoiding, domination_number, k_radius, popcount


@dataclass
class GameSolution:
    """Value table of the ``k``-cop game on ``g``."""

    g: Graph
    k: int
    configs: np.ndarray
    values: np.ndarray
    succ_ptr: np.ndarray
    succ_idx: np.ndarray
    horizon: int | None = None
    _binom: np.ndarray = field(repr=False, default=None)

    def rank(self, cops: Sequence[int]) -> int:
        t = sorted(cops)
        if len(t) != self.k:
            raise ValueError(f"expected {self.k} cops, got {len(t)}")
        if any(not 0 <= v < self.g.n for v in t):
            raise ValueError(f"cop position out of range in {t}")
        return int(sum(self._binom[t[i] + i, i + 1] for i in range(self.k)))

    def value(self, cops: Sequence[int], robber: int) -> float:
        v = int(self.values[self.rank(cops), robber])
        return INF if v >= _game.UNRESOLVED else v

    @property
    def capture_times(self) -> np.ndarray:
        return _game.config_capture_times(self.values)

    def capture_time(self, cops: Sequence[int]) -> float:
        v = int(self.capture_times[self.rank(cops)])
        return INF if v >= _game.UNRESOLVED else v

    def best(self) -> tuple[float, tuple[int, ...]]:
        """Minimum capture time over all configurations, lowest rank on ties."""
        ct = self.capture_times
        i = int(np.argmin(ct))
        v = int(ct[i])
        return (INF if v >= _game.UNRESOLVED else v), tuple(int(x) for x in self.configs[i])


@lru_cache(maxsize=16)
def _solve_cached(g: Graph, k: int, horizon: int | None) -> GameSolution:
    check_budget(_game.n_configs(g.n, k) * g.n)
    binom = _game.binomial_table(g.n, k)
    configs = _game.enumerate_configs(g.n, k, binom)
    closed_nbrs = [list(bits(g.closed(v))) for v in range(g.n)]
    sizes = np.array([len(x) for x in closed_nbrs], dtype=np.int64)
    check_budget(int(min(sizes[configs].astype(np.float64).prod(axis=1).sum(), 2.0**62)), "successor entries")
    succ_ptr, succ_idx = _game.successors(configs, closed_nbrs, binom)
    occ = _game.occupancy(configs, g.n)
    rounds = horizon if horizon is not None else len(configs) * g.n + 1
    values = _game.solve_values(succ_ptr, succ_idx, occ, closed_nbrs, rounds)
    return GameSolution(g, k, configs, values, succ_ptr, succ_idx, horizon, binom)


def solve_game(g: Graph, k: int, horizon: int | None = None) -> GameSolution:
    """Solve the ``k``-cop game; with ``horizon`` values above it stay unresolved."""
    if k < 1:
        raise ValueError("need at least one cop")
    if g.n == 0:
        raise ValueError("empty graph")
    return _solve_cached(g, k, horizon)


def capture_time_of_set(g: Graph, cops: Sequence[int]) -> float:
    """capt(G; S) for the cop multiset ``cops``; :data:`INF` if the robber can evade."""
    return solve_game(g, len(cops)).capture_time(cops)


def k_capture_time(g: Graph, k: int) -> tuple[float, tuple[int, ...]]:
    """capt_k(G) with an optimal placement (all multisets are considered)."""
    return solve_game(g, k).best()


def can_catch_within(g: Graph, k: int, p: int) -> bool:
    """True iff ``k`` cops can guarantee capture within ``p`` rounds."""
    if p < 0:
        raise ValueError("p must be >= 0")
    sol = solve_game(g, k, horizon=p)
    return sol.best()[0] <= p


def cop_number(g: Graph) -> int:
    gamma, _ = domination_number(g)
    for k in range(1, gamma + 1):
        if k_capture_time(g, k)[0] < INF:
            return k
    raise AssertionError("a dominating set always captures")


@dataclass
class ThrottleResult:
    value: int
    k: int
    witness: tuple[int, ...]
    capt: dict[int, float]
    pruned: dict[int, float] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "k": self.k,
            "witness": list(self.witness),
            "capt": {str(k): v for k, v in sorted(self.capt.items())},
            "pruned_lower_bounds": {str(k): v for k, v in sorted(self.pruned.items())},
        }


def cop_throttle(g: Graph) -> ThrottleResult:
    """th_c(G) = min_k (k + capt_k(G)) with an optimal placement.

    Only ``k < gamma(G)`` needs the game solver; ``k = gamma`` costs one round
    (none when every vertex is isolated).  A ``k`` is skipped when
    ``k + rad_k(G)`` already reaches the incumbent, since capt_k >= rad_k.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    gamma, dom = domination_number(g)
    one = 1 if gamma < g.n else 0
    best, best_k, witness = gamma + one, gamma, dom
    capt: dict[int, float] = {gamma: one}
    pruned: dict[int, float] = {}
    for k in range(1, gamma):
        lb = k_radius(g, k)
        if k + lb >= best:
            pruned[k] = lb
            continue
        value, config = k_capture_time(g, k)
        capt[k] = value
        if k + value < best:
            best, best_k, witness = k + value, k, config
    return ThrottleResult(int(best), best_k, tuple(witness), capt, pruned)


# ---------------------------------------------------------------- two cops, two rounds

def algorithm2_two_in_two(g: Graph) -> tuple[int, int] | None:
    """Decide whether 2 cops catch the robber within 2 rounds.

    Direct transcription of the pair-scan: a start pair works when every
    robber vertex outside N[{c1, c2}] has replies c1' in N[c1], c2' in N[c2]
    with N[r] inside N[{c1', c2'}].  Returns the first working pair.
    """
    n = g.n
    closed = g.closed_masks
    for c1 in range(n):
        for c2 in range(c1, n):
            covered = closed[c1] | closed[c2]
            total = 0
            for r in bits(g.full & ~covered):
                flag = 0
                for c1p in bits(closed[c1]):
                    for c2p in bits(closed[c2]):
                        if closed[r] & ~(closed[c1p] | closed[c2p]) == 0:
                            flag = 1
                total += flag
            if total == n - popcount(covered):
                return c1, c2
    return None


# ---------------------------------------------------------------- traces

def game_trace(g: Graph, cops: Sequence[int], robber: int | None = None) -> dict:
    """One optimal line of play from the placement ``cops``.

    The robber starts on the worst vertex for the cops unless ``robber`` is given; cops pick
    the lowest-ranked optimal move, the robber the lowest-indexed best reply.
    """
    sol = solve_game(g, len(cops))
    c = sol.rank(cops)
    if robber is None:
        robber = int(np.argmax(sol.values[c]))
    value = sol.value(cops, robber)
    line = []
    r = robber
    rounds = 0
    while sol.values[c, r] != 0 and sol.values[c, r] < _game.UNRESOLVED:
        target = sol.values[c, r] - 1
        for j in range(sol.succ_ptr[c], sol.succ_ptr[c + 1]):
            c2 = int(sol.succ_idx[j])
            if r in sol.configs[c2]:
                break
            replies = [x for x in bits(g.closed(r)) if x not in sol.configs[c2]]
            if max(int(sol.values[c2, x]) for x in replies) <= target:
                break
        rounds += 1
        step = {"round": rounds, "cops": [int(x) for x in sol.configs[c2]]}
        c = c2
        if r not in sol.configs[c]:
            replies = [x for x in bits(g.closed(r)) if x not in sol.configs[c]]
            r = max(replies, key=lambda x: (int(sol.values[c, x]), -x))
            step["robber"] = r
        else:
            step["robber"] = r
            step["captured"] = True
        line.append(step)
        if rounds > g.n * len(sol.configs):
            break
    return {
        "cops": sorted(int(x) for x in cops),
        "robber_start": int(robber),
        "value": value,
        "capture_time_of_set": sol.capture_time(cops),
        "rounds": line,
    }


# ---------------------------------------------------------------- PSD shadow strategy

def psd_shadow_capture(g: Graph, s: int, record) -> int:
    """Rounds needed by the cop strategy read off a PSD forcing chronology.

    Cops start on ``s``.  At step ``t`` every force ``v -> w`` of the record
    whose target lies in the robber's current white component moves the cop
    standing on ``v`` to ``w``; all other cops stay.  The robber then plays
    optimally against this fixed rule, and the worst case is returned.

    Raises ``ValueError`` for an invalid record and ``AssertionError`` if the
    strategy fails to keep the robber off blue vertices or to make the capture.
    """
    from .zero_forcing import validate_record

    validate_record(g, s, record, rule="psd")
    blue_before = [s]
    for step in record.steps:
        blue_before.append(blue_before[-1] | sum(1 << f.forced for f in step))
    T = len(record.steps)
    memo: dict[tuple[int, int, tuple[int, ...]], int] = {}

    def play(t: int, r: int, cops: tuple[int, ...]) -> int:
        key = (t, r, cops)
        if key in memo:
            return memo[key]
        if t > T:
            raise AssertionError("robber survived the full forcing chronology")
        blue = blue_before[t - 1]
        if blue >> r & 1:
            raise AssertionError(f"robber reached blue vertex {r} without capture")
        comp = next(c for c in components_avoiding(g, blue) if c >> r & 1)
        moved = list(cops)
        for f in record.steps[t - 1]:
            v, w = f.forcer, f.forced
            if comp >> w & 1:
                if v not in moved:
                    raise AssertionError(f"no cop on forcing vertex {v} at step {t}")
                moved[moved.index(v)] = w
        nxt = tuple(moved)
        if r in nxt:
            out = t
        else:
            out = max(play(t + 1, x, nxt) for x in bits(g.closed(r)) if x not in nxt)
        memo[key] = out
        return out

    start = tuple(bits(s))
    return max((play(1, r, start) if not s >> r & 1 else 0) for r in range(g.n))
