"""Graph burning: sequence simulation and the exact burning number."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, bits


@dataclass
class BurnRun:
    trajectory: list[int]
    valid: bool
    success: bool
    message: str = ""


def burn_simulate(g: Graph, seq: Sequence[int]) -> BurnRun:
    """Run a burning sequence.

    Step 1 ignites ``seq[0]``.  In each later step fire spreads to every
    neighbour of a burned vertex and the next entry is ignited; the entry must
    be unburned when the step begins, otherwise the run is reported invalid.
    """
    if not seq:
        return BurnRun([], True, g.n == 0)
    if len(set(seq)) != len(seq):
        return BurnRun([], False, False, "sequence repeats a vertex")
    if any(not 0 <= v < g.n for v in seq):
        return BurnRun([], False, False, "vertex out of range")
    burned = 1 << seq[0]
    traj = [burned]
    for t, v in enumerate(seq[1:], 2):
        if burned >> v & 1:
            return BurnRun(traj, False, False, f"step {t}: vertex {v} is already burned")
        burned = g.closed_of(burned) | (1 << v)
        traj.append(burned)
    return BurnRun(traj, True, burned == g.full)


def _search(g: Graph, m: int) -> list[int] | None:
    failed: set[tuple[int, int]] = set()

    def go(t: int, burned: int) -> list[int] | None:
        if burned == g.full:
            return [] if t == m else None
        if t == m or (t, burned) in failed:
            return None
        spread = g.closed_of(burned)
        for u in bits(g.full & ~burned):
            rest = go(t + 1, spread | (1 << u))
            if rest is not None:
                return [u] + rest
        failed.add((t, burned))
        return None

    for v in range(g.n):
        rest = go(1, 1 << v)
        if rest is not None:
            return [v] + rest
    return None


def burning_number(g: Graph) -> tuple[int, list[int]]:
    """b(G) with the first witness sequence found by iterative deepening."""
    if g.n == 0:
        return 0, []
    for m in range(1, g.n + 1):
        seq = _search(g, m)
        if seq is not None:
            return m, seq
    raise AssertionError("igniting every vertex in turn always burns the graph")
