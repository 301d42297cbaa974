"""Standard and PSD zero forcing: steps, propagation time, Z, Z_+, th, th_+.

A time-step evaluates every force against the blue set (and, for the PSD
rule, the component partition of the white vertices) at the start of the
step, then applies them together.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import NamedTuple

import numpy as np

from . import _accel
from .limits import SUBSET_FACTOR, BudgetExceeded, get_budget
from .graph import INF, Graph, bits, components_avoiding, k_radius, mask_of, to_int64

RULES = ("psd", "standard")
_KERNEL_MAX_N = 62
_STALL = np.int64(1 << 40)


class Force(NamedTuple):
    forcer: int
    forced: int
    component: int  # index among white components at step start; -1 for the standard rule


@dataclass
class ForcingRecord:
    rule: str
    initial: int
    steps: list[list[Force]] = field(default_factory=list)
    complete: bool = False

    @property
    def time(self) -> float:
        return len(self.steps) if self.complete else INF

    def blue_after(self, t: int) -> int:
        blue = self.initial
        for step in self.steps[:t]:
            blue |= mask_of(f.forced for f in step)
        return blue

    def to_json(self) -> dict:
        return {
            "rule": self.rule,
            "initial": list(bits(self.initial)),
            "complete": self.complete,
            "propagation_time": "inf" if not self.complete else len(self.steps),
            "steps": [
                [{"step": t, "forcer": f.forcer, "forced": f.forced, "component": f.component} for f in step]
                for t, step in enumerate(self.steps, 1)
            ],
        }


def _check_rule(rule: str) -> None:
    if rule not in RULES:
        raise ValueError(f"unknown forcing rule {rule!r}; expected one of {RULES}")


def psd_step(g: Graph, blue: int) -> tuple[int, list[Force]]:
    """All PSD forces available from ``blue``; empty result means stalled.

    A blue ``v`` forces ``w`` in white component ``W`` when ``w`` is its only
    neighbour inside ``W``.  One force is recorded per forced vertex (the
    lowest-indexed forcer).
    """
    forces: dict[int, Force] = {}
    for ci, comp in enumerate(components_avoiding(g, blue)):
        for v in bits(blue):
            wn = g.adj[v] & comp
            if wn and wn & (wn - 1) == 0:
                w = wn.bit_length() - 1
                if w not in forces:
                    forces[w] = Force(v, w, ci)
    out = sorted(forces.values(), key=lambda f: (f.forced, f.forcer))
    return mask_of(forces), out


def standard_step(g: Graph, blue: int) -> tuple[int, list[Force]]:
    forces: dict[int, Force] = {}
    for v in bits(blue):
        wn = g.adj[v] & ~blue
        if wn and wn & (wn - 1) == 0:
            w = wn.bit_length() - 1
            if w not in forces:
                forces[w] = Force(v, w, -1)
    out = sorted(forces.values(), key=lambda f: (f.forced, f.forcer))
    return mask_of(forces), out


def propagation_time(g: Graph, s, rule: str = "psd") -> tuple[float, ForcingRecord]:
    """Propagation time of ``s`` (a bitmask or iterable of vertices) and its chronology."""
    _check_rule(rule)
    blue = s if isinstance(s, int) else mask_of(s)
    step = psd_step if rule == "psd" else standard_step
    rec = ForcingRecord(rule, blue)
    while blue != g.full:
        new, forces = step(g, blue)
        if not new:
            return INF, rec
        rec.steps.append(forces)
        blue |= new
    rec.complete = True
    return len(rec.steps), rec


def validate_record(g: Graph, s: int, record: ForcingRecord, rule: str = "psd") -> None:
    """Raise ``ValueError`` unless every recorded force is legal and the graph ends blue."""
    _check_rule(rule)
    if record.initial != s:
        raise ValueError("record does not start from the given set")
    blue = s
    for t, step in enumerate(record.steps, 1):
        comps = components_avoiding(g, blue) if rule == "psd" else None
        forced = 0
        for f in step:
            v, w = f.forcer, f.forced
            if not blue >> v & 1 or blue >> w & 1:
                raise ValueError(f"step {t}: force {v}->{w} needs a blue forcer and a white target")
            if rule == "psd":
                comp = next(c for c in comps if c >> w & 1)
                white = g.adj[v] & comp
            else:
                white = g.adj[v] & ~blue
            if white != 1 << w:
                raise ValueError(f"step {t}: {w} is not the only eligible white neighbour of {v}")
            forced |= 1 << w
        if not forced:
            raise ValueError(f"step {t} is empty")
        blue |= forced
    if blue != g.full:
        raise ValueError("record does not colour the whole graph")


# ---------------------------------------------------------------- kernels

@_accel.njit
def _pt_kernel(adj, n, blue, psd, cap):
    """Propagation time of ``blue``, or a huge value once it exceeds ``cap`` or stalls."""
    full = (np.int64(1) << n) - 1
    t = 0
    while blue != full:
        if t >= cap:
            return _STALL
        new = np.int64(0)
        if psd:
            rest = full & ~blue
            while rest != 0:
                comp = rest & -rest
                frontier = comp
                while frontier != 0:
                    nxt = np.int64(0)
                    for v in range(n):
                        if (frontier >> v) & 1:
                            nxt |= adj[v]
                    nxt &= rest & ~comp
                    comp |= nxt
                    frontier = nxt
                rest &= ~comp
                for v in range(n):
                    if (blue >> v) & 1:
                        wn = adj[v] & comp
                        if wn != 0 and (wn & (wn - 1)) == 0:
                            new |= wn
        else:
            for v in range(n):
                if (blue >> v) & 1:
                    wn = adj[v] & ~blue
                    if wn != 0 and (wn & (wn - 1)) == 0:
                        new |= wn
        if new == 0:
            return _STALL
        blue |= new
        t += 1
    return t


@_accel.njit
def _throttle_kernel(adj, n, psd, lower, best, best_mask):
    """Search all proper subsets by size, lexicographic within a size.

    ``lower[s]`` is a lower bound on the propagation time of any ``s``-set.
    """
    idx = np.empty(n, np.int64)
    best_pt = 0
    for s in range(1, n):
        if s + lower[s] >= best:
            continue
        for i in range(s):
            idx[i] = i
        while True:
            m = np.int64(0)
            for i in range(s):
                m |= np.int64(1) << idx[i]
            pt = _pt_kernel(adj, n, m, psd, best - s - 1)
            if pt < _STALL and s + pt < best:
                best = s + pt
                best_mask = m
                best_pt = pt
                if s + lower[s] >= best:
                    break
            i = s - 1
            while i >= 0 and idx[i] == n - s + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for j in range(i + 1, s):
                idx[j] = idx[j - 1] + 1
    return best, best_mask, best_pt


@_accel.njit
def _min_forcing_kernel(adj, n, psd):
    idx = np.empty(n, np.int64)
    for s in range(1, n + 1):
        for i in range(s):
            idx[i] = i
        while True:
            m = np.int64(0)
            for i in range(s):
                m |= np.int64(1) << idx[i]
            if _pt_kernel(adj, n, m, psd, n) < _STALL:
                return s, m
            i = s - 1
            while i >= 0 and idx[i] == n - s + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for j in range(i + 1, s):
                idx[j] = idx[j - 1] + 1
    return n, (np.int64(1) << n) - 1


def _kernel_ok(g: Graph) -> bool:
    return _accel.use_numba() and 1 <= g.n <= _KERNEL_MAX_N


def pt_value(g: Graph, s: int, rule: str = "psd") -> float:
    """Propagation time only (no chronology)."""
    _check_rule(rule)
    if _kernel_ok(g):
        t = _pt_kernel(to_int64(g.adj), g.n, np.int64(s), rule == "psd", g.n + 1)
        return INF if t >= _STALL else int(t)
    return propagation_time(g, s, rule)[0]


def forcing_number(g: Graph, rule: str = "psd") -> tuple[int, tuple[int, ...]]:
    """Z(G) or Z_+(G) with the first minimum forcing set in (size, lex) order."""
    _check_rule(rule)
    if g.n == 0:
        return 0, ()
    if _kernel_ok(g):
        s, m = _min_forcing_kernel(to_int64(g.adj), g.n, rule == "psd")
        return int(s), tuple(bits(int(m)))
    for s in range(1, g.n + 1):
        for combo in combinations(range(g.n), s):
            if propagation_time(g, mask_of(combo), rule)[0] < INF:
                return s, combo
    raise AssertionError("V is always a forcing set")


@dataclass
class ForcingThrottle:
    value: int
    witness: tuple[int, ...]
    propagation_time: int

    def as_dict(self) -> dict:
        return {"value": self.value, "witness": list(self.witness), "propagation_time": self.propagation_time}


def throttle(g: Graph, rule: str = "psd") -> ForcingThrottle:
    """th(G) or th_+(G): the minimum of |S| + pt(G; S) over all S.

    Sets of size ``s`` are skipped once ``s + rad_s(G)`` reaches the incumbent,
    because every vertex needs at least ``dist(v, S)`` steps to turn blue.
    """
    _check_rule(rule)
    if g.n == 0:
        raise ValueError("empty graph")
    if 2 ** g.n > SUBSET_FACTOR * get_budget():
        raise BudgetExceeded(2 ** g.n, SUBSET_FACTOR * get_budget(), "candidate sets")
    lower = [0] + [k_radius(g, s) for s in range(1, g.n + 1)]
    lower = [g.n + 1 if x == INF else x for x in lower]
    best, best_mask, best_pt = g.n, g.full, 0
    if _kernel_ok(g):
        b, m, p = _throttle_kernel(to_int64(g.adj), g.n, rule == "psd", np.array(lower, np.int64), best, np.int64(best_mask))
        best, best_mask, best_pt = int(b), int(m), int(p)
    else:
        for s in range(1, g.n):
            if s + lower[s] >= best:
                continue
            for combo in combinations(range(g.n), s):
                pt = propagation_time(g, mask_of(combo), rule)[0]
                if s + pt < best:
                    best, best_mask, best_pt = s + pt, mask_of(combo), pt
                    if s + lower[s] >= best:
                        break
    return ForcingThrottle(int(best), tuple(bits(best_mask)), int(best_pt))


def is_forcing_set(g: Graph, s, rule: str = "psd") -> bool:
    return pt_value(g, s if isinstance(s, int) else mask_of(s), rule) < INF


