"""Decide th_c(G) in {1, 2, 3, 4} from structural characterisations.

None of the predicates here calls :func:`pursuit.cop_throttle`; the only game
query is the bounded one-cop question "capt_1(G) <= 3".
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, bits, distances, domination_number
from .pursuit import algorithm2_two_in_two, can_catch_within

AT_LEAST_FIVE = 5


@dataclass
class Classification:
    value: int  # 1..4, or AT_LEAST_FIVE meaning th_c >= 5
    trigger: str | None
    fired: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "class": ">=5" if self.value == AT_LEAST_FIVE else self.value,
            "trigger": self.trigger,
            "fired": self.fired,
        }


def _is_empty_graph(g: Graph, n: int) -> bool:
    return g.n == n and not any(g.adj)


def prop43_z_witness(g: Graph, proper: bool = False) -> int | None:
    """Lowest ``z`` with eccentricity <= 2 such that every ``w`` outside N[z]
    has some ``u`` in N[z] with N[w] ⊆ N[u] (⊊ when ``proper``).
    """
    d = distances(g)
    closed = g.closed_masks
    for z in range(g.n):
        if d.eccentricity(z) > 2:
            continue
        ok = True
        for w in bits(g.full & ~closed[z]):
            if not any(
                closed[w] & ~closed[u] == 0 and not (proper and closed[w] == closed[u])
                for u in bits(closed[z])
            ):
                ok = False
                break
        if ok:
            return z
    return None


def classify_low_throttle(g: Graph, proper: bool = False) -> Classification:
    """Evaluate the characterisations of th_c = 1, 2, 3, 4 in that order.

    For class 4 the branches run cheapest first (gamma = 3, the two-cops
    two-rounds scan, then capt_1 <= 3); ``trigger`` is the first that fired
    and ``fired`` lists every branch that holds.
    """
    n = g.n
    if n == 0:
        raise ValueError("empty graph")
    if n == 1:
        return Classification(1, "K1", ["K1"])
    gamma, _ = domination_number(g)

    fired = [name for name, ok in (("gamma=1", gamma == 1), ("2K1", _is_empty_graph(g, 2))) if ok]
    if fired:
        return Classification(2, fired[0], fired)

    if n >= 3:
        checks = [("gamma=2", gamma == 2), ("3K1", _is_empty_graph(g, 3))]
        if gamma > 2:
            checks.insert(0, ("z-witness", prop43_z_witness(g, proper) is not None))
        fired = [name for name, ok in checks if ok]
        if fired:
            return Classification(3, fired[0], fired)

    checks4 = [
        ("gamma=3", lambda: gamma == 3),
        ("4K1", lambda: _is_empty_graph(g, 4)),
        ("algorithm2", lambda: algorithm2_two_in_two(g) is not None),
        ("capt1<=3", lambda: can_catch_within(g, 1, 3)),
    ]
    fired = [name for name, ok in checks4 if ok()]
    if fired:
        return Classification(4, fired[0], fired)
    return Classification(AT_LEAST_FIVE, None, [])
