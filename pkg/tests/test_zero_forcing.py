import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from copthrottle import families as fam
from copthrottle.graph import INF, mask_of
from copthrottle.zero_forcing import (
    Force,
    ForcingRecord,
    forcing_number,
    is_forcing_set,
    propagation_time,
    psd_step,
    pt_value,
    standard_step,
    throttle,
    validate_record,
)

import oracles
from conftest import graphs, trees


def test_psd_step_forces_into_each_white_component():
    star = fam.star(4)  # hub 0, leaves 1..3
    new, forces = psd_step(star, 1 << 0)
    assert new == 0b1110
    assert {f.forced for f in forces} == {1, 2, 3}
    assert len({f.component for f in forces}) == 3
    new, forces = standard_step(star, 1 << 0)
    assert new == 0 and forces == []


def test_psd_step_on_path_middle():
    p5 = fam.path(5)
    new, forces = psd_step(p5, 1 << 2)
    assert new == mask_of([1, 3])
    assert forces == [Force(2, 1, 0), Force(2, 3, 1)]


def test_path_propagation_examples():
    p9 = fam.path(9)
    assert propagation_time(p9, [3, 6])[0] == 3
    assert propagation_time(p9, [2, 3, 6])[0] == 2
    assert propagation_time(p9, [0], "standard")[0] == 8
    assert propagation_time(p9, [4], "standard")[0] == INF
    assert propagation_time(p9, [4])[0] == 4


def test_stalled_record():
    c5 = fam.cycle(5)
    pt, rec = propagation_time(c5, [0])
    assert pt == INF and not rec.complete and rec.time == INF
    assert rec.to_json()["propagation_time"] == "inf"


def test_forcing_numbers():
    assert forcing_number(fam.path(7), "standard")[0] == 1
    assert forcing_number(fam.random_tree(20, 5))[0] == 1
    for n in range(3, 9):
        assert forcing_number(fam.cycle(n))[0] == 2
        assert forcing_number(fam.cycle(n), "standard")[0] == 2
    assert forcing_number(fam.complete(5), "standard")[0] == 4
    assert forcing_number(fam.complete(5))[0] == 4


def test_throttling_examples():
    assert throttle(fam.path(9)).value == 4
    assert throttle(fam.figure3_unicyclic()).value == 5
    assert throttle(fam.figure4_tree()).value == 3
    res = throttle(fam.path(9))
    assert len(res.witness) + res.propagation_time == res.value
    assert res.as_dict()["value"] == 4


def test_unknown_rule():
    with pytest.raises(ValueError):
        propagation_time(fam.path(3), [0], "loop")


def test_record_json_round_trip():
    pt, rec = propagation_time(fam.figure3_unicyclic(), [7, 8])
    assert pt == 3
    data = json.loads(json.dumps(rec.to_json()))
    assert data["propagation_time"] == 3
    assert [s["step"] for step in data["steps"] for s in step][0] == 1
    assert data["initial"] == [7, 8]


def test_validate_record_rejects_tampering():
    p5 = fam.path(5)
    s = 1 << 2
    _, rec = propagation_time(p5, s)
    validate_record(p5, s, rec)
    bad = ForcingRecord("psd", s, [[Force(2, 1, 0)], *rec.steps[1:]], True)
    with pytest.raises(ValueError):
        validate_record(p5, s, bad)
    bad = ForcingRecord("psd", s, [[Force(2, 0, 0)]], True)
    with pytest.raises(ValueError):
        validate_record(p5, s, bad)
    with pytest.raises(ValueError):
        validate_record(p5, 1, rec)


@given(graphs(max_n=8), st.data())
def test_propagation_matches_oracle(g, data):
    s = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    adj = oracles.adjacency(g)
    for rule in ("psd", "standard"):
        pt, rec = propagation_time(g, mask_of(s), rule)
        assert pt == oracles.pt(adj, s, rule == "psd")
        assert pt_value(g, mask_of(s), rule) == pt
        if pt < INF:
            validate_record(g, mask_of(s), rec, rule)


@given(graphs(max_n=7))
@settings(max_examples=40)
def test_throttle_and_forcing_number_match_oracle(g):
    adj = oracles.adjacency(g)
    for rule in ("psd", "standard"):
        psd = rule == "psd"
        res = throttle(g, rule)
        assert res.value == oracles.throttle(adj, psd)
        assert pt_value(g, mask_of(res.witness), rule) == res.propagation_time
        z, w = forcing_number(g, rule)
        assert z == oracles.zero_forcing(adj, psd) == len(w)
        assert is_forcing_set(g, w, rule)


@given(graphs(max_n=8))
def test_psd_never_slower_than_standard(g):
    z_std = forcing_number(g, "standard")[0]
    z_psd = forcing_number(g, "psd")[0]
    assert z_psd <= z_std
    full = g.full
    assert pt_value(g, full) == 0


@given(trees(max_n=14))
def test_every_tree_has_psd_forcing_number_one(t):
    z, w = forcing_number(t)
    assert z == 1
    # any single vertex of a tree forces it
    for v in range(t.n):
        assert is_forcing_set(t, 1 << v)


@given(graphs(max_n=8), st.data())
def test_superset_never_slower(g, data):
    s = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    extra = data.draw(st.integers(0, g.n - 1))
    assert pt_value(g, mask_of(s | {extra})) <= pt_value(g, mask_of(s))
