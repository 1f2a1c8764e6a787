"""Smoke tests for the python bindings."""

import json

import pytest

import jetinv


@pytest.fixture
def quadric_jet():
    # x1^2 + 2 x2^2 at (1,1), order 3
    return jetinv.jet_of_polynomial(
        [("1", [2, 0]), ("2", [0, 2])], ["1", "1"], 3
    )


def test_jet_basics(quadric_jet):
    assert quadric_jet.n == 2
    assert quadric_jet.order == 3
    assert quadric_jet.u() == "3"
    assert quadric_jet.grad() == ["2", "4"]
    assert quadric_jet.coeff("0,2") == "4"


def test_jet_json_round_trip(quadric_jet):
    text = quadric_jet.to_json()
    back = jetinv.JetPoint.from_json(text)
    assert back == quadric_jet
    assert back.to_json() == text


def test_invariant_values(quadric_jet):
    assert jetinv.eval_invariant("I1", quadric_jet) == "20"
    assert jetinv.eval_invariant("I2_tr:1", quadric_jet) == "6"
    assert jetinv.eval_invariant("I2_pair:1", quadric_jet) == "72"
    assert jetinv.cayley_hamilton_reduce(quadric_jet) == "272"
    lam = jetinv.eval_invariant("lambda:2", quadric_jet)
    assert abs(lam - 4.0) < 1e-9


def test_newton_girard():
    assert jetinv.newton_girard(["6", "20"]) == ["6", "8"]


def test_cayley_and_invariance(quadric_jet):
    g = jetinv.cayley_rotation([["0", "1/2"], ["-1/2", "0"]])
    r = json.loads(g.to_json())
    assert r["R"][0] == ["3/5", "4/5"]
    assert g.act_base(["1", "0"]) == ["3/5", "-4/5"]
    moved = jetinv.prolong_action(g, quadric_jet)
    assert jetinv.eval_invariant("I1", moved) == "20"


def test_gram(quadric_jet):
    g = jetinv.gram(quadric_jet)
    assert g["gamma"] == [["20", "72"], ["72", "272"]]
    assert g["unit_corner"][0][0] == "1"


def test_compatibility_ode():
    assert jetinv.verify_ode(2, ["0", "1"])
    assert jetinv.dplusf_power(2, ["0", "1"], 3) == "0"
    assert jetinv.verify_ode(5, ["0", "1", "2", "3", "4"])
    with pytest.raises(ValueError):
        jetinv.verify_ode(2, ["1", "1"])


def test_eikonal_sample_vanishes():
    jet = jetinv.eikonal_sample(2, 3, seed=7)
    assert jetinv.eval_invariant("I1", jet) == "1"
    assert jetinv.eval_invariant("I2_pair:1", jet) == "0"


def test_independence_rank(quadric_jet):
    assert jetinv.independence_rank(["I0"], quadric_jet) == 1


def test_run_suite_deterministic():
    a = jetinv.run_suite("compat", n=2, trials=3, seed=9)
    b = jetinv.run_suite("compat", n=2, trials=3, seed=9)
    assert a == b
    rep = json.loads(a)
    assert rep["failure_count"] == 0
    assert rep["suite"] == "compat"
