"""Smoke tests of the python bindings against worked examples."""

import json

import noethops as no

VARS = ["x1", "x2"]


def test_groebner_and_normal_form():
    gb = no.groebner_basis(VARS, ["x1", "x1 - 1"])
    assert gb == ["1"]
    nf = no.normal_form(VARS, ["x1 - x2^3"], "x1^2*x2 - x1*x2^2", order="lex")
    assert nf == "x2^7 - x2^5"
    assert no.quotient_dimension(VARS, ["x1", "x2"]) == 1
    assert no.quotient_dimension(VARS, ["x1 - x2^3"]) is None


def test_truncated_dual_dimension():
    ops = no.truncated_dual(VARS, ["x1^2", "x1*x2", "x2^2"], ["x1", "x2"], 1)
    assert ops == ["1", "d_x2", "d_x1"]


def test_certificate_and_membership():
    cert = no.noetherian_certificate(
        VARS, ["(x2 - x1^2)^2"], [["x2 - x1^2"]])
    doc = json.loads(cert)
    assert doc["components"][0]["operators"] == ["1", "d_x2"]
    assert doc["components"][0]["free_vars"] == ["x1"]
    assert doc["components"][0]["nil"] == 2

    res = no.membership(cert, "(x2 - x1^2)^2*x1")
    assert res["member"] is True
    res = no.membership(cert, "x2 - x1^2")
    assert res["member"] is False
    assert res["witness"]["operator"] == "d_x2"


def test_excess_and_ortiz():
    ex = no.excess_dual(VARS, ["x1^2", "x2"], ["x1", "x2"])
    assert ex["dimension"] == 2
    assert ex["representatives"] == ["1", "d_x1"]

    nil, comp = no.ortiz_component(VARS, ["x1^2", "x2"], ["x1", "x2"])
    assert nil == 2
    assert comp == no.groebner_basis(VARS, ["x1^2", "x2"])


def test_cross_check_against_oracle():
    gens = ["x1^2 - x2", "x1*x2 - 1"]
    member = "(x1^2 - x2)*x2 + (x1*x2 - 1)*x1"
    assert no.brute_membership(VARS, gens, member) is True
    assert no.normal_form(VARS, gens, member) == "0"
    assert no.brute_membership(VARS, gens, "x1") is False
