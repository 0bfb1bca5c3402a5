"""Smoke tests for the python bindings."""

import pytest

import tqf


def test_evaluate_and_discriminant():
    assert tqf.evaluate("Q", "x1*x2 + x3^2", ["1", "1", "1"]) == "2"
    assert tqf.half_discriminant("Q", "x1*x2 + x3^2") == "-1"
    assert tqf.is_semiregular("Q", "x1*x2 + x3^2")
    assert not tqf.is_semiregular("Fp:2", "x1^2 + x2^2 + x3^2")


def test_classify():
    assert tqf.classify("Fp:2", "x1*x2") == {
        "stratum": 2,
        "P3": "0",
        "semiregular": False,
    }
    assert tqf.classify("Q", "x1*x2 + x3^2")["stratum"] == 1


def test_clifford_structure_constants():
    alg = tqf.clifford("Q", "x1*x2 + x3^2", check_table=True)
    assert alg["basis"] == ["w", "e1", "e2", "e3"]
    # e1 * e1 = e1 in theta(q1, 0)
    assert alg["c"][1][1] == ["0", "1", "0", "0"]
    # symbolic coefficients stay symbolic
    sym = tqf.clifford("ZPoly:a", "a*x1^2 + x2*x3", check_table=True)
    assert sym["ring"] == "ZPoly:a"


def test_census_and_uniqueness():
    report = tqf.census("Fp:2")
    assert report["similarity_classes"] == 5
    assert report["algebra_iso_classes"] == 5
    assert report["bijection_verified"]
    assert report["stratum_form_counts"]["3"] == 7
    assert report["stratum_form_counts"]["4"] == 1
    assert tqf.azumaya_uniqueness("Fp:2") is True
    assert tqf.azumaya_uniqueness("Fp:3") is None


def test_normalize_round_trip():
    g = tqf.normalize("Fp:2", "x1^2 + x1*x2 + x3^2")
    assert tqf.act("Fp:2", g, "x1^2 + x1*x2 + x3^2") == "x3^2 + x1*x2"
    with pytest.raises(Exception):
        tqf.normalize("Q", "0")


def test_lift_and_similarity():
    result = tqf.lift(
        "Q",
        "x1*x2",
        "x1*x2",
        ["1", "0", "0", "0", "0", "1", "0", "0", "0", "0", "-1", "0", "0", "0", "0", "-1"],
        k=0,
    )
    assert result["verified"]
    assert result["l"] == "1"
    assert result["g"] == ["-1", "0", "0", "0", "-1", "0", "0", "0", "1"]

    witness = tqf.similar("Fp:2", "x1^2", "x3^2")
    assert witness is not None
    assert tqf.similar("Fp:2", "x1*x2 + x3^2", "x3^2") is None


def test_selftest():
    assert all(passed for _, passed in tqf.selftest())
