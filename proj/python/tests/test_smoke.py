from fractions import Fraction

import pytest

import fthresh


def test_ideal_basics():
    I = fthresh.Ideal("x1^2;x1*x2;x2^3")
    assert I.ambient == 2
    assert I.contains([1, 3])
    assert not I.contains([1, 0])
    assert str(I.power(1)) == str(I)


def test_thresholds():
    assert fthresh.fthreshold("x1^2;x2^3")["value"] == Fraction(5, 6)
    r = fthresh.symbolic_threshold("x1*x2;x2*x3;x1*x3")
    assert r["value"] == 2
    assert r["method"] == "symbolic_squarefree"
    assert fthresh.rees_valuations("x1^2;x2^3") == [([3, 2], 6)]


def test_nu_sequence_matches_single_calls():
    F = fthresh.Filtration.symbolic(fthresh.Ideal("x1*x2;x2*x3;x1*x3"))
    seq = fthresh.nu_sequence(F, p=3, e_max=3)
    assert [r["nu"] for r in seq] == [2 * (3**e - 1) for e in range(4)]
    assert fthresh.nu(F, p=3, e=2)["nu"] == 16
    assert seq == fthresh.nu_sequence(F, p=3, e_max=3, threads=3)


def test_bracket_and_descriptor():
    b = fthresh.bracket({"rule": "ceiling", "ideal": "m", "n": 2, "beta": "10/7"}, p=2, e_max=6)
    assert b["lower"] <= Fraction(7, 5) <= b["upper"]
    assert b["upper_certified"]


def test_hypergraph_bounds():
    rep = fthresh.hypergraph_bounds(5, [[0, 1], [1, 2], [2, 3], [3, 4], [0, 4]])
    assert rep["fractional_matching"] == Fraction(5, 2)
    assert rep["ordinary_ok"] and rep["symbolic_ok"]


def test_errors():
    with pytest.raises(ValueError):
        fthresh.Ideal("x1*y2")
    with pytest.raises(ValueError):
        fthresh.Filtration.symbolic(fthresh.Ideal("x1^2"))


def test_cli_and_gallery():
    code, out, _ = fthresh.run_cli(["symbolic", "--ideal", "x1*x2;x2*x3;x1*x3"])
    assert code == 0 and '"value":"2"' in out
    rows = fthresh.verify_examples("non-exam")
    assert rows and all(r[3] for r in rows)
