import _liehr as liehr
import pytest


def test_rep_info():
    info = liehr.rep_info("B3", "[0,0,1]")
    assert info["degree"] == 8
    assert info["real_dim"] == 8
    assert info["reality"] == 1


def test_product_rep():
    assert liehr.rep_dim("Sp1*Spin11", "[1]x[0,0,0,0,1]") == 64
    assert liehr.rep_dim("A1*C5", "[3]x[1,0,0,0,0]") == 40


def test_indicator():
    assert liehr.fs_indicator("E7", "[0,0,0,0,0,0,1]") == -1
    # quaternionic x quaternionic is real
    assert liehr.fs_indicator("A1*A5", "[1]x[0,0,1,0,0]") == 1


def test_min_degrees():
    assert liehr.min_degree_real("G2") == 7
    assert liehr.min_degree_quaternionic("Sp3") == 7
    assert liehr.min_degree_quaternionic("G2") is None


def test_homrank():
    assert liehr.homogeneity_rank("thm11-so4spin7") == 0
    assert liehr.homogeneity_rank("so-vector-9") == -1


def test_diophantine():
    sols = liehr.solve_eq9()
    assert [(s["p"], s["q"], s["l"], s["m"]) for s in sols] == [(1, 1, 2, 4)]
    sols = liehr.solve_eq10()
    assert [(s["p"], s["q"], s["m"]) for s in sols] == [(1, 1, 3), (1, 1, 5)]


def test_parse_errors():
    with pytest.raises(liehr.ParseError):
        liehr.rep_dim("Q3", "[1]")
    with pytest.raises(liehr.DomainError):
        liehr.rep_dim("B3", "[1]")


def test_classify_small():
    rep = liehr.classify(64)
    assert rep["deferred"] == 0
    names = {e["name"] for e in rep["exceptional"]}
    assert "SO(4)xSpin(7)" in names
    assert "Sp(1)xSpin(11)" in names


def test_verify():
    assert liehr.verify("diophantine")["passed"]
