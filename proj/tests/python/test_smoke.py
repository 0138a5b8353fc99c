import koszul
import pytest


def test_dual_character():
    f = koszul.os_dual_char(4, 1)
    assert f.degree == 4
    assert f.dim() == "6"
    assert f.expand("s") == {(4,): "1", (3, 1): "1", (2, 2): "1"}
    assert f == koszul.SymFunc.h([2, 2])


def test_hilbert_and_reciprocity():
    a = koszul.hilbert("braid:4", "os", 4)
    b = koszul.hilbert("braid:4", "os-dual", 4)
    assert a == [1, 6, 11, 6, 0]
    assert b[:3] == [1, 6, 25]
    assert koszul.koszul_reciprocity("braid:4", 6)


def test_json_round_trip():
    f = koszul.vg_dual_char(4, 3)
    assert koszul.SymFunc.from_json(f.to_json("h")) == f


def test_errors_are_python_exceptions():
    with pytest.raises(koszul.KoszulError):
        koszul.hilbert("braid:x", "os", 3)


def test_stability_and_counts():
    r = koszul.stability("os-dual", 1, 7)
    assert r["onset"] == 4
    assert koszul.mansour_munagi_count(5, 3) == 5
    assert koszul.branching_verify(5, 2, "vg-dual")
