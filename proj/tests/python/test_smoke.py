"""Smoke tests for the python bindings (skipped when not installed)."""

import pytest

netforge = pytest.importorskip("netforge")


def test_counts():
    assert netforge.count_latin(3) == 12
    assert netforge.count_latin(4) == 576
    assert netforge.count_latin(6, reduced=True) == 9408


def test_squares_and_orthogonality():
    a = netforge.cyclic_square("(123)", 3)
    b = netforge.cyclic_square("(132)", 3)
    assert a.order == 3
    assert a.grid() == [[1, 2, 3], [2, 3, 1], [3, 1, 2]]
    assert netforge.are_orthogonal(a, b)
    assert not netforge.are_orthogonal(a, a)
    # nested-list and text constructions agree
    assert netforge.LatinSquare.from_grid([[1, 2, 3], [2, 3, 1], [3, 1, 2]]) == a
    assert netforge.LatinSquare.from_grid(a.to_text()) == a


def test_mate_parity():
    for k in (3, 4, 5, 6, 7):
        cycles = "(" + " ".join(str(i) for i in range(1, k + 1)) + ")"
        has = netforge.has_orthogonal_mate(netforge.cyclic_square(cycles, k))
        assert has == (k % 2 == 1)


def test_reduced_mates_of_cyclic_5():
    mates = netforge.orthogonal_mates(netforge.cyclic_square("(1 2 3 4 5)", 5))
    expect = {
        netforge.cyclic_square(c, 5).to_text()
        for c in ("(15432)", "(14253)", "(13524)")
    }
    assert {m.to_text() for m in mates} == expect


def test_classify_k3():
    report = netforge.classify(3)
    assert report["k"] == 3
    assert report["total_pairs"] == 72
    assert len(report["classes"]) == 1


def test_realize_and_verify():
    a = netforge.cyclic_square("(123)", 3)
    b = netforge.cyclic_square("(132)", 3)
    verdict = netforge.realize(a, b)
    assert verdict["outcome"] == "Realizable"
    assert verdict["certificate"]["rows"]

    chi = netforge.incidence(a, b)
    assert len(chi["points"]) == 9
    ok, witness = netforge.verify_certificate(netforge.hessian_certificate(), chi)
    assert ok and witness == ""

    # corrupting an entry produces a witness
    cert = netforge.hessian_certificate()
    cert["rows"][5][1] = "w + 7"
    ok, witness = netforge.verify_certificate(cert, chi)
    assert not ok and witness


def test_realize_k4_empty():
    l1 = netforge.LatinSquare.from_grid(
        [[1, 2, 3, 4], [2, 1, 4, 3], [3, 4, 1, 2], [4, 3, 2, 1]]
    )
    l2 = netforge.LatinSquare.from_grid(
        [[1, 2, 3, 4], [4, 3, 2, 1], [2, 1, 4, 3], [3, 4, 1, 2]]
    )
    verdict = netforge.realize(l1, l2)
    assert verdict["outcome"] == "Empty"
    assert "certificate" not in verdict
