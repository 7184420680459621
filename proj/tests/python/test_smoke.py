"""Smoke tests of the python extension module."""

from fractions import Fraction

import pytest

import cubicgit as cg

FERMAT4 = "x1^3+x2^3+x3^3+x4^3+x5^3+x6^3"
FERMAT5 = "x0^3+x1^3+x2^3+x3^3+x4^3+x5^3+x6^3"


def test_parse_and_format():
    f = cg.parse_poly("x2^3 + x1^3", 7)
    assert str(f) == "x1^3 + x2^3"
    assert f.degree == 3
    assert f.n_vars == 7
    with pytest.raises(ValueError):
        cg.parse_poly("x1^2 + x1", 7)


def test_monomial_counts():
    assert cg.monomial_count(6, 2) == 21
    assert cg.monomial_count(7, 3) == 84


def test_mu_pair_is_exact():
    y = cg.parse_poly(FERMAT4, 7)
    h = cg.parse_poly("x0", 7)
    lam = [6, -1, -1, -1, -1, -1, -1]
    assert cg.mu(y, lam) == -3
    assert cg.mu(h, lam) == 6
    assert cg.mu_pair(y, h, Fraction(49, 100), lam) == Fraction(-3, 50)


def test_torus_stability_roundtrip():
    y = cg.parse_poly(FERMAT4, 7)
    h = cg.parse_poly("x0", 7)
    v = cg.torus_stability(y, h, Fraction(49, 100))
    assert v["status"] == "TorusUnstable"
    assert v["verified"]
    assert v["destabilizer"] == [6, -1, -1, -1, -1, -1, -1]

    v2 = cg.torus_stability(cg.parse_poly(FERMAT5, 7), h, Fraction(1, 2))
    assert v2["status"] == "TorusStrictlySemistable"
    assert sum(v2["hull_coefficients"]) == 1


def test_limit_pair():
    y = cg.parse_poly(FERMAT4 + "+x0*x1*x2", 7)
    h = cg.parse_poly("x0", 7)
    y0, h0 = cg.limit_pair(y, h, [-6, 1, 1, 1, 1, 1, 1])
    assert str(y0) == "x1^3 + x2^3 + x3^3 + x4^3 + x5^3 + x6^3"
    assert str(h0) == "x0"


def test_jacobian_ring():
    f5 = cg.parse_poly(FERMAT5, 7)
    assert cg.graded_dim(f5, 2) == 21
    assert cg.intermediate_jacobian_dim(f5) == 21
    s = cg.is_smooth(f5)
    assert s["smooth"] and s["witness_p"] is not None
    fourfold = cg.parse_poly("x0^3+x1^3+x2^3+x3^3+x4^3+x5^3", 6)
    assert cg.hodge_primitive(fourfold, 1) == 1


def test_classify_point():
    nodal = cg.parse_poly(
        "x0*x1^2+x0*x2^2+x0*x3^2+x0*x4^2+x0*x5^2+x0*x6^2+" + FERMAT4, 7)
    c = cg.classify_point(nodal, [1, 0, 0, 0, 0, 0, 0])
    assert c["kind"] == "Node"
    assert c["hessian_rank"] == 6


def test_fiber():
    fam = cg.ContainmentFamily(cg.parse_poly(FERMAT4, 7))
    assert fam.w2_dimension == 15
    y = cg.parse_poly(FERMAT4 + "+x0*x1^2", 7)
    nf = cg.normal_form(fam, y)
    assert nf["c2"][0] == Fraction(-1, 3)
    assert nf["c3"] == Fraction(2, 27)
    z = cg.group_act([Fraction(1, 2), 0, 0, 0, 0, 0], Fraction(3), y)
    assert cg.fiber_equal(fam, y, z)


def test_wall_scan_with_small_box():
    y = cg.parse_poly(FERMAT4, 7)
    h = cg.parse_poly("x0", 7)
    walls = cg.wall_scan(y, h, Fraction(0), Fraction(1), box_bound=7)
    assert [w["t"] for w in walls] == [Fraction(1, 2)]
    assert walls[0]["left"] == "TorusUnstable"
    assert walls[0]["at"] == "TorusStrictlySemistable"
