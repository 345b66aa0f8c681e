import math

import pytest

import ancensus


def test_version():
    assert ancensus.__version__ == "0.1.0"


def test_discriminant_golden():
    # t^3 - 21 t - 7 has discriminant 35721 = 189^2.
    assert ancensus.discriminant(["-7", "-21", "0", "1"]) == "35721"
    assert ancensus.discriminant(["-1", "-1", "0", "1"]) == "-23"


def test_fiber_disc_poly():
    # n = 3, base (-3): p(y) = 108 - 27 y^2.
    assert ancensus.fiber_disc_poly(3, ["-3"]) == ["108", "0", "-27"]
    curve = ancensus.classify_fiber(3, ["0"])
    assert not curve["geometrically_irreducible"]
    assert curve["witness_constant"] == "-27"


def test_certify_an():
    assert ancensus.certify_an(["-7", "-21", "0", "1"]) == "CertifiedAn"
    assert ancensus.certify_an(["1", "1", "0", "0", "1"]) == "CertifiedNotAn(NonSquareDisc)"
    assert ancensus.certify_an(["4", "0", "0", "0", "1"]) == "CertifiedNotAn(Reducible)"


def test_same_field_and_disc():
    f = ["-1", "-3", "0", "1"]  # t^3 - 3t - 1
    g = ["1", "0", "-3", "1"]   # shift of the same field
    assert ancensus.same_field(f, g)
    assert ancensus.field_disc_cubic([f]) == "81"
    assert ancensus.field_disc_cubic([["-7", "-21", "0", "1"]]) == "49"


def test_oracle_and_census():
    assert ancensus.cyclic_cubic_oracle(100) == 2
    assert ancensus.cyclic_cubic_oracle(1000) == 5
    summary = ancensus.run_census(n=3, xmax=1000, c_num=4)
    last = summary["checkpoints"][-1]
    assert last["x"] == 1000
    assert last["fields"] == 5
    assert last["fields"] <= last["an_polys"] <= last["points_on_r"]


def test_exponents_and_bound():
    e = ancensus.theorem_exponents(6)
    assert e["theorem_exp"] == pytest.approx(1.7)
    assert e["schmidt_exp"] == pytest.approx(2.0)
    expected = 16 * math.log10(6.0) + 0.5 * 2.0 + 7 * math.log10(math.log(100.0))
    assert ancensus.pila_bound_log10(2, 100.0) == pytest.approx(expected, rel=1e-12)


def test_fiber_points_and_reducible_scan():
    assert ancensus.count_fiber_points(3, ["-3"], 100) == 2
    assert ancensus.count_fiber_points(3, ["-3"], 100, include_singular=True) == 4
    report = ancensus.scan_reducible_fibers(3, 10)
    assert report["total_bases"] == 21
    assert report["hits"] == [["0"]]
