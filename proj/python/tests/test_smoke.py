import os
from fractions import Fraction
from pathlib import Path

import pytest

import surfcalc

FIXTURES = Path(os.environ.get("SURFCALC_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "fixtures"))


def fixture(name):
    return surfcalc.load(str(FIXTURES / name))


def test_surface_properties_and_validation():
    p2 = fixture("p2.json")
    assert p2.rank == 1
    assert "line_x" in p2.curves
    assert surfcalc.validate(p2)["valid"] is True
    assert surfcalc.intersect(p2, [2], [3]) == 6


def test_riemann_roch_on_plane():
    p2 = fixture("p2.json")
    for d in range(6):
        assert surfcalc.euler_characteristic(p2, [d]) == (d + 1) * (d + 2) // 2


def test_reider_ruled_fibre():
    report = surfcalc.reider_freeness(fixture("p1xp1.json"), [1, 3])
    assert report["verdict"] == "obstruction-found"
    assert report["witnesses"][0]["description"] == "F2"


def test_seshadri_line_and_zariski():
    p2 = fixture("p2.json")
    assert surfcalc.seshadri(p2, [1], "x")["value"] == "1"
    positive, negative = surfcalc.zariski(fixture("bl_p2.json"), [1, 1])
    assert positive == [1, 0]
    assert negative == [("E", Fraction(1))]


def test_mumford_and_numbers():
    assert surfcalc.mumford_pullback([[-2, 1], [1, -2]], {"D": [1, 0]}, "D") == [Fraction(2, 3), Fraction(1, 3)]
    assert surfcalc.mumford_intersect([[-2]], {"A": [1], "B": [1]}, "A", "B") == Fraction(1, 2)
    assert surfcalc.cusp_bound(7) == (3, 10)
    m = surfcalc.matsusaka(1, 1)
    assert (m["m_free"], m["m_very_ample"]) == (2, 4)
    assert surfcalc.pluricanonical_status(1, 4)[0] == "yes"
    assert surfcalc.k3_end_euler(1, 3, 4) == 2


def test_discriminant_twist_invariant():
    q = fixture("p1xp1.json")
    c1, c2, n = [1, 1], 3, [1, 2]
    twisted_c2 = c2 + surfcalc.intersect(q, c1, n) + surfcalc.intersect(q, n, n)
    twisted_c1 = [a + 2 * b for a, b in zip(c1, n)]
    assert surfcalc.discriminant(q, c1, c2) == surfcalc.discriminant(q, twisted_c1, int(twisted_c2))


def test_errors_map_to_python_exceptions():
    p2 = fixture("p2.json")
    with pytest.raises(ValueError):
        surfcalc.intersect(p2, [1, 2], [1])
    with pytest.raises(surfcalc.InputError):
        surfcalc.load(str(FIXTURES / "bad_signature.json"))
