import json

import pytest

import knotpoly as kp

TREFOIL = "2: 1 1 1"
FIGURE_EIGHT = "3: 1 -2 1 -2"


def test_braid_basics():
    b = kp.Braid(TREFOIL)
    assert b.strands == 2
    assert b.letters == [1, 1, 1]
    assert len(b) == 3
    assert str(b) == TREFOIL
    assert b.is_knot()
    assert kp.Braid("2: 1 1").components() == 2
    assert b * b.inverse() == kp.Braid("2: 1 1 1 -1 -1 -1")


def test_homfly_values():
    p = kp.homfly(TREFOIL)
    assert p == kp.Poly.parse("-v^4 + 2*v^2 + v^2*z^2")
    assert str(p) == "2*v^2 - 1*v^4 + 1*v^2*z^2"
    assert sorted(p.terms()) == [(2, 0, 2), (2, 2, 1), (4, 0, -1)]
    assert kp.homfly(TREFOIL, oracle=True) == p
    assert kp.homfly(kp.Braid("3: 1 1 1 2 2 2")) == p * p
    assert kp.homfly(FIGURE_EIGHT, max_z=0) == p.__class__.parse("v^-2 - 1 + v^2")
    assert kp.Poly.from_json(p.json()) == p


def test_dubrovnik_and_kauffman():
    d = kp.dubrovnik(TREFOIL)
    assert d == kp.dubrovnik(TREFOIL, reverse=True)
    assert kp.dubrovnik_from_kauffman_f(kp.kauffman_f_from_d(d)) == d
    with pytest.raises(kp.BudgetExceeded):
        kp.dubrovnik("2: " + " ".join(["1"] * 9), max_crossings=5)


def test_alexander():
    assert kp.alexander(FIGURE_EIGHT).terms() == [(-1, -1), (0, 3), (1, -1)]
    for word in (TREFOIL, FIGURE_EIGHT, "3: 1 1 1 2 -1 2"):
        assert kp.alexander_from_homfly(kp.homfly(word)) == kp.alexander(word)


def test_cables():
    pattern = kp.cable_pattern(2, 1)
    assert pattern.winding == 2
    assert str(pattern.word) == "2: 1"
    word = kp.cable(TREFOIL, pattern)
    assert word.strands == 4
    assert kp.homfly(kp.cable("3: 1 2", "2: 1")) == kp.Poly.parse("1")
    assert kp.cable(TREFOIL, kp.Pattern.trivial()) == kp.Braid(TREFOIL)
    with pytest.raises(kp.KnotpolyError):
        kp.cable_pattern(2, 2)


def test_moments_round_trip():
    f = kp.Laurent([(-2, 1), (0, -1), (2, 1)])
    m = kp.moments(f, 3)
    assert m == [1, 0, 8]
    assert kp.reconstruct([-2, 0, 2], m) == f
    big = kp.Laurent([(0, 10**30)])
    assert kp.moments(big, 1) == [10**30]


def test_reports():
    r = kp.verify_trivial_cables(1, 0, 1)
    assert r.passed
    assert r.verdict == "PASS"
    doc = json.loads(r.render("json", timing=False))
    assert doc["kind"] == "trivial-cables"
    assert "**Verdict:** PASS" in r.render("md")
    cfg = json.dumps({"base": "3: 1 2", "w": 1, "family_size": 1})
    assert kp.run_experiment(cfg).render(timing=False) == kp.run_experiment(cfg, jobs=2).render(timing=False)
    assert kp.verify_moment_determination(TREFOIL, FIGURE_EIGHT).passed


def test_errors():
    with pytest.raises(kp.ParseError):
        kp.Braid("3: 1 5")
    with pytest.raises(ValueError):
        kp.alexander("2: 1 1")
    with pytest.raises(kp.ParseError):
        kp.run_experiment('{"base": "3: 1 2", "colour": 1}')
