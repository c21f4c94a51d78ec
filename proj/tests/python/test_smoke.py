import pytest

import spincert


def test_presets_and_scenarios():
    names = spincert.presets()
    assert "CP2" in names and "FakePlanePartner" in names
    assert spincert.preset("F1")["K"] == [-3, 1]
    assert "fake-plane" in spincert.scenarios()


def test_lattice_check():
    out = spincert.lattice_check({"gram": [[1, 0], [0, -1]]})
    assert out["b2_plus"] == 1 and out["b2_minus"] == 1 and not out["even"]
    with pytest.raises(spincert.SpincertError):
        spincert.lattice_check({"gram": [[2]]})


def test_index_on_the_plane():
    out = spincert.index("CP2", [1], 7)
    assert out["index"]["d1"] == 3 * 7 - 1
    assert out["index"]["d"] - out["index"]["d1"] == 1 - out["index"]["chi_C_E"]


def test_walls_on_f1():
    out = spincert.walls("F1", [1, 0], 1, [5, 4], [5, -4])
    assert sorted(w["e"]["coords"] for w in out["separating_walls"]) == [[1, -2], [1, 2]]
    assert all(w["e_square"] == -3 for w in out["separating_walls"])


def test_simplicity_and_verdict():
    cert = spincert.simplicity("FakePlanePartner", [1], [1])
    assert cert["simple"]
    v = spincert.verdict("FakePlanePartner", [1], [1], 7)
    assert v["status"] == "CertifiedNonzero"
    assert spincert.verdict("CP2", [1], [-5], 7)["status"] == "CertifiedZero"


def test_scenarios():
    r = spincert.scenario("fake-plane", c2=7)
    assert r["outcome"] == "Contradiction"
    assert r["transport"]["bundle"]["c2"] == 13
    assert spincert.scenario("control-identity")["outcome"] == "Inconclusive"
    spec = {"source": "CP2", "target": "FakePlanePartner", "pullback": [[1]], "c1": [1], "c2": 7, "H": [1]}
    assert spincert.scenario(spec=spec)["outcome"] == "Contradiction"


def test_decide_quadratic():
    holds, witness = spincert.decide_quadratic({"xx": -8, "x": 5})
    assert holds and witness is None
    holds, witness = spincert.decide_quadratic({"xx": 1, "c": -4})
    assert not holds and witness[0] ** 2 > 4
    # Indefinite on an infinite cone: refused rather than guessed.
    with pytest.raises(spincert.SpincertError, match="UndecidableForm"):
        spincert.decide_quadratic({"xy": 1}, [(1, 0, 1), (0, -1, 1)])


def test_big_integers_cross_the_boundary():
    c1, c2 = 10**30, 10**61
    out = spincert.index("CP2", [c1], c2)
    # Values outside int64 come back as decimal strings.
    r = {k: int(v) for k, v in out["index"].items()}
    assert r["d"] == 4 * c2 - c1 * c1 - 3
    assert r["d1"] == r["d"] - (1 - r["chi_C_E"])
    assert int(out["bundle"]["c2"]) == c2
