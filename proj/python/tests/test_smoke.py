import pytest

import ogp


def test_fixtures_validate():
    assert "FROB" in ogp.fixture_names()
    for name in ["O2", "U2,1", "I3", "FROB", "POWER"]:
        assert ogp.validate(name)["overall"] == "pass"


def test_round_trip_through_dicts():
    o2 = ogp.fixture("O2")
    assert len(o2["elements"]) == 5
    assert ogp.gray("O0", o2)["elements"][0]["dim"] == 0
    sq = ogp.gray("O1", "O1")
    assert len(sq["elements"]) == 9
    assert ogp.validate(sq)["overall"] == "pass"


def test_boundary_and_paste():
    assert sorted(ogp.boundary("O2", 1, "-")) == ["0+", "0-", "1-"]
    u = ogp.paste("U2,1", "U1,2", 1)
    assert len(u["elements"]) == 11
    assert ogp.recognize(u)["status"] == "molecule"


def test_frobenius_interpretation():
    e = ogp.interpret("FROB", ["φ", "ψ"])
    assert e["text"] == "χ[w,y] ; χ[z,y] ; c[φ] ; c[ψ]"


def test_bialgebra():
    t = ogp.tensor("Mon", "coMon")
    assert len(t["generators"]) == 4
    assert len(t["relations"]) == 10


def test_smash_inventory():
    s = ogp.smash("MonComplex", "MonComplex")
    counts = {}
    for c in s["cells"]:
        counts[c["dim"]] = counts.get(c["dim"], 0) + 1
    assert counts == {0: 1, 2: 1, 3: 4, 4: 10, 5: 12, 6: 9}


def test_permutations():
    assert ogp.perm_decompose([2, 5, 1, 4, 3]) == [2, 1, 3, 4, 3]
    assert ogp.inversion_count([3, 2, 1]) == 3


def test_errors():
    with pytest.raises(ValueError):
        ogp.validate("no such fixture")
    with pytest.raises(ValueError):
        ogp.validate({"elements": [{"id": "e", "dim": 1, "covers": [{"id": "v", "sign": "-"}]}]})
    with pytest.raises(RuntimeError):
        ogp.paste("U2,1", "U2,1", 1)
