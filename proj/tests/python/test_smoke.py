import os

import pytest

import palfpy

SAMPLES = os.environ.get("PALF_SAMPLES_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "samples"))


def read(name):
    with open(os.path.join(SAMPLES, name + ".front")) as f:
        return f.read()


def test_tb_unknot_and_trefoil():
    assert palfpy.tb(read("unknot")) == {"A": -1}
    assert palfpy.tb(read("trefoil")) == {"A": 1}


def test_build_fishtail():
    doc = palfpy.build(read("fishtail"))
    h = doc["header"]
    assert doc["palf-format"] == 1
    assert (h["p"], h["q"], h["m"], h["genus"], h["boundary"]) == (7, 8, 43, 21, 2)
    assert len(doc["cycles"]) == 43


def test_verify_round_trip_and_tamper():
    doc = palfpy.build(read("trefoil"))
    assert palfpy.verify(doc)["ok"]
    doc["header"]["m"] -= 1
    report = palfpy.verify(doc)
    assert not report["ok"]
    failed = {i["name"] for i in report["items"] if not i["pass"]}
    assert "euler characteristic" in failed


def test_grid_text():
    assert palfpy.grid(read("unknot")).startswith("grid 2 3")


def test_family():
    genera, certified = palfpy.family_genera(read("trefoil"), [(5, 6), (7, 9), (11, 13)])
    assert genera == [10, 24, 60]
    assert certified
    with pytest.raises(palfpy.PalfError):
        palfpy.family_genera(read("trefoil"), [(5, 6), (5, 6)])


def test_errors():
    with pytest.raises(palfpy.PalfError, match="line 3"):
        palfpy.tb("components: 1\nlcusp 0 A\nfrob 1\nrcusp 0\n")
    with pytest.raises(palfpy.PalfError):
        palfpy.alexander_torus(2, 4)
    assert palfpy.alexander_torus(2, 5) == ["1", "-1", "1", "-1", "1"]
