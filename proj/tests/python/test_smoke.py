import json
from pathlib import Path

import jsonschema
import pytest

import ctlhom

ROOT = Path(__file__).resolve().parents[2]
SCHEMA = json.loads((ROOT / "docs" / "cli-output.schema.json").read_text())
FIXTURES = ROOT / "tests" / "fixtures"


def groups(result):
    return [(g["free_rank"], g["torsion"]) for g in result["groups"]]


def test_classical_homology():
    assert groups(ctlhom.homology(ctlhom.build("sphere(2)"))) == [(1, []), (0, []), (1, [])]
    assert groups(ctlhom.homology(ctlhom.build("rp2"))) == [(1, []), (0, [2]), (0, [])]
    assert [g["free_rank"] for g in ctlhom.homology(ctlhom.build("rp2"), coeff="z/2")["groups"]] == [1, 1, 1]


def test_borel_moore_and_compact_supports():
    line = ctlhom.build("line")
    bm = ctlhom.bm_homology(line)
    assert bm["stable"] and groups(bm) == [(0, []), (1, [])]
    assert bm["caveats"]
    assert groups(ctlhom.compact_cohomology(line)) == [(0, []), (1, [])]
    assert all(g["free_rank"] == 0 for g in ctlhom.bm_homology(ctlhom.build("ray"))["groups"])
    assert groups(ctlhom.homology(ctlhom.build("ray")))[0] == (1, [])


def test_pairing_and_properness():
    assert [[abs(v) for v in row] for row in ctlhom.pairing_matrix(ctlhom.build("line"), 1)] == [[1]]
    for fixture in ctlhom.theorem41_check():
        assert fixture["agree"]
        assert fixture["proper"] == fixture["expected_proper"]


def test_errors():
    with pytest.raises(ctlhom.DescriptorError):
        ctlhom.build("klein")
    with pytest.raises(ctlhom.ValidationError):
        ctlhom.load(FIXTURES / "bad_identity.json")
    with pytest.raises(ctlhom.PresentationError):
        ctlhom.load(FIXTURES / "noninjective_gluing.json")
    assert issubclass(ctlhom.ParseError, ctlhom.Error)


def test_round_trip(tmp_path):
    torus = ctlhom.build("torus")
    ctlhom.save(torus, tmp_path / "torus.json")
    back = ctlhom.load(tmp_path / "torus.json")
    assert back.counts() == [7, 21, 14]
    assert back.to_json() == torus.to_json()


def test_laws():
    report = ctlhom.laws(2)
    assert report["ok"] and len(report["sections"]) == 6


def cli_json(*args):
    code, out, err = ctlhom.run_cli([*args, "--json"])
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    return code, doc


SPACES = [s["descriptor"].replace("(n)", "(2)") for s in ctlhom.spaces()]


@pytest.mark.parametrize("space", SPACES)
@pytest.mark.parametrize("command", ["homology", "bm-homology", "cohomology", "cohomology-c", "check"])
def test_json_schema(space, command):
    code, doc = cli_json(command, space)
    assert code == 0
    assert doc["command"] == command


@pytest.mark.parametrize("space", ["line", "plane", "torus"])
def test_json_schema_pairing(space):
    code, doc = cli_json("pairing", space, "--degree", "1")
    assert code == 0


def test_json_schema_other_commands():
    assert cli_json("spaces")[0] == 0
    assert cli_json("laws", "--max-carrier", "2")[0] == 0
    code, doc = cli_json("bm-homology", str(FIXTURES / "loop_ray.json"), "--max-depth", "5")
    assert code == 4 and not doc["stabilization"]["stable"]
    code, doc = cli_json("check", str(FIXTURES / "broom.json"))
    assert code == 3 and doc["local_finiteness"]["witness"] == "v0"


def test_determinism():
    assert ctlhom.run_cli(["cohomology-c", "cylinder", "--json"]) == ctlhom.run_cli(["cohomology-c", "cylinder", "--json"])
