import json

import pytest

from spinorfact import cli, motions, serialize
from spinorfact.multivector import Multivector
from spinorfact.polynomials import MVPolynomial


def run(argv):
    return cli.main(argv)


def test_verify_exit_zero(tmp_path, capsys):
    assert run(["verify", "imagespace", "--out", str(tmp_path)]) == 0
    report = json.loads((tmp_path / "verify-imagespace.json").read_text())
    assert report["pass"]
    out = capsys.readouterr().out
    assert "PASS" in out


def test_verify_exit_one_on_failing_tolerance(tmp_path):
    cfg = tmp_path / "strict.json"
    cfg.write_text(json.dumps({"second_form_tol": 1e-30, "grid_n": 9,
                               "circle_samples": 48, "family_samples": 3}))
    code = run(["verify", "villarceau", "--config", str(cfg),
                "--out", str(tmp_path)])
    assert code == 1


def test_usage_errors(tmp_path):
    with pytest.raises(SystemExit) as exc:
        run(["verify", "bogus", "--out", str(tmp_path)])
    assert exc.value.code == 2
    assert run(["factor", "--input", str(tmp_path / "missing.json"),
                "--out", str(tmp_path)]) == 2
    assert run(["family", "villarceau", "--params", "1,1,1",
                "--out", str(tmp_path)]) == 2


def test_factor_flagship(tmp_path):
    assert run(["factor", "--motion", "villarceau",
                "--out", str(tmp_path)]) == 0
    rep = json.loads((tmp_path / "factor.json").read_text())
    assert rep["kind"] == "family"
    assert rep["named_family"] == "villarceau"
    assert rep["variety"]["dimension"] == 3
    assert len(rep["variety"]["residuals"]) == 1


def test_factor_isolated(tmp_path):
    toy = MVPolynomial.t_minus(Multivector.blade("e12")) \
        * MVPolynomial.t_minus(Multivector.blade("e13"))
    src = tmp_path / "toy.json"
    serialize.dump_json(serialize.poly_to_json(toy), str(src))
    assert run(["factor", "--input", str(src), "--out", str(tmp_path)]) == 0
    rep = json.loads((tmp_path / "factor.json").read_text())
    assert rep["kind"] == "isolated"
    assert serialize.mv_from_json(rep["h2"]) == Multivector.blade("e13")


def test_family_command(tmp_path):
    assert run(["family", "circular-translation", "--params", "1/2,-3",
                "--out", str(tmp_path)]) == 0
    rep = json.loads((tmp_path / "family-circular-translation.json")
                     .read_text())
    assert rep["verification"]["product_ok"]
    # two chart parameters are projected onto the sphere
    assert run(["family", "villarceau", "--params", "2,3",
                "--out", str(tmp_path)]) == 0


def test_trajectory_csv(tmp_path, capsys):
    assert run(["trajectory", "--motion", "villarceau", "--point", "2,0,0",
                "--samples", "16", "--out", str(tmp_path)]) == 0
    lines = (tmp_path / "trajectory.csv").read_text().splitlines()
    meta = [l for l in lines if l.startswith("#")]
    data = [l for l in lines if l and not l.startswith("#")]
    assert meta and data[0] == "t,x,y,z"
    assert len(data) == 17  # header + 16 samples
    assert "cocircular (exact): True" in capsys.readouterr().out


def test_trajectory_ideal_points_warn(tmp_path, capsys):
    # the tracked point passes through infinity under the circular
    # translation at t = 0 when it starts on the singular circle
    assert run(["trajectory", "--motion", "identity", "--point", "1,1,1",
                "--samples", "8", "--out", str(tmp_path)]) == 0
    data = (tmp_path / "trajectory.csv").read_text().splitlines()
    assert sum(1 for l in data if not l.startswith("#")) == 9


def test_surface_obj(tmp_path, capsys):
    assert run(["surface", "--resolution", "9", "--point", "2,0,0",
                "--out", str(tmp_path)]) == 0
    lines = (tmp_path / "surface.obj").read_text().splitlines()
    assert sum(1 for l in lines if l.startswith("v ")) == 81
    assert sum(1 for l in lines if l.startswith("f ")) == 64
    assert any("cocircular" in l for l in lines if l.startswith("#"))


def test_nullpoints(tmp_path, capsys):
    assert run(["nullpoints", "--motion", "villarceau",
                "--out", str(tmp_path)]) == 0
    rep = json.loads((tmp_path / "nullpoints.json").read_text())
    assert rep["secant_all_singular"] and rep["tangents_all_singular"]
    assert run(["nullpoints", "--motion", "identity",
                "--out", str(tmp_path)]) == 0
    rep = json.loads((tmp_path / "nullpoints.json").read_text())
    assert rep.get("degenerate")


def test_classify(capsys):
    assert run(["classify", "--a", '{"1": "1"}', "--b", '{"e12": "-1"}']) == 0
    assert "rotation" in capsys.readouterr().out


def test_global_flags_after_subcommand(tmp_path):
    assert run(["verify", "spinor", "--seed", "3", "--out",
                str(tmp_path)]) == 0
    assert run(["--out", str(tmp_path), "verify", "spinor"]) == 0
