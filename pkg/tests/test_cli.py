"""CLI interface checks, invoked in-process for speed."""

import json

from tristab.cli import main
from tristab.convex import halfspace
from tristab.core import Vec
from tristab.lemma import LemmaInstance, PencilInstance
from tristab.serialize import dumps, lemma_instance_to_json


def _run(capsys, argv):
    rc = main(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_gen_emits_parseable_config(capsys):
    rc, out, _ = _run(capsys, ["gen", "--seed", "5", "--bound", "12"])
    assert rc == 0
    data = json.loads(out)
    assert len(data["matrix"]) == 3
    assert all(len(row) == 3 for row in data["matrix"])


def test_gen_is_deterministic(capsys):
    _, first, _ = _run(capsys, ["gen", "--seed", "8", "--bound", "40"])
    _, second, _ = _run(capsys, ["gen", "--seed", "8", "--bound", "40"])
    assert first == second


def test_gen_rejects_bad_bound(capsys):
    rc, _, err = _run(capsys, ["gen", "--seed", "1", "--bound", "0"])
    assert rc == 1
    assert err


def test_gen_verify_roundtrip(tmp_path, capsys):
    rc, out, _ = _run(capsys, ["gen", "--seed", "7", "--bound", "20"])
    assert rc == 0
    cfg = tmp_path / "cfg.json"
    cfg.write_text(out)

    rc, out, _ = _run(capsys, ["verify", str(cfg)])
    assert rc == 0
    cert = json.loads(out)
    assert cert["verdict"] in {"red", "blue", "both"}
    assert "trace" not in cert

    rc, out, _ = _run(capsys, ["verify", str(cfg), "--trace"])
    assert rc == 0
    traced = json.loads(out)
    assert traced["verdict"] == cert["verdict"]
    assert set(traced["trace"]) >= {"red_pattern", "blue_pattern", "complete"}


def test_batch_summary_and_files(tmp_path, capsys):
    out_dir = tmp_path / "certs"
    rc, out, _ = _run(capsys, ["batch", "--n", "4", "--seed", "100",
                               "--bound", "15", "--out", str(out_dir)])
    assert rc == 0
    summary = json.loads(out)
    assert summary == {"red": 1, "blue": 0, "both": 3, "unresolved": 0}
    names = sorted(p.name for p in out_dir.iterdir())
    assert names == [f"cert-{s}.json" for s in range(100, 104)]
    for p in out_dir.iterdir():
        assert json.loads(p.read_text())["verdict"] in {"red", "blue", "both"}


def test_batch_without_out_dir(capsys):
    rc, out, _ = _run(capsys, ["batch", "--n", "2", "--seed", "1",
                               "--bound", "30"])
    assert rc == 0
    summary = json.loads(out)
    assert sum(summary.values()) == 2


def _write_instance(tmp_path, inst, name):
    path = tmp_path / name
    path.write_text(dumps(lemma_instance_to_json(inst)))
    return path


def test_lemma_basic_instance(tmp_path, capsys):
    inst = LemmaInstance(
        halfspace((1, 0, 0), 0), halfspace((0, 1, 0), 0),
        halfspace((-1, 0, 0), -2), halfspace((0, -1, 0), -2),
        Vec((3, 3, 0)), Vec((-1, -1, 0)))
    path = _write_instance(tmp_path, inst, "basic.json")
    rc, out, _ = _run(capsys, ["lemma", str(path)])
    assert rc == 0
    data = json.loads(out)
    assert data["verdict"] == "disjoint"
    assert data["farkas"]["multipliers"]


def test_lemma_pencil_instance(tmp_path, capsys):
    inst = PencilInstance(
        (halfspace((1, 0, 0), 0), halfspace((0, 1, 0), 0),
         halfspace((0, 0, 1), 0)),
        (halfspace((-1, 0, 0), -2), halfspace((0, -1, 0), -2)),
        Vec((3, 3, 3)), Vec((-1, -1, -1)))
    path = _write_instance(tmp_path, inst, "pencil.json")
    rc, out, _ = _run(capsys, ["lemma", str(path)])
    assert rc == 0
    assert json.loads(out)["verdict"] == "disjoint"


def test_lemma_rejects_broken_preconditions(tmp_path, capsys):
    inst = LemmaInstance(
        halfspace((1, 0, 0), 0), halfspace((0, 1, 0), 0),
        halfspace((-1, 0, 0), -2), halfspace((0, -1, 0), -2),
        Vec((3, 3, 0)), Vec((-1, -1, 0)))
    data = lemma_instance_to_json(inst)
    data["a"] = ["-3/1", "-3/1", "0/1"]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    rc, out, err = _run(capsys, ["lemma", str(path)])
    assert rc == 1
    assert not out
    assert "unusable" in err


def test_draw_refuses_without_force(tmp_path, capsys):
    _, out, _ = _run(capsys, ["gen", "--seed", "7", "--bound", "20"])
    cfg = tmp_path / "cfg.json"
    cfg.write_text(out)
    svg = tmp_path / "out.svg"
    rc, _, err = _run(capsys, ["draw", str(cfg), "--svg", str(svg)])
    assert rc == 2
    assert "force" in err
    assert not svg.exists()


def test_draw_force_renders_available_normals(tmp_path, capsys):
    _, out, _ = _run(capsys, ["gen", "--seed", "7", "--bound", "20"])
    cfg = tmp_path / "cfg.json"
    cfg.write_text(out)
    svg = tmp_path / "out.svg"
    rc, _, _ = _run(capsys, ["draw", str(cfg), "--svg", str(svg), "--force"])
    assert rc == 0
    text = svg.read_text()
    assert text.startswith("<svg")
    assert "circle" in text
