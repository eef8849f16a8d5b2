"""End-to-end command-line tests driven through main(argv)."""

import csv
import io
import json
from pathlib import Path

import pytest

from ttkh.cli import main

TREFOIL = "X[0,2,3,1] X[2,4,5,3] X[4,0,1,5]"
SPLIT = "X[0,2,3,1] X[2,4,5,3] X[4,0,1,5] X[6,8,9,7] X[8,10,11,9] X[10,6,7,11]"


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_homology_text(capsys):
    rc, out, _ = run(capsys, "homology", "trefoil")
    assert rc == 0
    assert out.strip() == "3d^-2 (3 generators)"


def test_homology_split(capsys, tmp_path):
    f = tmp_path / "split.pd"
    f.write_text(SPLIT)
    rc, out, _ = run(capsys, "homology", str(f))
    assert rc == 0
    assert out.strip() == "0 (split diagram)"


def test_homology_connected_but_acyclic(capsys):
    rc, out, _ = run(capsys, "homology", "unlink2")
    assert rc == 0
    assert out.strip() == "0 (2 generators)"


def test_homology_json_schema(capsys):
    rc, out, _ = run(capsys, "homology", "fig8", "--json")
    assert rc == 0
    rec = json.loads(out)
    assert rec["name"] == "fig8"
    assert rec["n_crossings"] == 4
    assert rec["generators"] == 5
    assert rec["poincare"] == {"0": 5}
    assert rec["det"] == 5
    assert rec["signature"] == 0
    assert rec["mode"] in ("exact", "evaluated")
    assert rec["seed"] == 0
    assert isinstance(rec["seconds"], float)


def test_homology_exact_mode(capsys):
    rc, out, _ = run(capsys, "homology", "trefoil", "--exact", "--json")
    assert rc == 0
    assert json.loads(out)["mode"] == "exact"


def test_homology_batch_prefixes_names(capsys, tmp_path):
    batch = tmp_path / "two.pd"
    batch.write_text(f"a: {TREFOIL}\nb: {TREFOIL}\n")
    rc, out, _ = run(capsys, "homology", str(batch))
    assert rc == 0
    assert out.splitlines() == [
        "a: 3d^-2 (3 generators)",
        "b: 3d^-2 (3 generators)",
    ]


def test_homology_json_batch_is_list(capsys, tmp_path):
    batch = tmp_path / "two.pd"
    batch.write_text(f"a: {TREFOIL}\nb: {TREFOIL}\n")
    rc, out, _ = run(capsys, "homology", str(batch), "--json", "--workers", "2")
    recs = json.loads(out)
    assert [r["name"] for r in recs] == ["a", "b"]


def test_single_file_input_uses_stem(capsys, tmp_path):
    f = tmp_path / "mytrefoil.pd"
    f.write_text(TREFOIL + "\n")
    rc, out, _ = run(capsys, "homology", str(f), "--json")
    assert rc == 0
    assert json.loads(out)["name"] == "mytrefoil"


def test_stdin_batch(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(f"k: {TREFOIL}\n"))
    rc, out, _ = run(capsys, "homology", "-")
    assert rc == 0
    assert out.strip() == "3d^-2 (3 generators)"


def test_unknown_input_exits_2(capsys):
    rc, out, err = run(capsys, "homology", "nonsuch")
    assert rc == 2
    assert "not a file" in err and "catalog" in err


def test_malformed_pd_file_exits_2(capsys, tmp_path):
    f = tmp_path / "bad.pd"
    f.write_text("X[0,1,2]")
    rc = main(["homology", str(f)])
    assert rc == 2


def test_mark_flag_preserves_homology(capsys):
    rc0, out0, _ = run(capsys, "homology", "fig8")
    rc1, out1, _ = run(capsys, "homology", "fig8", "--mark", "3")
    assert rc0 == rc1 == 0
    assert out0 == out1


def test_mark_flag_rejects_missing_edge(capsys):
    rc, _, err = run(capsys, "homology", "trefoil", "--mark", "99")
    assert rc == 2
    assert "edge 99" in err


def test_mark_flag_rejects_batch(capsys, tmp_path):
    batch = tmp_path / "two.pd"
    batch.write_text(f"a: {TREFOIL}\nb: {TREFOIL}\n")
    with pytest.raises(SystemExit):
        main(["homology", str(batch), "--mark", "0"])


def test_compare_equal(capsys):
    rc, out, _ = run(capsys, "compare", "trefoil")
    assert rc == 0
    assert out.strip() == "equal: 3d^-2"


def test_compare_differ_lists_gradings(capsys):
    rc, out, _ = run(capsys, "compare", "l6n1")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "differ: HT 4 vs KH d^-2 + 5"
    assert "  delta -2: tree rank 0, cube rank 1" in lines
    assert "  delta 0: tree rank 4, cube rank 5" in lines


def test_compare_json(capsys):
    rc, out, _ = run(capsys, "compare", "l7n1", "--json")
    assert rc == 0
    rec = json.loads(out)
    assert rec["ht"] == {"5": 4}
    assert rec["kh"] == {"3": 1, "5": 5}
    assert rec["equal"] is False
    assert rec["kh_dominates"] is True
    assert rec["differing"] == {"3": [0, 1], "5": [4, 5]}


def test_invariants_text(capsys):
    rc, out, _ = run(capsys, "invariants", "trefoil")
    assert rc == 0
    assert out.strip() == "det 3, sigma -2, Q = 3d^1, euler ok"


def test_invariants_split(capsys, tmp_path):
    f = tmp_path / "split.pd"
    f.write_text(SPLIT)
    rc, out, _ = run(capsys, "invariants", str(f))
    assert rc == 0
    assert "split diagram" in out


def test_invariants_json(capsys):
    rc, out, _ = run(capsys, "invariants", "fig8", "--json")
    rec = json.loads(out)
    assert rec["det"] == 5
    assert rec["signature"] == 0
    assert rec["trees"] == 5
    assert rec["euler_check"] == "ok"


def test_verify_battery_passes(capsys):
    rc, out, _ = run(capsys, "verify", "trefoil", "--trials", "2")
    assert rc == 0
    lines = [ln for ln in out.splitlines() if ln]
    assert lines, "battery printed nothing"
    assert all(ln.startswith("PASS") for ln in lines)
    props = {ln.split()[2] for ln in lines}
    assert "d2_tree_symbolic" in props
    assert "d2_cube_symbolic" in props
    assert "marked_point_independent" in props
    assert "mirror_reflects_gradings" in props
    assert "kh_rank_dominates_tree_rank" in props


def test_verify_json_schema(capsys):
    rc, out, _ = run(capsys, "verify", "hopf+", "--trials", "1", "--json")
    assert rc == 0
    rec = json.loads(out)
    assert rec["name"] == "hopf+"
    assert all(p["ok"] for p in rec["properties"])


def test_report_writes_figures_and_tables(capsys, tmp_path):
    out_dir = tmp_path / "rep"
    rc, out, _ = run(
        capsys, "report", "trefoil", "fig8", "-o", str(out_dir), "--trials", "1"
    )
    assert rc == 0
    names = {p.name for p in out_dir.iterdir()}
    assert "trefoil_homology.png" in names
    assert "fig8_homology.png" in names
    assert "ranks.csv" in names
    assert "summary.csv" in names
    printed = [Path(ln.strip()) for ln in out.splitlines() if ln.strip()]
    assert printed and all(p.exists() and p.parent == out_dir for p in printed)

    with open(out_dir / "ranks.csv") as fh:
        rows = list(csv.DictReader(fh))
    assert {r["name"] for r in rows} == {"trefoil", "fig8"}
    tre = {r["delta"]: r for r in rows if r["name"] == "trefoil"}
    assert tre["-2"]["tree_rank"] == "3"
    assert tre["-2"]["khovanov_rank"] == "3"

    with open(out_dir / "summary.csv") as fh:
        rows = list(csv.DictReader(fh))
    by = {r["name"]: r for r in rows}
    assert by["fig8"]["det"] == "5"
    assert by["fig8"]["generators"] == "5"
