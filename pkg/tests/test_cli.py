import io
import json

from minclique import parse_graph6, serialize_graph6
from minclique.cli import main
from minclique.solvers import chromatic_number, clique_number, independence_number


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    payload = json.loads(out.getvalue()) if out.getvalue() else None
    return code, payload, err.getvalue()


def test_q_command():
    code, payload, _ = run_cli("q", "4")
    assert code == 0
    assert payload["results"]["q"] == [2, 2]
    assert payload["results"]["parts"] == [2, 2]

    code, payload, _ = run_cli("q", "0")
    assert code == 0
    assert payload["results"]["q"] == [0, 0]
    assert payload["results"]["parts"] == []

    code, payload, _ = run_cli("q", "20")
    assert code == 0
    assert payload["results"]["q"] == [8, 9]
    assert payload["results"]["indeterminate"] is True
    assert payload["checks"][0]["status"] == "indeterminate"


def test_witness_command(tmp_path):
    out_file = tmp_path / "w.g6"
    code, payload, _ = run_cli("witness", "7", "2", "--out", str(out_file))
    assert code == 0
    g = parse_graph6(out_file.read_text())
    assert payload["results"]["graph6"] == serialize_graph6(g)
    assert clique_number(g) == payload["results"]["omega"] == 4
    assert chromatic_number(g) == payload["results"]["chi"] == 5

    code, payload, _ = run_cli("witness", "5", "0")
    assert code == 0
    assert payload["results"]["omega"] == 5  # complete graph

    code, _, err = run_cli("witness", "6", "2")
    assert code == 2
    assert "n >= 2k + 3" in err


def test_verify_command(tmp_path, c5):
    path = tmp_path / "c5.g6"
    path.write_text(serialize_graph6(c5) + "\n")
    code, payload, _ = run_cli("verify", str(path))
    assert code == 0
    assert payload["results"] == {
        "n": 5, "edges": 5, "omega": 2, "chi": 3, "alpha": 2, "nu": 2,
    }

    code, payload, _ = run_cli("verify", str(path), "--props", "omega,nu")
    assert code == 0
    assert payload["results"] == {"n": 5, "edges": 5, "omega": 2, "nu": 2}

    bad = tmp_path / "bad.g6"
    bad.write_text("D?\n")
    code, _, err = run_cli("verify", str(bad))
    assert code == 2 and "error" in err

    code, _, err = run_cli("verify", str(tmp_path / "missing.g6"))
    assert code == 2

    code, _, err = run_cli("verify", str(path), "--props", "girth")
    assert code == 2


def test_check_theorem2():
    code, payload, _ = run_cli("check", "theorem2", "--kmax", "22")
    assert code == 0
    assert payload["results"]["indeterminate_k"] == [20]
    assert payload["results"]["single_block_exceptions"] == [4]
    statuses = {c["name"]: c["status"] for c in payload["checks"]}
    assert statuses["k=20"] == "indeterminate"
    assert all(s in ("pass", "indeterminate") for s in statuses.values())


def test_check_catalog():
    code, payload, _ = run_cli("check", "catalog")
    assert code == 0
    assert payload["results"]["witnesses_verified"] == 4
    names = {c["name"] for c in payload["checks"]}
    assert names == {"witness-5", "witness-8", "witness-13", "witness-17"}


def test_check_theorem1_small(tmp_path):
    csv_path = tmp_path / "table.csv"
    g6_path = tmp_path / "graphs.g6"
    code, payload, _ = run_cli(
        "check", "theorem1", "--nmax", "5",
        "--dump-csv", str(csv_path), "--dump-graph6", str(g6_path),
    )
    assert code == 0
    assert payload["results"]["class_counts"] == [1, 1, 2, 4, 11, 34]
    assert csv_path.read_text().startswith("n,c,min_clique")
    lines = [l for l in g6_path.read_text().splitlines() if l]
    assert len(lines) == 34
    parsed = [parse_graph6(l) for l in lines]
    assert all(g.n == 5 for g in parsed)


def test_check_gap_small():
    code, payload, _ = run_cli("check", "gap", "--nmax", "6")
    assert code == 0
    assert all(c["status"] == "pass" for c in payload["checks"])


def test_gap_command():
    code, payload, _ = run_cli("gap", "5", "--mode", "oracle")
    assert code == 0 and payload["results"]["gap"] == [1, 1]

    code, payload, _ = run_cli("gap", "9", "--mode", "formula")
    assert code == 0 and payload["results"]["gap"] == [1, 1]

    code, payload, _ = run_cli("gap", "6")
    assert code == 0 and payload["results"]["mode"] == "oracle"


def test_compose_command(tmp_path, c5):
    f1 = tmp_path / "a.g6"
    f2 = tmp_path / "b.g6"
    f1.write_text(serialize_graph6(c5) + "\n")
    f2.write_text(serialize_graph6(c5) + "\n")
    code, payload, _ = run_cli("compose", str(f1), str(f2))
    assert code == 0
    assert payload["results"]["n"] == 12
    assert payload["results"]["omega"] == 4
    assert payload["results"]["alpha"] <= 2
    merged = parse_graph6(payload["results"]["graph6"])
    assert independence_number(merged) <= 2

    code, payload, _ = run_cli(
        "compose", str(f1), str(f2), "--clique1", "1,2", "--clique2", "0,4",
    )
    assert code == 0 and payload["results"]["omega"] == 4

    code, _, err = run_cli("compose", str(f1), str(f2), "--clique1", "0,2")
    assert code == 2  # not a clique


def test_bad_usage():
    code, _, _ = run_cli("q")
    assert code == 2
    code, _, _ = run_cli("frobnicate", "1")
    assert code == 2
    code, _, _ = run_cli("check", "gap", "--nmax", "12")
    assert code == 2


def test_witness_dir_env_and_failure_exit(tmp_path, monkeypatch):
    import minclique.ramsey as ramsey_mod

    (tmp_path / "6.g6").write_text("D?{\n")  # 5 vertices, name says 6: rejected
    monkeypatch.setenv("RAMSEY_WITNESS_DIR", str(tmp_path))
    monkeypatch.setattr(ramsey_mod, "_default_catalog", None)
    try:
        code, payload, err = run_cli("check", "catalog")
        assert code == 1
        failed = [c for c in payload["checks"] if c["status"] == "fail"]
        assert failed and "6.g6" in failed[0]["condition"]
        assert "FAIL" in err
    finally:
        ramsey_mod._default_catalog = None  # do not leak into other tests


def test_json_shape_roundtrip():
    code, payload, _ = run_cli("q", "7")
    assert set(payload) == {"command", "inputs", "results", "checks", "timing_ms"}
    assert json.loads(json.dumps(payload)) == payload
