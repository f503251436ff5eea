import pytest

from trisample import read_edge_list, read_stream_file
from trisample.cli import main

from helpers import complete_graph_edges


def write_k4(tmp_path):
    path = tmp_path / "k4.txt"
    path.write_text("".join(f"{u} {v}\n" for u, v in complete_graph_edges(4)))
    return path


def test_generate_er(tmp_path, capsys):
    out = tmp_path / "er.txt"
    rc = main(["generate", "er", "--nodes", "30", "--edge-prob", "0.2", "--seed", "3", "--out", str(out)])
    assert rc == 0
    edges = read_edge_list(out)
    assert edges
    assert "edges=" in capsys.readouterr().out


def test_generate_ba(tmp_path):
    out = tmp_path / "ba.txt"
    rc = main([
        "generate", "ba", "--nodes", "150", "--seed-nodes", "20", "--seed-edge-prob", "0.2",
        "--edges-per-node", "4", "--gamma", "1.5", "--seed", "5", "--out", str(out),
    ])
    assert rc == 0
    assert len(read_edge_list(out)) >= (150 - 20) * 4


def test_generate_deterministic(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    for out in (a, b):
        assert main(["generate", "er", "--nodes", "25", "--edge-prob", "0.3", "--seed", "9", "--out", str(out)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_stream_permutation_and_deletion_models(tmp_path):
    k4 = write_k4(tmp_path)
    perm = tmp_path / "perm.txt"
    assert main(["stream", "--edges", str(k4), "--seed", "1", "--out", str(perm)]) == 0
    events = read_stream_file(perm)
    assert len(events) == 6
    assert all(ev.beta == 1 for ev in events)

    dele = tmp_path / "del.txt"
    assert main([
        "stream", "--edges", str(k4), "--pe", "1.0", "--pd", "1.0", "--seed", "1", "--out", str(dele),
    ]) == 0
    assert len(read_stream_file(dele)) == 12

    node = tmp_path / "node.txt"
    assert main([
        "stream", "--edges", str(k4), "--pe", "1.0", "--pd", "1.0", "--node-del", "--seed", "1",
        "--out", str(node),
    ]) == 0
    assert len(read_stream_file(node)) == 12


def test_stream_snapshots(tmp_path):
    snapdir = tmp_path / "snaps"
    snapdir.mkdir()
    (snapdir / "00.txt").write_text("1 2\n")
    (snapdir / "01.txt").write_text("2 3\n")
    out = tmp_path / "snap_stream.txt"
    assert main(["stream", "--snapshots", str(snapdir), "--out", str(out)]) == 0
    events = read_stream_file(out)
    assert [(ev.u, ev.v, ev.beta) for ev in events] == [(1, 2, 1), (1, 2, -1), (2, 3, 1)]


def test_exact_counts_k4(tmp_path, capsys):
    k4 = write_k4(tmp_path)
    assert main(["exact", "--edges", str(k4)]) == 0
    assert "triangles=4" in capsys.readouterr().out


def test_exact_on_stream(tmp_path, capsys):
    k4 = write_k4(tmp_path)
    stream = tmp_path / "s.txt"
    assert main(["stream", "--edges", str(k4), "--seed", "2", "--out", str(stream)]) == 0
    assert main(["exact", "--stream", str(stream)]) == 0
    assert "triangles=4" in capsys.readouterr().out


def test_run_outputs_deterministic_csv(tmp_path):
    k4 = write_k4(tmp_path)
    outs = []
    for name in ("r1.csv", "r2.csv"):
        out = tmp_path / name
        rc = main([
            "run", "--edges", str(k4), "--alpha", "1.0", "--p", "0.5", "--reservoir", "6",
            "--reps", "4", "--seed", "7", "--out", str(out),
        ])
        assert rc == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]
    text = outs[0].decode()
    assert text.startswith("estimator,")
    assert "esd," in text and "doulion," in text and "triest," in text


def test_run_requires_an_estimator(tmp_path, capsys):
    k4 = write_k4(tmp_path)
    rc = main(["run", "--edges", str(k4), "--out", str(tmp_path / "x.csv")])
    assert rc == 1
    assert "error:" in capsys.readouterr().err


def test_run_missing_file_errors(tmp_path, capsys):
    rc = main(["run", "--edges", str(tmp_path / "nope.txt"), "--alpha", "0.5",
               "--out", str(tmp_path / "x.csv")])
    assert rc == 1
    assert "error:" in capsys.readouterr().err


def test_compare_sweep(tmp_path):
    er = tmp_path / "er.txt"
    assert main(["generate", "er", "--nodes", "24", "--edge-prob", "0.4", "--seed", "11", "--out", str(er)]) == 0
    out = tmp_path / "cmp.csv"
    rc = main(["compare", "--edges", str(er), "--sizes", "0.2,0.5", "--reps", "5", "--seed", "2", "--out", str(out)])
    assert rc == 0
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 1 + 2 * 3  # header + three estimators per size


def test_compare_rejects_bad_fraction(tmp_path, capsys):
    er = write_k4(tmp_path)
    rc = main(["compare", "--edges", str(er), "--sizes", "1.5", "--out", str(tmp_path / "c.csv")])
    assert rc == 1
    assert "fraction" in capsys.readouterr().err


def test_module_entry_point():
    with pytest.raises(SystemExit) as exc:
        main(["--help"])
    assert exc.value.code == 0
