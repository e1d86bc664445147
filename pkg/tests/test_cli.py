import csv
import json

from mvlaguerre.cli import main


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, out


def test_verify_all_example(tmp_path):
    out = tmp_path / "report.json"
    code = main(["verify", "--suite", "all", "--N", "2", "--nu", "1/2",
                 "--a", "-1", "--delta", "1,1", "--nmax", "5",
                 "--out", str(out)])
    assert code == 0
    report = json.loads(out.read_text())
    assert report["schema"] == 1
    assert report["all_pass"] is True
    assert len(report["open_question_resolutions"]) == 3
    assert all(r["definitive"] for r in report["open_question_resolutions"])


def test_verify_deterministic_output(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["verify", "--suite", "laguerre", "--N", "2", "--nu", "1",
            "--a", "1", "--delta", "1,1", "--nmax", "4"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_lie_subcommand(capsys):
    code, out = run(["lie", "--phi", "x^3"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["dimension"] == 5
    assert payload["I_phi"] == [3]
    assert payload["checks"]["jacobi"] is True


def test_lie_extended(capsys):
    code, out = run(["lie", "--phi", "x", "--extended", "--nu", "1/2"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["dimension"] == 5
    assert payload["center_dimension"] == 2


def test_lie_truncated(capsys):
    code, out = run(["lie", "--truncate", "5"], capsys)
    assert code == 0
    assert json.loads(out)["dimension"] == 8


def test_malformed_phi_exits_2(capsys):
    assert main(["lie", "--phi", "x**2"]) == 2


def test_bad_weight_exits_2(capsys):
    assert main(["compute-polys", "--N", "2", "--nu", "-1"]) == 2


def test_compute_polys_schema(capsys):
    code, out = run(["compute-polys", "--N", "1", "--nu", "1/2", "--nmax", "2"],
                    capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["P"][1] == [[["-5/2"]], [["1"]]]
    assert payload["H"][0] == [["3/2"]]


def test_xi_csv_export(tmp_path):
    csv_path = tmp_path / "xi.csv"
    out = tmp_path / "xi.json"
    code = main(["xi", "--N", "2", "--nu", "1", "--a", "1", "--delta", "1,1",
                 "--nmax", "2", "--csv", str(csv_path), "--out", str(out)])
    assert code == 0
    rows = list(csv.reader(csv_path.open()))
    assert rows[0] == ["n", "i", "j", "xi"]
    table = {(int(r[0]), int(r[1]), int(r[2])): r[3] for r in rows[1:]}
    assert table[(1, 2, 1)] == "2"
    payload = json.loads(out.read_text())
    assert all(r["provenance"] == "both-agree" for r in payload["records"])


def test_dualhahn_subcommand(tmp_path):
    out = tmp_path / "dh.json"
    code = main(["dualhahn", "--N", "3", "--nu", "1/2", "--c", "2", "--d", "1",
                 "--nmax", "4", "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["all_equal"] is True
    assert payload["derivative_coupling"] is True


def test_verify_dualhahn_requires_constrained_family():
    code = main(["verify", "--suite", "dualhahn", "--N", "2", "--nu", "1/2",
                 "--a", "2", "--delta", "1,1", "--nmax", "3"])
    assert code == 2


def test_threaded_fanout_matches_serial(tmp_path, monkeypatch):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["verify", "--suite", "all", "--N", "2", "--nu", "1/2",
            "--a", "-1", "--delta", "1,1", "--nmax", "3"]
    monkeypatch.setenv("MVOP_THREADS", "1")
    assert main(args + ["--out", str(a)]) == 0
    monkeypatch.setenv("MVOP_THREADS", "4")
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
