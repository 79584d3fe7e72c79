"""Command-line behavior: verdicts, exit codes, certificate files, rendering."""
import json

from seuclid.cli import main


def test_check_euclidean(capsys):
    assert main(["check", "5", "--s", "2"]) == 0
    out = capsys.readouterr().out
    assert "Euclidean" in out and "k_max 2" in out


def test_check_non_euclidean(capsys):
    assert main(["check", "5", "--s", "11"]) == 0
    out = capsys.readouterr().out
    assert "NonEuclidean" in out and "(1+w)/2" in out


def test_check_exceptional(capsys):
    assert main(["check", "10", "--s", "2"]) == 0
    assert "exceptional" in capsys.readouterr().out


def test_check_not_applicable(capsys):
    assert main(["check", "31", "--s", "2"]) == 0
    assert "NotApplicable" in capsys.readouterr().out


def test_check_unknown_exit_2(capsys):
    assert main(["check", "5"]) == 2


def test_invalid_inputs_exit_1(capsys):
    assert main(["check", "12", "--s", "2"]) == 1
    assert main(["check", "5", "--s", "4"]) == 1
    assert main(["check", "5", "--s", "x"]) == 1
    assert main(["table", "--s", "2", "--dmax", "0"]) == 1


def test_check_writes_verifiable_cert(tmp_path, capsys):
    path = tmp_path / "c.json"
    assert main(["check", "67", "--s", "2,3", "--cert", str(path)]) == 0
    assert main(["verify", str(path)]) == 0


def test_verify_tampered_cert_exit_3(tmp_path, capsys):
    path = tmp_path / "c.json"
    assert main(["check", "67", "--s", "2,3", "--cert", str(path)]) == 0
    obj = json.loads(path.read_text())
    obj["payload"]["chain"].pop(2)
    path.write_text(json.dumps(obj))
    assert main(["verify", str(path)]) == 3


def test_verify_unreadable_cert_exit_1(tmp_path, capsys):
    path = tmp_path / "c.json"
    path.write_text("{ not json")
    assert main(["verify", str(path)]) == 1


def test_table_text(capsys):
    assert main(["table", "--s", "", "--dmax", "11"]) == 0
    out = capsys.readouterr().out
    assert "Euclidean: 1, 2, 3, 7, 11" in out


def test_table_json(capsys):
    assert main(["table", "--s", "2", "--dmax", "23", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["euclidean"] == [1, 2, 3, 5, 6, 7, 10, 11, 15, 19, 23]


def test_render_cover(tmp_path, capsys):
    path = tmp_path / "fig.svg"
    assert main(["render", "5", "--s", "2", "-o", str(path)]) == 0
    svg = path.read_text()
    assert svg.startswith("<svg") and "circle" in svg


def test_render_disks_and_witness(tmp_path, capsys):
    path = tmp_path / "fig.svg"
    assert main(["render", "35", "--s", "7", "-o", str(path)]) == 0
    assert path.read_text().count("<circle") >= 20
    assert main(["render", "17", "--s", "2", "-o", str(path)]) == 0
    assert "not norm-Euclidean" in path.read_text()


def test_render_without_certificate(tmp_path, capsys):
    assert main(["render", "5", "-o", str(tmp_path / "fig.svg")]) == 2


def test_oracle(capsys):
    assert main(["oracle", "17", "2", "--nmax", "2", "--coeff", "10"]) == 0
    assert "min S-norm" in capsys.readouterr().out
