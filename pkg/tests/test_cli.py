import json

import pytest

from srdual.cli import main


def _write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


@pytest.fixture
def a2_file(tmp_path):
    facets = "CDG AEG CEG ADG ABD BCE ABC AEF CDF DEF"
    return _write(tmp_path, "a2.txt",
                  "vertices: A B C D E F G\n"
                  + "\n".join(facets.split()) + "\n")


def test_check_s2_holds(a2_file, capsys):
    assert main(["check", a2_file, "--letters", "--property", "s2"]) == 0
    assert "holds" in capsys.readouterr().out


def test_check_failure_prints_witness(tmp_path, capsys):
    f = _write(tmp_path, "bad.txt", "ABC\nADE\n")
    rc = main(["check", f, "--letters", "--property", "s2"])
    out = capsys.readouterr().out
    assert rc == 1 and "FAILS" in out and "witness" in out


def test_check_buchsbaum_fields(a2_file):
    for field in ("0", "2"):
        assert main(["check", a2_file, "--letters",
                     "--property", "buchsbaum", "--field", field]) == 0


def test_parse_error_exit_code(tmp_path, capsys):
    f = _write(tmp_path, "empty.txt", "# nothing\n")
    assert main(["check", f, "--property", "pure"]) == 2
    assert "error" in capsys.readouterr().err


def test_missing_file_exit_code(capsys):
    assert main(["diameter", "/nonexistent/x.txt"]) == 2


def test_usage_error_exit_code(a2_file):
    with pytest.raises(SystemExit) as ei:
        main(["check", a2_file])  # --property is required
    assert ei.value.code == 2


def test_diameter_and_pair(a2_file, capsys):
    assert main(["diameter", a2_file, "--letters"]) == 0
    assert "diameter: 5" in capsys.readouterr().out
    assert main(["diameter", a2_file, "--letters",
                 "--pair", "ABC", "DEF", "--path"]) == 0
    out = capsys.readouterr().out
    assert "distance: 5" in out and "ABC" in out and "DEF" in out


def test_diameter_disconnected_exit_code(tmp_path, capsys):
    f = _write(tmp_path, "disc.txt", "ABC\nDEF\n")
    assert main(["diameter", f, "--letters"]) == 1
    assert "unbounded" in capsys.readouterr().out


def test_dual_graph_exports(a2_file, capsys):
    assert main(["dual-graph", a2_file, "--letters", "--format", "dot"]) == 0
    assert "graph dual {" in capsys.readouterr().out
    assert main(["dual-graph", a2_file, "--letters", "--format", "json",
                 "--labels", "complement"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["nodes"]) == 10 and len(doc["edges"]) == 12


def test_alexander_dual(a2_file, capsys):
    assert main(["alexander-dual", a2_file, "--letters"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 10 and all(len(ln) == 4 for ln in lines)


def test_glue_figure7(tmp_path, capsys):
    main(["construct", "dim4", "-o", str(tmp_path / "d4.txt")])
    capsys.readouterr()
    rc = main(["glue", str(tmp_path / "d4.txt"), str(tmp_path / "d4.txt"),
               "--identify", "E=A,F=B,G=C,H=D"])
    out = capsys.readouterr().out
    assert rc == 0
    assert sum(1 for ln in out.splitlines()
               if ln and not ln.startswith("vertices:")) == 35


def test_glue_bad_identify_exit_code(tmp_path, capsys):
    f = _write(tmp_path, "t.txt", "ABC\n")
    assert main(["glue", f, f, "--identify", "Z=Q"]) == 2


def test_construct_stdout_and_check_roundtrip(tmp_path, capsys):
    assert main(["construct", "glued_d3", "--k", "1", "-o", "-"]) == 0
    out = capsys.readouterr().out
    f = _write(tmp_path, "g1.txt", out)
    assert main(["check", f, "--property", "s2"]) == 0


def test_search_mu_json(capsys):
    assert main(["search-mu", "--d", "2", "--n", "5", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["mu"] == 3 and doc["exhaustive"] is True


def test_bounds_output(capsys):
    assert main(["bounds", "--d", "3", "--n", "7"]) == 0
    assert "best: 5" in capsys.readouterr().out


def test_verify_table(capsys):
    assert main(["verify-table"]) == 0
    out = capsys.readouterr().out
    assert out.count("[ok]") == 13 and "all ok" in out


def test_json_envelope(a2_file, capsys):
    assert main(["check", a2_file, "--letters", "--property", "s2",
                 "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc == {"property": "s2", "holds": True}
