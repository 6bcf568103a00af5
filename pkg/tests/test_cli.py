import json

import pytest

from gautomata.cli import main
from gautomata.document import dumps, load, parse
from gautomata.errors import UsageError
from gautomata.fixtures import FIXTURES, planted_non_wp


@pytest.fixture
def docs(tmp_path):
    out = {}
    for name, (fa, fr) in FIXTURES.items():
        path = tmp_path / f"{name}.json"
        path.write_text(dumps(fa(), fr() if fr else None))
        out[name] = path
    a, rho = planted_non_wp()
    out["planted"] = tmp_path / "planted.json"
    out["planted"].write_text(dumps(a, rho))
    return out


def test_round_trip():
    for fa, fr in FIXTURES.values():
        a = fa()
        rho = fr() if fr else None
        d = parse(json.loads(dumps(a, rho)))
        assert d.automaton == a and d.rho == rho


def test_malformed(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(UsageError):
        load(p)
    p.write_text(json.dumps({"spec": {"rank": 1}, "vertices": ["q"], "edges": [{"id": "e"}], "init": "q", "ter": "q"}))
    with pytest.raises(UsageError):
        load(p)
    assert main(["accepts", str(p), "a"]) == 10


def test_accepts_exit_codes(docs, capsys):
    assert main(["accepts", str(docs["A1"]), "aA"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["verdict"]["status"] == "yes" and out["config"]["seed"] == 0
    assert main(["accepts", str(docs["A1"]), "a"]) == 1
    assert main(["accepts", str(docs["A1"]), "a" * 9 + "A" * 9, "--mode", "bounded", "--max-len", "4"]) == 2
    assert main(["accepts", str(docs["A1"]), "z"]) == 10


def test_minimal_paths_cmd(docs, capsys):
    main(["minimal-paths", str(docs["A4"])])
    out = json.loads(capsys.readouterr().out)
    assert out["minimal_paths"]["paths"] == [["f1"]]
    main(["minimal-paths", str(docs["A1"]), "--up-to", "3"])
    out = json.loads(capsys.readouterr().out)
    assert out["minimal_paths"]["paths"] == [[]] and out["minimal_paths"]["completeness"] == {"up_to": 3}


def test_pipeline_cmd(docs, tmp_path, capsys):
    out = tmp_path / "run"
    assert main(["pipeline", str(docs["A2"]), "--radius", "3", "--out", str(out)]) == 0
    report = json.loads((out / "report.json").read_text())
    assert report["selection"]["index"] == 2 and report["selection"]["p"] == "q0"
    assert (out / "cover.png").stat().st_size > 0 and (out / "stabilization.png").stat().st_size > 0
    first = (out / "report.json").read_text()
    capsys.readouterr()
    main(["pipeline", str(docs["A2"]), "--radius", "3", "--out", str(out)])
    assert (out / "report.json").read_text() == first
    capsys.readouterr()
    assert main(["pipeline", str(docs["A1"]), "--radius", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["selection"]["index"] == 1


def test_pipeline_planted(docs):
    assert main(["pipeline", str(docs["planted"])]) == 13
    assert main(["pipeline", str(docs["planted"]), "--check-len", "-1"]) == 13
    assert main(["pipeline", str(docs["A5"])]) == 10  # no rho


def test_other_commands(docs, capsys):
    assert main(["empty", str(docs["A4"])]) == 0
    assert main(["pumpable", str(docs["A5"]), "--sigma", "e_a"]) == 1
    assert main(["pumpable", str(docs["A1"]), "--sigma", "e_a"]) == 0
    assert main(["enumerate-m", str(docs["A1"]), "--explore-len", "1", "--format", "text"]) == 0
    assert main(["extract-hom", str(docs["A2"]), "--p", "q0"]) == 0
    assert main(["locate-coset", str(docs["A2"]), "s"]) == 0
    assert main(["cover-ball", str(docs["A1"]), "--radius", "2"]) == 0
    capsys.readouterr()
    assert main(["export-dot", str(docs["A3"])]) == 0
    dot = capsys.readouterr().out
    assert dot.count('"q"') == 1 and "doublecircle" in dot


def test_text_format(docs, capsys):
    main(["accepts", str(docs["A1"]), "aA", "--format", "text"])
    text = capsys.readouterr().out
    assert "== verdict ==" in text and "status: yes" in text
