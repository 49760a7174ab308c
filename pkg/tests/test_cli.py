import json

import pytest

from coxmut import Diagram
from coxmut.cli import main


@pytest.fixture
def diagram_file(tmp_path):
    def write(diagram, name="d.json"):
        path = tmp_path / name
        path.write_text(diagram.to_json())
        return str(path)

    return write


def test_cmd_mutate_path(diagram_file, capsys, a3_path):
    code = main(["mutate", diagram_file(a3_path), "2"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert Diagram.from_json_dict(out) == Diagram.from_arrows(
        3, [(2, 1, 1), (3, 2, 1), (1, 3, 1)]
    )


def test_cmd_mutate_g2(diagram_file, capsys, g2_triangle):
    assert main(["mutate", diagram_file(g2_triangle), "2"]) == 0
    out = json.loads(capsys.readouterr().out)
    weights = sorted(a["weight"] for a in out["arrows"])
    assert weights == [1, 3, 3]


def test_cmd_mutate_vertex_out_of_range(diagram_file, capsys, a3_path):
    code = main(["mutate", diagram_file(a3_path), "99"])
    assert code == 1
    assert "out of range" in capsys.readouterr().err


def test_cmd_present_text(diagram_file, capsys, g2_triangle):
    assert main(["present", diagram_file(g2_triangle)]) == 0
    out = capsys.readouterr().out
    assert "(s1 s2)^6 = e" in out and "[R4]" in out


def test_cmd_present_reduced(diagram_file, capsys):
    tri = Diagram.from_arrows(3, [(1, 2, 1), (2, 3, 1), (3, 1, 1)])
    assert main(["present", diagram_file(tri), "--reduced", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert sum(1 for r in data["relations"] if r["kind"] == "R3") == 1


def test_cmd_present_surface_ruleset(diagram_file, capsys):
    from coxmut.patterns import pattern_handle

    path = diagram_file(pattern_handle().diagram)
    assert main(["present", path, "--ruleset", "unpunctured-surface"]) == 0
    out = capsys.readouterr().out
    assert out.count("[R5]") == 2


def test_cmd_class_and_cap(diagram_file, capsys, a3_path):
    assert main(["class", diagram_file(a3_path)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["status"] == "complete" and data["size"] == 4
    assert main(["class", diagram_file(a3_path), "--cap", "2"]) == 3


def test_cmd_classify(diagram_file, capsys):
    alternating = Diagram.from_arrows(4, [(1, 2, 1), (3, 2, 1), (3, 4, 1), (1, 4, 1)])
    assert main(["classify", diagram_file(alternating)]) == 0
    captured = capsys.readouterr()
    assert json.loads(captured.out) == {"family": "affine", "name": "A~(2,2)"}
    assert "affine A~(2,2)" in captured.err


def test_cmd_verify_edge(diagram_file, capsys, g2_triangle):
    assert main(["verify", diagram_file(g2_triangle), "--edge", "2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["ok"] is True


def test_cmd_verify_class(diagram_file, capsys, g2_triangle):
    assert main(["verify", diagram_file(g2_triangle)]) == 0


def test_cmd_counterexample(capsys):
    assert main(["counterexample", "--case", "B3", "--cap", "20000"]) == 0
    captured = capsys.readouterr()
    data = json.loads(captured.out)
    assert data["dropped_quotient"]["order"] == 384
    assert data["coxeter_quotient"]["order"] == 48
    assert "separated by" in captured.err


def test_invalid_diagram_file(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 3, "arrows": [{"from": 1, "to": 2, "weight": 2},
                                                  {"from": 2, "to": 3, "weight": 1},
                                                  {"from": 3, "to": 1, "weight": 1}]}))
    assert main(["mutate", str(bad), "1"]) == 1
    assert "cycle condition" in capsys.readouterr().err
