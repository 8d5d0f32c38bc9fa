"""CLI subcommand behavior."""

import json

import pytest

from regionselect.board import dump_board
from regionselect.cli import main
from regionselect.fixtures import TREFOIL_PD, seven_lamp_board, unsolvable_board


@pytest.fixture()
def pd_file(tmp_path):
    path = tmp_path / "trefoil.txt"
    path.write_text(TREFOIL_PD)
    return str(path)


@pytest.fixture()
def fold_file(tmp_path):
    path = tmp_path / "diag.json"
    path.write_text(
        json.dumps(
            {
                "vertices_coords": [[0, 0], [1, 0], [1, 1], [0, 1], [0.5, 0.5]],
                "edges_vertices": [[0, 4], [1, 4], [2, 4], [3, 4]],
            }
        )
    )
    return str(path)


def test_analyze_pd(pd_file, capsys):
    assert main(["analyze", pd_file]) == 0
    out = capsys.readouterr().out
    assert "solvable from current lamps: True" in out
    assert "changeable" in out


def test_analyze_json_format(pd_file, capsys):
    assert main(["analyze", pd_file, "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["solvable"] is True
    assert all(data["changeable"].values())


def test_solve_board(tmp_path, capsys):
    path = tmp_path / "board.json"
    path.write_text(json.dumps(dump_board(seven_lamp_board(lamps=0b1111101))))
    assert main(["solve", str(path), "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["solvable"] is True


def test_solve_unsolvable_exit_code(tmp_path, capsys):
    path = tmp_path / "board.json"
    path.write_text(json.dumps(dump_board(unsolvable_board())))
    assert main(["solve", str(path)]) == 1
    capsys.readouterr()
    assert main(["solve", str(path), "--certificate", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["certificate"] == ["v1", "v3", "v4", "v5", "v6", "v7"]


def test_foldcheck(fold_file, capsys):
    assert main(["foldcheck", fold_file]) == 0
    out = capsys.readouterr().out
    assert "necessary conditions only" in out


def test_tanglize_fold(tmp_path, capsys):
    from regionselect.fixtures import ring_pattern

    p = ring_pattern()
    path = tmp_path / "ring.json"
    path.write_text(
        json.dumps(
            {
                "vertices_coords": [[float(x), float(y)] for x, y in p.vertices],
                "edges_vertices": [
                    list(e)
                    for i, e in enumerate(p.edges)
                    if not p.boundary_edge[i]
                ],
            }
        )
    )
    assert main(["tanglize", str(path), "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    labels = {c["label"] for c in data["components"]}
    assert labels == {"K1", "L1", "L2"}


def test_unlink_command(pd_file, capsys):
    assert main(["unlink", pd_file, "--budget", "2", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["u_upper"] == 1
    assert data["u_circled_upper"] == 1
    assert data["proper"] is True


def test_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("X(1,2,3)")
    assert main(["analyze", str(path)]) == 2
    assert "error" in capsys.readouterr().err
