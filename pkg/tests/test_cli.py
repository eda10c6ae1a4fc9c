"""Exit-code contract and report formats of the command-line surface."""

import json

import pytest

from tnnflag.cli import main, parse_word, split_top_level, WordParseError
from tnnflag.weyl import type_a_group


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_word(S3):
    assert parse_word(S3, "e") == ()
    assert parse_word(S3, "") == ()
    assert parse_word(S3, "(1,2,1)") == (0, 1, 0)
    assert parse_word(S3, "1,2") == (0, 1)
    tg = S3.thickened(2)
    assert parse_word(tg, "1,inf1,2") == (0, 2, 1)
    with pytest.raises(WordParseError):
        parse_word(S3, "(1,5)")
    with pytest.raises(WordParseError):
        parse_word(S3, "1,,2")
    with pytest.raises(WordParseError):
        parse_word(S3, "inf9")


def test_split_top_level():
    assert split_top_level("(1,2),(2,1)", ",") == ["(1,2)", "(2,1)"]
    with pytest.raises(WordParseError):
        split_top_level("(1,2", ",")


def test_poset_command_triangle(capsys, tmp_path):
    dot = tmp_path / "triangle.dot"
    js = tmp_path / "triangle.json"
    code, out, _ = run(
        capsys,
        "poset", "A", "1", "--n", "2", "--top", "e;(1),(1)",
        "--check", "ball", "--dot", str(dot), "--json", str(js),
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["status"] == "pass"
    assert payload["inputs"]["nodes"] == 8
    assert payload["inputs"]["f_vector"] == [3, 3, 1]
    assert dot.read_text().startswith("digraph")
    assert json.loads(js.read_text()) == payload


def test_poset_command_checks_list(capsys):
    code, out, _ = run(
        capsys,
        "poset", "A", "2", "--n", "1", "--top", "e;(1,2,1)",
        "--check", "pure,thin,eulerian",
    )
    assert code == 0
    payload = json.loads(out)
    assert [c["check"] for c in payload["checks"]] == ["pure", "thin", "eulerian"]


def test_poset_command_malformed_top(capsys):
    code, _, err = run(capsys, "poset", "A", "2", "--n", "1", "--top", "e;(1,2,1")
    assert code == 2
    assert "position" in err


def test_poset_command_empty_stratum(capsys):
    code, _, err = run(capsys, "poset", "A", "1", "--n", "1", "--top", "1;(e)")
    assert code == 2
    assert "error" in err


def test_cell_command(capsys):
    code, out, _ = run(
        capsys,
        "cell", "--k", "2", "--n", "2", "--v", "1", "--w", "(1);(1)",
        "--params", "3/2",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "pass"
    point = payload["points"][0]
    assert point["point"]["factors"][0] == [["1", "0"], ["3/2", "1"]]
    assert point["stratum"] == {"v": [1], "w": [[1], [1]]}


def test_cell_command_random(capsys):
    code, out, _ = run(
        capsys,
        "cell", "--k", "3", "--n", "2", "--v", "", "--w", "(1,2);(2,1)",
        "--random", "10", "--seed", "7",
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload["points"]) == 10
    assert all(c["status"] == "pass" for c in payload["checks"])


def test_cell_command_rejects_bad_input(capsys):
    code, _, err = run(
        capsys,
        "cell", "--k", "2", "--n", "2", "--v", "1", "--w", "(1);(1)",
        "--params", "-1",
    )
    assert code == 2
    code, _, err = run(
        capsys,
        "cell", "--k", "2", "--n", "2", "--v", "1", "--w", "(e);(e)",
        "--params", "",
    )
    assert code == 2


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "sl2-triangle")
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "pass"
    assert payload["seed"] == 0


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "nosuchsuite")
    assert code == 2
    assert "unknown suite" in err


def test_verify_deterministic(capsys):
    code1, out1, _ = run(capsys, "verify", "sl2-triangle", "--seed", "5")
    code2, out2, _ = run(capsys, "verify", "sl2-triangle", "--seed", "5")
    p1, p2 = json.loads(out1), json.loads(out2)
    p1.pop("elapsed_s"), p2.pop("elapsed_s")
    assert p1 == p2 and code1 == code2 == 0


def test_poset_shelling_check_and_budget(capsys):
    code, out, _ = run(
        capsys,
        "poset", "A", "1", "--n", "2", "--top", "e;(1),(1)", "--check", "shelling",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["checks"][0]["status"] == "pass"
    # a one-attempt budget leaves the search inconclusive, which is not a failure
    code, out, _ = run(
        capsys,
        "poset", "A", "1", "--n", "2", "--top", "e;(1),(1)",
        "--check", "shelling", "--budget", "1",
    )
    assert code == 0
    assert json.loads(out)["checks"][0]["status"] == "inconclusive"


def test_cell_stratum_failure_exits_1(capsys, monkeypatch):
    """A theorem-check failure (forced here) is exit 1, not a usage error."""
    from tnnflag import twisted

    real = twisted.stratum

    def wrong_stratum(z):
        v, wbar = real(z)
        return v.group.from_word((0,)), wbar

    monkeypatch.setattr(twisted, "stratum", wrong_stratum)
    code, out, _ = run(
        capsys,
        "cell", "--k", "2", "--n", "2", "--v", "e", "--w", "(1);(1)",
        "--params", "1,2",
    )
    assert code == 1
    payload = json.loads(out)
    assert payload["status"] == "fail"
    assert any(c["status"] == "fail" for c in payload["checks"])
