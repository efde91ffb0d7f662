import json

import pytest

from krklr.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_all_typeA(capsys):
    code, out, _ = run(capsys, "verify-all", "--type", "A1", "--rank", "2", "--depth", "7")
    assert code == 0
    assert out.strip().endswith("verify-all: PASS")


def test_forbidden_index(capsys):
    code, _, err = run(capsys, "verify-all", "--type", "D2", "--rank", "2", "--i", "1")
    assert code == 2 and "forbidden index" in err


@pytest.mark.parametrize("argv", [
    ["verify-all", "--rank", "3"],
    ["kr", "dump"],
    ["kr", "dump", "--type", "D1", "--rank", "3"],
    ["crystal", "build", "--type", "A1", "--weight", "X"],
    ["tmod", "check", "--type", "A1", "--rank", "2", "--path", "0,0"],
    ["nonsense"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_kr_dump(capsys):
    code, out, _ = run(capsys, "kr", "dump", "--type", "B1", "--rank", "3", "--format", "dot")
    assert code == 0 and out.startswith("digraph")
    code, out, _ = run(capsys, "kr", "dump", "--type", "B1", "--rank", "3", "--format", "json")
    assert len(json.loads(out)["nodes"]) == 7


def test_crystal_build_typeA_dot(capsys, tmp_path):
    code, out, _ = run(capsys, "crystal", "build", "--type", "A1", "--rank", "2", "--weight", "L0",
                       "--depth", "4", "--format", "dot")
    assert code == 0
    assert out.count("->") == 9 and out.count("[label=") == 19
    target = tmp_path / "c.json"
    run(capsys, "crystal", "build", "--type", "A1", "--rank", "2", "--weight", "L0",
        "--depth", "4", "--out", str(target))
    assert len(json.loads(target.read_text())["nodes"]) == 10


def test_paths_jsonl(capsys):
    code, out, _ = run(capsys, "paths", "enumerate", "--type", "A1", "--rank", "2", "--maxlen", "3")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and len(lines) == 9


def test_tmod(capsys):
    code, out, _ = run(capsys, "tmod", "check", "--type", "D1", "--rank", "5", "--path", "0,2,3")
    assert code == 0 and "relations: ok" in out


def test_categorify(capsys):
    code, out, _ = run(capsys, "categorify", "verify", "--type", "C1", "--rank", "2", "--i", "1",
                       "--depth", "5", "--json")
    assert code == 0 and json.loads(out)["n_failures"] == 0
    code, out, _ = run(capsys, "categorify", "decompose", "--type", "C1", "--rank", "2",
                       "--i", "0", "--node", "3")
    assert code == 0 and "p = (0,1)" in out


def test_appendix(capsys):
    code, out, _ = run(capsys, "appendix", "b2")
    assert code == 0 and len(out.splitlines()) == 17
    code, out, _ = run(capsys, "appendix", "b2", "--format", "json")
    assert json.loads(out)["ok"]
