import json
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from bwb.cli import main
from bwb.taskfile import TASK_KINDS, TaskFileSyntaxError, dump, parse, validate

TASKS = Path(__file__).resolve().parent.parent / "tasks"


def _write(tmp_path, text, name="t.task"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def _bwb(*args):
    return subprocess.run([sys.executable, "-m", "bwb.cli", *args], capture_output=True, text=True)


# -- parsing


def test_parse_and_dump_round_trip():
    text = (TASKS / "semigroup_gorenstein_fiber.task").read_text()
    tf = parse(text)
    assert parse(dump(tf)) == tf
    assert len(tf.tasks) == 10


def test_syntax_error_has_line():
    with pytest.raises(TaskFileSyntaxError) as err:
        parse("ring A = semigroup(4, 9)\nwhat is this\n")
    assert err.value.line == 2


names = st.sampled_from(["I", "J", "K"])
ideal_lines = st.lists(st.sampled_from(["x", "y", "x^2", "x*y", "y^3"]), min_size=1, max_size=3)
task_lines = st.tuples(st.sampled_from(sorted(TASK_KINDS)), st.lists(names, min_size=1, max_size=2),
                       st.sampled_from(["", "bound=4", "seed=7 tries=2"]),
                       st.sampled_from(["", "expect: verified", "expect: r=2; reg=3", "expect: true"]))


@given(st.lists(ideal_lines, min_size=1, max_size=3), st.lists(task_lines, max_size=4))
def test_round_trip_property(ideals, tasks):
    lines = ["ring A = quotient(power_series(x, y), [x^3])"]
    for name, gens in zip(["I", "J", "K"], ideals):
        lines.append(f"ideal {name} in A = ({', '.join(gens)})")
    for kind, args, opts, exp in tasks:
        lines.append(" ".join(x for x in ["task", kind, *args, opts, exp] if x))
    tf = parse("\n".join(lines))
    assert parse(dump(tf)) == tf


def test_validate_diagnostics():
    tf = parse("ring A = power_series(x, y)\n"
               "ideal I in A = (x, y)\n"
               "ideal N in A = (x + y)\n"
               "ideal B in Z = (x)\n"
               "task fiber K\n"
               "task frobnicate I\n"
               "task vv I\n"
               "task fiber I bound=0\n")
    msgs = [str(d) for d in validate(tf)]
    assert any("line 3" in m and "unsupported input" in m and "monomial" in m for m in msgs)
    assert any("undeclared ring Z" in m for m in msgs)
    assert any("line 5" in m and "undeclared ideal K" in m for m in msgs)
    assert any("unknown task kind" in m for m in msgs)
    assert any("line 7" in m for m in msgs)
    assert any("bound=0" in m for m in msgs)


def test_valid_corpus_has_no_diagnostics():
    for f in TASKS.glob("*.task"):
        assert validate(parse(f.read_text())) == [], f.name


# -- running


def test_empty_file_exits_zero(tmp_path, capsys):
    assert main(["run", _write(tmp_path, "")]) == 0
    assert capsys.readouterr().out == ""


@pytest.mark.parametrize("name", ["basics", "empty", "reltype_gap", "power_stable", "semigroup_gorenstein_fiber"])
def test_corpus_files_pass(name, capsys):
    assert main(["run", str(TASKS / f"{name}.task")]) == 0


def test_fiber_task_prints_ideal_and_reg(capsys):
    main(["run", str(TASKS / "reltype_gap.task")])
    out = capsys.readouterr().out
    assert "U1^2" in out and "reg" in out


def test_mismatch_exit_code(tmp_path, capsys):
    text = "ring A = power_series(x, y)\nideal I in A = (x, y)\ntask spread I expect: spread=5\n"
    assert main(["run", _write(tmp_path, text)]) == 1
    assert "MISMATCH" in capsys.readouterr().out


def test_parse_error_exit_code(tmp_path, capsys):
    assert main(["run", _write(tmp_path, "ring = ???\n")]) == 2
    assert main(["validate", _write(tmp_path, "task fiber I\n")]) == 2


def test_computation_error_exit_code(tmp_path, capsys):
    # (t^9) is not a reduction of (t^8, t^9, t^10)
    text = "ring A = semigroup(4, 9, 10)\nideal I in A = (t^8, t^9, t^10)\nideal J in A = (t^9)\ntask reduction I J bound=3\n"
    assert main(["run", _write(tmp_path, text)]) == 3


def test_json_is_deterministic_and_parallel_safe():
    f = str(TASKS / "semigroup_gorenstein_fiber.task")
    a = _bwb("run", f, "--json")
    b = _bwb("run", f, "--json")
    c = _bwb("run", f, "--json", "--parallel")
    assert a.returncode == 0
    assert a.stdout == b.stdout == c.stdout
    data = json.loads(a.stdout)
    assert data["schema_version"] == 1
    assert all(t["status"] == "ok" for t in data["tasks"])


def test_rationals_flag_gives_same_fiber(capsys):
    f = str(TASKS / "power_stable.task")
    assert main(["run", f, "--rationals", "--verify"]) == 0
    assert main(["run", f, "--order", "lex"]) == 0


def test_explore_small(capsys):
    assert main(["explore", "--seed", "1", "--count", "3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["schema_version"] == 1 and len(data["instances"]) == 3
