"""Command-line interface: text output, JSON output, and exit codes."""

import json

import pytest

from agjordan.cli import main

PERAZZO = "x*u^2 + y*u*v + z*v^2"


def run(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- happy paths ---------------------------------------------------------


def test_hilbert_text(capsys):
    code, out, _ = run(capsys, "hilbert", "-f", "x*u^3*v + y*u*v^3")
    assert code == 0
    assert out == "1 4 7 7 4 1\n"


def test_jordan_text(capsys):
    code, out, _ = run(capsys, "jordan", "-f", PERAZZO)
    assert code == 0
    assert out == "4^1 + 2^3 + 1^2\n"


def test_jordan_json(capsys):
    code, out, _ = run(capsys, "jordan", "-f", "x^2 + y^2", "--json")
    assert code == 0
    assert json.loads(out) == {
        "hilbert": [1, 2, 1],
        "jordan": [[3, 1], [1, 1]],
        "hilbert_dual": [[3, 1], [1, 1]],
        "ranks": [[0, 1, 1], [0, 2, 1], [1, 1, 1]],
        "eij": [[0, 3, 1], [1, 1, 1]],
    }


def test_hessian_generic(capsys):
    code, out, _ = run(capsys, "hessian", "-f", PERAZZO)
    assert code == 0
    assert out == "mixed Hessian (k=1, t=1): 5 x 5\ngeneric rank: 4\n"


def test_hessian_exact_json(capsys):
    code, out, _ = run(
        capsys, "hessian", "-f", "x*u*v^3 + y*u^3*v",
        "-k", "2", "-t", "2", "--exact", "--json",
    )
    assert code == 0
    assert json.loads(out) == {
        "k": 2, "t": 2, "rows": 7, "cols": 7, "rank": 6, "mode": "exact",
    }


def test_lefschetz_text(capsys):
    code, out, _ = run(capsys, "lefschetz", "-f", PERAZZO)
    assert code == 0
    assert out == (
        "WLP: no\n"
        "SLP: no\n"
        "Sperner number: 5\n"
        "Jordan type: 4^1 + 2^3 + 1^2\n"
        "dual of Hilbert vector: 4^1 + 2^4\n"
        "degree 1 times l^1: rank 4 < 5\n"
    )


def test_diagram_text(capsys):
    code, out, _ = run(capsys, "diagram", "-f", "x^2 + y^2")
    assert code == 0
    assert out == "●\n│\n● ●\n│\n●\n"


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", "-f", "x^2 + y^2", "--trials", "2")
    assert code == 0
    assert out == "oracle agreement at 2 point(s): 3^1 + 1^1\n"


def test_corpus_all_match(capsys):
    code, out, _ = run(capsys, "corpus")
    assert code == 0
    assert out.endswith("6/6 entries match\n")
    assert "MISMATCH" not in out


def test_vars_fixes_the_order(capsys):
    code, out, _ = run(
        capsys, "hilbert", "-f", "y^2 + x^2", "--vars", "x,y",
    )
    assert code == 0
    assert out == "1 2 1\n"


def test_at_evaluates_a_specific_form(capsys):
    code, out, _ = run(capsys, "jordan", "-f", PERAZZO, "--at", "x + u")
    assert code == 0
    assert out == "4^1 + 2^3 + 1^2\n"


def test_at_accepts_case_insensitive_names(capsys):
    code, out, _ = run(capsys, "jordan", "-f", PERAZZO, "--at", "X + U")
    assert code == 0
    assert out == "4^1 + 2^3 + 1^2\n"


def test_at_single_coordinate(capsys):
    code, out, _ = run(capsys, "jordan", "-f", "x^2 + y^2", "--at", "X")
    assert code == 0
    assert out == "3^1 + 1^1\n"


def test_verify_single_variable_power(capsys):
    code, out, _ = run(capsys, "verify", "-f", "x^5", "--trials", "2")
    assert code == 0
    assert out == "oracle agreement at 2 point(s): 6^1\n"


def test_json_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "hessian", "-f", PERAZZO, "--json")
    _, second, _ = run(capsys, "hessian", "-f", PERAZZO, "--json")
    assert first == second


# -- construct -------------------------------------------------------------


def test_construct_perazzo_example(capsys):
    code, out, _ = run(capsys, "construct", "perazzo-example", "-d", "3")
    assert code == 0
    assert out == "x*u^2 + y*u*v + z*v^2\n"


def test_construct_coproduct(capsys):
    code, out, _ = run(
        capsys, "construct", "coproduct", "-f", "x^2 + y^2", "-f", "x^2 - y^2",
    )
    assert code == 0
    assert out == "x^2 + y^2 + x2^2 - y2^2\n"


def test_construct_concat(capsys):
    code, out, _ = run(capsys, "construct", "concat", "-f", PERAZZO, "-f", PERAZZO)
    assert code == 0
    assert out == "x*u^2 + y*u*v + z*v^2 + y2*v*v2 + z2*v2^2\n"


def test_construct_rank_drop(capsys):
    code, out, _ = run(capsys, "construct", "rank-drop", "-d", "3", "--delta", "2")
    assert code == 0
    assert out == "x*u^2 + y*u*v + z*v^2 + x2*u2^2 + y2*u2*v2 + z2*v2^2\n"


def test_construct_json(capsys):
    code, out, _ = run(
        capsys, "construct", "perazzo-example", "-d", "4", "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "perazzo-example"
    assert payload["variables"] == ["x", "y", "z", "u", "v"]
    assert payload["poly"] == "x*u^3 + y*u*v^2 + z*u^2*v"


# -- failure modes -----------------------------------------------------------


def test_parse_error_exits_one(capsys):
    code, _, err = run(capsys, "hilbert", "-f", "x*+2")
    assert code == 1
    assert "position 2" in err


def test_unknown_subcommand_exits_one(capsys):
    code, _, err = run(capsys, "nosuch")
    assert code == 1
    assert "invalid choice" in err


def test_missing_form_exits_one(capsys):
    code, _, err = run(capsys, "hilbert")
    assert code == 1
    assert "-f" in err or "--poly" in err


def test_degenerate_form_exits_two(capsys):
    code, _, err = run(capsys, "jordan", "-f", "x^3+3*x^2*y+3*x*y^2+y^3")
    assert code == 2
    assert "essential variables" in err


def test_reduce_recovers_degenerate_form(capsys):
    code, out, _ = run(
        capsys, "jordan", "-f", "x^3+3*x^2*y+3*x*y^2+y^3", "--reduce",
    )
    assert code == 0
    assert out == "4^1\n"


def test_at_unknown_variable_exits_one(capsys):
    code, _, err = run(capsys, "jordan", "-f", PERAZZO, "--at", "q + u")
    assert code == 1
    assert "unknown variable 'q'" in err


def test_at_on_hypersurface_exits_two(capsys):
    code, _, err = run(capsys, "jordan", "-f", PERAZZO, "--at", "x - z")
    assert code == 2
    assert "f vanishes" in err


def test_construct_needs_two_forms(capsys):
    code, _, err = run(capsys, "construct", "coproduct", "-f", "x^2 + y^2")
    assert code == 1
    assert "two -f" in err


def test_single_form_commands_reject_two(capsys):
    code, _, err = run(capsys, "hilbert", "-f", "x^2", "-f", "y^2")
    assert code == 1


def test_zero_form_rejected(capsys):
    code, _, err = run(capsys, "hilbert", "-f", "0")
    assert code == 1
