"""Concrete syntax, the script runner, and the command-line entry point."""

import json
import random
import subprocess
import sys
from pathlib import Path

import pytest

import opptypes.script as s
from opptypes import (Atom, Fun, Opp, ParseError, Pi, Var, bounded_inhabit,
                      declare_term, parse, parse_term, parse_type, run,
                      script_str, term_str, DepthCapExceeded)
from opptypes.runner import report_json, report_text

from generators import rand_script, rand_term, rand_type, std_ctx

REPO = Path(__file__).resolve().parents[1]


class TestParseExamples:
    def test_opposite_function(self):
        assert parse_type("~(a -> b)") == Opp(Fun(Atom("a"), Atom("b")))

    def test_dependent_pi(self):
        got = parse_type("Pi x:a. ~b(x)")
        assert got == Pi("x", Atom("a"), Opp(Atom("b", (Var("x"),))))

    def test_mixed_arrows_rejected(self):
        with pytest.raises(ParseError) as err:
            parse_type("a -> b <~ c")
        assert "mixed arrows" in str(err.value)

    def test_precedence(self):
        assert parse_type("~a * b + c") == parse_type("((~a) * b) + c")
        assert parse_type("a -> b -> c") == parse_type("a -> (b -> c)")

    def test_tight_parens_distinguish_family_args(self):
        assert parse_type("p(x)") == Atom("p", (Var("x"),))
        # with a space the parenthesis starts a new type, not arguments
        with pytest.raises(ParseError):
            parse_type("p (x)")

    def test_error_position(self):
        with pytest.raises(ParseError) as err:
            parse("atom a;\ncheck x :: a;")
        assert err.value.line == 2
        assert err.value.col >= 10

    def test_reserved_words_rejected_as_identifiers(self):
        with pytest.raises(ParseError):
            parse_type("case")
        with pytest.raises(ParseError):
            parse("assume of : a;")

    def test_terms(self):
        t = parse_term("\\x:a. <p1 x, p2 (f x)>")
        assert term_str(t) == "\\x:a. <p1 x, p2 (f x)>"

    def test_comments_and_spans(self):
        sc = parse("-- leading comment\natom a; atom b;\n")
        assert sc.directives[0].span.line == 2
        assert sc.directives[1].span.col > 1


class TestRoundTrip:
    def test_generated_scripts(self):
        rng = random.Random(20240810)
        for _ in range(300):
            sc = rand_script(rng)
            assert parse(script_str(sc)) == sc

    def test_generated_terms(self):
        rng = random.Random(11)
        for _ in range(300):
            t = rand_term(rng, rng.randint(0, 4))
            assert parse_term(term_str(t)) == t

    def test_directive_examples(self):
        src = ('atom a; pred p(a); assume x : ~(a->b);\n'
               'check <p1 x, p2 x> : a * ~b;\n'
               'equal ~~a a; expand a + b basis sg_sum;\n'
               'translate ~(P & Q); nnf ~all x:s. P(x);\n'
               'inhabit a depth 3;')
        sc = parse(src)
        assert parse(script_str(sc)) == sc


class TestRun:
    def test_golden_script(self):
        report = run(parse(
            "atom a; atom b; assume x : ~(a->b);"
            "check <p1 x, p2 x> : a * ~b;"))
        assert report.ok
        assert [e.status for e in report.entries] == ["ok"] * 4

    def test_equal_directive(self):
        report = run(parse("atom a; equal ~~a a;"))
        assert report.ok

    def test_equal_failure_is_error_entry(self):
        report = run(parse("atom a; atom b; equal a b; atom c;"))
        assert not report.ok
        statuses = [e.status for e in report.entries]
        assert statuses == ["ok", "ok", "error", "ok"]  # keeps going

    def test_paraconsistency_script(self):
        report = run(parse(
            "atom a; atom b; assume x:a; assume y:~a; inhabit b depth 5;"))
        assert report.ok
        assert "no inhabitant" in report.entries[-1].payload

    def test_error_payload_names_the_error(self):
        report = run(parse("check x : a;"))
        assert report.entries[0].status == "error"
        assert "IllFormedType" in report.entries[0].payload

    def test_duplicate_declaration_reported(self):
        report = run(parse("atom a; atom a;"))
        assert [e.status for e in report.entries] == ["ok", "error"]

    def test_deterministic(self):
        src = ("atom a; atom b; pred p(a); assume x : ~(a->b);\n"
               "infer p1 x; onf ~(Pi v:a. p(v)); dual a * b;\n"
               "expand b <~ a basis pi_sum; inhabit a -> a depth 3;\n"
               "translate all x:s. R(x); nnf ~(P | Q);")
        r1, r2 = run(parse(src)), run(parse(src))
        assert report_json(r1) == report_json(r2)
        assert report_text(r1) == report_text(r2)


class TestBoundedInhabit:
    def test_assumption(self):
        ctx = declare_term(std_ctx(), "x", Atom("a"))
        assert bounded_inhabit(ctx, Atom("a"), 1) == Var("x")

    def test_identity(self):
        got = bounded_inhabit(std_ctx(), parse_type("a -> a"), 2)
        assert term_str(got) == "\\x:a. x"

    def test_exhausted(self):
        ctx = declare_term(declare_term(std_ctx(), "x", Atom("a")),
                           "y", parse_type("~a"))
        assert bounded_inhabit(ctx, Atom("b"), 6) is None

    def test_depth_cap(self):
        with pytest.raises(DepthCapExceeded):
            bounded_inhabit(std_ctx(), Atom("a"), 9)

    def test_found_terms_recheck(self):
        from opptypes import check
        rng = random.Random(3)
        for _ in range(80):
            ctx = std_ctx()
            for i in range(rng.randint(1, 2)):
                ctx = declare_term(ctx, f"h{i}", rand_type(rng, 2))
            goal = rand_type(rng, rng.randint(0, 3))
            t = bounded_inhabit(ctx, goal, 4)
            if t is not None:
                check(ctx, t, goal)


GOLDEN_SRC = """\
-- golden checks
atom a;
atom b;
assume x : ~(a->b);
check <p1 x, p2 x> : a * ~b;
check x : a * ~b;
equal ~~a a;
inhabit a -> a depth 2;
"""


def _cli(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "opptypes", *args],
        input=stdin, capture_output=True, text=True, cwd=REPO)


class TestCommandLine:
    def test_check_ok_and_exit_zero(self, tmp_path):
        f = tmp_path / "golden.ptt"
        f.write_text(GOLDEN_SRC, encoding="utf-8")
        proc = _cli("check", str(f))
        assert proc.returncode == 0, proc.stderr
        assert "no inhabitant" not in proc.stdout

    def test_check_failure_exit_one(self, tmp_path):
        f = tmp_path / "bad.ptt"
        f.write_text("atom a; atom b; assume x:a; check x : b;",
                     encoding="utf-8")
        proc = _cli("check", str(f))
        assert proc.returncode == 1
        assert "error" in proc.stdout

    def test_syntax_error_exit_two(self, tmp_path):
        f = tmp_path / "syn.ptt"
        f.write_text("atom a", encoding="utf-8")  # missing semicolon
        proc = _cli("check", str(f))
        assert proc.returncode == 2
        assert "syntax error" in proc.stderr

    def test_stdin(self):
        proc = _cli("check", "-", stdin="atom a; equal ~~a a;")
        assert proc.returncode == 0

    def test_json_is_byte_identical_and_valid(self, tmp_path):
        import jsonschema
        f = tmp_path / "golden.ptt"
        f.write_text(GOLDEN_SRC, encoding="utf-8")
        out1 = _cli("check", str(f), "--json")
        out2 = _cli("check", str(f), "--json")
        assert out1.returncode == 0
        assert out1.stdout == out2.stdout
        schema = json.loads(
            (REPO / "docs" / "report_schema.json").read_text())
        payload = json.loads(out1.stdout)
        jsonschema.validate(payload, schema)
        assert [e["directive"] for e in payload] == [
            "atom", "atom", "assume", "check", "check", "equal", "inhabit"]

    def test_oneshot_onf(self):
        proc = _cli("onf", "~(a -> b)")
        assert proc.returncode == 0
        assert proc.stdout.strip() == "~b <~ ~a"

    def test_oneshot_dual(self):
        proc = _cli("dual", "a * b")
        assert proc.stdout.strip() == "~a + ~b"

    def test_oneshot_equal(self):
        assert _cli("equal", "~(a*b)", "~a + ~b").returncode == 0
        assert _cli("equal", "a", "b").returncode == 1

    def test_oneshot_equal_stdin(self):
        proc = _cli("equal", stdin="~(a*b)\n~a + ~b\n")
        assert proc.returncode == 0

    def test_oneshot_nnf(self):
        proc = _cli("nnf", "~(P => Q)")
        assert proc.stdout.strip() == "~Q <~ ~P"

    def test_oneshot_syntax_error(self):
        assert _cli("onf", "a -> b <~ c").returncode == 2

    def test_usage_error(self):
        assert _cli("frobnicate").returncode == 2
