import random
import re

import pytest

from hornlearn import HornFormula, Implication, format_formula, parse_formula
from hornlearn.cli import main
from hornlearn.formats import FormulaParseError

GD_TEXT = """\
# worked six-implication example
vars: a b c d e
e -> d
b c -> d
b d -> c
c d -> b
a d -> b c e
c e -> a b
"""

BULLET_TEXT = """\
vars: a b c d
a -> b
a -> c
c -> d
"""


@pytest.fixture
def gd_file(tmp_path):
    path = tmp_path / "gd.horn"
    path.write_text(GD_TEXT)
    return str(path)


@pytest.fixture
def bullet_file(tmp_path):
    path = tmp_path / "bullet.horn"
    path.write_text(BULLET_TEXT)
    return str(path)


class TestFormat:
    def test_parse_simple(self):
        f = parse_formula("vars: a b\na -> b\n")
        assert f.arity == 2
        assert f.implications == (Implication({0}, {1}),)
        assert f.names == ("a", "b")

    def test_parse_gd_example(self, gd_example):
        assert parse_formula(GD_TEXT) == gd_example
        assert len(parse_formula(GD_TEXT)) == 6

    def test_empty_antecedent(self):
        f = parse_formula("vars: a\n-> a\n")
        assert f.implications == (Implication(frozenset(), {0}),)

    def test_comments_and_blank_lines(self):
        text = "\n# lead\nvars: a b  # trailing\n\na -> b  # note\n"
        assert parse_formula(text).implications == (Implication({0}, {1}),)

    def test_unknown_token_reports_line(self):
        with pytest.raises(FormulaParseError, match="line 3: unknown token 'z'"):
            parse_formula("vars: a b\na -> b\nz -> a\n")

    def test_missing_header(self):
        with pytest.raises(FormulaParseError, match="header"):
            parse_formula("a -> b\n")
        with pytest.raises(FormulaParseError, match="header"):
            parse_formula("# nothing here\n")

    def test_empty_consequent(self):
        with pytest.raises(FormulaParseError, match="line 2: empty consequent"):
            parse_formula("vars: a b\na ->\n")

    def test_missing_arrow(self):
        with pytest.raises(FormulaParseError, match="line 2: missing"):
            parse_formula("vars: a b\na b\n")

    def test_duplicate_header_token(self):
        with pytest.raises(FormulaParseError, match="duplicate"):
            parse_formula("vars: a a\n")

    def test_serialize_shape(self, bullet_example):
        assert format_formula(bullet_example) == BULLET_TEXT

    def test_round_trip_random(self):
        rng = random.Random(90)
        for _ in range(60):
            n = rng.randint(1, 9)
            f = HornFormula(
                n,
                [
                    Implication(
                        frozenset(rng.sample(range(n), rng.randint(0, n - 1 or 1))),
                        frozenset(rng.sample(range(n), rng.randint(1, n))),
                    )
                    for _ in range(rng.randint(0, 6))
                ],
            )
            assert parse_formula(format_formula(f)) == f


class TestCommands:
    def test_gd(self, bullet_file, capsys):
        assert main(["gd", bullet_file]) == 0
        out = capsys.readouterr().out
        assert out == "vars: a b c d\na -> a b c d\nc -> c d\n"

    def test_closure(self, bullet_file, capsys):
        assert main(["closure", bullet_file, "a", "c"]) == 0
        assert capsys.readouterr().out.strip() == "a b c d"

    def test_closure_empty_start(self, bullet_file, capsys):
        assert main(["closure", bullet_file]) == 0
        assert capsys.readouterr().out.strip() == ""

    def test_closure_unknown_token(self, bullet_file, capsys):
        assert main(["closure", bullet_file, "q"]) == 2

    def test_equiv_same(self, gd_file, capsys):
        assert main(["equiv", gd_file, gd_file]) == 0
        assert capsys.readouterr().out.strip() == "equivalent"

    def test_equiv_different(self, tmp_path, capsys):
        p1 = tmp_path / "one.horn"
        p2 = tmp_path / "two.horn"
        p1.write_text("vars: a b\na -> b\n")
        p2.write_text("vars: a b\nb -> a\n")
        assert main(["equiv", str(p1), str(p2)]) == 1
        assert "not equivalent" in capsys.readouterr().out

    def test_parse_error_exit_code(self, tmp_path, capsys):
        bad = tmp_path / "bad.horn"
        bad.write_text("vars: a b\na -> z\n")
        assert main(["gd", str(bad)]) == 2
        assert "line 2" in capsys.readouterr().err

    def test_missing_file(self, capsys):
        assert main(["gd", "/nonexistent/x.horn"]) == 2

    def test_usage_error(self):
        with pytest.raises(SystemExit) as info:
            main(["learn", "--algo", "nope", "--target", "x"])
        assert info.value.code == 2

    @pytest.mark.parametrize("algo", ["clh", "afp", "clh-entail", "afp-closure"])
    def test_learn_all_algorithms(self, gd_file, algo, capsys):
        assert main(["learn", "--algo", algo, "--target", gd_file]) == 0
        out = capsys.readouterr().out
        stats_line = out.strip().splitlines()[-1]
        assert re.fullmatch(
            r"seq=\d+ cq=\d+ smq=\d+ emq=\d+ eeq=\d+", stats_line
        )

    def test_learn_clh_query_ceiling(self, gd_file, capsys):
        assert main(["learn", "--algo", "clh", "--target", gd_file]) == 0
        out = capsys.readouterr().out
        seq = int(re.search(r"seq=(\d+)", out).group(1))
        assert seq <= 5 * 6 + 6 + 1

    def test_learn_output_is_canonical(self, gd_file, capsys):
        from hornlearn import gd_basis

        assert main(["learn", "--algo", "clh", "--target", gd_file]) == 0
        out = capsys.readouterr().out
        formula_text = "\n".join(out.strip().splitlines()[:-1]) + "\n"
        assert parse_formula(formula_text) == gd_basis(parse_formula(GD_TEXT))

    def test_learn_trace_goes_to_stderr(self, gd_file, capsys):
        assert main(["learn", "--algo", "clh", "--target", gd_file, "--trace"]) == 0
        err = capsys.readouterr().err
        assert "append" in err

    def test_learn_random_strategy(self, gd_file, capsys):
        rc = main(
            ["learn", "--algo", "clh", "--target", gd_file,
             "--strategy", "random", "--seed", "11"]
        )
        assert rc == 0


class TestBench:
    def test_csv_schema_and_determinism(self, tmp_path, capsys):
        out1 = tmp_path / "a.csv"
        out2 = tmp_path / "b.csv"
        args = [
            "bench", "--algos", "clh", "afp", "--n-range", "3:6",
            "--m-range", "1:4", "--trials", "3", "--seed", "7",
        ]
        assert main(args + ["--out", str(out1)]) == 0
        assert main(args + ["--out", str(out2)]) == 0
        rows1 = out1.read_text().splitlines()
        rows2 = out2.read_text().splitlines()
        assert rows1[0] == "algo,n,m,seed,seq,cq,smq,emq,eeq,wall_time"
        assert len(rows1) == 1 + 2 * 3
        strip_time = lambda rows: [r.rsplit(",", 1)[0] for r in rows]
        assert strip_time(rows1) == strip_time(rows2)
        algos = [r.split(",")[0] for r in rows1[1:]]
        assert algos == ["clh"] * 3 + ["afp"] * 3

    def test_counters_match_algorithm_kind(self, tmp_path):
        out = tmp_path / "c.csv"
        assert main(
            ["bench", "--algos", "clh-entail", "--n-range", "3:4",
             "--m-range", "1:3", "--trials", "2", "--seed", "1",
             "--out", str(out)]
        ) == 0
        for row in out.read_text().splitlines()[1:]:
            parts = row.split(",")
            seq, cq, smq, emq, eeq = map(int, parts[4:9])
            assert seq == 0 and cq == 0 and smq == 0
            assert emq > 0 or eeq > 0


class TestLowerBound:
    def test_reports_and_exit(self, capsys):
        assert main(["lowerbound", "--n", "4"]) == 0
        out = capsys.readouterr().out
        assert "candidates: 15" in out
        assert "after 14 queries" in out
        assert "invariant held" in out

    def test_arity_validation(self, capsys):
        assert main(["lowerbound", "--n", "40"]) == 2
