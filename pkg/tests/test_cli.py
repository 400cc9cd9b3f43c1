import pytest

from godelkit.cli import main
from godelkit.numbering import godel_number
from godelkit.syntax import Succ, Zero


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_check_valid_and_invalid(tmp_path, capsys):
    good = write(tmp_path, "good.pf", "(node (forall x0 (= x0 x0)) ax-eq-refl ())")
    bad = write(tmp_path, "bad.pf", "(node (= 0 (S 0)) ax-eq-refl ())")
    assert main(["check", "--theory", "q", good]) == 0
    assert main(["check", bad]) == 1
    assert capsys.readouterr().out == "valid\ninvalid\n"


def test_eval_verdicts(tmp_path, capsys):
    yes = write(tmp_path, "yes.fm", "(exists x1 (= (+ x1 (lit 2)) (lit 5)))")
    open_ = write(tmp_path, "open.fm", "(forall x1 (= (+ x1 0) x1))")
    var = write(tmp_path, "var.fm", "(= x0 (lit 5))")
    assert main(["eval", "--cap", "10", yes]) == 0
    assert main(["eval", "--cap", "10", open_]) == 1
    assert main(["eval", "--set", "x0=5", var]) == 0
    assert main(["eval", "--set", "x0=4", var]) == 1
    assert capsys.readouterr().out == "true\nunknown\ntrue\nfalse\n"


def test_eval_unassigned_is_usage_error(tmp_path, capsys):
    var = write(tmp_path, "var.fm", "(= x0 (lit 5))")
    assert main(["eval", var]) == 2
    assert "unassigned" in capsys.readouterr().err


def test_encode_decode_round_trip(tmp_path, capsys):
    t = write(tmp_path, "t.tm", "(S 0)")
    assert main(["encode", "--category", "term", t]) == 0
    assert capsys.readouterr().out.strip() == str(godel_number(Succ(Zero()))) == "12"
    assert main(["decode", "--category", "term", "12"]) == 0
    assert main(["decode", "--category", "term", "0xc"]) == 0
    assert capsys.readouterr().out == "(S 0)\n(S 0)\n"
    assert main(["decode", "0"]) == 1


def test_run_compile_halting(tmp_path, capsys):
    prog = write(tmp_path, "s.pg", "(comp 1 1 succ ((proj 1 1)))")
    never = write(tmp_path, "n.pg", "(mu 1 (comp 2 2 chileq ((proj 2 1) (proj 2 1))))")
    assert main(["run", prog, "4"]) == 0
    assert main(["run", "--fuel", "100", never, "1"]) == 1
    assert capsys.readouterr().out == "5\nfuel exhausted\n"
    assert main(["compile", prog]) == 0
    compiled = write(tmp_path, "s.fm", capsys.readouterr().out)
    assert main(["eval", "--set", "x0=5", "--set", "x1=4", compiled]) == 0
    capsys.readouterr()
    assert main(["halting-formula", prog, "3"]) == 0
    halting = write(tmp_path, "h.fm", capsys.readouterr().out)
    assert main(["eval", halting]) == 0


def test_malformed_program_is_usage_error(tmp_path, capsys):
    prog = write(tmp_path, "m.pg", "(comp 2 1 chileq ((proj 2 1) (proj 2 1)))")
    assert main(["run", prog, "1", "2"]) == 2
    assert "composition" in capsys.readouterr().err


def test_compile_rec_is_usage_error(tmp_path, capsys):
    prog = write(tmp_path, "r.pg", "(rec 0 (z 0) (proj 2 1))")
    assert main(["compile", prog]) == 2


def test_search_and_bounded(tmp_path, capsys):
    f = write(tmp_path, "z.fm", "(= 0 0)")
    assert main(["search", "--theory", "q", f]) == 0
    out = capsys.readouterr().out.splitlines()
    code = int(out[0].split()[1])
    proof = write(tmp_path, "z.pf", out[1])
    assert main(["check", proof]) == 0
    assert main(["bounded-provable", "--bound", str(code), f]) == 0
    assert main(["bounded-provable", "--bound", str(code - 1), f]) == 1
    bot = write(tmp_path, "bot.fm", "bot")
    assert main(["search", "--fuel", "1000", bot]) == 1


def test_fixpoint_godel(capsys):
    assert main(["fixpoint", "--kind", "godel"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[-1] == "diagonal identity: OK"
    assert any(line.startswith("code G: ") for line in out.splitlines())


def test_fixpoint_output_is_deterministic(capsys):
    main(["fixpoint", "--kind", "rosser", "--hex"])
    first = capsys.readouterr().out
    main(["fixpoint", "--kind", "rosser", "--hex"])
    assert capsys.readouterr().out == first


def test_fixpoint_custom(tmp_path, capsys):
    c = write(tmp_path, "c.fm", "(exists x1 (= (+ x1 x1) x0))")
    assert main(["fixpoint", "--kind", "custom", "--c", c]) == 0
    g = next(l for l in capsys.readouterr().out.splitlines() if l.startswith("G: "))
    gf = write(tmp_path, "g.fm", g[3:])
    assert main(["eval", "--cap", "10", gf]) in (0, 1)
    assert main(["fixpoint", "--kind", "custom"]) == 2


@pytest.mark.parametrize("argv", [[], ["nosuch"], ["eval", "/nonexistent.fm"], ["run"]])
def test_usage_errors(argv, capsys):
    assert main(argv) == 2


def test_parse_error_is_usage_error(tmp_path, capsys):
    f = write(tmp_path, "bad.fm", "(= 0")
    assert main(["eval", f]) == 2
