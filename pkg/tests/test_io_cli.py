import io

import pytest

from legdga import format_dga, k6_2, mirror, parse_dga, parse_projection, parse_rules
from legdga.cli import run_command
from legdga.io import DgaSemanticError, DgaSyntaxError, format_projection
from legdga.knots import K6_2_DEGREES, SHIPPED_FILES, shipped_text


def run(argv):
    out = io.StringIO()
    code = run_command(argv, out)
    return code, out.getvalue()


def test_shipped_file_parses(K):
    assert K.algebra.names == tuple(f"a{i}" for i in range(1, 12))
    assert {g.name: g.degree for g in K.algebra.generators} == K6_2_DEGREES
    assert K.metadata.smooth_type == "6_2"
    assert K.metadata.tb == -7
    assert K.metadata.maslov == 0
    assert K.algebra.modulus == 0


def test_round_trip(K):
    text = format_dga(K)
    assert parse_dga(text) == K
    assert format_dga(parse_dga(text)) == text


def test_format_normalizes_order(K):
    assert "d a4 = a5 + a11 + a6 a10 a5 + a11 a7 a5" in format_dga(K)


def test_mirror_twice_text(K):
    assert format_dga(mirror(mirror(K))) == format_dga(K)


BASE = "dga T\nmaslov 0\ngen a1 : 1\ngen a3 : 0\n"


def test_missing_differential():
    with pytest.raises(DgaSemanticError, match="missing differential for a3"):
        parse_dga(BASE + "d a1 = 1\n")


def test_unknown_generator():
    with pytest.raises(DgaSemanticError, match="unknown generator a99") as info:
        parse_dga(BASE + "d a1 = 1 + a99\nd a3 = 0\n")
    assert info.value.symbol == "a99" and info.value.line == 5


def test_duplicate_declaration():
    with pytest.raises(DgaSemanticError, match="duplicate declaration of a1"):
        parse_dga(BASE + "gen a1 : 2\n")
    with pytest.raises(DgaSemanticError, match="duplicate differential"):
        parse_dga(BASE + "d a1 = 1\nd a1 = 1\nd a3 = 0\n")


def test_syntax_error_position():
    with pytest.raises(DgaSyntaxError) as info:
        parse_dga(BASE + "d a1 = 1 + + a3\nd a3 = 0\n")
    assert (info.value.line, info.value.column) == (5, 12)
    with pytest.raises(DgaSyntaxError) as info:
        parse_dga(BASE + "gen a4 = 1\n")
    assert info.value.line == 5
    with pytest.raises(DgaSyntaxError, match="unknown directive"):
        parse_dga("frobnicate\n")


def test_comments_ignored():
    d = parse_dga(BASE + "# comment\nd a1 = 1  # trailing\nd a3 = 0\n")
    assert d["a1"] == d.algebra("1")


def test_maslov_sets_modulus():
    d = parse_dga("dga T\nmaslov 1\ngen x : 1\ngen y : 0\nd x = y\nd y = 0\n")
    assert d.algebra.modulus == 2


def test_projection_round_trip():
    spec = parse_projection(shipped_text("k6_2.map"))
    assert parse_projection(format_projection(spec)) == spec
    assert spec.substitutions == ("a3 -> a3 + 1", "a11 -> a11 + a5")


def test_projection_rejects_bad_default():
    with pytest.raises(DgaSyntaxError):
        parse_projection("gen al : -1\ndefault -> al\n")


def test_rules_file_inferred_generators():
    sys_ = parse_rules("rule: b a -> 1\n")
    assert sys_.algebra.names == ("b", "a")
    assert str(sys_.normal_form(sys_.algebra("b a b a"))) == "1"


def test_rules_relation_line():
    sys_ = parse_rules("gen al : -1\ngen be : 1\nrel: 1 + be al\n")
    assert str(sys_) == "rule: be al -> 1"


def test_rules_errors():
    with pytest.raises(DgaSemanticError, match="degree"):
        parse_rules("gen al : -1\ngen be : 1\nrule: al -> be\n")
    with pytest.raises(DgaSyntaxError):
        parse_rules("be al => 1\n")


# -- command line -----------------------------------------------------------

def test_cli_check():
    assert run(["check", "k6_2.dga"]) == (0, "degree check: ok; d^2 = 0: ok\n")


def test_cli_check_failure(tmp_path):
    f = tmp_path / "bad.dga"
    f.write_text("gen a : 1\nd a = a\n")
    code, out = run(["check", str(f)])
    assert code == 1 and "degree check: FAILED" in out


def test_cli_mirror_and_distinguish(tmp_path):
    m = tmp_path / "m.dga"
    assert run(["mirror", "k6_2.dga", "-o", str(m)])[0] == 0
    code, out = run(["distinguish", "k6_2.dga", str(m), "--degrees", "1,-1", "--maxlen", "9"])
    assert code == 0
    assert out.rstrip().endswith("verdict: nonisomorphic graded homology algebras")


def test_cli_mirror_twice(tmp_path):
    m1, m2 = tmp_path / "m1.dga", tmp_path / "m2.dga"
    run(["mirror", "k6_2.dga", "-o", str(m1)])
    run(["mirror", str(m1), "-o", str(m2)])
    assert m2.read_text() == format_dga(k6_2())


def test_cli_distinguish_undetermined():
    code, out = run(["distinguish", "k6_2.dga", "k6_2.dga", "--degrees", "1,-1"])
    assert code == 1 and "verdict: undetermined" in out


def test_cli_nf():
    assert run(["nf", "--rules", "unknot.rules", "b a b a"]) == (0, "1\n")
    assert run(["nf", "--rules", "k6_2.rules", "al be al be"]) == (0, "al be\n")


def test_cli_witness():
    code, out = run(["witness", "k6_2.dga", "--x", "a10", "--y", "a5 a3", "--z", "a1",
                     "--degrees", "1,-1"])
    assert code == 0 and "valid" in out
    code, out = run(["witness", "k6_2.dga", "--x", "a10", "--y", "a5", "--z", "a1",
                     "--degrees", "1,-1"])
    assert code == 1 and "invalid" in out


def test_cli_subst():
    code, out = run(["subst", "k6_2.dga", "a3 -> a3 + 1", "a11 -> a11 + a5"])
    assert code == 0
    assert "d a6 = a5 a8 + a11 a8" in out


def test_cli_project():
    code, out = run(["project", "k6_2.dga", "--map", "k6_2.map"])
    assert code == 0
    assert out.count("ideal generator:") == 1
    assert "ideal generator: 1 + be al" in out


def test_cli_input_errors(tmp_path, capsys):
    assert run(["check", str(tmp_path / "nope.dga")])[0] == 2
    bad = tmp_path / "bad.dga"
    bad.write_text("gen a1 : 1\nd a1 = 1 + a99\n")
    assert run(["check", str(bad)])[0] == 2
    assert "unknown generator a99" in capsys.readouterr().err
    assert run(["distinguish", "k6_2.dga"])[0] == 2
    assert run(["subst", "k6_2.dga", "a3 -> a3 a3 + 1"])[0] == 2


def test_cli_reproduce():
    code, out = run(["reproduce"])
    assert code == 0
    assert "x = a10; y = a5 a3; z = a1" in out
    assert "x = a10; y = a11; z = a9" in out
    assert "refutation of 1 in H_-1 . H_1: structural" in out
    assert out.rstrip().endswith("verdict: nonisomorphic graded homology algebras")


def test_shipped_files_present():
    for name in SHIPPED_FILES:
        assert shipped_text(name)
