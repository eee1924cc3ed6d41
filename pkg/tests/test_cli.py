from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from coslie.algfile import format_algebra, parse_algebra, parse_extension
from coslie.cli import main
from coslie.errors import AlgFileError, DuplicateBracket, IndexOutOfRange
from coslie.exterior import OneForm, TwoForm
from coslie.lie_core import LieAlgebra

G31_NORMAL = """\
dim 3
bracket 2 3 : 1 1
alpha : 1 2
omega 1 3 : 1
"""

G21_NORMAL = """\
dim 3
bracket 1 2 : 1 1
alpha : 1 3
omega 1 2 : 1
"""

H5 = """\
dim 5
bracket 1 3 : 1 5
bracket 2 4 : 1 5
"""

BASE3 = """\
dim 3
bracket 1 2 : 1 1
alpha : 1 3
omega 1 2 : 1
"""

EXT_A = """\
dim 3
phi 2 : 1 1          # phi(e2) = b e1, b = 1
phi 3 : 1 3          # phi(e3) = f e3, f = 1
lambda : 1 3
v : 1 3
t = -1
"""


@pytest.fixture()
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


# ---------------------------------------------------------------------------
# parsing


def test_parse_round_trip():
    parsed = parse_algebra(G31_NORMAL)
    text = format_algebra(parsed.algebra, parsed.alpha, parsed.omega, parsed.params)
    again = parse_algebra(text)
    assert again.algebra == parsed.algebra
    assert again.alpha == parsed.alpha
    assert again.omega == parsed.omega
    assert format_algebra(again.algebra, again.alpha, again.omega, again.params) == text


coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def random_algebra_file(draw):
    dim = draw(st.integers(2, 4))
    pairs = [(i, j) for i in range(dim) for j in range(i + 1, dim)]
    brackets = {}
    for (i, j) in pairs:
        if draw(st.booleans()):
            vec = tuple(draw(coeffs) for _ in range(dim))
            brackets[(i, j)] = vec
    algebra = LieAlgebra(dim, brackets)
    alpha = OneForm(dim, tuple(draw(coeffs) for _ in range(dim)))
    omega = TwoForm(dim, {p: draw(coeffs) for p in pairs if draw(st.booleans())})
    return algebra, alpha, omega


@given(random_algebra_file())
def test_format_parse_round_trip_random(data):
    algebra, alpha, omega = data
    text = format_algebra(algebra, alpha, omega, {})
    parsed = parse_algebra(text)
    assert parsed.algebra == algebra
    if alpha.is_zero():
        assert parsed.alpha is None
    else:
        assert parsed.alpha == alpha
    if omega.is_zero():
        assert parsed.omega is None
    else:
        assert parsed.omega == omega
    assert format_algebra(parsed.algebra, parsed.alpha, parsed.omega, {}) == text


def test_parse_self_bracket_rejected():
    with pytest.raises(IndexOutOfRange):
        parse_algebra("dim 3\nbracket 1 1 : 1 2\n")


def test_parse_duplicate_bracket_rejected():
    with pytest.raises(DuplicateBracket):
        parse_algebra("dim 3\nbracket 1 2 : 1 1\nbracket 1 2 : 1 3\n")


def test_parse_unbound_symbol_gives_parametric_structure():
    parsed = parse_algebra("dim 3\nbracket 1 2 : lam 1\n")
    assert parsed.algebra.is_parametric()
    bound = parse_algebra("dim 3\nbracket 1 2 : lam 1\nparam lam = 2/3\n")
    assert not bound.algebra.is_parametric()
    from fractions import Fraction

    assert bound.algebra.brackets[(0, 1)][0] == Fraction(2, 3)


def test_parse_error_carries_line_and_column():
    with pytest.raises(AlgFileError) as exc:
        parse_algebra("dim 3\nbracket 1 2 : ?? 1\n")
    assert exc.value.line == 2
    assert exc.value.column == 15


def test_parse_extension_file():
    parsed = parse_extension(EXT_A)
    assert parsed.dim == 3
    from fractions import Fraction as F

    assert parsed.data.phi.column(1) == (F(1), F(0), F(0))
    assert parsed.data.t == F(-1)


# ---------------------------------------------------------------------------
# commands and exit codes


def test_validate_command_output(files, capsys):
    path = files("g31.alg", G31_NORMAL)
    code = main(["validate", path])
    out = capsys.readouterr().out
    assert code == 0
    assert "cocycle1: ok" in out
    assert "cocycle2: ok" in out
    assert "volume: -1 (nonzero)" in out
    assert "cosymplectic: YES" in out
    assert "reeb: e2" in out


def test_validate_json_schema(files, capsys):
    path = files("g31.alg", G31_NORMAL)
    assert main(["validate", "--json", path]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["command"] == "validate"
    assert payload["input"] == path
    assert [c["name"] for c in payload["checks"]] == ["cocycle1", "cocycle2", "volume"]
    assert all(set(c) == {"name", "pass", "defect"} for c in payload["checks"])
    assert payload["result"]["cosymplectic"] is True
    assert payload["result"]["reeb"] == "e2"


def test_validate_failure_exit_code(files, capsys):
    path = files("bad.alg", "dim 3\nbracket 1 2 : 1 1\nalpha : 1 1\nomega 1 2 : 1\n")
    assert main(["validate", path]) == 1
    out = capsys.readouterr().out
    assert "cocycle1: FAIL" in out
    assert "cosymplectic: NO" in out


def test_exists_command(files, capsys):
    path = files("h5.alg", H5)
    assert main(["exists", path]) == 1
    assert "NO: det Phi == 0 identically over Z1 x Z2" in capsys.readouterr().out
    g31 = files("g31.alg", G31_NORMAL)
    assert main(["exists", g31]) == 0
    assert "YES" in capsys.readouterr().out


def test_lsa_and_biinv_commands(files, capsys):
    g21 = files("g21.alg", G21_NORMAL)
    assert main(["lsa", g21]) == 0
    out = capsys.readouterr().out
    assert "e1.e2 = e1" in out and "e2.e2 = e2" in out
    assert main(["biinv", g21]) == 0
    out = capsys.readouterr().out
    assert "bi-invariant: YES" in out and "associative: YES" in out


def test_reeb_command_with_params(files, capsys):
    text = "dim 3\nbracket 1 3 : 1 1\nbracket 2 3 : -1 2\nalpha : lam 3\nomega 1 2 : 1\n"
    path = files("g34.alg", text)
    assert main(["reeb", "--params", "lam=2", path]) == 0
    assert "reeb: 1/2 e3" in capsys.readouterr().out


def test_extend_command_reproduces_first_construction(files, capsys):
    base = files("base3.alg", BASE3)
    ext = files("ext1.ext", EXT_A)
    assert main(["extend", "--construction", "A", "--data", ext, base]) == 0
    out = capsys.readouterr().out
    assert "[e1,e2] = e1" in out
    assert "[e2,e4] = -1 e1" in out
    assert "[e3,e4] = -1 e3 + -1 e5" in out
    assert "[e4,e5] = e3 + -1 e5" in out
    assert "alpha = e^4" in out
    assert "reeb: e4" in out


def test_extend_condition_failure_exit(files, capsys):
    base = files("base3.alg", BASE3)
    bad = files("bad.ext", "dim 3\nphi 1 : 1 1\nphi 2 : 1 2\nphi 3 : 1 3\n")
    assert main(["extend", "--construction", "A", "--data", bad, base]) == 1
    assert "conditions: FAIL" in capsys.readouterr().out


def test_symplectize_command(files, capsys):
    g21 = files("g21.alg", G21_NORMAL)
    assert main(["symplectize", g21]) == 0
    out = capsys.readouterr().out
    assert "dim 4 extension" in out
    assert "symplectic: YES" in out


def test_isocheck_command(files, capsys):
    one = files(
        "a.alg",
        "dim 3\nbracket 1 3 : 1 1\nbracket 2 3 : -1 2\nalpha : 5 3\nomega 1 2 : 1\n",
    )
    two = files(
        "b.alg",
        "dim 3\nbracket 1 3 : 1 1\nbracket 2 3 : -1 2\nalpha : 5 3\n"
        "omega 1 2 : 2\nomega 1 3 : 1\nomega 2 3 : 3\n",
    )
    witness = files(
        "map.map",
        "dim 3\nmap 1 : 1 1\nmap 2 : 1/2 2\nmap 3 : 3/2 1 -1/2 2 1 3\n",
    )
    assert main(["isocheck", one, two, witness]) == 0
    assert "isomorphic: YES" in capsys.readouterr().out


def test_parse_error_exit_code(files, capsys):
    bad = files("bad.alg", "dim 3\nbracket 1 1 : 1 1\n")
    assert main(["validate", bad]) == 2
    assert "parse error" in capsys.readouterr().err


def test_catalog_list_and_export(files, capsys):
    assert main(["catalog", "list"]) == 0
    out = capsys.readouterr().out
    assert "g_{3.1}" in out.splitlines()
    assert main(["catalog", "export", "g_{3.4}^{-1}-normal-1"]) == 0
    text = capsys.readouterr().out
    parsed = parse_algebra(text)
    assert parsed.algebra.dim == 3


def test_extend_construction_c_with_alpha_d(files, capsys):
    base = files("base3.alg", BASE3)
    ext = files("ext3.ext", "dim 3\nphi 2 : 1 1 1 3\nphi 3 : 1 3\nv : 1 3\n")
    assert main(
        ["extend", "--construction", "C", "--data", ext, "--alpha-d", "2", base]
    ) == 0
    out = capsys.readouterr().out
    assert "alpha = e^3 + 2 e^4 + -1 e^5" in out
    assert "reeb: e3" in out


def test_seedless_flag_is_accepted(files, capsys):
    path = files("g31.alg", G31_NORMAL)
    assert main(["--seedless", "validate", path]) == 0
    assert "cosymplectic: YES" in capsys.readouterr().out


def test_catalog_export_heisenberg_with_params(capsys):
    assert main(["catalog", "export", "Heisenberg", "--params", "n=2"]) == 0
    parsed = parse_algebra(capsys.readouterr().out)
    assert parsed.algebra.dim == 5


def test_catalog_verify_all_deterministic_and_flagged(capsys):
    code1 = main(["catalog", "verify-all", "--json"])
    out1 = capsys.readouterr().out
    code2 = main(["catalog", "verify-all", "--json"])
    out2 = capsys.readouterr().out
    assert out1 == out2
    assert code1 == code2 == 0
    payload = json.loads(out1)
    assert payload["result"]["ok"] is True
    assert payload["result"]["failed"] == 0
    assert payload["result"]["flagged"] == 13
