"""Command-line surface.

Exit codes: 0 = pass, 1 = mathematical failure (validation fails,
existence answer is NO, isomorphism check fails, catalog verification has
an undocumented failure), 2 = usage or parse error.

All output is deterministic: polynomials print in graded-lex order and
every collection is emitted in a fixed ordering, so identical inputs give
byte-identical reports.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog as cat
from . import scalars as sc
from .algfile import parse_algebra, parse_extension, parse_map
from .cosymplectic import (
    CosymplecticStructure,
    biinvariance,
    cosymplectic_lsa,
    exists_cosymplectic,
    left_symmetry_defect,
    reeb,
    to_symplectic,
    validate,
)
from .errors import AlgFileError, ConditionsFail, CoslieError
from .extensions import ExtensionData, construct_A, construct_B, construct_C
from .lie_core import LinearMap, check_isomorphism
from .verify import verify_all

PASS, MATH_FAIL, USAGE_FAIL = 0, 1, 2


def _vec_str(v) -> str:
    parts = []
    for i, c in enumerate(v):
        if sc.is_zero(c):
            continue
        cs = sc.scalar_str(c)
        parts.append(f"e{i + 1}" if cs == "1" else f"{cs} e{i + 1}")
    return " + ".join(parts) if parts else "0"


def _form_str(alpha) -> str:
    if alpha is None:
        return "none"
    parts = []
    for i, c in enumerate(alpha.coeffs):
        if sc.is_zero(c):
            continue
        cs = sc.scalar_str(c)
        parts.append(f"e^{i + 1}" if cs == "1" else f"{cs} e^{i + 1}")
    return " + ".join(parts) if parts else "0"


def _omega_str(omega) -> str:
    if omega is None:
        return "none"
    parts = []
    for (i, j), c in sorted(omega.coeffs.items()):
        cs = sc.scalar_str(c)
        head = f"e^{{{i + 1}{j + 1}}}"
        parts.append(head if cs == "1" else f"{cs} {head}")
    return " + ".join(parts) if parts else "0"


def _brackets_str(L) -> list:
    out = []
    for (i, j) in sorted(L.brackets):
        out.append(f"[e{i + 1},e{j + 1}] = {_vec_str(L.brackets[(i, j)])}")
    return out


def _parse_params(text):
    params = {}
    if not text:
        return params
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        if "=" not in piece:
            raise AlgFileError(f"bad --params piece '{piece}'", 0, 0)
        name, value = piece.split("=", 1)
        params[name.strip()] = Fraction(value.strip())
    return params


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load(path: str, params):
    parsed = parse_algebra(_read(path))
    if params:
        algebra = parsed.algebra.subs(params)
        alpha = parsed.alpha.subs(params) if parsed.alpha is not None else None
        omega = parsed.omega.subs(params) if parsed.omega is not None else None
        return algebra, alpha, omega
    return parsed.algebra, parsed.alpha, parsed.omega


class Report:
    """Accumulates named checks plus a result payload, prints text or JSON."""

    def __init__(self, command: str, source: str):
        self.command = command
        self.source = source
        self.checks: list = []
        self.result: dict = {}
        self.lines: list = []
        self._show: list = []

    def check(self, name: str, ok: bool, defect=None, show=True):
        self.checks.append({"name": name, "pass": bool(ok), "defect": defect})
        self._show.append(show)

    def say(self, line: str):
        self.lines.append(line)

    def emit(self, as_json: bool) -> None:
        if as_json:
            payload = {
                "command": self.command,
                "input": self.source,
                "checks": self.checks,
                "result": self.result,
            }
            print(json.dumps(payload, indent=2, sort_keys=False, ensure_ascii=False))
        else:
            for c, show in zip(self.checks, self._show):
                if not show:
                    continue
                line = f"{c['name']}: {'ok' if c['pass'] else 'FAIL'}"
                if c["defect"]:
                    line += f" ({c['defect']})"
                print(line)
            for line in self.lines:
                print(line)

    def passed(self) -> bool:
        return all(c["pass"] for c in self.checks)


def _require_forms(alpha, omega, need_alpha=True, need_omega=True):
    if need_alpha and alpha is None:
        raise AlgFileError("file has no alpha line", 0, 0)
    if need_omega and omega is None:
        raise AlgFileError("file has no omega lines", 0, 0)


# ---------------------------------------------------------------------------
# Commands


def cmd_validate(args) -> int:
    L, alpha, omega = _load(args.file, _parse_params(args.params))
    _require_forms(alpha, omega)
    rep = validate(L, alpha, omega)
    r = Report("validate", args.file)
    r.check("cocycle1", rep.cocycle1)
    r.check("cocycle2", rep.cocycle2)
    r.check("volume", rep.volume_nonzero, show=False)
    r.result["cosymplectic"] = rep.ok
    r.result["volume"] = sc.scalar_str(rep.volume)
    r.say(f"volume: {sc.scalar_str(rep.volume)} ({'nonzero' if rep.volume_nonzero else 'zero'})")
    r.say(f"cosymplectic: {'YES' if rep.ok else 'NO'}")
    if rep.ok and not L.is_parametric() and not alpha.is_parametric() and not omega.is_parametric():
        xi = reeb(L, alpha, omega)
        r.result["reeb"] = _vec_str(xi)
        r.say(f"reeb: {_vec_str(xi)}")
    r.emit(args.json)
    return PASS if rep.ok else MATH_FAIL


def cmd_reeb(args) -> int:
    L, alpha, omega = _load(args.file, _parse_params(args.params))
    _require_forms(alpha, omega)
    rep = validate(L, alpha, omega)
    r = Report("reeb", args.file)
    if not rep.ok:
        r.check("cosymplectic", False, str(rep))
        r.emit(args.json)
        return MATH_FAIL
    xi = reeb(L, alpha, omega)
    r.check("cosymplectic", True)
    r.result["reeb"] = _vec_str(xi)
    r.say(f"reeb: {_vec_str(xi)}")
    r.emit(args.json)
    return PASS


def cmd_lsa(args) -> int:
    L, alpha, omega = _load(args.file, _parse_params(args.params))
    _require_forms(alpha, omega)
    rep = validate(L, alpha, omega)
    r = Report("lsa", args.file)
    if not rep.ok:
        r.check("cosymplectic", False, str(rep))
        r.emit(args.json)
        return MATH_FAIL
    S = CosymplecticStructure.make(L, alpha, omega)
    table = cosymplectic_lsa(S)
    defect = left_symmetry_defect(table, L)
    r.check("cosymplectic", True)
    r.check("left_symmetric", defect["pass"])
    r.check("commutator", not defect["commutator"])
    entries = [
        {"i": i, "j": j, "value": _vec_str(v)} for i, j, v in table.nonzero_entries()
    ]
    r.result["products"] = entries
    for item in entries:
        r.say(f"e{item['i']}.e{item['j']} = {item['value']}")
    if not entries:
        r.say("zero product table")
    r.emit(args.json)
    return PASS if defect["pass"] else MATH_FAIL


def cmd_biinv(args) -> int:
    L, alpha, omega = _load(args.file, _parse_params(args.params))
    _require_forms(alpha, omega)
    rep = validate(L, alpha, omega)
    r = Report("biinv", args.file)
    if not rep.ok:
        r.check("cosymplectic", False, str(rep))
        r.emit(args.json)
        return MATH_FAIL
    S = CosymplecticStructure.make(L, alpha, omega)
    b = biinvariance(S)
    r.check("cosymplectic", True)
    for k in (1, 2, 3, 4):
        r.check(f"condition{k}", k not in b.failed_conditions)
    r.check("conditions_iff_associative", b.ok == b.associative)
    r.result["biinvariant"] = b.ok
    r.result["associative"] = b.associative
    r.say(f"bi-invariant: {'YES' if b.ok else 'NO'}")
    r.say(f"associative: {'YES' if b.associative else 'NO'}")
    r.emit(args.json)
    return PASS if b.ok else MATH_FAIL


def cmd_exists(args) -> int:
    L, _, _ = _load(args.file, _parse_params(args.params))
    res = exists_cosymplectic(L)
    r = Report("exists", args.file)
    r.result["exists"] = res.exists
    r.result["z1_dim"] = res.z1_dim
    r.result["z2_dim"] = res.z2_dim
    if res.exists:
        r.result["witness"] = {k: str(v) for k, v in sorted(res.witness.items())}
        r.say("YES: witness cocycles found")
        r.say(f"alpha = {_form_str(res.alpha)}")
        r.say(f"omega = {_omega_str(res.omega)}")
    else:
        r.say("NO: det Phi == 0 identically over Z1 x Z2")
    r.emit(args.json)
    return PASS if res.exists else MATH_FAIL


def cmd_symplectize(args) -> int:
    L, alpha, omega = _load(args.file, _parse_params(args.params))
    _require_forms(alpha, omega)
    pair = to_symplectic(L, alpha, omega)
    c2, det, ok = pair.validate()
    r = Report("symplectize", args.file)
    r.check("cocycle2", c2)
    r.check("nondegenerate", not sc.is_zero(det), f"det = {sc.scalar_str(det)}")
    r.result["symplectic"] = ok
    r.say(f"dim {pair.algebra.dim} extension:")
    for line in _brackets_str(pair.algebra):
        r.say("  " + line)
    r.say(f"omega = {_omega_str(pair.omega)}")
    r.say(f"symplectic: {'YES' if ok else 'NO'}")
    r.emit(args.json)
    return PASS if ok else MATH_FAIL


def cmd_extend(args) -> int:
    base_params = _parse_params(args.params)
    L, alpha, omega = _load(args.file, base_params)
    _require_forms(alpha, omega)
    ext = parse_extension(_read(args.data))
    if base_params:
        E = ext.data
        phi = LinearMap(
            E.phi.source_dim,
            E.phi.target_dim,
            tuple(tuple(sc.scalar_subs(x, base_params) for x in row) for row in E.phi.matrix),
        )
        ext.data = ExtensionData(
            phi,
            E.lam.subs(base_params),
            tuple(sc.scalar_subs(x, base_params) for x in E.v),
            sc.scalar_subs(E.t, base_params),
            E.theta.subs(base_params),
        )
    if ext.dim != L.dim:
        raise AlgFileError("extension data dimension != base dimension", 0, 0)
    alpha_d = Fraction(args.alpha_d) if args.alpha_d else Fraction(0)
    r = Report("extend", f"{args.file} + {args.data}")
    try:
        if args.construction == "A":
            res = construct_A(L, alpha, omega, ext.data)
        elif args.construction == "B":
            res = construct_B(L, alpha, omega, ext.data, alpha_d=alpha_d)
        else:
            res = construct_C(L, alpha, omega, ext.data.phi, ext.data.v, alpha_d=alpha_d)
    except ConditionsFail as exc:
        r.check("conditions", False, "; ".join(str(f) for f in exc.failures))
        r.emit(args.json)
        return MATH_FAIL
    S = res.structure
    r.check("conditions", True)
    r.check("validates", True)
    r.result["dim"] = S.dim
    r.result["brackets"] = _brackets_str(S.algebra)
    r.result["alpha"] = _form_str(S.alpha)
    r.result["omega"] = _omega_str(S.omega)
    r.result["reeb"] = _vec_str(S.reeb)
    r.say(f"dim {S.dim} cosymplectic extension:")
    for line in _brackets_str(S.algebra):
        r.say("  " + line)
    r.say(f"alpha = {_form_str(S.alpha)}")
    r.say(f"omega = {_omega_str(S.omega)}")
    r.say(f"reeb: {_vec_str(S.reeb)}")
    r.emit(args.json)
    return PASS


def cmd_isocheck(args) -> int:
    L1, a1, w1 = _load(args.file1, _parse_params(args.params))
    L2, a2, w2 = _load(args.file2, _parse_params(args.params))
    parsed = parse_map(_read(args.map))
    rep = check_isomorphism(L1, L2, parsed.map, a1, a2, w1, w2)
    r = Report("isocheck", f"{args.file1} ~ {args.file2}")
    r.check("invertible", rep.invertible)
    r.check("bracket_preserving", not rep.bracket_defects)
    if a1 is not None and a2 is not None:
        r.check("alpha_pullback", rep.alpha_defect is None)
    if w1 is not None and w2 is not None:
        r.check("omega_pullback", not rep.omega_defects)
    r.result["isomorphic"] = rep.ok
    r.say(f"isomorphic: {'YES' if rep.ok else 'NO'}")
    r.emit(args.json)
    return PASS if rep.ok else MATH_FAIL


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name in cat.list_entries():
            print(name)
        return PASS
    if args.action == "export":
        if not args.name:
            print("catalog export needs an entry name", file=sys.stderr)
            return USAGE_FAIL
        print(cat.export_entry(args.name, _parse_params(args.params)), end="")
        return PASS
    if args.action == "verify-all":
        report = verify_all()
        if args.json:
            print(json.dumps(report.to_dict(), indent=2, sort_keys=False, ensure_ascii=False))
        else:
            for r in report.results:
                print(r.line())
            print(
                f"summary: {len(report.results)} checks, "
                f"{len(report.failures())} failures, {len(report.flagged())} flagged"
            )
        return PASS if report.ok() else MATH_FAIL
    print(f"unknown catalog action '{args.action}'", file=sys.stderr)
    return USAGE_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coslie",
        description="Exact-arithmetic toolkit for cosymplectic Lie algebras",
    )
    parser.add_argument(
        "--seedless",
        action="store_true",
        help="forbid randomized checks (all CLI checks are deterministic; "
        "this flag asserts it)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable report")
        p.add_argument("--params", default="", help="comma-separated name=p/q bindings")

    for name, fn, help_text in (
        ("validate", cmd_validate, "check the three structure conditions"),
        ("reeb", cmd_reeb, "compute the Reeb vector"),
        ("lsa", cmd_lsa, "compute the left-symmetric product table"),
        ("biinv", cmd_biinv, "bi-invariance conditions and associativity"),
        ("exists", cmd_exists, "decide existence of a cosymplectic structure"),
        ("symplectize", cmd_symplectize, "one-dimensional central extension carrying the symplectic form"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file")
        common(p)
        p.set_defaults(fn=fn)

    p = sub.add_parser("extend", help="run a double-extension construction")
    p.add_argument("file", help="base algebra file with alpha and omega")
    p.add_argument("--construction", choices=("A", "B", "C"), required=True)
    p.add_argument("--data", required=True, help="extension data file")
    p.add_argument("--alpha-d", default="", help="value of alpha(d) for B and C")
    common(p)
    p.set_defaults(fn=cmd_extend)

    p = sub.add_parser("isocheck", help="verify an isomorphism witness")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("map", help="witness map file")
    common(p)
    p.set_defaults(fn=cmd_isocheck)

    p = sub.add_parser("catalog", help="catalog operations")
    p.add_argument("action", choices=("list", "export", "verify-all"))
    p.add_argument("name", nargs="?", default="")
    common(p)
    p.set_defaults(fn=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except AlgFileError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return USAGE_FAIL
    except FileNotFoundError as exc:
        print(f"cannot read {exc.filename}", file=sys.stderr)
        return USAGE_FAIL
    except ValueError as exc:
        print(f"bad value: {exc}", file=sys.stderr)
        return USAGE_FAIL
    except CoslieError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return MATH_FAIL


if __name__ == "__main__":
    sys.exit(main())
