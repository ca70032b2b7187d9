"""Command-line front end.

Exit codes: 0 success or true, 1 well-formed but false (axioms fail, not
isomorphic), 2 usage, parse or internal error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .poly import PolyMatrix
from .lca_core import (
    LCA2,
    TABLE_ROWS,
    AlgebraFormatError,
    algebra_from_json,
    algebra_to_json,
    check_axioms_lambda,
    check_axioms_nth,
    classify_rank1,
    r_cdq,
    rank1_from_json,
    read_json,
    transform,
)
from .padmod import center, derived_series, is_nilpotent, is_solvable, lower_central_series
from .classify import SemisimpleVirVir, are_isomorphic, solve_coboundary
from .normalize import classify, scramble
from .aut import automorphism_group

OK, FALSE, ERROR = 0, 1, 2


class _Out:
    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.doc: dict = {}
        self.lines: list[str] = []
        self.error: str | None = None

    def say(self, line: str = "") -> None:
        self.lines.append(line)

    def flush(self) -> None:
        if self.error is not None and not self.as_json:
            sys.stderr.write(f"error: {self.error}\n")
        elif self.as_json:
            sys.stdout.write(json.dumps(self.doc, ensure_ascii=False) + "\n")
        else:
            sys.stdout.write("\n".join(self.lines) + ("\n" if self.lines else ""))


def _load(path: str) -> LCA2:
    return algebra_from_json(read_json(path))


def _literal(v):
    if isinstance(v, tuple):
        return [_literal(x) for x in v]
    return v.to_literal()


def _residuals_json(report) -> dict:
    return {"|".join(str(x) for x in key): _literal(v) for key, v in report.residuals.items()}


def _form_line(F) -> str:
    doc = F.to_json()
    kind = doc.pop("type")
    if "Q" in doc:
        doc["Q"] = str(F.Q)
    if "a" in doc:
        doc["a"] = str(F.a)
    if "Qc" in doc:
        doc["Qc"] = str(F.Qc)
    extra = ", ".join(f"{k}={v}" for k, v in doc.items())
    return f"{kind}({extra})" if extra else kind


def _matrix_lines(M: PolyMatrix) -> list[str]:
    return [f"  [{M[i, 0]}, {M[i, 1]}]" for i in range(2)]


def cmd_check(args, out: _Out) -> int:
    R = _load(args.file)
    lam = check_axioms_lambda(R)
    nth = check_axioms_nth(R)
    valid = lam.valid and nth.valid
    out.doc.update(
        {
            "valid": valid,
            "lambda_check": {"valid": lam.valid, "residuals": _residuals_json(lam)},
            "nth_check": {"valid": nth.valid, "residuals": _residuals_json(nth)},
        }
    )
    out.say("valid" if valid else "invalid")
    if not lam.valid:
        out.say(lam.summary())
    if not nth.valid:
        out.say(nth.summary())
    if args.analyze and valid:
        R = LCA2(R.q, validated=True)
        ds, lcs, z = derived_series(R), lower_central_series(R), center(R)
        analysis = {
            "derived_series_ranks": [S.rank for S in ds],
            "lower_central_series_ranks": [S.rank for S in lcs],
            "center_rank": z.rank,
            "solvable": is_solvable(R),
            "nilpotent": is_nilpotent(R),
        }
        out.doc["analysis"] = analysis
        out.say(f"derived series: {' > '.join(str(S) for S in ds)}")
        out.say(f"lower central series: {' > '.join(str(S) for S in lcs)}")
        out.say(f"center: {z}")
        out.say(f"solvable: {analysis['solvable']}, nilpotent: {analysis['nilpotent']}")
    return OK if valid else FALSE


def _classify_file(path: str, degree_bound):
    R = _load(path)
    report = check_axioms_lambda(R)
    if not report.valid:
        return R, None, report
    return R, classify(LCA2(R.q, validated=True), degree_bound), report


def cmd_classify(args, out: _Out) -> int:
    R, res, report = _classify_file(args.file, args.degree_bound)
    if res is None:
        out.doc.update({"valid": False, "residuals": _residuals_json(report)})
        out.say("invalid input")
        out.say(report.summary())
        return FALSE
    form, change, cert = res
    reproduced = transform(LCA2(R.q, validated=True), change.m) == form.algebra()
    out.doc.update(
        {
            "valid": True,
            "form": form.to_json(),
            "basis_change": change.to_json(),
            "certificate": cert.to_json(),
            "revalidated": reproduced,
        }
    )
    out.say(_form_line(form))
    out.say("basis change:")
    out.lines.extend(_matrix_lines(change.m))
    if cert.case is not None:
        out.say(f"case: {cert.case.value}")
    for step in cert.steps:
        tail = "residual zero" if step.residual_degree is None else f"residual degree {step.residual_degree}"
        out.say(f"  {step.rule} ({tail})")
    if cert.notes.get("verdict"):
        out.say(f"verdict: {cert.notes['verdict']}")
    out.say(f"revalidated: {reproduced}")
    return OK if reproduced else ERROR


def cmd_iso(args, out: _Out) -> int:
    results = []
    for path in (args.file_a, args.file_b):
        R, res, report = _classify_file(path, args.degree_bound)
        if res is None:
            out.doc.update({"valid": False, "file": path, "residuals": _residuals_json(report)})
            out.say(f"{path}: invalid input")
            return FALSE
        results.append((R, res))
    (Ra, (Fa, Ta, _)), (Rb, (Fb, Tb, _)) = results
    iso, witness = are_isomorphic(Fa, Fb)
    out.doc.update({"isomorphic": iso, "forms": [Fa.to_json(), Fb.to_json()]})
    out.say(f"A: {_form_line(Fa)}")
    out.say(f"B: {_form_line(Fb)}")
    out.say("isomorphic" if iso else "not isomorphic")
    if iso and not isinstance(Fa, SemisimpleVirVir):
        # transform(Rb, Tb·W·Ta⁻¹) = Ra
        M = Tb.m @ witness.matrix() @ Ta.m.inverse()
        verified = transform(LCA2(Rb.q, validated=True), M) == LCA2(Ra.q, validated=True)
        out.doc["witness"] = witness.to_json()
        out.doc["basis_change_b_to_a"] = M.to_literal()
        out.doc["witness_verified"] = verified
        out.say("basis change carrying B's brackets to A's:")
        out.lines.extend(_matrix_lines(M))
        out.say(f"verified: {verified}")
        if not verified:
            return ERROR
    return OK if iso else FALSE


def cmd_aut(args, out: _Out) -> int:
    R, res, report = _classify_file(args.file, args.degree_bound)
    if res is None:
        out.doc.update({"valid": False, "residuals": _residuals_json(report)})
        out.say("invalid input")
        return FALSE
    form, change, _ = res
    desc = automorphism_group(form)
    out.doc.update({"form": form.to_json(), "basis_change": change.to_json(), "descriptor": desc.to_json()})
    out.say(_form_line(form))
    out.say(f"group: {desc.group}" + (f" (dim {desc.dim})" if desc.dim else ""))
    for c in desc.constraints:
        out.say(f"  {c}")
    out.say("(in the canonical basis; see basis_change in --json output)")
    return OK


def table_rows() -> list[dict]:
    rows = []
    for c, polys in TABLE_ROWS.items():
        ok = True
        for p in polys:
            R = r_cdq(c, 0, p)
            ok = ok and check_axioms_lambda(R).valid and check_axioms_nth(R).valid
            ok = ok and solve_coboundary(c, 0, p) is None
        rows.append({"c": c, "rows": [p.to_literal() for p in polys], "text": [str(p) for p in polys], "verified": ok})
    return rows


def cmd_table(args, out: _Out) -> int:
    rows = table_rows()
    out.doc["table"] = [{k: v for k, v in r.items() if k != "text"} for r in rows]
    for r in rows:
        out.say(f"c={r['c']:>3}: " + " ; ".join(r["text"]) + ("   [verified]" if r["verified"] else "   [FAILED]"))
    return OK if all(r["verified"] for r in rows) else ERROR


def cmd_scramble(args, out: _Out) -> int:
    R = _load(args.file)
    report = check_axioms_lambda(R)
    if not report.valid:
        out.doc.update({"valid": False, "residuals": _residuals_json(report)})
        out.say("invalid input")
        return FALSE
    S, T = scramble(LCA2(R.q, validated=True), args.seed, args.max_deg)
    doc = algebra_to_json(S)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, ensure_ascii=False)
            fh.write("\n")
    out.doc.update({"algebra": doc, "matrix": T.to_json(), "seed": args.seed})
    if not args.output:
        out.say(json.dumps(doc, ensure_ascii=False))
    out.say("matrix:")
    out.lines.extend(_matrix_lines(T.m))
    return OK


def cmd_rank1(args, out: _Out) -> int:
    q = rank1_from_json(read_json(args.file))
    v = classify_rank1(q)
    out.doc.update(
        {
            "kind": v.kind,
            "alpha": None if v.alpha is None else str(v.alpha),
            "residual": None if v.residual is None else v.residual.to_literal(),
        }
    )
    line = v.kind if v.alpha is None else f"{v.kind} (alpha = {v.alpha})"
    out.say(line)
    if v.residual is not None:
        out.say(f"residual: {v.residual}")
    return FALSE if v.kind == "Invalid" else OK


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lca2", description="Rank-two Lie conformal algebras: check, classify, compare.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document on stdout")
    common.add_argument("--degree-bound", type=int, default=None, help="search bound for the abelian ideal")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="verify the axioms")
    s.add_argument("file")
    s.add_argument("--analyze", action="store_true", help="also report derived series and center")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("classify", parents=[common], help="canonical form with basis change and certificate")
    s.add_argument("file")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("iso", parents=[common], help="decide isomorphism of two algebras")
    s.add_argument("file_a")
    s.add_argument("file_b")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("aut", parents=[common], help="automorphism group descriptor")
    s.add_argument("file")
    s.set_defaults(func=cmd_aut)

    s = sub.add_parser("table", parents=[common], help="print and verify the Q_c table")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("scramble", parents=[common], help="rewrite an algebra in a random basis")
    s.add_argument("file")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-deg", type=int, default=3)
    s.add_argument("-o", "--output", help="write the scrambled algebra here")
    s.set_defaults(func=cmd_scramble)

    s = sub.add_parser("rank1", parents=[common], help="classify a rank-one bracket")
    s.add_argument("file")
    s.set_defaults(func=cmd_rank1)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return OK if exc.code == 0 else ERROR
    out = _Out(args.json)
    try:
        code = args.func(args, out)
    except (AlgebraFormatError, OSError) as exc:
        out.doc, out.error = {"error": str(exc)}, str(exc)
        code = ERROR
    except Exception as exc:  # internal errors, including InternalInconsistencyError
        msg = f"{type(exc).__name__}: {exc}"
        out.doc, out.error = {"error": msg}, msg
        code = ERROR
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
