"""Command-line front end.

Every subcommand takes a case string like ``E7:w7`` or ``B5:w1:modified``
(``--variant`` can override the suffix) and writes deterministic output to
stdout or ``--out``.  ``verify`` runs the per-case acceptance checks and
exits 1 with a machine-readable discrepancy report on any mismatch; parse
errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .hasse import build_diagram, k_chains, label_text, to_dot, to_json
from .paths import cochain_formula, cochains, maximal_paths
from .polytope import (
    build_polytope,
    certify_normality,
    lattice_points,
    reduce_nonredundant,
)
from .repmodels import known_dim, spin_image, wedge_image
from .rootsys import (
    CaseError,
    CaseId,
    SPANNING,
    STANDARD,
    NORMALITY,
    canonical_case,
    case_dim,
    has_modified_variant,
    in_table,
    named_roots,
    parse_case,
    positive_roots,
    support_roots,
)
from .straighten import rewrite_to_basis, straighten_relation

_VARIANT_FLAG = {"standard": STANDARD, "modified": SPANNING, "normality-order": NORMALITY}


def _resolve_case(args) -> CaseId:
    case = parse_case(args.case)
    if getattr(args, "variant", None):
        case = CaseId(case.lie, case.fund_index, _VARIANT_FLAG[args.variant])
    return case


def _working_case(case: CaseId) -> CaseId:
    """Upgrade a standard case to the spanning variant where one is required."""
    if case.variant == STANDARD and has_modified_variant(case.lie, case.fund_index):
        return CaseId(case.lie, case.fund_index, SPANNING)
    return case


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_roots(args) -> int:
    case = _resolve_case(args)
    rows = [
        {"name": i, "coeffs": list(r.coeffs), "coroot": list(r.coroot), "height": r.height}
        for i, r in enumerate(support_roots(case), start=1)
    ]
    if args.format == "csv":
        lines = ["position,coeffs,coroot,height"]
        lines += [
            f"{i},{' '.join(map(str, row['coeffs']))},{' '.join(map(str, row['coroot']))},{row['height']}"
            for i, row in enumerate(rows, start=1)
        ]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, json.dumps({"case": str(case), "order": rows}, indent=2) + "\n")
    return 0


def _cmd_hasse(args) -> int:
    case = _resolve_case(args)
    d = build_diagram(case)
    if args.format == "dot":
        _emit(args, to_dot(d))
    else:
        _emit(args, to_json(d))
    return 0


def _cmd_paths(args) -> int:
    case = _working_case(_resolve_case(args))
    paths = maximal_paths(build_diagram(case))
    if args.format == "csv":
        lines = ["size,vertices"] + [f"{len(p)},{' '.join(map(str, p))}" for p in paths]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, json.dumps({"case": str(case), "maximal_paths": [list(p) for p in paths]}, indent=2) + "\n")
    return 0


def _cmd_cochains(args) -> int:
    case = _working_case(_resolve_case(args))
    cc = cochains(build_diagram(case))
    if args.count:
        _emit(args, f"{len(cc)}\n")
    elif args.format == "csv":
        lines = ["size,vertices"] + [f"{len(c)},{' '.join(map(str, c))}" for c in cc]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, json.dumps({"case": str(case), "cochains": [list(c) for c in cc]}, indent=2) + "\n")
    return 0


def _cmd_polytope(args) -> int:
    case = _working_case(_resolve_case(args))
    p = reduce_nonredundant(build_polytope(case, args.m))
    if args.format == "table":
        lines = [" + ".join(f"x{i}" for i in sup) + " <= m" for sup in p.supports]
        _emit(args, "\n".join(lines) + "\n")
    elif args.format == "csv":
        lines = ["support"] + [" ".join(map(str, sup)) for sup in p.supports]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, json.dumps({"case": str(case), "m": p.m, "supports": [list(s) for s in p.supports]}, indent=2) + "\n")
    return 0


def _cmd_points(args) -> int:
    case = _working_case(_resolve_case(args))
    pts = lattice_points(build_polytope(case, args.m))
    if args.count:
        _emit(args, f"{len(pts)}\n")
    elif args.format == "csv":
        lines = [",".join(map(str, pt)) for pt in pts]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, json.dumps({"case": str(case), "m": args.m, "points": [list(p) for p in pts]}, indent=2) + "\n")
    return 0


def _cmd_normality(args) -> int:
    case = _working_case(_resolve_case(args))
    log = certify_normality(case, args.m)
    _emit(args, json.dumps(log, indent=2) + "\n")
    return 0


def _cmd_straighten(args) -> int:
    case = _working_case(_resolve_case(args))
    t = tuple(int(x) for x in args.exponent.split(","))
    res = sorted(rewrite_to_basis(case, args.m, t))
    _emit(args, json.dumps({"case": str(case), "m": args.m, "input": list(t),
                            "basis_support": [list(r) for r in res]}, indent=2) + "\n")
    return 0


def verify_case(case: CaseId, m_max: int = 4) -> dict:
    """Run the acceptance battery for one case; returns a report dict."""
    case = _working_case(case)
    report: dict = {"case": str(case), "checks": {}, "ok": True}

    def record(name: str, ok: bool, detail) -> None:
        report["checks"][name] = {"ok": bool(ok), "detail": detail}
        if not ok:
            report["ok"] = False

    d = build_diagram(case)
    cc = cochains(d)
    dim = case_dim(case)
    record("cochain_count", len(cc) == dim == known_dim(case), [len(cc), dim])
    record("k_chain_free", not k_chains(d), len(k_chains(d)))
    try:
        log = certify_normality(case, m_max)
        record("normality", True, [r["points"] for r in log])
    except Exception as exc:  # CertificationError or worse
        record("normality", False, str(exc))
    s, n, k = case.lie.series, case.lie.rank, case.fund_index
    if s == "A" or (s == "B" and k == n) or (s == "D" and k in (n - 1, n)):
        record("formula_oracle", set(cochain_formula(case)) == set(cc), len(cc))
    if s == "A":
        imgs = {wedge_image(case, p) for p in cc}
        record("wedge_model", len(imgs) == len(cc), len(imgs))
    if (s == "B" and k == n) or (s == "D" and k in (n - 1, n)):
        imgs = {spin_image(case, p) for p in cc}
        record("spin_model", len(imgs) == len(cc), len(imgs))
    return report


def _cmd_verify(args) -> int:
    case = _resolve_case(args)
    if not in_table(case.lie, case.fund_index):
        raise CaseError(f"{case} is outside the solved-case table")
    m_max = args.m if args.m is not None else (2 if str(case.lie) == "E7" else 4)
    report = verify_case(case, m_max)
    _emit(args, json.dumps(report, indent=2) + "\n")
    return 0 if report["ok"] else 1


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(prog="pbwpoly", description=__doc__)
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.add_argument("case", help="case string, e.g. E7:w7 or B5:w1:modified")
        p.add_argument("--variant", choices=sorted(_VARIANT_FLAG), help="order variant override")
        p.add_argument("--out", help="write output to this path instead of stdout")
        p.set_defaults(fn=fn)
        return p

    p = add("roots", _cmd_roots, help="support roots in the case order")
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = add("hasse", _cmd_hasse, help="the case diagram")
    p.add_argument("--format", choices=["json", "dot"], default="dot")

    p = add("paths", _cmd_paths, help="maximal Dyck paths")
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = add("cochains", _cmd_cochains, help="all co-chains")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--count", action="store_true", help="print only the count")

    p = add("polytope", _cmd_polytope, help="non-redundant inequalities")
    p.add_argument("-m", type=int, default=1)
    p.add_argument("--format", choices=["json", "csv", "table"], default="json")

    p = add("points", _cmd_points, help="lattice points of P(m)")
    p.add_argument("-m", type=int, default=1)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--count", action="store_true", help="print only the count")

    p = add("normality", _cmd_normality, help="normality certificate log up to m")
    p.add_argument("-m", type=int, default=4)

    p = add("straighten", _cmd_straighten, help="rewrite an exponent into the basis")
    p.add_argument("-m", type=int, default=1)
    p.add_argument("exponent", help="comma-separated multi-exponent, e.g. 1,0,0,0,0,1")

    p = add("verify", _cmd_verify, help="full per-case acceptance battery")
    p.add_argument("-m", type=int, default=None, help="normality depth (default 4; 2 for E7)")

    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (CaseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
