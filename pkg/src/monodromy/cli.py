"""Command line: validate, build, verify and rank on presentation files.

Exit codes: 0 all identities hold, 1 an identity fails, 2 malformed input,
3 verification budget exceeded (see $MONODROMY_BUDGET).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import presentation, suite
from .braided import monodromy_algebra
from .double import drinfeld_double
from .errors import BudgetExceeded, MalformedPresentation, MonodromyError, NotApplicable, VerificationFailure
from .factorization import mon_R
from .hopf import check_associative, check_hopf_axioms, dual
from .multiloop import multiloop_algebra
from .quasitriangular import check_cocycle_property, check_quasitriangular, derived_identities, quasitriangular_report
from .report import REPORT_SCHEMA, Report, _render
from .twist import build_twisted_square, transported_structure

EXIT_OK, EXIT_FAIL, EXIT_MALFORMED, EXIT_BUDGET = 0, 1, 2, 3

BUILDS = ("dual", "double", "monodromy", "gauged", "multiloop", "twisted-square")


class _Failed(Exception):
    def __init__(self, reports):
        self.reports = reports


def _qt(pres, rname):
    if not pres.is_hopf:
        raise MalformedPresentation("a Hopf algebra presentation is needed here", "kind")
    name, R = pres.r_matrix(rname)
    report, _ = quasitriangular_report(pres.algebra, R, name=f"R-matrix {name} on {pres.algebra.name}")
    if not report.ok:
        raise _Failed([("R", report)])
    return name, check_quasitriangular(pres.algebra, R)


def _algebra_report(A):
    report = Report(f"algebra {A.name}")
    check_associative(A, report)
    one = A.one()
    from .tensor import Tensor
    cases = []
    for i in range(A.dim):
        e = Tensor.basis((A,), (i,))
        cases.append(((A.labels[i],), one * e, e))
        cases.append(((A.labels[i],), e * one, e))
    report.first_failure("unit", cases)
    return report


def cmd_validate(args):
    pres = presentation.resolve(args.file)
    A = pres.algebra
    reports = []
    if not pres.is_hopf:
        reports.append(("algebra", _algebra_report(A)))
    else:
        reports.append(("hopf", check_hopf_axioms(A)))
        for name, R in pres.r_matrices.items():
            rep, _ = quasitriangular_report(A, R, name=f"R-matrix {name} on {A.name}")
            if rep.ok:
                qt = check_quasitriangular(A, R)
                rep.extend(check_cocycle_property(qt))
                rep.extend(derived_identities(qt))
            reports.append((f"R:{name}", rep))
    return reports


def _build(pres, what, rname, m):
    H = pres.algebra
    if what == "dual":
        if not pres.is_hopf:
            raise MalformedPresentation("a Hopf algebra presentation is needed here", "kind")
        return dual(H), None
    if what == "double":
        if not pres.is_hopf:
            raise MalformedPresentation("a Hopf algebra presentation is needed here", "kind")
        D = drinfeld_double(H)
        return D, {"R_D": D.R_D}
    _, qt = _qt(pres, rname)
    if what == "monodromy":
        return monodromy_algebra(qt), None
    if what == "gauged":
        XM, qM, _ = transported_structure(qt)
        return XM, {"R_M": qM.R}
    if what == "multiloop":
        return multiloop_algebra(qt, m or 2).algebra, None
    if what == "twisted-square":
        sq = build_twisted_square(qt)
        return sq.hopf, {"script_R": sq.twisted_qt.R}
    raise MalformedPresentation(f"unknown construction {what!r}", "what")


def cmd_build(args):
    pres = presentation.resolve(args.file)
    A, rs = _build(pres, args.what, args.r, args.m)
    text = presentation.dumps(A, rs)
    # the output must load back to the same structure
    if presentation.dumps(presentation.loads(text).algebra, presentation.loads(text).r_matrices) != text:
        raise VerificationFailure("build output does not round-trip")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return []


def cmd_verify(args):
    pres = presentation.resolve(args.file)
    _, qt = _qt(pres, args.r)
    ids = list(suite.THEOREMS) if args.theorem == "all" else [args.theorem]
    return [(tid, suite.run(tid, qt, args.m)) for tid in ids]


def cmd_rank(args):
    pres = presentation.resolve(args.file)
    _, qt = _qt(pres, args.r)
    mon = mon_R(qt)
    report = Report(f"rank of mon_R on {qt.H.name}")
    report.extend(mon.report)
    return [("rank", report)], mon.verdict()


def _emit(args, reports, extra=None):
    ok = all(r.ok for _, r in reports)
    if getattr(args, "json", False):
        doc = {"schema": REPORT_SCHEMA, "command": args.command, "file": args.file, "ok": ok,
               "reports": [dict(r.to_dict(), id=tid) for tid, r in reports]}
        for key in ("theorem", "r", "m"):
            if getattr(args, key, None) is not None:
                doc[key] = getattr(args, key)
        if extra:
            doc["verdict"] = extra
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    else:
        for tid, r in reports:
            sys.stdout.write(f"[{tid}] {r.render()}\n")
        if extra:
            sys.stdout.write(extra + "\n")
        sys.stdout.write(("PASS" if ok else "FAIL") + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def _parser():
    p = argparse.ArgumentParser(prog="monodromy", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("validate", help="check Hopf axioms and every named R-matrix")
    v.add_argument("file")
    v.add_argument("--json", action="store_true")
    b = sub.add_parser("build", help="emit a constructed algebra as a presentation file")
    b.add_argument("what", choices=BUILDS)
    b.add_argument("file")
    b.add_argument("--r")
    b.add_argument("--m", type=int)
    b.add_argument("-o", "--output")
    t = sub.add_parser("verify", help="run the checks for one result, or all of them")
    t.add_argument("theorem", choices=list(suite.THEOREMS) + ["all"])
    t.add_argument("file")
    t.add_argument("--r")
    t.add_argument("--m", type=int)
    t.add_argument("--json", action="store_true")
    r = sub.add_parser("rank", help="rank of the monodromy map and the factorizability verdict")
    r.add_argument("file")
    r.add_argument("--r")
    r.add_argument("--json", action="store_true")
    return p


def main(argv=None):
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code else EXIT_OK
    if getattr(args, "m", None) is not None and args.m < 1:
        sys.stderr.write("error: --m must be at least 1\n")
        return EXIT_MALFORMED
    try:
        if args.command == "validate":
            return _emit(args, cmd_validate(args))
        if args.command == "build":
            cmd_build(args)
            return EXIT_OK
        if args.command == "verify":
            return _emit(args, cmd_verify(args))
        reports, verdict = cmd_rank(args)
        return _emit(args, reports, verdict)
    except MalformedPresentation as exc:
        sys.stderr.write(f"error: malformed input: {exc}\n")
        return EXIT_MALFORMED
    except BudgetExceeded as exc:
        sys.stderr.write(f"error: budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except _Failed as exc:
        return _emit(args, exc.reports)
    except (VerificationFailure, NotApplicable) as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        witness = getattr(exc, "witness", None)
        if witness is not None:
            sys.stderr.write(json.dumps(_render(witness), sort_keys=True, ensure_ascii=False) + "\n")
        return EXIT_FAIL
    except MonodromyError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
