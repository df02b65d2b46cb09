"""Acceptance criteria 1-10.  Every criterion builds its structures from scratch
(no shared caches), checks exact equalities and a wall-clock bound, and prints
one PASS/FAIL line."""

import os
import subprocess
import sys
import tempfile
import time
from contextlib import contextmanager

import pytest

from monodromy import presentation, suite
from monodromy.braided import coadjoint_action, check_module_action
from monodromy.cli import main
from monodromy.double import drinfeld_double
from monodromy.factorization import mon_R, monodromy_homomorphism_report, pi_R
from monodromy.hopf import check_associative, check_hopf_axioms, dual
from monodromy.multiloop import check_bracketing, mon_R_m
from monodromy.quasitriangular import check_cocycle_property, check_quasitriangular, derived_identities
from monodromy.twist import Lambda_R

FIX = os.path.join(os.path.dirname(__file__), "fixtures")

PAIRS = [("z2_group", None), ("z3_group", None), ("s3_group", None), ("z3_cyclotomic", "k1"),
         ("z3_cyclotomic", "k2"), ("sweedler_h4", "R0"), ("sweedler_h4", "R1"), ("sweedler_h4", "R2"),
         ("double_z2", "R_D")]


def fresh(name, r=None):
    p = presentation.loads(presentation.bundled(name))
    _, R = p.r_matrix(r)
    return check_quasitriangular(p.algebra, R)


@contextmanager
def criterion(request, number, title, bound):
    t0 = time.perf_counter()
    ok = False
    try:
        yield
        elapsed = time.perf_counter() - t0
        assert elapsed < bound, f"took {elapsed:.2f}s, bound {bound}s"
        ok = True
    finally:
        elapsed = time.perf_counter() - t0
        line = f"CRITERION {number:>2} {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f}s < {bound}s)"
        capman = request.config.pluginmanager.getplugin("capturemanager")
        with capman.global_and_fixture_disabled():
            print("\n" + line)


def ok_suite(tid, qt, m=None):
    rep = suite.run(tid, qt, m)
    assert rep.ok, rep.render()
    return rep


def test_c01_hopf_validation(request):
    with criterion(request, 1, "Hopf axioms on corpus, duals and build outputs", 5):
        for name in ["z2_group", "z3_group", "s3_group", "s3_functions", "z3_cyclotomic", "sweedler_h4",
                     "double_z2"]:
            H = presentation.loads(presentation.bundled(name)).algebra
            assert check_hopf_axioms(H).ok, name
            assert check_hopf_axioms(dual(H)).ok, name
        H4 = presentation.loads(presentation.bundled("sweedler_h4")).algebra
        assert check_hopf_axioms(drinfeld_double(H4)).ok
        with tempfile.TemporaryDirectory() as tmp:
            for what, src, extra in [("dual", "h4", []), ("double", "h4", []), ("double", "z3_cyclotomic", []),
                                     ("gauged", "h4", ["--r", "R1"]), ("gauged", "double_z2", []),
                                     ("twisted-square", "h4", ["--r", "R1"]),
                                     ("monodromy", "h4", ["--r", "R1"]), ("multiloop", "h4", ["--r", "R1"])]:
                out = os.path.join(tmp, "out.json")
                assert main(["build", what, src, *extra, "-o", out]) == 0
                p = presentation.load(out)
                if p.is_hopf:
                    assert check_hopf_axioms(p.algebra).ok, what
                    for R in p.r_matrices.values():
                        check_quasitriangular(p.algebra, R)
                else:
                    assert check_associative(p.algebra).ok, what


def test_c02_quasitriangularity(request):
    with criterion(request, 2, "quasitriangularity identities on every corpus (H, R)", 5):
        for name, r in PAIRS:
            qt = fresh(name, r)
            assert qt.report.ok
            assert check_cocycle_property(qt).ok
            rep = derived_identities(qt)
            assert rep.ok, rep.render()
        D = drinfeld_double(presentation.loads(presentation.bundled("sweedler_h4")).algebra)
        assert D.qt.report.ok and derived_identities(D.qt).ok


def test_c03_braided_coproduct_and_monodromy_relation(request):
    with criterion(request, 3, "Delta_R coalgebra, relation verdicts agree incl. adversarial", 5):
        for name, r in PAIRS:
            qt = fresh(name, r)
            ok_suite("prop2.1", qt)
            rep = ok_suite("prop2.4", qt)
            assert rep["2 E rejected, verdicts agree"].ok
            assert rep["E + 1 (x) 1 rejected, verdicts agree"].ok


def test_c04_coadjoint_and_gauged(request):
    with criterion(request, 4, "coadjoint action, M_R(H), extension criterion +/-", 10):
        for name, r in PAIRS:
            qt = fresh(name, r)
            act = coadjoint_action(qt)
            assert check_module_action(act).ok
            rep = ok_suite("cor3.2", qt)
            assert rep["extension rejects 2 M"].ok
            assert rep["extension of (i_M, M) is the identity"].ok


def test_c05_left_right(request):
    with criterion(request, 5, "M^-1 vs linear solve, right monodromy, commuting images", 20):
        for name, r in PAIRS:
            rep = ok_suite("prop4.1", fresh(name, r))
            assert rep["M^-1 agrees with the linear-solve inverse"].ok
            assert rep["left and right images commute"].ok


def test_c06_double(request):
    with criterion(request, 6, "D(H), lambda_R isomorphism, identity grid for R = 1", 20):
        for name, r in PAIRS:
            qt = fresh(name, r)
            ok_suite("lemma5.2", qt)
            rep = ok_suite("cor5.3", qt)
            if r is None:
                assert rep["R = 1 (x) 1: lambda_R is the identity grid"].ok


def test_c07_factorization(request):
    with criterion(request, 7, "mon_R, pi_R, rank 1 if triangular, D(Z2) factorizable", 20):
        for name, r in PAIRS:
            qt = fresh(name, r)
            ok_suite("prop6.1", qt)
            ok_suite("thm6.4", qt)
            if qt.triangular:
                assert mon_R(qt).rank == 1, name
        dz2 = fresh("double_z2", "R_D")
        assert mon_R(dz2).rank == 4
        p = pi_R(dz2)
        assert p.rank() == 16 and p.is_multiplicative() is None
        rep = monodromy_homomorphism_report(dz2)
        assert rep["pi_R(H^_R^l) = H (x) 1"].ok and rep["pi_R(H^_R^r) = 1 (x) H"].ok
        assert rep["pi_R^-1 o pi_R = id"].ok


def test_c08_twist(request):
    with criterion(request, 8, "cocycle twist, script R, Lambda_R, transported structure", 60):
        for name, r in [("sweedler_h4", "R1"), ("z2_group", None)]:
            qt = fresh(name, r)
            for tid in ("lemma7.1", "lemma7.2", "thm7.3"):
                ok_suite(tid, qt)
        assert Lambda_R(fresh("sweedler_h4", "R1")).rank() == 4


def test_c09_multiloop(request):
    with criterion(request, 9, "L_m, bracketing, V isomorphism, mon_R,m verdicts, N_nu", 120):
        h4r1 = fresh("sweedler_h4", "R1")
        ok_suite("propA.2", h4r1)
        act = coadjoint_action(h4r1)
        assert check_bracketing(h4r1, act, act, act).ok
        for name, r in [("sweedler_h4", "R1"), ("double_z2", "R_D"), ("z3_cyclotomic", "k1")]:
            ok_suite("propA.3", fresh(name, r))
        dz2 = fresh("double_z2", "R_D")
        ok_suite("thmA.5", dz2, 2)
        assert mon_R_m(dz2, 2).bijective and mon_R_m(dz2, 2).rank == 16
        h4r0 = fresh("sweedler_h4", "R0")
        ok_suite("thmA.5", h4r0, 2)
        assert not mon_R_m(h4r0, 2).bijective
        for qt in (dz2, h4r1):
            rep = ok_suite("propA.6", qt, 2)
            assert rep["m=2: N_nu by both paths, nu=1"].ok and rep["m=2: N_nu by both paths, nu=2"].ok
            assert rep["m=2: mon_R,m restricted to L_{m-1} = mon_R,{m-1} (x) 1"].ok


def _cli(*argv, env=None):
    return subprocess.run([sys.executable, "-m", "monodromy", *argv], capture_output=True, text=True,
                          env=dict(os.environ, **(env or {})))


def test_c10_cli(request):
    with criterion(request, 10, "CLI round trip, deterministic verify all, exit codes", 10):
        with tempfile.TemporaryDirectory() as tmp:
            out = os.path.join(tmp, "double.json")
            assert _cli("build", "double", "h4", "-o", out).returncode == 0
            text = open(out, encoding="utf-8").read()
            p = presentation.loads(text)
            assert presentation.dumps(p.algebra, p.r_matrices) == text
        first = _cli("verify", "all", "h4", "--r", "R1")
        second = _cli("verify", "all", "h4", "--r", "R1")
        assert first.returncode == 0 and first.stdout == second.stdout
        bad = _cli("validate", os.path.join(FIX, "broken_coassociativity.json"))
        assert bad.returncode == 1 and "[FAIL] coassociativity" in bad.stdout
        assert _cli("validate", os.path.join(FIX, "delta_g_is_g_e.json")).returncode == 1
        assert _cli("validate", os.path.join(FIX, "zero_denominator.json")).returncode == 2
        budget = _cli("build", "multiloop", "h4", "--m", "3", env={"MONODROMY_BUDGET": "16"})
        assert budget.returncode == 3
