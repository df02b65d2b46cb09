import pytest

from monodromy.hopf import check_hopf_axioms
from monodromy.twist import Lambda_R, build_twisted_square, lambda_R_report, transported_structure

from conftest import qt_of

TWIST_QT = [("z2_group", None), ("sweedler_h4", "R1"), ("sweedler_h4", "R0")]


@pytest.mark.parametrize("name,r", TWIST_QT)
def test_twisted_square(name, r):
    sq = build_twisted_square(qt_of(name, r))
    assert sq.report.ok
    assert sq.report["T12 (Delta_HH (x) id)(T) = T23 (id (x) Delta_HH)(T)"].ok
    assert sq.report["script R = T_op R' T^-1"].ok
    assert check_hopf_axioms(sq.hopf).ok
    assert sq.twisted_qt.report.ok


@pytest.mark.parametrize("name,r,rank", [("sweedler_h4", "R1", 4), ("z2_group", None, 2)])
def test_Lambda(name, r, rank):
    qt = qt_of(name, r)
    rep = lambda_R_report(qt)
    assert rep.ok
    L = Lambda_R(qt)
    assert L.rank() == rank
    assert L.is_multiplicative() is None


@pytest.mark.parametrize("name,r", TWIST_QT)
def test_transported_structure(name, r):
    XM, qM, rep = transported_structure(qt_of(name, r))
    assert rep.ok
    assert check_hopf_axioms(XM).ok
    assert qM.report.ok
