import pytest

from monodromy.factorization import (Mon_R, bosonize_U, factorizable, mon_R, mon_R_op_dual_check,
                                     monodromy_homomorphism_report, pi_R)

from conftest import CORPUS_QT, qt_of


@pytest.mark.parametrize("name,r", CORPUS_QT)
def test_mon_R(name, r):
    qt = qt_of(name, r)
    m = mon_R(qt)
    assert m.report.ok
    assert mon_R_op_dual_check(qt).ok
    if qt.triangular:
        assert m.rank == 1


@pytest.mark.parametrize("name,r,rank", [("sweedler_h4", "R0", 1), ("sweedler_h4", "R1", 1), ("z2_group", None, 1),
                                         ("double_z2", "R_D", 4), ("z3_cyclotomic", "k1", 3)])
def test_ranks(name, r, rank):
    qt = qt_of(name, r)
    assert mon_R(qt).rank == rank
    assert factorizable(qt) == (rank == qt.H.dim)


def test_verdict_text(dz2, h4r1):
    assert mon_R(dz2).verdict() == "4/4 factorizable"
    assert mon_R(h4r1).verdict() == "1/4 not factorizable"


@pytest.mark.parametrize("name,r", CORPUS_QT)
def test_homomorphism_report(name, r):
    qt = qt_of(name, r)
    assert monodromy_homomorphism_report(qt).ok
    assert Mon_R(qt).is_multiplicative() is None


def test_pi_R_factorizable_is_iso(dz2):
    p = pi_R(dz2)
    assert p.rank() == 16
    assert p.is_multiplicative() is None
    rep = monodromy_homomorphism_report(dz2)
    assert rep["pi_R(H^_R^l) = H (x) 1"].ok
    assert rep["pi_R(H^_R^r) = 1 (x) H"].ok


def test_bosonize_U(h4r1):
    U, Ui, rep = bosonize_U(h4r1.H)
    assert rep.ok
    assert U.rank() == 16
