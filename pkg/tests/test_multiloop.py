import pytest

from monodromy.braided import coadjoint_action
from monodromy.errors import BudgetExceeded
from monodromy.hopf import check_associative
from monodromy.multiloop import (BUDGET_ENV, Mon_R_m, bosonize_V, check_bracketing, check_multiloop_matrices,
                                 delta_A_vs_Delta_R, mon_R_m, multiloop_algebra)
from monodromy.tensor import LinearMap

from conftest import SMALL_QT, qt_of


@pytest.mark.parametrize("name,r", SMALL_QT)
@pytest.mark.parametrize("m", [1, 2])
def test_multiloop_algebra(name, r, m):
    qt = qt_of(name, r)
    L = multiloop_algebra(qt, m)
    assert L.dim == qt.H.dim ** m
    assert L.report.ok
    assert check_associative(L.algebra).ok


def test_bracketing_m3(h4r1):
    act = coadjoint_action(h4r1)
    assert check_bracketing(h4r1, act, act, act).ok
    assert multiloop_algebra(h4r1, 3).report.ok


def test_budget(monkeypatch, h4r1):
    monkeypatch.setenv(BUDGET_ENV, "15")
    with pytest.raises(BudgetExceeded):
        multiloop_algebra(h4r1, 2)
    with pytest.raises(BudgetExceeded):
        mon_R_m(h4r1, 2)


@pytest.mark.parametrize("name,r", SMALL_QT)
def test_bosonization(name, r):
    qt = qt_of(name, r)
    B = bosonize_V(qt, qt.H, LinearMap.identity((qt.H,)))
    assert B.report.ok
    assert delta_A_vs_Delta_R(qt).ok


def test_mon_m_positive(dz2):
    mm = mon_R_m(dz2, 2)
    assert mm.report.ok
    assert mm.rank == 16 and mm.bijective


def test_mon_m_negative():
    qt = qt_of("sweedler_h4", "R0")
    mm = mon_R_m(qt, 2)
    assert mm.report.ok
    assert mm.rank == 1 and not mm.bijective


def test_mon_m1_is_mon(h4r1):
    assert mon_R_m(h4r1, 1).report.ok


@pytest.mark.parametrize("name,r", SMALL_QT)
def test_matrices_both_paths(name, r):
    qt = qt_of(name, r)
    for m in (1, 2):
        assert check_multiloop_matrices(qt, m).ok


def test_Mon_m(dz2, z2):
    f, rep = Mon_R_m(dz2, 2)
    assert rep.ok and f.rank() == 64
    f, rep = Mon_R_m(z2, 2)
    assert rep.ok and f.rank() == 2
