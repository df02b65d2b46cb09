import pytest

from monodromy import sweedler_h4
from monodromy.double import (check_double_extension, check_straightening, double_monodromies, double_structure,
                              drinfeld_double, lambda_R)
from monodromy.tensor import LinearMap, Tensor

from conftest import CORPUS_QT, load, qt_of


@pytest.mark.parametrize("name", ["z2_group", "z3_group", "sweedler_h4"])
def test_double_structure(name):
    H = load(name).algebra
    rep = double_structure(H)
    assert rep.ok
    D = drinfeld_double(H)
    assert check_straightening(D).ok


def test_double_universal_property():
    H = sweedler_h4()
    D = drinfeld_double(H)
    rep, f = check_double_extension(H, D.i_D, D.DD)
    assert rep.ok and f == LinearMap.identity((D,))
    rep, f = check_double_extension(H, D.i_D, D.DD.scale(2))
    assert not rep.ok


@pytest.mark.parametrize("name,r", CORPUS_QT)
def test_lambda_R_iso(name, r):
    qt = qt_of(name, r)
    L = lambda_R(qt)
    assert L.report.ok
    assert L.map.is_multiplicative() is None
    assert L.inverse.is_multiplicative() is None
    assert L.map.rank() == qt.H.dim ** 2


def test_lambda_trivial_r_is_identity_grid(z2):
    L = lambda_R(z2)
    assert all(col == {(j,): 1} for j, col in enumerate(L.map.cols))


@pytest.mark.parametrize("name,r", [("sweedler_h4", "R1"), ("double_z2", "R_D")])
def test_double_monodromies(name, r):
    assert double_monodromies(qt_of(name, r)).report.ok


def test_R_D_on_double(dz2):
    D = drinfeld_double(load("z2_group").algebra)
    assert D.qt.report.ok
    assert D.R_D.spaces == (D, D)
