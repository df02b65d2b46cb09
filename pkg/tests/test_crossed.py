import pytest

from monodromy.crossed import check_extension, gauged_monodromy, right_monodromy, tensor_inverse_oracle
from monodromy.hopf import check_associative
from monodromy.tensor import LinearMap

from conftest import SMALL_QT, qt_of


@pytest.mark.parametrize("name,r", SMALL_QT + [("z3_cyclotomic", "k1")])
def test_gauged_monodromy_algebra(name, r):
    qt = qt_of(name, r)
    X = gauged_monodromy(qt)
    assert X.dim == qt.H.dim ** 2
    assert X.report.ok
    assert check_associative(X).ok


def test_universal_extension_is_identity(h4r1):
    X = gauged_monodromy(h4r1)
    rep, f = check_extension(h4r1, X.i_M, X.M)
    assert rep.ok
    assert f == LinearMap.identity((X,))


def test_extension_rejects_scaled_matrix(h4r1):
    X = gauged_monodromy(h4r1)
    rep, f = check_extension(h4r1, X.i_M, X.M.scale(2))
    assert not rep.ok
    assert f is None


@pytest.mark.parametrize("name,r", SMALL_QT)
def test_left_right_monodromies(name, r):
    qt = qt_of(name, r)
    X = gauged_monodromy(qt)
    pair = right_monodromy(qt, X.i_M, X.M)
    assert pair.report.ok
    assert pair.M_left_inv == tensor_inverse_oracle(X.M)
    assert pair.M_left * pair.M_left_inv == pair.M_left_inv * pair.M_left
