import pytest
from gmpy2 import mpq

from monodromy import check_quasitriangular, cyclic_group_algebra, sweedler_h4, sweedler_r, trivial_r
from monodromy.errors import NotQuasitriangular
from monodromy.quasitriangular import check_cocycle_property, cop_structure, derived_identities, quasitriangular_report
from monodromy.tensor import Tensor

from conftest import CORPUS_QT, qt_of


@pytest.mark.parametrize("name,r", CORPUS_QT)
def test_corpus_pairs(name, r):
    qt = qt_of(name, r)
    assert qt.report.ok
    assert check_cocycle_property(qt).ok
    assert derived_identities(qt).ok


def test_r_lambda_family_all_triangular():
    H = sweedler_h4()
    for lam in [0, 1, 2, mpq(-3, 5)]:
        qt = check_quasitriangular(H, sweedler_r(H, lam))
        assert qt.triangular


def test_cyclic_r_is_not_triangular():
    assert not qt_of("z3_cyclotomic", "k1").triangular


def test_g_tensor_g_rejected():
    H = cyclic_group_algebra(2)
    R = Tensor.basis((H, H), (1, 1))
    rep, _ = quasitriangular_report(H, R)
    assert not rep.ok
    with pytest.raises(NotQuasitriangular):
        check_quasitriangular(H, R)


def test_non_invertible_rejected():
    H = sweedler_h4()
    R = Tensor.basis((H, H), (2, 2))
    with pytest.raises(NotQuasitriangular):
        check_quasitriangular(H, R)


def test_cop_structure_quasitriangular():
    qt = qt_of("sweedler_h4", "R1")
    cop = cop_structure(qt)
    assert cop.report.ok


def test_trivial_r_on_group_algebra():
    H = cyclic_group_algebra(3)
    qt = check_quasitriangular(H, trivial_r(H))
    assert qt.triangular and qt.R_inv == qt.R


def test_functions_on_s3_admit_no_trivial_r():
    from conftest import load
    H = load("s3_functions").algebra
    with pytest.raises(NotQuasitriangular):
        check_quasitriangular(H, trivial_r(H))


def test_one_tensor_g_rejected():
    H = cyclic_group_algebra(2)
    rep, _ = quasitriangular_report(H, Tensor.basis((H, H), (0, 1)))
    assert not rep.ok
    assert not rep["(Delta (x) id)(R) = R13 R23"].ok


def test_swapped_nilpotent_signs_rejected():
    # x(x)gx and gx(x)x with the opposite signs: not compatible with Delta(x) = x(x)1 + g(x)x
    H = sweedler_h4()
    one, g, x, gx = range(4)
    h = mpq(1, 2)
    R = Tensor((H, H), {(one, one): h, (one, g): h, (g, one): h, (g, g): -h,
                        (x, x): h, (x, gx): h, (gx, gx): h, (gx, x): -h})
    rep, _ = quasitriangular_report(H, R)
    assert not rep["(Delta (x) id)(R) = R13 R23"].ok
    assert rep["(Delta (x) id)(R) = R13 R23"].witness["index"] == (0, 2, 2)
