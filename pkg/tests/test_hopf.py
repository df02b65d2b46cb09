import pytest

from monodromy import check_hopf_axioms, cyclic_group_algebra, dual, s3_group_algebra, sweedler_h4
from monodromy.corpus import function_algebra, s3_table
from monodromy.double import drinfeld_double
from monodromy.hopf import HopfAlgebra, canonical_element, co_opposite, iterated_coproduct, opposite
from monodromy.tensor import LinearMap

from conftest import load

BUNDLED = ["z2_group", "z3_group", "s3_group", "s3_functions", "z3_cyclotomic", "sweedler_h4", "double_z2"]


@pytest.mark.parametrize("name", BUNDLED)
def test_bundled_are_hopf(name):
    H = load(name).algebra
    assert check_hopf_axioms(H).ok
    assert check_hopf_axioms(dual(H)).ok


@pytest.mark.parametrize("make", [lambda: cyclic_group_algebra(3), s3_group_algebra, sweedler_h4])
def test_op_and_cop(make):
    H = make()
    assert check_hopf_axioms(opposite(H)).ok
    assert check_hopf_axioms(co_opposite(H)).ok


def test_function_algebra_dimension():
    table, labels = s3_table()
    F = function_algebra(table, labels)
    assert F.dim == 6
    assert check_hopf_axioms(F).ok


def test_double_of_h4_structural():
    D = drinfeld_double(sweedler_h4())
    assert D.dim == 16
    assert check_hopf_axioms(D).ok


def test_iterated_coproduct_low_orders():
    H = sweedler_h4()
    eps = iterated_coproduct(H, 0)
    assert [col.get((), 0) for col in eps.cols] == list(H.counit)
    assert iterated_coproduct(H, 1) == LinearMap.identity((H,))
    assert iterated_coproduct(H, 2) == H.delta
    d3 = iterated_coproduct(H, 3)
    for i in range(H.dim):
        assert d3.image(i) == H.delta.image(i).apply(H.delta, 0)


def test_canonical_element_shape():
    H = sweedler_h4()
    E = canonical_element(H)
    assert E.nnz == 4
    assert E.spaces[0] is H


def _broken_z2(comult_g):
    e, g = 0, 1
    table = [[((e, 1),), ((g, 1),)], [((g, 1),), ((e, 1),)]]
    comult = [{(e, e): 1}, comult_g]
    return HopfAlgebra(2, table, {e: 1}, comult, [1, 1], [{e: 1}, {g: 1}], labels=["e", "g"], name="broken")


def test_forced_coassociativity_failure_has_witness():
    rep = check_hopf_axioms(_broken_z2({(1, 1): 1, (1, 0): 1}))
    assert not rep.ok
    bad = rep["coassociativity"]
    assert not bad.ok
    assert bad.witness["at"] == ("g",)


def test_g_tensor_e_is_coassociative_but_not_counital():
    rep = check_hopf_axioms(_broken_z2({(1, 0): 1}))
    assert rep["coassociativity"].ok
    assert not rep["counit"].ok
    assert rep["counit"].witness["at"] == ("g",)
