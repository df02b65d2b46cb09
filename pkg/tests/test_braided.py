import pytest

from monodromy.braided import (check_delta_prime, check_delta_R, check_delta_R_conjugation, check_module_action,
                               check_monodromy_relation, coadjoint_action, delta_R, monodromy_algebra,
                               monodromy_matrix)
from monodromy.errors import InvariantViolation
from monodromy.hopf import canonical_element, check_associative
from monodromy.tensor import Tensor

from conftest import CORPUS_QT, SMALL_QT, qt_of


@pytest.mark.parametrize("name,r", CORPUS_QT)
def test_delta_R_coalgebra(name, r):
    qt = qt_of(name, r)
    assert check_delta_R(qt).ok
    assert check_delta_prime(qt).ok


@pytest.mark.parametrize("name,r", CORPUS_QT)
def test_monodromy_algebra(name, r):
    qt = qt_of(name, r)
    A = monodromy_algebra(qt)
    assert check_associative(A).ok
    E = monodromy_matrix(qt)
    assert check_monodromy_relation(qt, E).ok


def test_adversarial_matrices_rejected(h4r1):
    E = monodromy_matrix(h4r1)
    A = E.spaces[1]
    assert not check_monodromy_relation(h4r1, E.scale(2)).ok
    assert not check_monodromy_relation(h4r1, E + Tensor.unit((h4r1.H, A))).ok


def test_plain_dual_fails_for_nontrivial_braiding(h4r1):
    # the canonical element of the ordinary dual is not a monodromy matrix here
    rep = check_monodromy_relation(h4r1, canonical_element(h4r1.H))
    assert not rep.ok


def test_trivial_r_gives_ordinary_dual(z2):
    rep = check_monodromy_relation(z2, canonical_element(z2.H))
    assert rep.ok


@pytest.mark.parametrize("name,r", SMALL_QT)
def test_coadjoint(name, r):
    qt = qt_of(name, r)
    act = coadjoint_action(qt)
    assert act.report.ok
    assert check_module_action(act).ok
    assert check_delta_R_conjugation(qt).ok


def test_delta_R_differs_from_delta_when_braided(h4r1, dz2):
    assert delta_R(h4r1) != h4r1.H.delta
    # commutative H: the braided coproduct collapses to the ordinary one
    assert delta_R(dz2) == dz2.H.delta
