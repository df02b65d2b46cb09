import pytest

from monodromy import presentation
from monodromy.quasitriangular import check_quasitriangular

_QT = {}


def load(name):
    return presentation.loads(presentation.bundled(name))


def qt_of(name, r=None):
    key = (name, r)
    if key not in _QT:
        p = load(name)
        _, R = p.r_matrix(r)
        _QT[key] = check_quasitriangular(p.algebra, R)
    return _QT[key]


# every (file, R) pair shipped with the package
CORPUS_QT = [("z2_group", None), ("z3_group", None), ("s3_group", None),
             ("z3_cyclotomic", "k1"), ("z3_cyclotomic", "k2"),
             ("sweedler_h4", "R0"), ("sweedler_h4", "R1"), ("sweedler_h4", "R2"),
             ("double_z2", "R_D")]

# small enough for the four-leg and multi-loop constructions
SMALL_QT = [("z2_group", None), ("sweedler_h4", "R0"), ("sweedler_h4", "R1"), ("double_z2", "R_D")]


@pytest.fixture
def h4r1():
    return qt_of("sweedler_h4", "R1")


@pytest.fixture
def dz2():
    return qt_of("double_z2", "R_D")


@pytest.fixture
def z2():
    return qt_of("z2_group")
