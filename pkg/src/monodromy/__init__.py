"""Exact computations with quasitriangular Hopf algebras, their monodromy
algebras, Drinfeld doubles and factorizable R-matrices."""

from .corpus import (cyclic_group_algebra, cyclic_r, cyclotomic_cyclic_group_algebra, s3_group_algebra,
                     sweedler_h4, sweedler_r, trivial_r)
from .fields import QQ, Field
from .hopf import HopfAlgebra, check_hopf_axioms, dual
from .quasitriangular import check_quasitriangular
from .tensor import Algebra, LinearMap, Tensor

__version__ = "0.1.0"
