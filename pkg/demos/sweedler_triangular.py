"""Sweedler's H4 carries a one-parameter family of R-matrices R_lam.

Every one of them turns out to be triangular (R_op R = 1 (x) 1), so the
monodromy map collapses to rank 1 and none of them is factorizable.
The Drinfeld double of Z2, by contrast, is as far from triangular as it gets.
"""

from gmpy2 import mpq

from monodromy import check_quasitriangular, sweedler_h4, sweedler_r
from monodromy.factorization import mon_R
from monodromy.presentation import bundled, loads

H = sweedler_h4()
print(f"{H.name}: basis {H.labels}")
for lam in [0, 1, 2, mpq(-1, 3)]:
    qt = check_quasitriangular(H, sweedler_r(H, lam))
    m = mon_R(qt)
    print(f"  lambda = {lam}: triangular={qt.triangular}  mon_R {m.verdict()}")

p = loads(bundled("double_z2"))
name, R = p.r_matrix()
qt = check_quasitriangular(p.algebra, R)
print(f"{p.algebra.name} with {name}: triangular={qt.triangular}  mon_R {mon_R(qt).verdict()}")
