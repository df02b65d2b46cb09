"""Multi-loop algebras L_m and their monodromy maps.

L_m grows like dim(H)^m, so the verification budget
($MONODROMY_BUDGET, default 4096) decides how far we can go.
"""

import os

from monodromy.errors import BudgetExceeded
from monodromy.multiloop import budget, mon_R_m, multiloop_algebra
from monodromy.presentation import resolve
from monodromy.quasitriangular import check_quasitriangular


def qt_for(name, r=None):
    p = resolve(name)
    return check_quasitriangular(p.algebra, p.r_matrix(r)[1])


print(f"budget: {budget()}")
for name, r in [("double_z2", "R_D"), ("h4", "R0")]:
    qt = qt_for(name, r)
    for m in (1, 2):
        L = multiloop_algebra(qt, m)
        mm = mon_R_m(qt, m)
        print(f"{qt.H.name} m={m}: dim L_m = {L.dim}, mon_R,m rank {mm.rank}, bijective {mm.bijective}")

os.environ["MONODROMY_BUDGET"] = "32"
try:
    multiloop_algebra(qt_for("h4", "R1"), 3)
except BudgetExceeded as exc:
    print("with budget 32:", exc)
