"""Twisting H (x) H by T = R23^-1 and comparing it with M_R(H).

For H4 with R_1 the twisted coproduct is coassociative, the script R is
quasitriangular for it, and Lambda_R = pi_R o lambda_R is a Hopf map
D(H) -> (H (x) H, delta) of rank 4 out of 16 (R_1 is triangular).
"""

from monodromy import check_hopf_axioms
from monodromy.presentation import resolve
from monodromy.quasitriangular import check_quasitriangular
from monodromy.twist import Lambda_R, build_twisted_square, lambda_R_report, transported_structure

p = resolve("h4")
name, R = p.r_matrix("R1")
qt = check_quasitriangular(p.algebra, R)

sq = build_twisted_square(qt)
print(f"twisted square on {sq.hopf.name}: dimension {sq.hopf.dim}")
print(f"  Hopf axioms for delta: {check_hopf_axioms(sq.hopf).ok}")
print(f"  script R quasitriangular: {sq.twisted_qt.report.ok}")

L = Lambda_R(qt)
print(f"Lambda_R rank {L.rank()} / {L.shape[1]}")
rep = lambda_R_report(qt)
print(f"Lambda_R checks: {'PASS' if rep.ok else 'FAIL'} ({len(rep.checks)} identities)")

XM, qM, rep = transported_structure(qt)
print(f"transported Hopf structure on {XM.name}: both constructions agree: {rep.ok}")
