"""The double D(Z2) is factorizable, and pi_R realises M_R(H) as H (x) H.

We walk through the chain lambda_R: D(H) -> M_R(H) and
pi_R: M_R(H) -> H (x) H and check that both are algebra isomorphisms,
with the left and right monodromy subalgebras landing on H (x) 1 and 1 (x) H.
"""

from monodromy.crossed import gauged_monodromy
from monodromy.double import lambda_R
from monodromy.factorization import mon_R, monodromy_homomorphism_report, pi_R
from monodromy.presentation import resolve
from monodromy.quasitriangular import check_quasitriangular

p = resolve("double_z2")
H = p.algebra
_, R = p.r_matrix("R_D")
qt = check_quasitriangular(H, R)

X = gauged_monodromy(qt)
print(f"M_R({H.name}) has dimension {X.dim}")
lam = lambda_R(qt)
print(f"lambda_R: rank {lam.map.rank()}, multiplicative: {lam.map.is_multiplicative() is None}")
print(f"mon_R: {mon_R(qt).verdict()}")
pi = pi_R(qt)
print(f"pi_R: rank {pi.rank()} of {X.dim}, multiplicative: {pi.is_multiplicative() is None}")

report = monodromy_homomorphism_report(qt)
for name in ["pi_R(H^_R^l) = H (x) 1", "pi_R(H^_R^r) = 1 (x) H"]:
    print(f"  {name}: {report[name].ok}")
print("all checks:", "PASS" if report.ok else "FAIL")
