"""The monodromy map mon_R: H^_R -> H, its crossed-product extension and factorizability."""

from __future__ import annotations

from . import linalg
from .braided import adjoint_action, coadjoint_action, inner_action, monodromy_algebra
from .crossed import gauged_monodromy, right_monodromy, smash_product
from .errors import InvariantViolation, NotApplicable
from .quasitriangular import cop_structure
from .report import Report
from .tensor import LinearMap, Tensor, TensorProductAlgebra, tensor_invert

__all__ = [
    "MonodromyMap",
    "mon_R",
    "mon_R_op_dual_check",
    "adjoint_smash",
    "Mon_R",
    "bosonize_U",
    "bosonize_inner",
    "pi_R",
    "monodromy_homomorphism_report",
    "factorizable",
]


class MonodromyMap:
    """mon_R as a LinearMap H^_R -> H, with its rank and checks."""

    def __init__(self, qt, matrix, report):
        self.qt = qt
        self.matrix = matrix
        self.report = report
        self.rank = matrix.rank()
        self.dim = qt.H.dim
        self.bijective = self.rank == self.dim

    def __call__(self, t):
        return self.matrix(t)

    def verdict(self):
        word = "factorizable" if self.bijective else "not factorizable"
        return f"{self.rank}/{self.dim} {word}"


def _mon_matrix(qt, A):
    Q = qt.R_op * qt.R
    return LinearMap.from_images((A,), (qt.H,), [Q.slice(0, phi) for phi in range(qt.H.dim)])


def mon_R(qt):
    """mon_R(phi) = (phi (x) id)(R_op R), checked to be an equivariant algebra map."""
    return qt.cached("mon", lambda: _mon(qt))


def _mon(qt):
    H, R = qt.H, qt.R
    A = monodromy_algebra(qt)
    mon = _mon_matrix(qt, A)
    report = Report(f"monodromy map on {H.name}")
    HHH = (H, H, H)

    def e(i, j):
        return R.embed((i, j), HHH)

    Q = qt.R_op * R
    report.equal("(R31 R13) R12 (R32 R23) = R12 (Delta (x) id)(R_op R)",
                 e(2, 0) * e(0, 2) * e(0, 1) * e(2, 1) * e(1, 2), e(0, 1) * Q.apply(H.delta, 0))
    bad = mon.is_multiplicative()
    report.record("mon(phi x_R psi) = mon(phi) mon(psi)", bad is None,
                  None if bad is None else {"at": bad[0], "lhs": bad[1], "rhs": bad[2]})
    report.equal("mon unital", mon(A.one()), H.one())
    act = coadjoint_action(qt)
    cases = []
    for a in range(H.dim):
        sand = H.delta.image(a).apply(H.S, 1)
        for phi in range(H.dim):
            lhs = mon(A.element(act.images[a][phi]))
            # a_1 mon(phi) S(a_2)
            rhs = sand.outer(mon.image(phi)).merge([[0, 2, 1]])
            cases.append(((a, phi), lhs, rhs))
    report.first_failure("mon(a > phi) = a_1 mon(phi) S(a_2)", cases)
    m = MonodromyMap(qt, mon, report)
    report.record("rank", True, info={"rank": m.rank, "dim": m.dim, "bijective": m.bijective})
    if qt.triangular:
        report.record("triangular => rank 1", m.rank == 1)
    return m


def factorizable(qt):
    return mon_R(qt).bijective


def mon_R_op_dual_check(qt):
    """<phi | mon_{R_op}(psi)> = <mon_R(phi) | psi>, and equal ranks."""
    H = qt.H
    m = mon_R(qt)
    mop = mon_R(cop_structure(qt))
    report = Report(f"mon_R vs mon_R_op on {H.name}")
    cases = []
    for phi in range(H.dim):
        for psi in range(H.dim):
            cases.append(((phi, psi), mop.matrix.image(psi).coefficient((phi,)), m.matrix.image(phi).coefficient((psi,))))
    report.first_failure("<phi|mon_R_op(psi)> = <mon_R(phi)|psi>", cases)
    report.record("equal ranks", m.rank == mop.rank, info={"rank": m.rank, "rank_op": mop.rank})
    return report


def adjoint_smash(H):
    """H x|_Ad H with Ad(a) b = a_1 b S(a_2)."""
    if getattr(H, "_adjoint_smash", None) is None:
        H._adjoint_smash = smash_product(adjoint_action(H), name=f"{H.name} x|_Ad {H.name}")
    return H._adjoint_smash


def Mon_R(qt):
    """Mon_R(phi (x) a) = mon_R(phi) (x) a from M_R(H) into H x|_Ad H."""
    return qt.cached("Mon", lambda: _Mon(qt))


def _Mon(qt):
    H = qt.H
    X = gauged_monodromy(qt)
    Y = adjoint_smash(H)
    mon = mon_R(qt).matrix
    n = H.dim
    cols = []
    for phi in range(n):
        img = mon.cols[phi]
        for a in range(n):
            cols.append({(k[0] * n + a,): c for k, c in img.items()})
    return LinearMap((X,), (Y,), cols)


def bosonize_U(H):
    """U(a (x) b) = a b_1 (x) b_2 from H x|_Ad H to H (x)_alg H, and its inverse.

    Returns ``(U, U_inv, report)``.
    """
    if getattr(H, "_bosonize_U", None) is None:
        H._bosonize_U = bosonize_inner(adjoint_smash(H), LinearMap.identity((H,)))
    return H._bosonize_U


def bosonize_inner(Y, iota):
    """U(a (x) b) = a iota(b_1) (x) b_2 from A x| H to A (x)_alg H, for an action that is inner via iota.

    The inverse is a (x) b -> a iota(S b_1) (x) b_2.  Returns ``(U, U_inv, report)``.
    """
    A, H = Y.base, Y.hopf
    inner = inner_action(H, A, iota)
    if inner.images != Y.action.images:
        raise NotApplicable(f"the action on {A.name} is not inner via the given map")
    AH = TensorProductAlgebra((A, H))
    n, m = A.dim, H.dim
    d = [H.delta.image(b).apply(iota, 0) for b in range(m)]
    ds = [H.delta.image(b).apply(H.S, 0).apply(iota, 0) for b in range(m)]
    U_cols, Ui_cols = [], []
    for a in range(n):
        ea = Tensor.basis((A,), (a,))
        for b in range(m):
            # legs: a, iota(b_1), b_2
            t = ea.outer(d[b]).merge([[0, 1], [2]])
            U_cols.append({(AH.flat(k),): c for k, c in t.data.items()})
            t = ea.outer(ds[b]).merge([[0, 1], [2]])
            Ui_cols.append({(Y.index(*k),): c for k, c in t.data.items()})
    U = LinearMap((Y,), (AH,), U_cols)
    Ui = LinearMap((AH,), (Y,), Ui_cols)
    report = Report(f"bosonization U on {Y.name}")
    report.equal("U^-1 o U = id", Ui @ U, LinearMap.identity((Y,)))
    report.equal("U o U^-1 = id", U @ Ui, LinearMap.identity((AH,)))
    bad = U.is_multiplicative()
    report.record("U multiplicative", bad is None, None if bad is None else {"at": bad[0], "lhs": bad[1], "rhs": bad[2]})
    report.record("U unital", U.is_unital())
    if not report.ok:
        raise InvariantViolation("U is not an algebra isomorphism", witness=report.failures()[0].witness)
    return U, Ui, report


def pi_R(qt):
    """pi_R = U o Mon_R: M_R(H) -> H (x)_alg H."""
    U, _, _ = bosonize_U(qt.H)
    return U @ Mon_R(qt)


def monodromy_homomorphism_report(qt):
    """Conditions i)-iii), the bridge identity, Mon_R/U checks and, if factorizable, the image spans."""
    return qt.cached("homomorphism", lambda: _homomorphism_report(qt))


def _homomorphism_report(qt):
    H, R = qt.H, qt.R
    X = gauged_monodromy(qt)
    m = mon_R(qt)
    report = Report(f"monodromy homomorphism on {H.name}")
    report.extend(m.report, prefix="mon: ")
    Mon = Mon_R(qt)
    bad = Mon.is_multiplicative()
    report.record("Mon_R multiplicative", bad is None, None if bad is None else {"at": bad[0], "lhs": bad[1], "rhs": bad[2]})
    U, Ui, urep = bosonize_U(H)
    report.extend(urep)
    pi = U @ Mon
    HH = U.codomain[0]
    HHH = (H, H, H)
    bad = pi.is_multiplicative()
    report.record("pi_R multiplicative", bad is None, None if bad is None else {"at": bad[0], "lhs": bad[1], "rhs": bad[2]})
    delta_flat = LinearMap((H,), (HH,), [{(HH.flat(k),): c for k, c in col.items()} for col in H.delta.cols])
    report.equal("i) pi_R o i_M = Delta", pi @ X.i_M, delta_flat)
    lhs2 = X.M.apply(pi, 1).unflatten(1)
    report.equal("ii) (id (x) pi_R)(M^l) = R21 R12", lhs2, R.embed((1, 0), HHH) * R.embed((0, 1), HHH))
    pair = right_monodromy(qt, X.i_M, X.M)
    report.extend(pair.report, prefix="monodromies: ")
    lhs3 = pair.M_right.apply(pi, 1).unflatten(1)
    R13R31 = R.embed((0, 2), HHH) * R.embed((2, 0), HHH)
    report.equal("iii) (id (x) pi_R)(M^r) = R13 R31", lhs3, R13R31)
    inv = tensor_invert(R.embed((1, 0), HHH) * R.embed((0, 1), HHH),
                        candidate=qt.R_inv.embed((0, 1), HHH) * qt.R_inv.embed((1, 0), HHH))
    report.equal("(id (x) Delta)(R) (R21 R12)^-1 (id (x) Delta)(R_op) = R13 R31",
                 R.apply(H.delta, 1) * inv * qt.R_op.apply(H.delta, 1), R13R31)
    prank = pi.rank()
    report.record("pi_R rank", True, info={"rank": prank, "kernel": X.dim - prank})
    report.record("pi_R bijective iff mon_R bijective", (prank == X.dim) == m.bijective,
                  info={"bijective": m.bijective, "rank": f"{m.rank}/{m.dim}"})
    if m.bijective:
        n = H.dim
        left_rows = (pi @ X.M_map).image_rows()
        right_rows = []
        for psi in range(n):
            img = pi(pair.M_right.slice(0, psi))
            right_rows.append({k[0]: c for k, c in img.data.items()})
        h_one = [{HH.flat((a, u)): c for u, c in H.unit.items()} for a in range(n)]
        one_h = [{HH.flat((u, a)): c for u, c in H.unit.items()} for a in range(n)]
        report.record("pi_R(H^_R^l) = H (x) 1", linalg.same_row_space(left_rows, h_one))
        report.record("pi_R(H^_R^r) = 1 (x) H", linalg.same_row_space(right_rows, one_h))
        report.equal("pi_R^-1 o pi_R = id", pi.inverse() @ pi, LinearMap.identity((X,)))
    return report
