"""The Drinfeld double D(H) on H^ (x) H and its isomorphism with M_R(H)."""

from __future__ import annotations

from gmpy2 import mpq

from .crossed import MonodromyPair, _require_algebra_map, check_extension, gauged_monodromy, right_monodromy
from .errors import ConventionError, InvariantViolation
from .hopf import HopfAlgebra, check_associative, check_hopf_axioms, dual, iterated_coproduct
from .quasitriangular import check_quasitriangular, derived_identities
from .report import Report
from .tensor import Algebra, LinearMap, Tensor, tensor_invert

__all__ = [
    "DrinfeldDouble",
    "drinfeld_double",
    "double_structure",
    "check_straightening",
    "check_double_extension",
    "double_extension_map",
    "lambda_R",
    "double_monodromies",
]


def _double_table(H):
    """Structure constants of (phi (x) a)(psi (x) b) = phi psi_2 (x) a_2 b <a_1|psi_3> <psi_1|S^-1(a_3)>."""
    n = H.dim
    Hd = dual(H)
    # coefficient of e_k in e_p e_q e_r, indexed [k][r] -> [(p, q, c)]
    c3 = [[[] for _ in range(n)] for _ in range(n)]
    for p in range(n):
        for q in range(n):
            for s, c in H.table[p][q]:
                for r in range(n):
                    for k, c2 in H.table[s][r]:
                        c3[k][r].append((p, q, c * c2))
    d3 = iterated_coproduct(H, 3)
    s_inv = [{k[0]: c for k, c in col.items()} for col in H.S_inv.cols]
    W = [[None] * n for _ in range(n)]
    for a in range(n):
        terms = list(d3.cols[a].items())
        for k in range(n):
            w = {}
            for (a1, a2, a3), d in terms:
                sinv = s_inv[a3]
                for p, q, c in c3[k][a1]:
                    v = sinv.get(p)
                    if v:
                        w[(q, a2)] = w.get((q, a2), 0) + c * d * v
            W[a][k] = [(key, c) for key, c in w.items() if c]
    N = n * n
    table = [[None] * N for _ in range(N)]
    for i in range(n):
        for a in range(n):
            for k in range(n):
                for b in range(n):
                    out = {}
                    for (q, a2), w in W[a][k]:
                        for s, c1 in Hd.table[i][q]:
                            for t, c2 in H.table[a2][b]:
                                key = s * n + t
                                out[key] = out.get(key, 0) + w * c1 * c2
                    table[i * n + a][k * n + b] = tuple(sorted((key, c) for key, c in out.items() if c))
    unit = {}
    for i, c in Hd.unit.items():
        for j, d in H.unit.items():
            unit[i * n + j] = c * d
    return table, unit


class DrinfeldDouble(HopfAlgebra):
    """D(H) with basis e^i (x) e_j at index i * dim H + j.

    ``i_D``, ``D_map`` are the embeddings of H and H^; ``DD`` the generating
    matrix sum e_nu (x) D(e^nu) in H (x) D(H); ``R_D`` the canonical R-matrix.
    """

    def __init__(self, H, table, unit, comult, counit, antipode, labels):
        super().__init__(H.dim ** 2, table, unit, comult, counit, antipode, labels, H.field, f"D({H.name})")
        n = H.dim
        Hd = dual(H)
        self.base = H
        self.i_D = LinearMap((H,), (self,), [{(i * n + j,): c for i, c in Hd.unit.items()} for j in range(n)])
        self.D_map = LinearMap((Hd,), (self,), [{(i * n + j,): c for j, c in H.unit.items()} for i in range(n)])
        self.DD = Tensor((H, self), {(nu,) + k: c for nu in range(n) for k, c in self.D_map.cols[nu].items()})
        self.R_D = self.DD.apply(self.i_D, 0)
        self.qt = None
        self.report = None


def drinfeld_double(H):
    """Build, check and cache D(H) as a quasitriangular Hopf algebra."""
    if getattr(H, "_double", None) is not None:
        return H._double
    n = H.dim
    Hd = dual(H)
    table, unit = _double_table(H)
    labels = [f"{p}.{a}" for p in Hd.labels for a in H.labels]
    A = Algebra(n * n, table, unit, labels, H.field, f"D({H.name})")
    assoc = check_associative(A, Report(A.name))
    if not assoc.ok:
        raise ConventionError("double multiplication is not associative", witness=assoc.failures()[0].witness)
    # (phi (x) a) = D(phi) i_D(a); Delta_D(D(phi)) = D(phi_2) (x) D(phi_1)
    comult = []
    for i in range(n):
        for j in range(n):
            d = {}
            for (p, q), c in Hd.comult[i].items():
                for (r, s), c2 in H.comult[j].items():
                    key = (q * n + r, p * n + s)
                    d[key] = d.get(key, 0) + c * c2
            comult.append(d)
    counit = [H.unit.get(i, mpq(0)) * H.counit[j] for i in range(n) for j in range(n)]
    antipode = []
    for i in range(n):
        phi = {k[0]: c for k, c in Hd.S_inv.cols[i].items()}
        Dphi = {p * n + j: c * u for p, c in phi.items() for j, u in H.unit.items()}
        for j in range(n):
            sa = {k[0]: c for k, c in H.S.cols[j].items()}
            iDsa = {p * n + b: u * c for b, c in sa.items() for p, u in Hd.unit.items()}
            antipode.append(A.mul(iDsa, Dphi))
    D = DrinfeldDouble(H, table, unit, comult, counit, antipode, labels)
    report = Report(f"Drinfeld double {D.name}")
    report.extend(assoc)
    report.extend(check_hopf_axioms(D), prefix="Hopf: ")
    report.extend(check_straightening(D))
    qt_report = None
    try:
        D.qt = check_quasitriangular(D, D.R_D, D.R_D.apply(D.S, 0))
        qt_report = D.qt.report
    except Exception as exc:  # recorded below, never silently ignored
        report.record("R_D quasitriangular", False, {"error": str(exc)})
    if qt_report is not None:
        report.extend(qt_report, prefix="R_D: ")
    D.report = report
    if not report.ok:
        raise InvariantViolation(f"{D.name} fails its checks", witness=report.failures()[0].witness)
    H._double = D
    return D


def double_structure(H):
    """Everything checked about D(H), plus the derived identities of R_D."""
    D = drinfeld_double(H)
    report = Report(D.name)
    report.extend(D.report)
    report.extend(derived_identities(D.qt), prefix="R_D: ")
    return report


def check_straightening(D):
    """D(phi_1) <phi_2|a_1> i_D(a_2) = i_D(a_1) <a_2|phi_1> D(phi_2) on basis pairs."""
    H = D.base
    Hd = dual(H)
    n = H.dim
    cases = []
    for k in range(n):
        dk = Hd.comult[k]
        for a in range(n):
            da = H.comult[a]
            lhs = Tensor.zero((D,))
            rhs = Tensor.zero((D,))
            for (p, q), c in dk.items():
                for (r, s), c2 in da.items():
                    if q == r:
                        lhs = lhs + (D.D_map.image(p) * D.i_D.image(s)).scale(c * c2)
                    if s == p:
                        rhs = rhs + (D.i_D.image(r) * D.D_map.image(q)).scale(c * c2)
            cases.append(((k, a), lhs, rhs))
    report = Report("straightening")
    report.first_failure("D(phi_1)<phi_2|a_1> i_D(a_2) = i_D(a_1)<a_2|phi_1> D(phi_2)", cases)
    return report


def double_extension_map(D, D_A, f):
    """f_D(e^i (x) e_j) = (e^i (x) id)(D_A) f(e_j)."""
    A = D_A.spaces[1]
    n = D.base.dim
    images = []
    for i in range(n):
        di = D_A.slice(0, i)
        for j in range(n):
            images.append(di * f.image(j))
    return LinearMap.from_images((D,), (A,), images)


def check_double_extension(H, f, D_A):
    """Conditions for D_A in H (x) A to extend f: H -> A to D(H) -> A.

    Generating-matrix relation, unitality and the exchange with f(H); the candidate f_D is built regardless and its
    being an algebra map must agree.  Returns ``(report, f_D or None)``.
    """
    _require_algebra_map(f)
    D = drinfeld_double(H)
    A = D_A.spaces[1]
    HHA = (H, H, A)
    report = Report(f"extension of f: {H.name} -> {A.name} to {D.name}")
    report.equal("D13 D23 = (Delta (x) id)(D)", D_A.embed((0, 2), HHA) * D_A.embed((1, 2), HHA),
                 D_A.apply(H.delta, 0))
    report.equal("unital (eps (x) id)(D) = f(1)", D_A.apply(H.eps, 0), f(H.one()))
    cases = []
    for a in range(H.dim):
        X = H.delta.image(a).apply(f, 1)
        Y = H.delta_op.image(a).apply(f, 1)
        cases.append(((a,), D_A * X, Y * D_A))
    report.first_failure("D [a_1 (x) f(a_2)] = [a_2 (x) f(a_1)] D", cases)
    fD = double_extension_map(D, D_A, f)
    bad = fD.is_multiplicative()
    is_hom = bad is None and fD.is_unital()
    report.record("f_D unital algebra map", True, info={"value": is_hom})
    if is_hom != report.ok:
        raise InvariantViolation("double extension criterion disagrees with direct check",
                                 witness=None if bad is None else {"at": bad[0]})
    return report, (fD if report.ok else None)


class _Lambda:
    def __init__(self, lam, inv, report, D_M, M_D):
        self.map = lam
        self.inverse = inv
        self.report = report
        self.D_M = D_M
        self.M_D = M_D


def lambda_R(qt):
    """lambda_R: D(H) -> M_R(H), phi (x) a -> (phi (x) id)(R_op_M^-1 M) i_M(a), with its inverse.

    Returns an object with ``.map``, ``.inverse``, ``.report``.
    """
    return qt.cached("lambda", lambda: _lambda(qt))


def _lambda(qt):
    H = qt.H
    X = gauged_monodromy(qt)
    D = drinfeld_double(H)
    report = Report(f"lambda_R: {D.name} -> {X.name}")
    D_M = qt.R_op_inv.apply(X.i_M, 1) * X.M
    rep, lam = check_double_extension(H, X.i_M, D_M)
    report.extend(rep, prefix="forward: ")
    M_D = qt.R_op.apply(D.i_D, 1) * D.DD
    rep, inv = check_extension(qt, D.i_D, M_D)
    report.extend(rep, prefix="inverse: ")
    if lam is None or inv is None:
        raise InvariantViolation("lambda_R could not be built", witness=report.failures()[0].witness)
    report.equal("lambda^-1 o lambda = id", inv @ lam, LinearMap.identity((D,)))
    report.equal("lambda o lambda^-1 = id", lam @ inv, LinearMap.identity((X,)))
    report.equal("lambda o i_D = i_M", lam @ D.i_D, X.i_M)
    if not report.ok:
        raise InvariantViolation("lambda_R is not an isomorphism", witness=report.failures()[0].witness)
    return _Lambda(lam, inv, report, D_M, M_D)


def double_monodromies(qt):
    """M^l = (id (x) i_D)(R_op) DD and M^r = (id (x) i_D)(R) DD^-1 in H (x) D(H), fully checked."""
    H = qt.H
    D = drinfeld_double(H)
    M_D = qt.R_op.apply(D.i_D, 1) * D.DD
    pair = right_monodromy(qt, D.i_D, M_D)
    report = pair.report
    DD_inv = D.DD.apply(H.S, 0)
    report.equal("DD^-1 = (S (x) id)(DD)", DD_inv, tensor_invert(D.DD))
    report.equal("M^r = (id (x) i_D)(R) DD^-1", pair.M_right, qt.R.apply(D.i_D, 1) * DD_inv)
    if not report.ok:
        raise InvariantViolation("double monodromies fail", witness=report.failures()[0].witness)
    return pair
