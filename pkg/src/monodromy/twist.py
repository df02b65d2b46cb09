"""The twisted coproduct on H (x) H, its R-matrix, Lambda_R = pi_R o lambda_R, and
the Hopf structure transported to M_R(H).

Elements of (H (x) H)^{(x) k} are handled as tensors with 2k plain H-legs;
lower indices in the names below (R_41, R_23, ...) are 1-based H-leg positions.
"""

from __future__ import annotations

from .crossed import gauged_monodromy
from .double import check_double_extension, drinfeld_double, lambda_R
from .errors import InvariantViolation
from .factorization import mon_R, pi_R
from .hopf import HopfAlgebra, check_hopf_axioms
from .quasitriangular import check_quasitriangular, quasitriangular_report
from .report import Report
from .tensor import LinearMap, Tensor, TensorProductAlgebra

__all__ = [
    "TwistedHopfOnSquare",
    "build_twisted_square",
    "Lambda_R",
    "lambda_R_report",
    "transported_structure",
]


def _legs(t, n):
    """Indexer for R-like two-leg tensors placed on n H-legs, 1-based."""
    H = t.spaces[0]
    spaces = (H,) * n

    def at(i, j):
        return t.embed((i - 1, j - 1), spaces)
    return at


def _flatten_pairs(t, HH):
    """2k H-legs -> k legs of H (x) H."""
    for k in range(t.rank // 2):
        t = t.flatten((k, k + 1), HH)
    return t


class TwistedHopfOnSquare:
    """(H (x) H, delta = Ad T o Delta_HH, script_R) with the four-leg data kept alongside."""

    def __init__(self, qt):
        self.qt = qt
        H = qt.H
        self.H = H
        self.HH = TensorProductAlgebra((H, H))
        R, Ri = _legs(qt.R, 4), _legs(qt.R_inv, 4)
        # Delta_HH(a (x) b) = (a_1 (x) b_1) (x) (a_2 (x) b_2) on plain legs
        self.delta_HH = H.delta.kron(H.delta)
        self.delta_HH = LinearMap((H, H), (H,) * 4, [{(k[0], k[2], k[1], k[3]): c for k, c in col.items()}
                                                     for col in self.delta_HH.cols])
        self.T = Ri(2, 3)
        self.T_inv = R(2, 3)
        self.T_op = Ri(4, 1)
        self.delta = LinearMap.from_images((H, H), (H,) * 4, [
            self.T * self.delta_HH.image(k) * self.T_inv for k in _pairs(H.dim)])
        self.script_R = Ri(4, 1) * Ri(4, 2) * R(1, 3) * R(2, 3)
        self.script_R_inv = Ri(2, 3) * Ri(1, 3) * R(4, 2) * R(4, 1)
        self.script_R_prime = Ri(4, 2) * R(1, 3)
        self.script_R_prime_inv = Ri(1, 3) * R(4, 2)
        self.hopf = None
        self.plain = None
        self.twisted_qt = None
        self.report = None

    def flat(self, t):
        return _flatten_pairs(t, self.HH)

    def delta_flat(self, target):
        HH = self.HH
        return LinearMap((target,), (target, target),
                         [{(HH.flat(k[:2]), HH.flat(k[2:])): c for k, c in col.items()} for col in self.delta.cols])


def _pairs(n):
    return [(a, b) for a in range(n) for b in range(n)]


def _hopf_on_square(sq, comult_map, antipode_cols, name):
    HH = sq.HH
    H = sq.H
    comult = [{(HH.flat(k[:2]), HH.flat(k[2:])): c for k, c in col.items()} for col in comult_map.cols]
    counit = [H.counit[a] * H.counit[b] for a, b in _pairs(H.dim)]
    return HopfAlgebra(HH.dim, HH.table, HH.unit, comult, counit, antipode_cols, HH.labels, H.field, name)


def build_twisted_square(qt):
    """Build and verify the twisted Hopf algebra on H (x) H and its R-matrix."""
    return qt.cached("twisted_square", lambda: _build(qt))


def _build(qt):
    sq = TwistedHopfOnSquare(qt)
    H, HH = sq.H, sq.HH
    n = H.dim
    report = Report(f"twisted square of {H.name}")
    six = (H,) * 6
    T = sq.T
    lhs = T.embed(range(4), six) * T.apply(sq.delta_HH, (0, 1))
    rhs = T.embed(range(2, 6), six) * T.apply(sq.delta_HH, (2, 3))
    report.equal("T12 (Delta_HH (x) id)(T) = T23 (id (x) Delta_HH)(T)", lhs, rhs)
    cases = []
    for k in _pairs(n):
        d = sq.delta.image(k)
        cases.append((k, d.apply(sq.delta, (0, 1)), d.apply(sq.delta, (2, 3))))
    report.first_failure("delta coassociative", cases)
    cases = []
    for a in range(n):
        d4 = sq.delta(H.delta.image(a))
        # Delta(a_1) (x) Delta(a_2)
        rhs = H.delta.image(a).apply(H.delta, 0).apply(H.delta, 2)
        cases.append(((a,), d4, rhs))
    report.first_failure("delta(Delta(a)) = Delta(a_1) (x) Delta(a_2)", cases)
    # the untwisted tensor-square Hopf algebra with R' = R_42^-1 R_13
    S_HH = H.S.kron(H.S)
    plain = _hopf_on_square(sq, sq.delta_HH, [{k[0] * n + k[1]: c for k, c in col.items()} for col in S_HH.cols],
                            f"{H.name}(x){H.name}")
    sq.plain = plain
    report.extend(check_hopf_axioms(plain), prefix="Delta_HH: ")
    rp, _ = quasitriangular_report(plain, sq.flat(sq.script_R_prime).relabel((plain, plain)),
                                   R_inv=sq.flat(sq.script_R_prime_inv).relabel((plain, plain)))
    report.extend(rp, prefix="R' wrt Delta_HH: ")
    # twisted antipode: U S(x) U^-1 with U = T^(1) S(T^(2))
    U = T.apply(H.S, 2).apply(H.S, 3).merge([[0, 2], [1, 3]])
    U_inv = sq.T_inv.apply(H.S, 0).apply(H.S, 1).merge([[0, 2], [1, 3]])
    antipode = None
    for left, right in ((U, U_inv), (U_inv, U)):
        cols = []
        for k in range(n * n):
            s = S_HH.image(k)
            cols.append({a * n + b: c for (a, b), c in (left * s * right).data.items()})
        cand = _hopf_on_square(sq, sq.delta, cols, f"({H.name}(x){H.name})_T")
        if check_hopf_axioms(cand).ok:
            antipode = cand
            break
    if antipode is None:
        report.record("twisted antipode", False)
        sq.report = report
        raise InvariantViolation("no antipode for the twisted coproduct", witness=report.failures()[0].witness)
    sq.hopf = antipode
    report.extend(check_hopf_axioms(antipode), prefix="delta: ")
    TS = antipode
    rq, _ = quasitriangular_report(TS, sq.flat(sq.script_R).relabel((TS, TS)),
                                   R_inv=sq.flat(sq.script_R_inv).relabel((TS, TS)))
    report.extend(rq, prefix="script R wrt delta: ")
    report.equal("script R = T_op R' T^-1", sq.script_R, sq.T_op * sq.script_R_prime * sq.T_inv)
    sq.report = report
    if not report.ok:
        raise InvariantViolation("twisted square fails", witness=report.failures()[0].witness)
    sq.twisted_qt = check_quasitriangular(TS, sq.flat(sq.script_R).relabel((TS, TS)),
                                          sq.flat(sq.script_R_inv).relabel((TS, TS)))
    return sq


def Lambda_R(qt):
    """Lambda_R = pi_R o lambda_R: D(H) -> H (x) H (codomain: the twisted square)."""
    def build():
        sq = build_twisted_square(qt)
        lam = lambda_R(qt).map
        pi = pi_R(qt)
        return (pi @ lam).relabel(codomain=(sq.hopf,))
    return qt.cached("Lambda", build)


def lambda_R_report(qt):
    return qt.cached("Lambda_report", lambda: _lambda_report(qt))


def _lambda_report(qt):
    H, R = qt.H, qt.R
    n = H.dim
    sq = build_twisted_square(qt)
    TS = sq.hopf
    D = drinfeld_double(H)
    Lam = Lambda_R(qt)
    report = Report(f"Lambda_R on {H.name}")
    report.extend(sq.report, prefix="square: ")
    bad = Lam.is_multiplicative()
    report.record("Lambda_R multiplicative", bad is None, None if bad is None else {"at": bad[0], "lhs": bad[1], "rhs": bad[2]})
    delta_flat = LinearMap((H,), (TS,), [{(k[0] * n + k[1],): c for k, c in col.items()} for col in H.delta.cols])
    report.equal("i) Lambda_R o i_D = Delta", Lam @ D.i_D, delta_flat)
    HHH = (H, H, H)
    F = D.DD.apply(Lam, 1)
    ii_rhs = qt.R_inv.embed((2, 0), HHH) * R.embed((0, 1), HHH)
    report.equal("ii) (id (x) Lambda_R)(DD) = R31^-1 R12", F.relabel((H, sq.HH)).unflatten(1), ii_rhs)
    d_TS = sq.delta_flat(TS)
    report.equal("iii) delta o Lambda_R = (Lambda_R (x) Lambda_R) o Delta_D", d_TS @ Lam, Lam.kron(Lam) @ D.delta)
    report.equal("iv) (Lambda_R (x) Lambda_R)(R_D) = script R",
                 D.R_D.apply(Lam, 0).apply(Lam, 1), sq.flat(sq.script_R).relabel((TS, TS)))
    HTT = (H, TS, TS)
    report.equal("F13 F12 = (id (x) delta)(F)", F.embed((0, 2), HTT) * F.embed((0, 1), HTT), F.apply(d_TS, 1))
    # uniqueness: rebuild from i) and ii) through the double's extension criterion
    rep, rebuilt = check_double_extension(H, delta_flat, F)
    report.extend(rep, prefix="uniqueness: ")
    if rebuilt is not None:
        report.equal("uniqueness: extension of (Delta, F) = Lambda_R", rebuilt, Lam)
    rank = Lam.rank()
    m = mon_R(qt)
    report.record("Lambda_R bijective iff mon_R bijective", (rank == n * n) == m.bijective,
                  info={"rank": f"{rank}/{n * n}", "mon rank": f"{m.rank}/{n}"})
    return report


def transported_structure(qt):
    """Delta_M, S_M, R_M on M_R(H) by conjugating through lambda_R and by the closed formulas.

    Both paths must agree exactly; the result is validated as a
    quasitriangular Hopf algebra.  Returns ``(hopf, qt_M, report)``.
    """
    return qt.cached("transported", lambda: _transported(qt))


def _transported(qt):
    H = qt.H
    n = H.dim
    X = gauged_monodromy(qt)
    D = drinfeld_double(H)
    L = lambda_R(qt)
    lam, lam_inv = L.map, L.inverse
    report = Report(f"transported structure on {X.name}")
    # (a) conjugation
    delta_a = lam.kron(lam) @ D.delta @ lam_inv
    S_a = lam @ D.S @ lam_inv
    R_a = D.R_D.apply(lam, 0).apply(lam, 1)
    # (b) closed formulas
    M, Rop, Rop_inv = X.M, X.R_op_M, qt.R_op_inv.apply(X.i_M, 1)
    HXX = (H, X, X)
    Rop12 = Rop.embed((0, 1), HXX)
    Rop12_inv = Rop_inv.embed((0, 1), HXX)
    dM = Rop12 * M.embed((0, 2), HXX) * Rop12_inv * M.embed((0, 1), HXX)
    sM = (Rop_inv * M * Rop).apply(H.S_inv, 0)
    d_iM = [H.delta.image(j).apply(X.i_M, 0).apply(X.i_M, 1) for j in range(n)]
    s_iM = [X.i_M(H.S.image(j)) for j in range(n)]
    d_cols, s_cols = [], []
    for nu in range(n):
        dnu, snu = dM.slice(0, nu), sM.slice(0, nu)
        for j in range(n):
            d_cols.append((dnu * d_iM[j]).data)
            s_cols.append((s_iM[j] * snu).data)
    delta_b = LinearMap((X,), (X, X), d_cols)
    S_b = LinearMap((X,), (X,), s_cols)
    R_b = (Rop_inv * M).apply(X.i_M, 0)
    report.equal("Delta_M o i_M = i_M o Delta", delta_a @ X.i_M,
                 LinearMap.from_images((H,), (X, X), d_iM))
    report.equal("(id (x) Delta_M)(M) = R_op12 M13 R_op12^-1 M12", M.apply(delta_a, 1), dM)
    report.equal("S_M o i_M = i_M o S", S_a @ X.i_M, LinearMap.from_images((H,), (X,), s_iM))
    report.equal("(id (x) S_M)(M) = (S^-1 (x) id)(R_op^-1 M R_op)", M.apply(S_a, 1), sM)
    report.equal("R_M = (i_M (x) id)(R_op^-1 M)", R_a, R_b)
    report.equal("Delta_M: conjugated = closed form", delta_a, delta_b)
    report.equal("S_M: conjugated = closed form", S_a, S_b)
    if not report.ok:
        raise InvariantViolation("transported structure paths disagree", witness=report.failures()[0].witness)
    XM = HopfAlgebra(X.dim, X.table, X.unit, [{k: c for k, c in col.items()} for col in delta_b.cols],
                     [c for c in _counit_transport(D, lam_inv)],
                     [{k[0]: c for k, c in col.items()} for col in S_b.cols], X.labels, X.field,
                     f"{X.name} (transported)")
    R_M = Tensor((XM, XM), R_b.data)
    report.extend(check_hopf_axioms(XM), prefix="Hopf: ")
    rq, _ = quasitriangular_report(XM, R_M, R_inv=Tensor((XM, XM), R_a.apply(S_a, 0).data))
    report.extend(rq, prefix="R_M: ")
    if not report.ok:
        raise InvariantViolation("transported structure fails", witness=report.failures()[0].witness)
    return XM, check_quasitriangular(XM, R_M, Tensor((XM, XM), R_a.apply(S_a, 0).data)), report


def _counit_transport(D, lam_inv):
    """eps_M = eps_D o lambda^-1."""
    out = []
    for col in lam_inv.cols:
        out.append(sum((c * D.counit[k[0]] for k, c in col.items()), 0))
    return out
