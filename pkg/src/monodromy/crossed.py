"""Smash products A x| H, the gauged monodromy algebra, and left/right monodromies."""

from __future__ import annotations

from gmpy2 import mpq

from .braided import check_monodromy_relation, coadjoint_action, monodromy_algebra
from .errors import BadExtension, InvariantViolation, NotApplicable
from .hopf import check_associative
from .quasitriangular import cop_structure
from .report import Report
from .tensor import Algebra, LinearMap, Tensor, tensor_invert

__all__ = [
    "CrossedProduct",
    "smash_product",
    "gauged_monodromy",
    "extension_map",
    "check_extension",
    "left_monodromy_inverse",
    "MonodromyPair",
    "right_monodromy",
]


class CrossedProduct(Algebra):
    """A (x) H with (a (x) h)(b (x) k) = a (h_1 > b) (x) h_2 k.

    Basis index of ``e_i (x) e_j`` is ``i * dim H + j``.
    """

    def __init__(self, action, name=None):
        A, H = action.module, action.hopf
        self.action = action
        self.base = A
        self.hopf = H
        n, m = A.dim, H.dim
        table = [[None] * (n * m) for _ in range(n * m)]
        for j in range(m):
            split = list(H.comult[j].items())
            for jj in range(m):
                # h_2 k for every (h_1, h_2) term, computed once per (j, jj)
                tails = [(h1, c, H.table[h2][jj]) for (h1, h2), c in split]
                for ii in range(n):
                    moved = [(action.images[h1][ii], c, tail) for h1, c, tail in tails]
                    for i in range(n):
                        out = {}
                        for vec, c, tail in moved:
                            if not tail:
                                continue
                            for k, v in A.mul({i: 1}, vec).items():
                                for l, w in tail:
                                    key = k * m + l
                                    out[key] = out.get(key, 0) + c * v * w
                        table[i * m + j][ii * m + jj] = tuple(sorted((k, c) for k, c in out.items() if c))
        unit = {}
        for k, c in A.unit.items():
            for l, d in H.unit.items():
                unit[k * m + l] = c * d
        labels = [f"{a}.{h}" for a in A.labels for h in H.labels]
        super().__init__(n * m, table, unit, labels, H.field, name or f"{A.name} x| {H.name}")
        self.i_A = LinearMap((A,), (self,), [{(k * m + l,): d for l, d in H.unit.items()} for k in range(n)])
        self.i_H = LinearMap((H,), (self,), [{(k * m + l,): c for k, c in A.unit.items()} for l in range(m)])
        self.report = None

    def index(self, i, j):
        return i * self.hopf.dim + j


def smash_product(action, name=None):
    """Build and verify the crossed product of a (verified) Hopf module action."""
    action.require()
    X = CrossedProduct(action, name)
    report = Report(f"crossed product {X.name}")
    check_associative(X, report)
    one = X.one()
    cases = []
    for i in range(X.dim):
        e = Tensor.basis((X,), (i,))
        cases.append(((i,), one * e, e))
        cases.append(((i,), e * one, e))
    report.first_failure("unit", cases)
    for name_, emb in (("i_A", X.i_A), ("i_H", X.i_H)):
        bad = emb.is_multiplicative()
        report.record(f"{name_} multiplicative", bad is None,
                      None if bad is None else {"at": bad[0], "lhs": bad[1], "rhs": bad[2]})
        report.record(f"{name_} unital", emb.is_unital())
    X.report = report
    if not report.ok:
        raise InvariantViolation(f"{X.name} is not an algebra", witness=report.failures()[0].witness)
    return X


def _gauged(qt, chirality):
    X = smash_product(coadjoint_action(qt, chirality))
    H = qt.H if chirality == "left" else cop_structure(qt).H
    src = qt if chirality == "left" else cop_structure(qt)
    X.qt = src
    X.i_M = X.i_H
    X.M_map = X.i_A
    # M = sum e_nu (x) M(e^nu)
    X.M = Tensor((H, X), {(nu,) + k: c for nu in range(H.dim)
                          for k, c in X.i_A.cols[nu].items()})
    X.R_op_M = src.R_op.apply(X.i_M, 1)
    X.R_M = src.R.apply(X.i_M, 1)
    return X


def gauged_monodromy(qt, chirality="left"):
    """M_R(H) = H^_R x| H with M, R_op_M = (id (x) i_M)(R_op) and R_M = (id (x) i_M)(R).

    ``chirality="right"`` gives H^_R^r x| H_cop.
    """
    if chirality == "left":
        return qt.cached("gauged", lambda: _gauged(qt, "left"))
    cop = cop_structure(qt)
    return cop.cached("gauged_right", lambda: _gauged(qt, "right"))


def extension_map(domain, M, f):
    """f_M(e^i (x) e_j) = (e^i (x) id)(M) f(e_j) on a crossed product ``domain``."""
    A = M.spaces[1]
    m = domain.hopf.dim
    images = []
    for i in range(domain.base.dim):
        mi = M.slice(0, i)
        for j in range(m):
            images.append(mi * f.image(j))
    return LinearMap.from_images((domain,), (A,), images)


def _require_algebra_map(f, what="f"):
    bad = f.is_multiplicative()
    if bad is not None:
        raise BadExtension(f"{what} is not multiplicative", witness={"at": bad[0], "lhs": bad[1], "rhs": bad[2]})
    if not f.is_unital():
        raise BadExtension(f"{what} is not unital")


def check_extension(qt, f, M, domain=None):
    """Conditions for M in H (x) A to extend f: H -> A to M_R(H) -> A.

    Checks the monodromy relation, (eps (x) id)(M) = f(1) and that M
    commutes with a_1 (x) f(a_2).  The
    candidate f_M is always built and its being a unital algebra map must
    agree with the verdict.  Returns ``(report, f_M or None)``.
    """
    _require_algebra_map(f)
    H = qt.H
    A = M.spaces[1]
    domain = domain if domain is not None else gauged_monodromy(qt)
    report = Report(f"extension of f: {H.name} -> {A.name} to {domain.name}")
    rel = check_monodromy_relation(qt, M)
    report.extend(rel)
    report.equal("unital (eps (x) id)(M) = f(1)", M.apply(H.eps, 0), f(H.one()))
    cases = []
    for a in range(H.dim):
        X = H.delta.image(a).apply(f, 1)
        cases.append(((a,), X * M, M * X))
    report.first_failure("[a_1 (x) f(a_2)] M = M [a_1 (x) f(a_2)]", cases)
    fM = extension_map(domain, M, f)
    bad = fM.is_multiplicative()
    is_hom = bad is None and fM.is_unital()
    report.record("f_M unital algebra map", True, info={"value": is_hom})
    if is_hom != report.ok:
        raise InvariantViolation("extension criterion disagrees with direct multiplicativity check",
                                 witness=None if bad is None else {"at": bad[0]})
    return report, (fM if report.ok else None)


def _D_A(qt, f, M):
    return qt.R_op_inv.apply(f, 1) * M


def left_monodromy_inverse(qt, f, M, report=None):
    """M^-1 = (S (x) id)(D_A) (id (x) f)(R_op^-1) with D_A = (id (x) f)(R_op^-1) M.

    Also checks that D_A is a generating matrix.
    """
    rep, _ = check_extension(qt, f, M)
    if not rep.ok:
        raise NotApplicable("M does not satisfy the monodromy relations with f", witness=rep.failures()[0].witness)
    H = qt.H
    A = M.spaces[1]
    report = report if report is not None else Report("left monodromy inverse")
    D = _D_A(qt, f, M)
    HHA = (H, H, A)
    report.equal("D13 D23 = (Delta (x) id)(D)", D.embed((0, 2), HHA) * D.embed((1, 2), HHA), D.apply(H.delta, 0))
    inv = D.apply(H.S, 0) * qt.R_op_inv.apply(f, 1)
    one = Tensor.unit(M.spaces)
    report.equal("M^-1 M = 1", inv * M, one)
    report.equal("M M^-1 = 1", M * inv, one)
    if not report.ok:
        raise InvariantViolation("inverse formula fails", witness=report.failures()[0].witness)
    return inv


class MonodromyPair:
    """Left and right monodromy matrices in H (x) A, verified on construction."""

    def __init__(self, qt, f, M_left, M_left_inv, M_right, report, right_extension=None):
        self.qt = qt
        self.f = f
        self.M_left = M_left
        self.M_left_inv = M_left_inv
        self.M_right = M_right
        self.report = report
        self.right_extension = right_extension

    @property
    def algebra(self):
        return self.M_left.spaces[1]


def right_monodromy(qt, f, M_left):
    """M^r = (id (x) f)(R) M^-1 (id (x) f)(R_op), with its intertwining, monodromy
    and commutation relations and the right extension checked."""
    H = qt.H
    A = M_left.spaces[1]
    report = Report(f"left/right monodromies in {H.name} (x) {A.name}")
    inv = left_monodromy_inverse(qt, f, M_left, report)
    Rf, Ropf = qt.R.apply(f, 1), qt.R_op.apply(f, 1)
    Mr = Rf * inv * Ropf
    cases = []
    for a in range(H.dim):
        X = H.delta_op.image(a).apply(f, 1)
        cases.append(((a,), X * Mr, Mr * X))
    report.first_failure("[a_2 (x) f(a_1)] M^r = M^r [a_2 (x) f(a_1)]", cases)
    HHA = (H, H, A)
    R21 = qt.R.embed((1, 0), HHA)
    report.equal("M^r13 R21 M^r23 = R21 (Delta_op (x) id)(M^r)",
                 Mr.embed((0, 2), HHA) * R21 * Mr.embed((1, 2), HHA), R21 * Mr.apply(H.delta_op, 0))
    Ml13, Mr23 = M_left.embed((0, 2), HHA), Mr.embed((1, 2), HHA)
    report.equal("M^l13 M^r23 = M^r23 M^l13", Ml13 * Mr23, Mr23 * Ml13)
    # elementwise commutation of the two generated subalgebras
    lefts = [M_left.slice(0, i) for i in range(H.dim)]
    rights = [Mr.slice(0, i) for i in range(H.dim)]
    report.first_failure("left and right images commute", (
        ((i, j), lefts[i] * rights[j], rights[j] * lefts[i]) for i in range(H.dim) for j in range(H.dim)))
    # M^r generates a copy of M_R^r(H): the same criterion for (H_cop, R_op)
    cop = cop_structure(qt)
    Hc = cop.H
    fc = f.relabel(domain=(Hc,))
    rep_r, ext = check_extension(cop, fc, Mr.relabel((Hc, A)), gauged_monodromy(qt, "right"))
    report.extend(rep_r, prefix="right: ")
    if not report.ok:
        raise InvariantViolation("left/right monodromy relations fail", witness=report.failures()[0].witness)
    return MonodromyPair(qt, f, M_left, inv, Mr, report, ext)


def tensor_inverse_oracle(M):
    """Independent inverse by solving the left-regular system."""
    return tensor_invert(M)
