"""Deformed coproducts, the monodromy product on H^, and module actions.

Delta_R(a) = sum x^i a_1 x^j (x) S(y^j) y^i a_2 makes H a coalgebra whose
dual algebra (H^, x_R) is the monodromy algebra.  The coadjoint action of H
turns it into an H-module algebra.
"""

from __future__ import annotations

from gmpy2 import mpq

from .errors import InvariantViolation, NotAModuleAction
from .hopf import dual, iterated_coproduct
from .quasitriangular import cop_structure
from .report import Report
from .tensor import Algebra, LinearMap, Tensor

__all__ = [
    "delta_R",
    "check_delta_R",
    "delta_prime",
    "check_delta_prime",
    "BraidedAlgebra",
    "monodromy_algebra",
    "monodromy_matrix",
    "check_monodromy_relation",
    "ModuleAction",
    "check_module_action",
    "coadjoint_action",
    "adjoint_action",
    "trivial_action",
    "inner_action",
    "check_delta_R_conjugation",
]


def _vec(t):
    return t.vector()


def delta_R(qt):
    """The braided coproduct as a LinearMap H -> H (x) H."""
    def build():
        H, R = qt.H, qt.R
        RS = R.apply(H.S, 1)
        images = []
        for a in range(H.dim):
            # legs: x^i, y^i, a_1, a_2, x^j, S(y^j)
            t = R.outer(H.delta.image(a)).outer(RS)
            images.append(t.merge([[0, 2, 4], [5, 1, 3]]))
        return LinearMap.from_images((H,), (H, H), images)
    return qt.cached("delta_R", build)


def _coalgebra_checks(report, H, d, name):
    cases = []
    for a in range(H.dim):
        x = d.image(a)
        cases.append(((a,), x.apply(d, 0), x.apply(d, 1)))
    report.first_failure(f"{name} coassociative", cases)
    cases = []
    for a in range(H.dim):
        x = d.image(a)
        e = Tensor.basis((H,), (a,))
        cases.append(((a, "eps (x) id"), x.apply(H.eps, 0), e))
        cases.append(((a, "id (x) eps"), x.apply(H.eps, 1), e))
    report.first_failure(f"{name} counit", cases)


def check_delta_R(qt):
    """Delta_R is coassociative with counit eps."""
    report = Report(f"braided coproduct on {qt.H.name}")
    _coalgebra_checks(report, qt.H, delta_R(qt), "Delta_R")
    return report


def delta_prime(qt):
    """Delta'(a) = R Delta(a)."""
    H = qt.H
    return LinearMap.from_images((H,), (H, H), [qt.R * H.delta.image(a) for a in range(H.dim)])


def check_delta_prime(qt):
    """Coassociativity of Delta', the intertwining with Delta and Delta_op, and whether Delta' happens to be multiplicative."""
    H = qt.H
    dp = delta_prime(qt)
    report = Report(f"Delta' = R Delta on {H.name}")
    _coalgebra_checks(report, H, dp, "Delta'")
    cases = []
    hom_witness = None
    for a in range(H.dim):
        for b in range(H.dim):
            ab = dp(H.element(dict(H.table[a][b])))
            cases.append(((a, b, "Delta'(a) Delta(b)"), ab, dp.image(a) * H.delta.image(b)))
            cases.append(((a, b, "Delta_op(a) Delta'(b)"), ab, H.delta_op.image(a) * dp.image(b)))
            if hom_witness is None and ab != dp.image(a) * dp.image(b):
                hom_witness = (a, b)
    report.first_failure("Delta'(ab) = Delta'(a)Delta(b) = Delta_op(a)Delta'(b)", cases)
    report.record("Delta' multiplicative", True,
                  info={"value": hom_witness is None, "witness": hom_witness})
    return report


class BraidedAlgebra(Algebra):
    """H^ with the monodromy product x_R (structure constants materialized).

    ``chirality`` is "left" or "right"; the right one is the left
    construction for (H, Delta_op, R_op, S^-1).
    """

    def __init__(self, qt, chirality, table, unit, labels):
        H = qt.H
        super().__init__(H.dim, table, unit, labels, H.field,
                         name=f"{H.name}^_R" + ("" if chirality == "left" else "^r"))
        self.qt = qt
        self.hopf = H
        self.chirality = chirality
        self.predual = H
        self.report = None


def _build_monodromy_algebra(qt, chirality):
    H = qt.H
    d = delta_R(qt)
    n = H.dim
    products = {}
    for k in range(n):
        for (i, j), c in d.cols[k].items():
            products.setdefault((i, j), {})[k] = c
    table = [[tuple(sorted(products.get((i, j), {}).items())) for j in range(n)] for i in range(n)]
    labels = dual(H).labels
    A = BraidedAlgebra(qt, chirality, table, H.counit_vec(), labels)
    from .hopf import check_associative
    report = Report(f"monodromy algebra {A.name}")
    check_associative(A, report)
    one = A.one()
    cases = []
    for i in range(n):
        e = Tensor.basis((A,), (i,))
        cases.append(((i,), one * e, e))
        cases.append(((i,), e * one, e))
    report.first_failure("unit eps", cases)
    A.report = report
    if not report.ok:
        raise InvariantViolation("monodromy product is not associative", witness=report.failures()[0].witness)
    return A


def monodromy_algebra(qt, chirality="left"):
    """The braided group function algebra H^_R (left) or H^_R^r (right).

    The right algebra lives over the co-opposite Hopf algebra, so its
    generating matrix has legs (H_cop, H^_R^r).
    """
    if chirality == "left":
        return qt.cached("monodromy_algebra", lambda: _build_monodromy_algebra(qt, "left"))
    if chirality == "right":
        cop = cop_structure(qt)
        return cop.cached("monodromy_algebra_right", lambda: _build_monodromy_algebra(cop, "right"))
    raise ValueError("chirality must be 'left' or 'right'")


def monodromy_matrix(qt, chirality="left"):
    """M = sum e_nu (x) e^nu in H (x) H^_R (the universal generating matrix)."""
    A = monodromy_algebra(qt, chirality)
    H = A.hopf
    return Tensor((H, A), {(nu, nu): mpq(1) for nu in range(H.dim)})


def check_monodromy_relation(qt, M):
    """The monodromy relation and the generating-matrix relation for M in H (x) A.

    Both are evaluated independently; they must agree.
    """
    H = qt.H
    A = M.spaces[1]
    HHA = (H, H, A)
    report = Report(f"monodromy relations in {H.name} (x) {A.name}")
    R12 = qt.R.embed((0, 1), HHA)
    M13, M23 = M.embed((0, 2), HHA), M.embed((1, 2), HHA)
    ok11 = report.equal("M13 R12 M23 = R12 (Delta (x) id)(M)", M13 * R12 * M23, R12 * M.apply(H.delta, 0))
    ok12 = report.equal("M13 M23 = (Delta_R (x) id)(M)", M13 * M23, M.apply(delta_R(qt), 0))
    if ok11 != ok12:
        raise InvariantViolation("monodromy and generating-matrix relations disagree", witness=report.failures()[0].witness)
    return report


# -- module actions ------------------------------------------------------------


class ModuleAction:
    """A left action of a Hopf algebra H on an algebra A.

    ``images[a][i]`` is the vector ``e_a > e_i`` as a dict.
    """

    def __init__(self, hopf, module, images, name="action"):
        self.hopf = hopf
        self.module = module
        self.images = [[{k: c for k, c in v.items() if c} for v in row] for row in images]
        self.name = name
        self._report = None

    def act(self, h, m):
        """``h > m`` for dict vectors h in H and m in A."""
        out = {}
        for a, ca in h.items():
            row = self.images[a]
            for i, ci in m.items():
                c = ca * ci
                for k, v in row[i].items():
                    out[k] = out.get(k, 0) + c * v
        return {k: c for k, c in out.items() if c}

    def as_map(self):
        H, A = self.hopf, self.module
        cols = []
        for a in range(H.dim):
            for i in range(A.dim):
                cols.append({(k,): c for k, c in self.images[a][i].items()})
        return LinearMap((H, A), (A,), cols)

    def on_tensor(self, t, h_leg, m_leg):
        """Contract leg ``h_leg`` (in H) against leg ``m_leg`` (in A) by acting."""
        return t.apply(self.as_map(), (h_leg, m_leg))

    @property
    def report(self):
        if self._report is None:
            self._report = check_module_action(self)
        return self._report

    def require(self):
        if not self.report.ok:
            bad = self.report.failures()[0]
            raise NotAModuleAction(f"{self.name}: {bad.name} fails", witness=bad.witness)
        return self


def check_module_action(action):
    """Unital action, (ab) > m = a > (b > m), a > 1 = eps(a) 1 and a > (mn) = (a_1 > m)(a_2 > n)."""
    H, A = action.hopf, action.module
    report = Report(f"{action.name} of {H.name} on {A.name}")
    basis = [{i: mpq(1)} for i in range(A.dim)]
    report.first_failure("unital", (
        ((i,), A.element(action.act(H.unit, basis[i])), A.element(basis[i])) for i in range(A.dim)))
    cases = []
    for a in range(H.dim):
        for b in range(H.dim):
            ab = dict(H.table[a][b])
            for i in range(A.dim):
                cases.append(((a, b, i), A.element(action.act(ab, basis[i])),
                              A.element(action.act({a: 1}, action.images[b][i]))))
    report.first_failure("(ab) > m = a > (b > m)", cases)
    report.first_failure("a > 1 = eps(a) 1", (
        ((a,), A.element(action.act({a: 1}, A.unit)),
         A.element({k: c * H.counit[a] for k, c in A.unit.items()})) for a in range(H.dim)))
    report.first_failure("Hopf module property a > (mn) = (a_1 > m)(a_2 > n)", _hopf_module_cases(action))
    return report


def _hopf_module_cases(action):
    H, A = action.hopf, action.module
    n = A.dim
    for a in range(H.dim):
        d = H.comult[a]
        # a_1 > e_i, as (a_2, vector) pairs, once per i
        left = [[(a2, c, action.images[a1][i]) for (a1, a2), c in d.items()] for i in range(n)]
        for i in range(n):
            for j in range(n):
                lhs = action.act({a: 1}, dict(A.table[i][j]))
                rhs = {}
                for a2, c, u in left[i]:
                    v = action.images[a2][j]
                    for k, w in A.mul(u, v).items():
                        rhs[k] = rhs.get(k, 0) + c * w
                rhs = {k: w for k, w in rhs.items() if w}
                if lhs != rhs:
                    yield (a, i, j), A.element(lhs), A.element(rhs)
                    return
    return


def coadjoint_action(qt, chirality="left"):
    """<a > phi | b> = <phi | S(a_1) b a_2> on the monodromy algebra.

    The right variant <a >' phi | b> = <phi | S^-1(a_2) b a_1> is the same
    construction applied to (H_cop, R_op).
    """
    if chirality == "right":
        cop = cop_structure(qt)
        return cop.cached("coadjoint_right", lambda: _coadjoint(cop, monodromy_algebra(qt, "right")))
    return qt.cached("coadjoint", lambda: _coadjoint(qt, monodromy_algebra(qt)))


def _coadjoint(qt, A):
    H = qt.H
    n = H.dim
    images = [[{} for _ in range(n)] for _ in range(n)]
    for a in range(n):
        sa = H.delta.image(a).apply(H.S, 0)
        for b in range(n):
            # S(a_1) e_b a_2
            w = sa.outer(Tensor.basis((H,), (b,))).merge([[0, 2, 1]]).vector()
            for phi, c in w.items():
                images[a][phi][b] = images[a][phi].get(b, 0) + c
    return ModuleAction(H, A, images, name="coadjoint action")


def adjoint_action(H, module=None):
    """Ad(a) b = a_1 b S(a_2) on H itself (or on an algebra with the same table)."""
    A = module if module is not None else H
    n = H.dim
    images = []
    for a in range(n):
        da = H.delta.image(a).apply(H.S, 1)
        row = []
        for b in range(n):
            w = da.outer(Tensor.basis((H,), (b,))).merge([[0, 2, 1]]).vector()
            row.append(w)
        images.append(row)
    return ModuleAction(H, A, images, name="adjoint action")


def inner_action(H, A, iota, name="inner action"):
    """h > a = iota(h_1) a iota(S(h_2)) for a unital algebra map iota: H -> A."""
    images = []
    for h in range(H.dim):
        # sum iota(h_1) (x) iota(S h_2) in A (x) A
        sand = H.delta.image(h).apply(H.S, 1).apply(iota, 0).apply(iota, 1)
        row = []
        for i in range(A.dim):
            w = sand.outer(Tensor.basis((A,), (i,))).merge([[0, 2, 1]]).vector()
            row.append(w)
        images.append(row)
    return ModuleAction(H, A, images, name=name)


def trivial_action(H, A):
    """h > a = eps(h) a."""
    images = [[{i: H.counit[a]} for i in range(A.dim)] for a in range(H.dim)]
    return ModuleAction(H, A, images, name="trivial action")


def check_delta_R_conjugation(qt):
    """Delta_R(S(a_1) b a_2) = [S(a_1) (x) S(a_3)] Delta_R(b) [a_2 (x) a_4] on all basis pairs."""
    H = qt.H
    d = delta_R(qt)
    d4 = iterated_coproduct(H, 4)
    cases = []
    for a in range(H.dim):
        sa = H.delta.image(a).apply(H.S, 0)
        four = d4.image(a).apply(H.S, 0).apply(H.S, 2)
        for b in range(H.dim):
            w = sa.outer(Tensor.basis((H,), (b,))).merge([[0, 2, 1]])
            lhs = d(w)
            # legs: S a_1, a_2, S a_3, a_4, u, v
            rhs = four.outer(d.image(b)).merge([[0, 4, 1], [2, 5, 3]])
            cases.append(((a, b), lhs, rhs))
    report = Report("equivariance of Delta_R")
    report.first_failure("Delta_R(S(a_1) b a_2) = [S(a_1) (x) S(a_3)] Delta_R(b) [a_2 (x) a_4]", cases)
    return report
