"""Braided tensor products of H-module algebras, the multi-loop algebras L_m,
the bosonization V_A and the multi-loop monodromy homomorphism mon_{R,m}."""

from __future__ import annotations

import os

from .braided import (ModuleAction, adjoint_action, check_monodromy_relation, coadjoint_action,
                      delta_R, inner_action, monodromy_algebra, monodromy_matrix)
from .crossed import smash_product
from .errors import BudgetExceeded, InvariantViolation, NotApplicable
from .factorization import bosonize_inner, mon_R
from .hopf import check_associative, iterated_coproduct
from .quasitriangular import cop_structure
from .report import Report
from .tensor import Algebra, LinearMap, Tensor, TensorProductAlgebra

__all__ = [
    "BUDGET_ENV",
    "budget",
    "BraidedTensorAlgebra",
    "braided_tensor",
    "check_bracketing",
    "MultiLoop",
    "multiloop_algebra",
    "Bosonization",
    "bosonize_V",
    "delta_A_vs_Delta_R",
    "MultiLoopMonodromy",
    "mon_R_m",
    "check_multiloop_matrices",
    "Mon_R_m",
]

BUDGET_ENV = "MONODROMY_BUDGET"
DEFAULT_BUDGET = 4096


def budget():
    """Largest allowed dim(L_m); overridable through $MONODROMY_BUDGET."""
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


def _require_budget(dim, what):
    cap = budget()
    if dim > cap:
        raise BudgetExceeded(f"{what} has dimension {dim} > budget {cap}")


def _multiplicative(report, name, f):
    bad = f.is_multiplicative()
    report.record(name, bad is None, None if bad is None else {"at": bad[0], "lhs": bad[1], "rhs": bad[2]})


class BraidedTensorAlgebra(Algebra):
    """A (x)_R B with (a (x) b)(a' (x) b') = a (y^i > a') (x) (x^i > b) b'.

    Basis index of e_i (x) e_j is i * dim B + j.  ``action`` is the diagonal
    action h > (a (x) b) = (h_1 > a) (x) (h_2 > b).
    """

    def __init__(self, qt, left, right, name=None):
        H, A, B = qt.H, left.module, right.module
        self.qt = qt
        self.left = left
        self.right = right
        self.base = A
        self.other = B
        n, m = A.dim, B.dim
        terms = list(qt.R.data.items())
        # a_i (y > a_k) and (x > b_j) b_l, per R-term
        ya = [[[A.mul({i: 1}, left.images[y][k]) for (x, y), _ in terms] for k in range(n)] for i in range(n)]
        xb = [[[B.mul(right.images[x][j], {l: 1}) for (x, y), _ in terms] for l in range(m)] for j in range(m)]
        table = [[None] * (n * m) for _ in range(n * m)]
        for i in range(n):
            for j in range(m):
                row = table[i * m + j]
                for k in range(n):
                    lefts = ya[i][k]
                    for l in range(m):
                        rights = xb[j][l]
                        out = {}
                        for t, (_, c) in enumerate(terms):
                            u, v = lefts[t], rights[t]
                            if not u or not v:
                                continue
                            for p, cu in u.items():
                                for q, cv in v.items():
                                    key = p * m + q
                                    out[key] = out.get(key, 0) + c * cu * cv
                        row[k * m + l] = tuple(sorted((key, c) for key, c in out.items() if c))
        unit = {p * m + q: cu * cv for p, cu in A.unit.items() for q, cv in B.unit.items()}
        labels = [f"{a}|{b}" for a in A.labels for b in B.labels]
        super().__init__(n * m, table, unit, labels, H.field, name or f"{A.name} (x)_R {B.name}")
        self.i_left = LinearMap((A,), (self,), [{(p * m + q,): c for q, c in B.unit.items()} for p in range(n)])
        self.i_right = LinearMap((B,), (self,), [{(p * m + q,): c for p, c in A.unit.items()} for q in range(m)])
        images = []
        for h in range(H.dim):
            split = list(H.comult[h].items())
            row = []
            for i in range(n):
                for j in range(m):
                    out = {}
                    for (h1, h2), c in split:
                        for p, cu in left.images[h1][i].items():
                            for q, cv in right.images[h2][j].items():
                                key = p * m + q
                                out[key] = out.get(key, 0) + c * cu * cv
                    row.append(out)
            images.append(row)
        self.action = ModuleAction(H, self, images, name="diagonal action")
        self.report = None

    def index(self, i, j):
        return i * self.other.dim + j


def braided_tensor(qt, left, right, name=None):
    """Build and verify A (x)_R B from two Hopf module actions of the same H."""
    if left.hopf is not qt.H or right.hopf is not qt.H:
        raise NotApplicable("both actions must be actions of the quasitriangular Hopf algebra")
    left.require()
    right.require()
    _require_budget(left.module.dim * right.module.dim, "braided tensor product")
    X = BraidedTensorAlgebra(qt, left, right, name)
    report = Report(f"braided tensor product {X.name}")
    check_associative(X, report)
    one = X.one()
    cases = []
    for i in range(X.dim):
        e = Tensor.basis((X,), (i,))
        cases.append(((i,), one * e, e))
        cases.append(((i,), e * one, e))
    report.first_failure("unit", cases)
    for what, emb in (("i_left", X.i_left), ("i_right", X.i_right)):
        _multiplicative(report, f"{what} multiplicative", emb)
        report.record(f"{what} unital", emb.is_unital())
    report.extend(X.action.report, prefix="diagonal action: ")
    X.report = report
    if not report.ok:
        raise InvariantViolation(f"{X.name} fails", witness=report.failures()[0].witness)
    return X


def check_bracketing(qt, a1, a2, a3):
    """(A1 (x)_R A2) (x)_R A3 and A1 (x)_R (A2 (x)_R A3) as structure tensors on A1 (x) A2 (x) A3."""
    L = braided_tensor(qt, a1, a2)
    left = braided_tensor(qt, L.action, a3)
    R = braided_tensor(qt, a2, a3)
    right = braided_tensor(qt, a1, R.action)
    report = Report("bracketing")
    report.extend(left.report, prefix="(12)3: ")
    report.extend(right.report, prefix="1(23): ")
    cases = []
    for i in range(left.dim):
        for j in range(left.dim):
            cases.append(((i, j), Tensor((left,), {(k,): c for k, c in left.table[i][j]}),
                          Tensor((left,), {(k,): c for k, c in right.table[i][j]})))
    report.first_failure("(A1 (x)_R A2) (x)_R A3 = A1 (x)_R (A2 (x)_R A3)", cases)
    report.record("same unit", left.unit == right.unit)
    report.first_failure("same diagonal action", (
        ((h, i), Tensor((left,), {(k,): c for k, c in left.action.images[h][i].items()}),
         Tensor((left,), {(k,): c for k, c in right.action.images[h][i].items()}))
        for h in range(qt.H.dim) for i in range(left.dim)))
    return report


class MultiLoop:
    """L_m with its action, the embeddings iota_nu and the matrices M_nu in H (x) L_m."""

    def __init__(self, qt, m, algebra, action, iotas, report):
        self.qt = qt
        self.m = m
        self.algebra = algebra
        self.action = action
        self.iotas = iotas
        H = qt.H
        E = monodromy_matrix(qt)
        self.matrices = [E.apply(iota, 1) for iota in iotas]
        self.report = report
        self.dim = algebra.dim
        self.H = H


def multiloop_algebra(qt, m):
    """L_m = H^_R (x)_R ... (x)_R H^_R (m factors, nested to the left), with the exchange relations checked."""
    if m < 1:
        raise ValueError("m must be at least 1")
    _require_budget(qt.H.dim ** m, f"L_{m}")
    return qt.cached(("multiloop", m), lambda: _multiloop(qt, m))


def _multiloop(qt, m):
    H = qt.H
    A = monodromy_algebra(qt)
    report = Report(f"L_{m} over {H.name}")
    if m == 1:
        L = A
        action = coadjoint_action(qt)
        iotas = [LinearMap.identity((A,))]
        report.extend(A.report)
    else:
        prev = multiloop_algebra(qt, m - 1)
        L = braided_tensor(qt, prev.action, coadjoint_action(qt), name=f"L_{m}({H.name})")
        action = L.action
        iotas = [L.i_left @ f for f in prev.iotas] + [L.i_right]
        report.extend(L.report)
    ml = MultiLoop(qt, m, L, action, iotas, report)
    for nu, M in enumerate(ml.matrices, start=1):
        report.extend(check_monodromy_relation(qt, M), prefix=f"M_{nu}: ")
    HHL = (H, H, L)
    R12, Ri12 = qt.R.embed((0, 1), HHL), qt.R_inv.embed((0, 1), HHL)
    for nu in range(1, m + 1):
        Mnu13 = ml.matrices[nu - 1].embed((0, 2), HHL)
        for mu in range(1, nu):
            Mmu23 = ml.matrices[mu - 1].embed((1, 2), HHL)
            report.equal(f"exchange mu={mu} nu={nu}", Mnu13 * R12 * Mmu23,
                         R12 * Mmu23 * Ri12 * Mnu13 * R12)
    if not report.ok:
        raise InvariantViolation(f"L_{m} fails", witness=report.failures()[0].witness)
    return ml


class Bosonization:
    """V_A: A (x)_R H -> A (x)_alg H with inverse, Delta_A and delta_A = V^-1 o Delta_A."""

    def __init__(self, X, AH, V, V_inv, Delta_A, delta_A, report):
        self.X = X
        self.AH = AH
        self.V = V
        self.V_inv = V_inv
        self.Delta_A = Delta_A
        self.delta_A = delta_A
        self.report = report


def bosonize_V(qt, A, iota, action=None):
    """V_A(a (x)_R h) = a iota(y^i y^j) (x) x^i h S(x^j), verified to be an equivariant algebra isomorphism.

    ``action`` (optional) is the H-action already carried by A; it must be
    the inner one induced by iota.
    """
    H = qt.H
    try:
        bad = iota.is_multiplicative()
    except Exception as exc:
        raise NotApplicable(f"iota cannot be checked: {exc}") from exc
    if bad is not None or not iota.is_unital():
        raise NotApplicable("iota is not a unital algebra map")
    inner = inner_action(H, A, iota)
    if action is not None and action.images != inner.images:
        raise NotApplicable("the action on A is not the inner action of iota")
    act = action if action is not None else inner
    X = braided_tensor(qt, act, adjoint_action(H))
    AH = TensorProductAlgebra((A, H))
    n = H.dim
    report = Report(f"bosonization V on {X.name}")
    pad_A = [Tensor.basis((A,), (a,)).embed((0,), (A, H)) for a in range(A.dim)]
    # V(1 (x)_R h) = (iota (x) id)(R_op (1 (x) h) R_op^-1)
    Vh = []
    for h in range(n):
        t = qt.R_op * Tensor.basis((H,), (h,)).embed((1,), (H, H)) * qt.R_op_inv
        Vh.append(t.apply(iota, 0))
    RR = qt.R.outer(qt.R).apply(H.S, 1)
    Wh = []
    for h in range(n):
        # y^j S(y^i) (x) x^i h x^j
        t = RR.outer(Tensor.basis((H,), (h,))).merge([[3, 1], [0, 4, 2]])
        Wh.append(t.apply(iota, 0))
    V_cols, Vi_cols = [], []
    for a in range(A.dim):
        for h in range(n):
            t = pad_A[a] * Vh[h]
            V_cols.append({(AH.flat(k),): c for k, c in t.data.items()})
    for a in range(A.dim):
        for h in range(n):
            t = pad_A[a] * Wh[h]
            Vi_cols.append({(X.index(*k),): c for k, c in t.data.items()})
    V = LinearMap((X,), (AH,), V_cols)
    V_inv = LinearMap((AH,), (X,), Vi_cols)
    report.equal("V^-1 o V = id", V_inv @ V, LinearMap.identity((X,)))
    report.equal("V o V^-1 = id", V @ V_inv, LinearMap.identity((AH,)))
    _multiplicative(report, "V multiplicative", V)
    report.record("V unital", V.is_unital())
    Delta_A = LinearMap((H,), (AH,), [{(AH.flat(k),): c for k, c in H.delta.image(h).apply(iota, 0).data.items()}
                                      for h in range(n)])
    cases = []
    for h in range(n):
        sand = H.delta.image(h).apply(H.S, 1).apply(Delta_A, 0).apply(Delta_A, 1)
        for x in range(X.dim):
            lhs = V(Tensor((X,), {(k,): c for k, c in X.action.images[h][x].items()}))
            rhs = sand.outer(V.image(x)).merge([[0, 2, 1]])
            cases.append(((h, x), lhs, rhs))
    report.first_failure("V(h > z) = Delta_A(h_1) V(z) Delta_A(S h_2)", cases)
    delta_A = V_inv @ Delta_A
    cases = []
    for h in range(n):
        sand = H.delta.image(h).apply(H.S, 1).apply(delta_A, 0).apply(delta_A, 1)
        for x in range(X.dim):
            lhs = Tensor((X,), {(k,): c for k, c in X.action.images[h][x].items()})
            rhs = sand.outer(Tensor.basis((X,), (x,))).merge([[0, 2, 1]])
            cases.append(((h, x), lhs, rhs))
    report.first_failure("delta_A implements the action: h > z = delta_A(h_1) z delta_A(S h_2)", cases)
    if not report.ok:
        raise InvariantViolation("V_A fails", witness=report.failures()[0].witness)
    return Bosonization(X, AH, V, V_inv, Delta_A, delta_A, report)


def delta_A_vs_Delta_R(qt):
    """delta_A for A = H, iota = id against Delta_R built from (H, Delta_op, S^-1, R_op).

    Both displayed closed forms are computed independently and compared to
    V^-1 o Delta.  Returns a report; ``report.ok`` is the verdict.
    """
    H, R = qt.H, qt.R
    B = bosonize_V(qt, H, LinearMap.identity((H,)))
    X = B.X
    n = H.dim
    report = Report(f"delta_A vs Delta_R' on {H.name}")
    via_V = LinearMap((H,), (H, H), [{divmod(k[0], n): c for k, c in col.items()} for col in B.delta_A.cols])
    RR = R.outer(R)
    form1, form2 = [], []
    for a in range(n):
        # legs: x^i, y^i, x^j, y^j, a_1, a_2
        t = RR.outer(H.delta.image(a))
        form1.append(t.apply(H.S_inv, 0).merge([[3, 5, 1], [0, 2, 4]]))
        form2.append(t.apply(H.S, 1).merge([[4, 3, 1], [0, 5, 2]]))
    f1 = LinearMap.from_images((H,), (H, H), form1)
    f2 = LinearMap.from_images((H,), (H, H), form2)
    report.equal("first closed form = second closed form", f1, f2)
    report.equal("V^-1 o Delta = closed form", via_V, f1)
    cop = cop_structure(qt)
    d = delta_R(cop)
    d = LinearMap((H,), (H, H), d.cols)
    report.equal("delta_A = Delta_R for (H, Delta_op, S^-1, R_op)", via_V, d)
    report.record("domain", True, info={"braided tensor": X.name})
    return report


class MultiLoopMonodromy:
    """mon_{R,m}: L_m -> H^{(x) m} with the stage maps V_k and the report."""

    def __init__(self, qt, m, loop, target, mon_m, power, stages, report):
        self.qt = qt
        self.m = m
        self.loop = loop
        self.target = target
        self.map = mon_m
        self.power = power
        self.stages = stages
        self.report = report
        self.rank = None
        self.bijective = None


def _flat_keys(f, codomain):
    """Re-key a map with several codomain legs onto one TensorProductAlgebra leg."""
    return LinearMap(f.domain, (codomain,), [{(codomain.flat(k),): c for k, c in col.items()} for col in f.cols])


def _target(H, m):
    return H if m == 1 else TensorProductAlgebra((H,) * m)


def mon_R_m(qt, m):
    """mon_{R,m} = V_m o mon_R^{(x) m}, with V_m built by the inductive bosonization."""
    if m < 1:
        raise ValueError("m must be at least 1")
    _require_budget(qt.H.dim ** m, f"L_{m}")
    return qt.cached(("mon_m", m), lambda: _mon_m(qt, m))


def _stages(qt, m):
    """[(A_k, action_k, V_k: A_k -> H^{(x)k})] for k = 1..m, cached stage by stage."""
    H = qt.H
    if m == 1:
        def first():
            ad = adjoint_action(H)
            return [(H, ad, LinearMap.identity((H,)), LinearMap.identity((H,)), Report("V_1 = id"))]
        return qt.cached(("V_stages", 1), first)

    def build():
        prev = _stages(qt, m - 1)
        A, act, Vk, iota, _ = prev[-1]
        B = bosonize_V(qt, A, iota, action=act)
        P_prev, P = _target(H, m - 1), _target(H, m)
        n = H.dim
        # (V_k (x) id) on A (x)_alg H
        cols = []
        for a in range(A.dim):
            img = Vk.cols[a]
            for h in range(n):
                cols.append({(P.flat((P_prev.unflat(k[0]) if m > 2 else (k[0],)) + (h,)),): c
                             for k, c in img.items()})
        Vk_id = LinearMap((B.AH,), (P,), cols)
        V_next = Vk_id @ B.V
        return prev + [(B.X, B.X.action, V_next, B.delta_A, B.report)]
    return qt.cached(("V_stages", m), build)


def _mon_m(qt, m):
    H = qt.H
    n = H.dim
    loop = multiloop_algebra(qt, m)
    L = loop.algebra
    mon = mon_R(qt)
    stages = _stages(qt, m)
    A_m, act_m, V_m, iota_m, _ = stages[-1]
    P = _target(H, m)
    report = Report(f"mon_R,{m} on {H.name}")
    for k, (_, _, _, _, rep) in enumerate(stages[1:], start=2):
        report.extend(rep, prefix=f"V stage {k}: ")
    # mon^{(x) m}: L_m -> A_m, same row-major flattening on both sides
    power_cols = [{k[0]: c for k, c in col.items()} for col in mon.matrix.cols]
    cols = power_cols
    for _ in range(m - 1):
        cols = [{i * n + j: c * d for i, c in ca.items() for j, d in cb.items()} for ca in cols for cb in power_cols]
    power = LinearMap((L,), (A_m,), [{(k,): c for k, c in col.items()} for col in cols])
    _multiplicative(report, "mon^(x)m multiplicative into the braided power of H", power)
    cases = []
    for h in range(n):
        for x in range(L.dim):
            lhs = power(Tensor((L,), {(k,): c for k, c in loop.action.images[h][x].items()}))
            rhs = Tensor((A_m,), {(k,): c for k, c in act_m.act({h: 1}, {kk[0]: c for kk, c in power.cols[x].items()}).items()})
            cases.append(((h, x), lhs, rhs))
    report.first_failure("mon^(x)m is an H-module map", cases)
    mon_m = (V_m @ power).relabel(codomain=(P,))
    _multiplicative(report, "mon_R,m multiplicative", mon_m)
    report.record("mon_R,m unital", mon_m.is_unital())
    Dm = iterated_coproduct(H, m)
    Dm = Dm if m == 1 else _flat_keys(Dm, P)
    cases = []
    for h in range(n):
        sand = H.delta.image(h).apply(H.S, 1).apply(Dm, 0).apply(Dm, 1)
        for x in range(L.dim):
            lhs = mon_m(Tensor((L,), {(k,): c for k, c in loop.action.images[h][x].items()}))
            rhs = sand.outer(mon_m.image(x)).merge([[0, 2, 1]])
            cases.append(((h, x), lhs, rhs))
    report.first_failure("mon_R,m(h > a) = Delta^(m)(h_1) mon_R,m(a) Delta^(m)(S h_2)", cases)
    if m > 1:
        report.equal("V_m o iota_{A_m} = Delta^(m)", (V_m @ iota_m).relabel(codomain=(P,)), Dm)
    rank = mon_m.rank()
    report.record("rank = rank(mon_R)^m", rank == mon.rank ** m,
                  info={"rank": f"{rank}/{L.dim}", "mon rank": f"{mon.rank}/{n}"})
    report.record("mon_R,m bijective iff mon_R bijective", (rank == L.dim) == mon.bijective)
    if m == 1:
        report.equal("mon_R,1 = mon_R", mon_m, mon.matrix.relabel(domain=(L,)))
    result = MultiLoopMonodromy(qt, m, loop, P, mon_m, power, stages, report)
    result.rank = rank
    result.bijective = rank == L.dim
    if not report.ok:
        raise InvariantViolation(f"mon_R,{m} fails", witness=report.failures()[0].witness)
    return result


def _N(qt, nu):
    """N_nu = (id (x) Delta^(nu-1) (x) id)(R32 R31 R13 (R^-1)32) on 1 + nu legs."""
    H, R = qt.H, qt.R
    HHH = (H, H, H)
    base = R.embed((2, 1), HHH) * R.embed((2, 0), HHH) * R.embed((0, 2), HHH) * qt.R_inv.embed((2, 1), HHH)
    return base.apply(iterated_coproduct(H, nu - 1), 1)


def check_multiloop_matrices(qt, m):
    """(id (x) mon_R,m)(M_nu) = N_nu (x) 1^{(x)(m-nu)} for every nu, and the restriction to L_{m-1}."""
    H = qt.H
    n = H.dim
    mm = mon_R_m(qt, m)
    loop = mm.loop
    report = Report(f"monodromy matrices under mon_R,{m} on {H.name}")
    legs = (H,) * (m + 1)
    for nu, M in enumerate(loop.matrices, start=1):
        lhs = M.apply(mm.map, 1)
        if m > 1:
            lhs = lhs.unflatten(1)
        rhs = _N(qt, nu).embed(tuple(range(nu + 1)), legs)
        report.equal(f"N_nu by both paths, nu={nu}", lhs, rhs)
    if m > 1:
        low = mon_R_m(qt, m - 1)
        L_low = low.loop.algebra
        L = loop.algebra
        emb = LinearMap((L_low,), (L,), [{(i * n + e,): c for e, c in monodromy_algebra(qt).unit.items()}
                                         for i in range(L_low.dim)])
        P, P_low = mm.target, low.target
        cols = []
        for col in low.map.cols:
            out = {}
            for k, c in col.items():
                head = P_low.unflat(k[0]) if m > 2 else (k[0],)
                for u, d in H.unit.items():
                    out[(P.flat(head + (u,)),)] = c * d
            cols.append(out)
        report.equal("mon_R,m restricted to L_{m-1} = mon_R,{m-1} (x) 1", mm.map @ emb,
                     LinearMap((L_low,), (P,), cols))
    return report


def Mon_R_m(qt, m):
    """Mon_{R,m}: L_m x| H -> H^{(x)(m+1)} through H^{(x)m} x|_Ad H; returns ``(map, report)``."""
    H = qt.H
    n = H.dim
    mm = mon_R_m(qt, m)
    _require_budget(mm.loop.dim * n, f"L_{m} x| H")
    report = Report(f"Mon_R,{m} on {H.name}")
    Xs = smash_product(mm.loop.action, name=f"L_{m} x| {H.name}")
    P = mm.target
    Dm = iterated_coproduct(H, m)
    Dm = Dm if m == 1 else _flat_keys(Dm, P)
    Y = smash_product(inner_action(H, P, Dm), name=f"{P.name} x|_Ad {H.name}")
    U, _, urep = bosonize_inner(Y, Dm)
    report.extend(urep, prefix="U: ")
    cols = []
    for a in range(mm.loop.dim):
        img = mm.map.cols[a]
        for h in range(n):
            cols.append({(Y.index(k[0], h),): c for k, c in img.items()})
    Mon = LinearMap((Xs,), (Y,), cols)
    _multiplicative(report, "Mon_R,m multiplicative", Mon)
    full = U @ Mon
    _multiplicative(report, "U o Mon_R,m multiplicative", full)
    rank = full.rank()
    mon = mon_R(qt)
    report.record("Mon_R,m bijective iff mon_R bijective", (rank == Xs.dim) == mon.bijective,
                  info={"rank": f"{rank}/{Xs.dim}"})
    return full, report
