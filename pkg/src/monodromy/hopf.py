"""Finite-dimensional Hopf algebras given by structure constants.

Also: duals, (co)opposites, the canonical element, iterated coproducts and
generating matrices (elements ``F`` of ``B (x) A`` encoding algebra maps
``B^ -> A`` through ``f(phi) = (phi (x) id)(F)``).
"""

from __future__ import annotations

from gmpy2 import mpq

from .errors import InvariantViolation, MalformedPresentation, NotAGeneratingMatrix
from .fields import QQ
from .report import Report
from .tensor import Algebra, LinearMap, Tensor

__all__ = [
    "HopfAlgebra",
    "check_associative",
    "check_hopf_axioms",
    "dual",
    "opposite",
    "co_opposite",
    "canonical_element",
    "iterated_coproduct",
    "GeneratingMatrix",
    "check_generating_matrix",
    "hom_from_generating_matrix",
    "generating_matrix_inverse",
]


def _clean(vec):
    return {k: c for k, c in vec.items() if c}


class HopfAlgebra(Algebra):
    """Hopf algebra: multiplication table, unit, coproduct, counit, antipode.

    ``comult[i]`` is a dict ``(j, k) -> c`` for Delta(e_i); ``counit[i]`` a
    scalar; ``antipode[i]`` a dict ``k -> c`` for S(e_i).  The antipode is
    checked to be invertible at construction.
    """

    def __init__(self, dim, table, unit, comult, counit, antipode, labels=None, field=QQ, name=None):
        if len(table) != dim or any(len(row) != dim for row in table):
            raise MalformedPresentation("multiplication table has the wrong shape", "mult")
        if len(comult) != dim:
            raise MalformedPresentation("need one coproduct per basis vector", "comult")
        if len(counit) != dim:
            raise MalformedPresentation("need one counit value per basis vector", "counit")
        if len(antipode) != dim:
            raise MalformedPresentation("need one antipode image per basis vector", "antipode")
        for i, d in enumerate(comult):
            for (j, k) in d:
                if not (0 <= j < dim and 0 <= k < dim):
                    raise MalformedPresentation(f"index out of range in Delta(e_{i})", "comult")
        super().__init__(dim, table, unit, labels, field, name)
        self.comult = [_clean(d) for d in comult]
        self.counit = list(counit)
        self.antipode = [_clean(d) for d in antipode]
        self.delta = LinearMap((self,), (self, self), [dict(d) for d in self.comult])
        self.eps = LinearMap((self,), (), [{(): c} if c else {} for c in self.counit])
        self.S = LinearMap((self,), (self,), [{(k,): c for k, c in d.items()} for d in self.antipode])
        self.delta_op = LinearMap((self,), (self, self),
                                  [{(k, j): c for (j, k), c in d.items()} for d in self.comult])
        try:
            self.S_inv = self.S.inverse()
        except Exception:
            raise MalformedPresentation("antipode is not invertible", "antipode") from None
        self._dual = None

    def counit_vec(self):
        return {i: c for i, c in enumerate(self.counit) if c}

    def Delta(self, t, leg=0):
        return t.apply(self.delta, leg)

    def eps_of(self, vec):
        return sum((c * self.counit[k] for k, c in vec.items()), mpq(0))

    def dual(self):
        return dual(self)


def _unit_check(report, A):
    one = A.one()
    cases = []
    for i in range(A.dim):
        e = Tensor.basis((A,), (i,))
        cases.append(((i,), one * e, e))
        cases.append(((i,), e * one, e))
    report.first_failure("unit", cases)


def check_associative(A, report=None, name="associativity"):
    """Exact associativity on all basis triples (first failure recorded)."""
    report = report if report is not None else Report(A.name)
    table = A.table
    n = A.dim

    def mul_vec_basis(vec, j):
        out = {}
        for i, a in vec.items():
            for k, c in table[i][j]:
                out[k] = out.get(k, 0) + a * c
        return _clean(out)

    def mul_basis_vec(i, vec):
        out = {}
        row = table[i]
        for j, a in vec.items():
            for k, c in row[j]:
                out[k] = out.get(k, 0) + a * c
        return _clean(out)

    for i in range(n):
        for j in range(n):
            ij = dict(table[i][j])
            for k in range(n):
                lhs = mul_vec_basis(ij, k)
                rhs = mul_basis_vec(i, dict(table[j][k]))
                if lhs != rhs:
                    report.equal(name, A.element(lhs), A.element(rhs), where=(A.labels[i], A.labels[j], A.labels[k]))
                    return report
    report.record(name, True)
    return report


def check_hopf_axioms(H, name=None):
    """Every Hopf axiom, exactly, on all basis tuples."""
    report = Report(name or f"Hopf axioms of {H.name}")
    check_associative(H, report)
    _unit_check(report, H)
    HH = (H, H)
    basis = [Tensor.basis((H,), (i,)) for i in range(H.dim)]
    deltas = [H.delta.image(i) for i in range(H.dim)]
    report.first_failure("coassociativity", (
        ((H.labels[i],), d.apply(H.delta, 0), d.apply(H.delta, 1)) for i, d in enumerate(deltas)))
    cases = []
    for i, d in enumerate(deltas):
        cases.append(((H.labels[i],), d.apply(H.eps, 0), basis[i]))
        cases.append(((H.labels[i],), d.apply(H.eps, 1), basis[i]))
    report.first_failure("counit", cases)
    one = H.one()
    cases = [("unit", H.delta(one), Tensor.unit(HH))]
    for i in range(H.dim):
        for j in range(H.dim):
            prod_ij = Tensor((H,), {(k,): c for k, c in H.table[i][j]})
            cases.append(((H.labels[i], H.labels[j]), H.delta(prod_ij), deltas[i] * deltas[j]))
    report.first_failure("coproduct multiplicative", cases)
    cases = [("unit", H.eps_of(H.unit), mpq(1))]
    for i in range(H.dim):
        for j in range(H.dim):
            cases.append(((H.labels[i], H.labels[j]), H.eps_of(dict(H.table[i][j])), H.counit[i] * H.counit[j]))
    report.first_failure("counit multiplicative", cases)
    cases = []
    for i, d in enumerate(deltas):
        target = one.scale(H.counit[i])
        cases.append(((H.labels[i],), d.apply(H.S, 0).merge([[0, 1]]), target))
        cases.append(((H.labels[i],), d.apply(H.S, 1).merge([[0, 1]]), target))
    report.first_failure("antipode", cases)
    report.record("antipode invertible", H.S @ H.S_inv == LinearMap.identity((H,)))
    return report


def dual(H):
    """The dual Hopf algebra H^ in the dual basis e^i.

    Product dual to Delta, coproduct dual to the product:
    <Delta^(phi), a (x) b> = <phi, ab>.  Antipode = transpose of S.
    """
    if H._dual is not None:
        return H._dual
    n = H.dim
    products = {}
    for k, d in enumerate(H.comult):
        for (i, j), c in d.items():
            products.setdefault((i, j), {})[k] = c
    table = [[tuple(sorted(products.get((i, j), {}).items())) for j in range(n)] for i in range(n)]
    unit = {k: c for k, c in enumerate(H.counit) if c}
    comult = [{} for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k, c in H.table[i][j]:
                comult[k][(i, j)] = c
    counit = [H.unit.get(k, mpq(0)) for k in range(n)]
    antipode = [{} for _ in range(n)]
    for i, d in enumerate(H.antipode):
        for k, c in d.items():
            antipode[k][i] = c
    D = HopfAlgebra(n, table, unit, comult, counit, antipode,
                    labels=["δ" + l for l in H.labels], field=H.field, name=f"{H.name}^")
    D.predual = H
    H._dual = D
    return D


def opposite(H):
    """Opposite multiplication, same coproduct, antipode S^-1."""
    n = H.dim
    table = [[H.table[j][i] for j in range(n)] for i in range(n)]
    anti = [{k[0]: c for k, c in H.S_inv.cols[i].items()} for i in range(n)]
    A = HopfAlgebra(n, table, H.unit, H.comult, H.counit, anti, H.labels, H.field, f"{H.name}_op")
    A.predual = H.predual
    return A


def co_opposite(H):
    """Same algebra, opposite coproduct Delta_op, antipode S^-1."""
    n = H.dim
    comult = [{(k, j): c for (j, k), c in d.items()} for d in H.comult]
    anti = [{k[0]: c for k, c in H.S_inv.cols[i].items()} for i in range(n)]
    A = HopfAlgebra(n, H.table, H.unit, comult, H.counit, anti, H.labels, H.field, f"{H.name}_cop")
    A.predual = H.predual
    return A


def canonical_element(H):
    """E = sum_nu e_nu (x) e^nu in H (x) H^."""
    D = dual(H)
    return Tensor((H, D), {(nu, nu): mpq(1) for nu in range(H.dim)})


def iterated_coproduct(H, m):
    """Delta^(m): H -> H^{(x)m}; Delta^(0) = eps, Delta^(1) = id."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if m == 0:
        return H.eps
    f = LinearMap.identity((H,))
    for k in range(1, m):
        images = [f.image(i).apply(H.delta, k - 1) for i in range(H.dim)]
        f = LinearMap.from_images((H,), (H,) * (k + 1), images)
    return f


class GeneratingMatrix:
    """An element F of B (x) A with its checked flags.

    ``B`` is the coalgebra leg (a HopfAlgebra), ``A`` the algebra leg.
    """

    def __init__(self, value, report=None):
        self.value = value
        self.report = report if report is not None else check_generating_matrix(value)
        self.generating = self.report["multiplicativity"].ok
        self.unital = self.report["unital"].ok
        self.comultiplicative = ("comultiplicativity" in self.report
                                 and self.report["comultiplicativity"].ok)

    @property
    def coalgebra(self):
        return self.value.spaces[0]

    @property
    def algebra(self):
        return self.value.spaces[1]


def check_generating_matrix(F, name="generating matrix"):
    """F^13 F^23 = (Delta (x) id)(F); unitality; comultiplicativity too when A is a bialgebra."""
    B, A = F.spaces
    report = Report(name)
    BBA = (B, B, A)
    report.equal("multiplicativity", F.embed((0, 2), BBA) * F.embed((1, 2), BBA), F.apply(B.delta, 0))
    report.equal("unital", F.apply(B.eps, 0), A.one())
    if isinstance(A, HopfAlgebra):
        BAA = (B, A, A)
        report.equal("comultiplicativity", F.embed((0, 1), BAA) * F.embed((0, 2), BAA), F.apply(A.delta, 1))
    return report


def hom_from_generating_matrix(F, domain=None):
    """The algebra map f(phi) = (phi (x) id)(F) from the dual of B (or ``domain``) to A."""
    value = F.value if isinstance(F, GeneratingMatrix) else F
    B, A = value.spaces
    domain = domain if domain is not None else dual(B)
    if domain.dim != B.dim:
        raise NotAGeneratingMatrix("domain dimension does not match the coalgebra leg")
    images = [value.slice(0, nu) if value.rank > 1 else None for nu in range(B.dim)]
    f = LinearMap.from_images((domain,), (A,), images)
    bad = f.is_multiplicative()
    if bad is not None:
        where, lhs, rhs = bad
        raise NotAGeneratingMatrix("f is not multiplicative: fails",
                                   witness={"at": where, "lhs": lhs, "rhs": rhs})
    return f


def generating_matrix_inverse(F):
    """(S_B (x) id)(F), verified to be a two-sided inverse of F."""
    value = F.value if isinstance(F, GeneratingMatrix) else F
    B = value.spaces[0]
    inv = value.apply(B.S, 0)
    one = Tensor.unit(value.spaces)
    if inv * value != one or value * inv != one:
        raise InvariantViolation("(S (x) id)(F) is not an inverse of F")
    return inv
