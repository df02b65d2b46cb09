"""Validated quasitriangular structures R in H (x) H and their derived identities."""

from __future__ import annotations

from .errors import NotInvertible, NotQuasitriangular
from .hopf import co_opposite
from .report import Report
from .tensor import Tensor, tensor_invert

__all__ = [
    "QuasitriangularStructure",
    "quasitriangular_report",
    "check_quasitriangular",
    "check_cocycle_property",
    "derived_identities",
    "cop_structure",
]


class QuasitriangularStructure:
    """A pair (H, R) that passed the quasitriangularity checks.

    Only :func:`check_quasitriangular` builds these.  ``R_inv``, ``R_op`` and
    ``R_op_inv`` are cached; ``triangular`` records whether R_op R = 1 (x) 1.
    """

    def __init__(self, H, R, R_inv, report):
        self.H = H
        self.R = R
        self.R_inv = R_inv
        self.R_op = R.flip()
        self.R_op_inv = R_inv.flip()
        self.report = report
        self.triangular = self.R_op * R == Tensor.unit((H, H))
        self._cop = None
        # derived constructions (monodromy algebra, M_R(H), ...) built once
        self.cache = {}

    def cached(self, key, build):
        if key not in self.cache:
            self.cache[key] = build()
        return self.cache[key]

    def __repr__(self):
        return f"<QuasitriangularStructure on {self.H.name}, nnz(R)={self.R.nnz}>"

    @property
    def one(self):
        return Tensor.unit((self.H, self.H))


def quasitriangular_report(H, R, name=None, R_inv=None):
    """All defining identities of a quasitriangular R, as a report.

    Returns ``(report, R_inv)``; ``R_inv`` is None when R is singular.  A
    known inverse may be passed in; it is verified, not trusted.
    """
    report = Report(name or f"quasitriangularity on {H.name}")
    HHH = (H, H, H)
    one = Tensor.unit((H, H))
    try:
        R_inv = tensor_invert(R, candidate=R_inv)
    except NotInvertible:
        report.record("R invertible", False)
        return report, None
    report.record("R invertible", True)
    report.equal("(Delta (x) id)(R) = R13 R23", R.apply(H.delta, 0), R.embed((0, 2), HHH) * R.embed((1, 2), HHH))
    report.equal("(id (x) Delta)(R) = R13 R12", R.apply(H.delta, 1), R.embed((0, 2), HHH) * R.embed((0, 1), HHH))
    cases = []
    for a in range(H.dim):
        cases.append(((a,), R * H.delta.image(a) * R_inv, H.delta_op.image(a)))
    report.first_failure("R Delta(a) R^-1 = Delta_op(a)", cases)
    report.first_failure("counit of R", [
        ("eps (x) id", R.apply(H.eps, 0), H.one()),
        ("id (x) eps", R.apply(H.eps, 1), H.one()),
    ])
    report.record("triangular", True, info={"value": R.flip() * R == one})
    return report, R_inv


def check_quasitriangular(H, R, R_inv=None):
    """Validate R and return the cached structure, or raise NotQuasitriangular."""
    report, R_inv = quasitriangular_report(H, R, R_inv=R_inv)
    if not report.ok:
        bad = report.failures()[0]
        raise NotQuasitriangular(f"{bad.name} fails", witness=bad.witness)
    return QuasitriangularStructure(H, R, R_inv, report)


def check_cocycle_property(qt):
    """R^12 (Delta (x) id)(R) = R^23 (id (x) Delta)(R)."""
    H, R = qt.H, qt.R
    HHH = (H, H, H)
    report = Report("cocycle property")
    report.equal("cocycle", R.embed((0, 1), HHH) * R.apply(H.delta, 0),
                 R.embed((1, 2), HHH) * R.apply(H.delta, 1))
    return report


def derived_identities(qt):
    """Antipode sums, (S (x) id)R = R^-1, (S (x) S)R = R and the Yang-Baxter equation."""
    H, R = qt.H, qt.R
    one = qt.one
    HHH = (H, H, H)
    report = Report(f"derived identities on {H.name}")
    RS2 = R.apply(H.S, 1)
    # sum x^i x^j (x) S(y^j) y^i: legs (x^i, y^i, x^j, S y^j)
    report.equal("sum x^i x^j (x) S(y^j) y^i = 1 (x) 1", R.outer(RS2).merge([[0, 2], [3, 1]]), one)
    report.equal("sum x^i (x) S(y^i_1) y^i_2 = 1 (x) 1",
                 R.apply(H.delta, 1).apply(H.S, 1).merge([[0], [1, 2]]), one)
    # sum x^i x^j (x) y^j S(y^i): legs (x^i, S y^i, x^j, y^j)
    report.equal("sum x^i x^j (x) y^j S(y^i) = 1 (x) 1", RS2.outer(R).merge([[0, 2], [3, 1]]), one)
    report.equal("sum x^i (x) y^i_1 S(y^i_2) = 1 (x) 1",
                 R.apply(H.delta, 1).apply(H.S, 2).merge([[0], [1, 2]]), one)
    report.equal("(S (x) id)(R) = R^-1", R.apply(H.S, 0), qt.R_inv)
    report.equal("(S (x) S)(R) = R", R.apply(H.S, 0).apply(H.S, 1), R)
    R12, R13, R23 = R.embed((0, 1), HHH), R.embed((0, 2), HHH), R.embed((1, 2), HHH)
    report.equal("Yang-Baxter R12 R13 R23 = R23 R13 R12", R12 * R13 * R23, R23 * R13 * R12)
    report.record("triangular", True, info={"value": qt.triangular})
    if qt.triangular:
        report.equal("triangular: R_op R = 1 (x) 1", qt.R_op * R, one)
    return report


def cop_structure(qt):
    """(H_cop, R_op): the quasitriangular structure with opposite coproduct."""
    if qt._cop is None:
        Hc = co_opposite(qt.H)
        qt._cop = check_quasitriangular(Hc, qt.R_op.relabel((Hc, Hc)), qt.R_op_inv.relabel((Hc, Hc)))
        qt._cop._cop = qt
    return qt._cop
