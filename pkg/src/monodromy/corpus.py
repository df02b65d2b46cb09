"""Concrete Hopf algebras and R-matrices used as the verification corpus."""

from __future__ import annotations

from itertools import permutations

from gmpy2 import mpq

from .errors import MalformedPresentation
from .fields import QQ, Field
from .hopf import HopfAlgebra, dual
from .tensor import Tensor

__all__ = [
    "group_algebra",
    "function_algebra",
    "cyclic_group_table",
    "s3_table",
    "cyclic_group_algebra",
    "s3_group_algebra",
    "sweedler_h4",
    "trivial_r",
    "sweedler_r",
    "cyclic_r",
    "cyclotomic_cyclic_group_algebra",
]


def _check_group(table):
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise MalformedPresentation("Cayley table must be square", "cayley_table")
    for row in table:
        for v in row:
            if not 0 <= v < n:
                raise MalformedPresentation("Cayley table entry out of range", "cayley_table")
    ids = [e for e in range(n) if all(table[e][g] == g and table[g][e] == g for g in range(n))]
    if not ids:
        raise MalformedPresentation("no identity element", "cayley_table")
    e = ids[0]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise MalformedPresentation(f"not associative at {(a, b, c)}", "cayley_table")
    inv = []
    for a in range(n):
        bs = [b for b in range(n) if table[a][b] == e]
        if not bs or table[bs[0]][a] != e:
            raise MalformedPresentation(f"element {a} has no inverse", "cayley_table")
        inv.append(bs[0])
    return e, inv


def group_algebra(cayley_table, labels=None, field=QQ, name="Q[G]"):
    """Q[G]: Delta(g) = g (x) g, eps(g) = 1, S(g) = g^-1.

    The identity is moved to basis index 0.
    """
    e, inv = _check_group(cayley_table)
    n = len(cayley_table)
    order = [e] + [g for g in range(n) if g != e]
    pos = {g: i for i, g in enumerate(order)}
    if labels is None:
        labels = [f"g{g}" for g in range(n)]
    labels = [labels[g] for g in order]
    table = [[((pos[cayley_table[order[i]][order[j]]], mpq(1)),) for j in range(n)] for i in range(n)]
    comult = [{(i, i): mpq(1)} for i in range(n)]
    counit = [mpq(1)] * n
    antipode = [{pos[inv[order[i]]]: mpq(1)} for i in range(n)]
    return HopfAlgebra(n, table, {0: mpq(1)}, comult, counit, antipode, labels, field, name)


def function_algebra(cayley_table, labels=None, field=QQ, name="Q[G]"):
    """Functions on G with pointwise product: the dual of Q[G] in the delta basis."""
    return dual(group_algebra(cayley_table, labels, field, name))


def cyclic_group_table(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def s3_table():
    perms = list(permutations(range(3)))
    # sort so the identity comes first, then transpositions, then 3-cycles
    perms.sort(key=lambda p: (sum(p[i] != i for i in range(3)), p))
    idx = {p: i for i, p in enumerate(perms)}
    table = [[idx[tuple(p[q[i]] for i in range(3))] for q in perms] for p in perms]
    labels = ["e" if p == (0, 1, 2) else "".join(str(v + 1) for v in p) for p in perms]
    return table, labels


def cyclic_group_algebra(n, field=QQ):
    labels = ["e"] + ["g" if k == 1 else f"g{k}" for k in range(1, n)]
    return group_algebra(cyclic_group_table(n), labels, field, name=f"Q[Z{n}]")


def s3_group_algebra():
    table, labels = s3_table()
    return group_algebra(table, labels, name="Q[S3]")


def sweedler_h4():
    """Sweedler's four-dimensional Hopf algebra, basis 1, g, x, gx.

    g^2 = 1, x^2 = 0, xg = -gx, Delta(g) = g (x) g, Delta(x) = x (x) 1 + g (x) x,
    S(g) = g, S(x) = -gx.
    """
    basis = [(0, 0), (1, 0), (0, 1), (1, 1)]  # g^a x^b
    pos = {b: i for i, b in enumerate(basis)}

    def mul(u, v):
        (a, b), (c, d) = u, v
        if b + d > 1:
            return None
        sign = -1 if (b and c) else 1
        return pos[((a + c) % 2, b + d)], mpq(sign)

    table = []
    for u in basis:
        row = []
        for v in basis:
            r = mul(u, v)
            row.append(() if r is None else (r,))
        table.append(row)
    one, g, x, gx = range(4)
    comult = [
        {(one, one): mpq(1)},
        {(g, g): mpq(1)},
        {(x, one): mpq(1), (g, x): mpq(1)},
        {(gx, g): mpq(1), (one, gx): mpq(1)},
    ]
    counit = [mpq(1), mpq(1), mpq(0), mpq(0)]
    antipode = [{one: mpq(1)}, {g: mpq(1)}, {gx: mpq(-1)}, {x: mpq(1)}]
    return HopfAlgebra(4, table, {0: mpq(1)}, comult, counit, antipode,
                       labels=["1", "g", "x", "gx"], name="H4")


def trivial_r(H):
    return Tensor.unit((H, H))


def sweedler_r(H, lam):
    """R_lam = 1/2(1(x)1 + 1(x)g + g(x)1 - g(x)g) + lam/2(x(x)x - x(x)gx + gx(x)x + gx(x)gx).

    The signs of the two mixed nilpotent terms are the ones compatible with
    Delta(x) = x (x) 1 + g (x) x (found by solving the linear conditions).
    """
    one, g, x, gx = range(4)
    half = mpq(1, 2)
    lam = mpq(lam)
    data = {
        (one, one): half, (one, g): half, (g, one): half, (g, g): -half,
        (x, x): lam * half, (x, gx): -lam * half, (gx, x): lam * half, (gx, gx): lam * half,
    }
    return Tensor((H, H), data)


def cyclic_r(H, k=1):
    """R = 1/n sum_{a,b} w^(-ab) g^a (x) g^b on Q(zeta_n)[Z_n], w = zeta_n^k."""
    n = H.dim
    field = H.field
    w = field.root_of_unity(k)
    data = {}
    for a in range(n):
        for b in range(n):
            data[(a, b)] = field(w ** ((-a * b) % n) if n > 1 else 1) / n
    return Tensor((H, H), data)


def cyclotomic_cyclic_group_algebra(n):
    return cyclic_group_algebra(n, field=Field.cyclotomic(n))
