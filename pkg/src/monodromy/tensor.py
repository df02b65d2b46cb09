"""Multilinear leg calculus over exact fields.

A :class:`Tensor` is a sparse element of ``V_1 (x) ... (x) V_n`` where every
leg ``V_k`` is a :class:`Space` (usually an :class:`Algebra`).  Keys are basis
multi-indices, one index per leg; zero coefficients are never stored.

The handful of primitives here express every displayed formula we need:

* ``embed``      -- upper/lower index placement (``R^{13}``, ``R_{42}``) with unit padding
* ``u * v``      -- product in the tensor product algebra
* ``apply``      -- a linear map on one or more legs (``(Delta (x) id)(R)``)
* ``merge``      -- multiply groups of legs together (``sum x^i x^j (x) S(y^j) y^i``)
* ``contract``   -- the dual pairing between an H-leg and an H^-leg
* ``slice``      -- ``(e^nu (x) id)(t)``
"""

from __future__ import annotations

from itertools import product
from math import prod

from gmpy2 import mpq

from . import linalg
from .errors import NotAnAlgebra, NotInvertible, SignatureMismatch
from .fields import QQ

__all__ = ["Space", "Algebra", "TensorProductAlgebra", "Tensor", "LinearMap", "tensor_invert"]


class Space:
    """A finite-dimensional vector space with a labelled basis."""

    def __init__(self, dim, labels=None, field=QQ, name=None):
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.dim = dim
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i}" for i in range(dim))
        if len(self.labels) != dim:
            raise ValueError("one label per basis vector")
        self.field = field
        self.name = name or f"V{dim}"
        # the space this one is the linear dual of (for pairings)
        self.predual = None

    def __repr__(self):
        return f"<{type(self).__name__} {self.name} dim={self.dim}>"

    def is_dual_to(self, other):
        return self.predual is other or other.predual is self


class Algebra(Space):
    """Associative unital algebra given by structure constants.

    ``table[i][j]`` is a tuple of ``(k, c)`` pairs with ``e_i e_j = sum c e_k``.
    """

    def __init__(self, dim, table, unit, labels=None, field=QQ, name=None):
        super().__init__(dim, labels, field, name)
        self.table = [[tuple((k, c) for k, c in row[j]) for j in range(dim)] for row in table]
        self.unit = {k: c for k, c in unit.items() if c}

    @classmethod
    def from_products(cls, dim, products, unit, **kw):
        """Build from a dict ``(i, j) -> {k: c}`` (missing pairs multiply to zero)."""
        table = [[() for _ in range(dim)] for _ in range(dim)]
        for (i, j), vec in products.items():
            table[i][j] = tuple(sorted((k, c) for k, c in vec.items() if c))
        return cls(dim, table, unit, **kw)

    def structure(self):
        """Dense-free canonical form of the multiplication, for comparisons."""
        return tuple(tuple(row) for row in self.table)

    def mul(self, u, v):
        """Multiply two vectors given as dicts index -> coefficient."""
        out = {}
        table = self.table
        for i, a in u.items():
            row = table[i]
            for j, b in v.items():
                ab = a * b
                for k, c in row[j]:
                    out[k] = out.get(k, 0) + ab * c
        return {k: c for k, c in out.items() if c}

    def basis(self, i):
        return {i: mpq(1)}

    def element(self, vec):
        return Tensor((self,), {(k,): c for k, c in vec.items() if c})

    def one(self):
        return Tensor((self,), {(k,): c for k, c in self.unit.items()})


class TensorProductAlgebra(Algebra):
    """The ordinary (unbraided) tensor product algebra of its factors.

    Basis index is row-major in the factor order.
    """

    def __init__(self, factors, name=None):
        factors = tuple(factors)
        dims = [f.dim for f in factors]
        dim = prod(dims)
        self.factors = factors
        self._dims = dims
        labels = ["(x)".join(f.labels[k] for f, k in zip(factors, idx)) for idx in product(*[range(d) for d in dims])]
        table = [[() for _ in range(dim)] for _ in range(dim)]
        for a, ia in enumerate(product(*[range(d) for d in dims])):
            for b, ib in enumerate(product(*[range(d) for d in dims])):
                parts = [f.table[i][j] for f, i, j in zip(factors, ia, ib)]
                if not all(parts):
                    continue
                vec = {}
                for combo in product(*parts):
                    k = self.flat(tuple(kk for kk, _ in combo))
                    vec[k] = vec.get(k, 0) + prod((c for _, c in combo), start=mpq(1))
                table[a][b] = tuple(sorted((k, c) for k, c in vec.items() if c))
        unit = {}
        for combo in product(*[f.unit.items() for f in factors]):
            unit[self.flat(tuple(k for k, _ in combo))] = prod((c for _, c in combo), start=mpq(1))
        super().__init__(dim, table, unit, labels, factors[0].field,
                         name or "(x)".join(f.name for f in factors))

    def flat(self, idx):
        k = 0
        for d, i in zip(self._dims, idx):
            k = k * d + i
        return k

    def unflat(self, k):
        out = []
        for d in reversed(self._dims):
            out.append(k % d)
            k //= d
        return tuple(reversed(out))


def _flat_index(dims, idx):
    k = 0
    for d, i in zip(dims, idx):
        k = k * d + i
    return k


def _unflat_index(dims, k):
    out = []
    for d in reversed(dims):
        out.append(k % d)
        k //= d
    return tuple(reversed(out))


class Tensor:
    """Sparse element of a tensor product of spaces."""

    __slots__ = ("spaces", "data")

    def __init__(self, spaces, data=None):
        self.spaces = tuple(spaces)
        if not self.spaces:
            raise SignatureMismatch("a tensor needs at least one leg")
        self.data = {k: c for k, c in (data or {}).items() if c}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, spaces):
        return cls(spaces, {})

    @classmethod
    def basis(cls, spaces, idx):
        return cls(spaces, {tuple(idx): mpq(1)})

    @classmethod
    def unit(cls, spaces):
        for s in spaces:
            if not isinstance(s, Algebra):
                raise NotAnAlgebra(f"{s!r} has no unit")
        data = {}
        for combo in product(*[s.unit.items() for s in spaces]):
            data[tuple(k for k, _ in combo)] = prod((c for _, c in combo), start=mpq(1))
        return cls(spaces, data)

    @classmethod
    def from_vector(cls, space, vec):
        return cls((space,), {(k,): c for k, c in vec.items()})

    # -- basic protocol -----------------------------------------------------

    @property
    def rank(self):
        return len(self.spaces)

    @property
    def nnz(self):
        return len(self.data)

    def __repr__(self):
        names = " (x) ".join(s.name for s in self.spaces)
        return f"<Tensor [{names}] nnz={len(self.data)}>"

    def pretty(self):
        if not self.data:
            return "0"
        terms = []
        for key in sorted(self.data):
            label = " (x) ".join(s.labels[i] for s, i in zip(self.spaces, key))
            terms.append(f"{self.data[key]}*[{label}]")
        return " + ".join(terms)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.spaces == other.spaces and self.data == other.data

    def __hash__(self):
        return hash((self.spaces, frozenset(self.data.items())))

    def _check_same(self, other):
        if self.spaces != other.spaces:
            raise SignatureMismatch(f"leg mismatch: {self.spaces} vs {other.spaces}")

    def __add__(self, other):
        self._check_same(other)
        out = dict(self.data)
        for k, c in other.data.items():
            out[k] = out.get(k, 0) + c
        return Tensor(self.spaces, out)

    def __neg__(self):
        return Tensor(self.spaces, {k: -c for k, c in self.data.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return Tensor(self.spaces, {k: c * v for k, v in self.data.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if not isinstance(other, Tensor):
            return self.scale(other)
        return tensor_mul(self, other)

    def __bool__(self):
        return bool(self.data)

    def first_difference(self, other):
        """Lexicographically first multi-index where two tensors differ."""
        self._check_same(other)
        keys = sorted(set(self.data) | set(other.data))
        for k in keys:
            a, b = self.data.get(k, 0), other.data.get(k, 0)
            if a != b:
                return k, a, b
        return None

    def vector(self):
        """Single-leg tensor as a dict index -> coefficient."""
        if self.rank != 1:
            raise SignatureMismatch("vector() needs a one-leg tensor")
        return {k[0]: c for k, c in self.data.items()}

    def scalar(self):
        raise NotImplementedError

    # -- leg calculus -------------------------------------------------------

    def outer(self, other):
        """``self (x) other`` (legs concatenated)."""
        data = {}
        for ka, ca in self.data.items():
            for kb, cb in other.data.items():
                data[ka + kb] = ca * cb
        return Tensor(self.spaces + other.spaces, data)

    def permute(self, order):
        """New leg ``k`` is old leg ``order[k]``; ``order`` must be a permutation."""
        if sorted(order) != list(range(self.rank)):
            raise SignatureMismatch(f"{order} is not a permutation of the legs")
        data = {tuple(key[o] for o in order): c for key, c in self.data.items()}
        return Tensor([self.spaces[o] for o in order], data)

    def flip(self):
        if self.rank != 2:
            raise SignatureMismatch("flip needs two legs")
        return self.permute((1, 0))

    def embed(self, positions, target):
        """Place leg ``k`` at ``positions[k]`` of ``target``; pad other legs with units."""
        target = tuple(target)
        if len(positions) != self.rank or len(set(positions)) != len(positions):
            raise SignatureMismatch("placement must be injective on the legs")
        for leg, pos in enumerate(positions):
            if not 0 <= pos < len(target) or target[pos] is not self.spaces[leg]:
                raise SignatureMismatch(f"leg {leg} cannot be placed at position {pos}")
        free = [p for p in range(len(target)) if p not in positions]
        for p in free:
            if not isinstance(target[p], Algebra):
                raise SignatureMismatch(f"position {p} is not unital")
        pads = list(product(*[target[p].unit.items() for p in free]))
        data = {}
        for key, c in self.data.items():
            for pad in pads:
                full = [0] * len(target)
                for leg, pos in enumerate(positions):
                    full[pos] = key[leg]
                coef = c
                for p, (k, u) in zip(free, pad):
                    full[p] = k
                    coef = coef * u
                data[tuple(full)] = data.get(tuple(full), 0) + coef
        return Tensor(target, data)

    def at(self, *positions, n=None, spaces=None):
        """Shorthand for ``embed`` using 1-based positions, e.g. ``R.at(1, 3, n=3)``."""
        if spaces is None:
            # all legs of the target are taken from self (same space everywhere)
            s0 = self.spaces[0]
            if any(s is not s0 for s in self.spaces):
                raise SignatureMismatch("pass spaces= when legs differ")
            spaces = (s0,) * n
        return self.embed([p - 1 for p in positions], spaces)

    def apply(self, f, legs):
        """Apply ``f`` to the given legs (an int or a tuple).

        The codomain legs of ``f`` replace the listed legs, inserted at the
        position of the smallest listed leg.
        """
        if isinstance(legs, int):
            legs = (legs,)
        legs = tuple(legs)
        dom = tuple(self.spaces[l] for l in legs)
        if dom != f.domain:
            raise SignatureMismatch(f"map domain {f.domain} does not match legs {dom}")
        first = min(legs)
        rest = [l for l in range(self.rank) if l not in legs]
        before = [l for l in rest if l < first]
        after = [l for l in rest if l > first]
        spaces = [self.spaces[l] for l in before] + list(f.codomain) + [self.spaces[l] for l in after]
        dims = [s.dim for s in f.domain]
        data = {}
        cols = f.cols
        for key, c in self.data.items():
            col = cols[_flat_index(dims, [key[l] for l in legs])]
            if not col:
                continue
            pre = tuple(key[l] for l in before)
            post = tuple(key[l] for l in after)
            for img, v in col.items():
                k = pre + img + post
                data[k] = data.get(k, 0) + c * v
        if not spaces:
            raise SignatureMismatch("result has no legs; use evaluate()")
        return Tensor(spaces, data)

    def evaluate(self, f):
        """Apply a functional consuming all legs; returns a scalar."""
        if self.spaces != f.domain or f.codomain:
            raise SignatureMismatch("evaluate needs a functional on all legs")
        dims = [s.dim for s in f.domain]
        total = mpq(0)
        for key, c in self.data.items():
            total += c * f.cols[_flat_index(dims, key)].get((), 0)
        return total

    def slice(self, leg, index):
        """``(e^index (x) id)(t)`` on the given leg: the coefficient tensor."""
        if self.rank == 1:
            raise SignatureMismatch("slice would leave no legs; use coefficient()")
        spaces = self.spaces[:leg] + self.spaces[leg + 1:]
        data = {}
        for key, c in self.data.items():
            if key[leg] == index:
                data[key[:leg] + key[leg + 1:]] = c
        return Tensor(spaces, data)

    def coefficient(self, key):
        return self.data.get(tuple(key), mpq(0))

    def contract(self, i, j):
        """Dual pairing between legs ``i`` and ``j`` (mutually dual spaces)."""
        if not self.spaces[i].is_dual_to(self.spaces[j]):
            raise SignatureMismatch(f"legs {i} and {j} are not dual")
        keep = [l for l in range(self.rank) if l not in (i, j)]
        data = {}
        for key, c in self.data.items():
            if key[i] == key[j]:
                k = tuple(key[l] for l in keep)
                data[k] = data.get(k, 0) + c
        if not keep:
            return data.get((), mpq(0))
        return Tensor([self.spaces[l] for l in keep], data)

    def merge(self, groups):
        """Multiply legs together group by group.

        ``groups`` lists, for each output leg, the input legs whose factors are
        multiplied in that order; every input leg must appear exactly once.
        """
        flat = [l for g in groups for l in g]
        if sorted(flat) != list(range(self.rank)):
            raise SignatureMismatch("merge groups must partition the legs")
        spaces = []
        for g in groups:
            s = self.spaces[g[0]]
            if any(self.spaces[l] is not s for l in g):
                raise SignatureMismatch(f"legs {g} live in different spaces")
            if len(g) > 1 and not isinstance(s, Algebra):
                raise NotAnAlgebra(f"{s!r} cannot multiply")
            spaces.append(s)
        data = {}
        for key, c in self.data.items():
            parts = []
            for g, s in zip(groups, spaces):
                vec = {key[g[0]]: 1}
                for l in g[1:]:
                    vec = _mul_by_basis(s, vec, key[l])
                    if not vec:
                        break
                if not vec:
                    parts = None
                    break
                parts.append(vec.items())
            if parts is None:
                continue
            for combo in product(*parts):
                k = tuple(kk for kk, _ in combo)
                v = c
                for _, cc in combo:
                    v = v * cc
                data[k] = data.get(k, 0) + v
        return Tensor(spaces, data)

    def flatten(self, legs, space):
        """Fuse consecutive ``legs`` into one leg of a :class:`TensorProductAlgebra`."""
        legs = tuple(legs)
        if legs != tuple(range(legs[0], legs[0] + len(legs))):
            raise SignatureMismatch("flatten needs consecutive legs")
        if tuple(self.spaces[l] for l in legs) != space.factors:
            raise SignatureMismatch("legs do not match the factors")
        a, b = legs[0], legs[-1] + 1
        data = {}
        for key, c in self.data.items():
            data[key[:a] + (space.flat(key[a:b]),) + key[b:]] = c
        return Tensor(self.spaces[:a] + (space,) + self.spaces[b:], data)

    def unflatten(self, leg):
        space = self.spaces[leg]
        if not isinstance(space, TensorProductAlgebra):
            raise SignatureMismatch("leg is not a tensor product algebra")
        data = {}
        for key, c in self.data.items():
            data[key[:leg] + space.unflat(key[leg]) + key[leg + 1:]] = c
        return Tensor(self.spaces[:leg] + space.factors + self.spaces[leg + 1:], data)

    def relabel(self, spaces):
        """Reinterpret legs as other spaces of equal dimension (e.g. H as H_cop)."""
        spaces = tuple(spaces)
        if [s.dim for s in spaces] != [s.dim for s in self.spaces]:
            raise SignatureMismatch("relabel must preserve leg dimensions")
        return Tensor(spaces, self.data)


def _mul_by_basis(space, vec, j):
    out = {}
    table = space.table
    for i, a in vec.items():
        for k, c in table[i][j]:
            out[k] = out.get(k, 0) + a * c
    return {k: c for k, c in out.items() if c}


def tensor_mul(u, v):
    """Product in the tensor product algebra of the (identical) legs."""
    u._check_same(v)
    for s in u.spaces:
        if not isinstance(s, Algebra):
            raise NotAnAlgebra(f"{s!r} has no multiplication")
    tables = [s.table for s in u.spaces]
    n = len(tables)
    data = {}
    vitems = list(v.data.items())
    for ka, ca in u.data.items():
        rows = [tables[l][ka[l]] for l in range(n)]
        for kb, cb in vitems:
            parts = [rows[l][kb[l]] for l in range(n)]
            if not all(parts):
                continue
            c = ca * cb
            if all(len(p) == 1 for p in parts):
                key = tuple(p[0][0] for p in parts)
                for p in parts:
                    c = c * p[0][1]
                data[key] = data.get(key, 0) + c
                continue
            for combo in product(*parts):
                key = tuple(k for k, _ in combo)
                w = c
                for _, cc in combo:
                    w = w * cc
                data[key] = data.get(key, 0) + w
    return Tensor(u.spaces, data)


def tensor_invert(t, candidate=None):
    """Two-sided inverse in the tensor product algebra of ``t``'s legs.

    Solves the left-regular system ``t x = 1`` exactly and verifies ``x t = 1``.
    A ``candidate`` (e.g. from an antipode formula) is accepted instead of the
    solve when it checks out as a two-sided inverse.
    """
    one = Tensor.unit(t.spaces)
    if candidate is not None and t * candidate == one and candidate * t == one:
        return candidate
    dims = [s.dim for s in t.spaces]
    total = prod(dims)
    columns = []
    for b in range(total):
        col = t * Tensor.basis(t.spaces, _unflat_index(dims, b))
        columns.append({_flat_index(dims, k): c for k, c in col.data.items()})
    rhs = {_flat_index(dims, k): c for k, c in one.data.items()}
    try:
        x = linalg.solve(columns, rhs, total)
    except NotInvertible:
        raise NotInvertible("element is not invertible") from None
    inv = Tensor(t.spaces, {_unflat_index(dims, i): c for i, c in enumerate(x) if c})
    if t * inv != one or inv * t != one:
        raise NotInvertible("element is not invertible")
    return inv


class LinearMap:
    """Linear map between tensor products of spaces.

    Stored as sparse columns: ``cols[j]`` maps codomain multi-indices to
    coefficients for the j-th (row-major flattened) domain basis vector.
    ``matrix()`` gives the dense view used for ranks.
    """

    def __init__(self, domain, codomain, cols):
        self.domain = tuple(domain)
        self.codomain = tuple(codomain)
        n = prod(s.dim for s in self.domain)
        if len(cols) != n:
            raise SignatureMismatch(f"expected {n} columns, got {len(cols)}")
        self.cols = [{k: c for k, c in col.items() if c} for col in cols]

    @classmethod
    def from_images(cls, domain, codomain, images):
        """``images[j]`` is the image Tensor (over ``codomain``) of basis vector j."""
        codomain = tuple(codomain)
        cols = []
        for img in images:
            if img.spaces != codomain:
                raise SignatureMismatch("image lives in the wrong space")
            cols.append(dict(img.data))
        return cls(domain, codomain, cols)

    @classmethod
    def from_function(cls, domain, codomain, fn):
        """Build from ``fn(multi_index) -> Tensor`` evaluated on every basis vector."""
        domain = tuple(domain)
        dims = [s.dim for s in domain]
        return cls.from_images(domain, codomain, [fn(_unflat_index(dims, j)) for j in range(prod(dims))])

    @classmethod
    def identity(cls, spaces):
        spaces = tuple(spaces)
        dims = [s.dim for s in spaces]
        return cls(spaces, spaces, [{_unflat_index(dims, j): mpq(1)} for j in range(prod(dims))])

    @classmethod
    def functional(cls, space, covector):
        """A linear form ``space -> field`` (empty codomain)."""
        return cls((space,), (), [{(): covector.get(j, 0)} for j in range(space.dim)])

    def __repr__(self):
        d = " (x) ".join(s.name for s in self.domain)
        c = " (x) ".join(s.name for s in self.codomain) or "k"
        return f"<LinearMap {d} -> {c}>"

    @property
    def shape(self):
        return prod(s.dim for s in self.codomain), prod(s.dim for s in self.domain)

    def image(self, idx):
        """Image of a basis multi-index (or int for single-leg domains)."""
        if isinstance(idx, int):
            j = idx
        else:
            j = _flat_index([s.dim for s in self.domain], idx)
        return Tensor(self.codomain, self.cols[j])

    def __call__(self, t):
        if t.spaces != self.domain:
            raise SignatureMismatch(f"{self!r} applied to {t!r}")
        dims = [s.dim for s in self.domain]
        data = {}
        for key, c in t.data.items():
            for k, v in self.cols[_flat_index(dims, key)].items():
                data[k] = data.get(k, 0) + c * v
        return Tensor(self.codomain, data)

    def __matmul__(self, other):
        """Composition ``self o other``."""
        if other.codomain != self.domain:
            raise SignatureMismatch("composition of incompatible maps")
        dims = [s.dim for s in self.domain]
        cols = []
        for col in other.cols:
            out = {}
            for k, c in col.items():
                for k2, v in self.cols[_flat_index(dims, k)].items():
                    out[k2] = out.get(k2, 0) + c * v
            cols.append(out)
        return LinearMap(other.domain, self.codomain, cols)

    def kron(self, other):
        """``self (x) other`` acting on concatenated legs."""
        cols = []
        for ca in self.cols:
            for cb in other.cols:
                col = {}
                for ka, va in ca.items():
                    for kb, vb in cb.items():
                        col[ka + kb] = va * vb
                cols.append(col)
        return LinearMap(self.domain + other.domain, self.codomain + other.codomain, cols)

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.domain == other.domain and self.codomain == other.codomain and self.cols == other.cols

    def __hash__(self):
        return id(self)

    def first_difference(self, other):
        for j, (a, b) in enumerate(zip(self.cols, other.cols)):
            if a != b:
                return j, Tensor(self.codomain, a), Tensor(other.codomain, b)
        return None

    def __add__(self, other):
        cols = []
        for a, b in zip(self.cols, other.cols):
            col = dict(a)
            for k, v in b.items():
                col[k] = col.get(k, 0) + v
            cols.append(col)
        return LinearMap(self.domain, self.codomain, cols)

    def scale(self, c):
        return LinearMap(self.domain, self.codomain, [{k: c * v for k, v in col.items()} for col in self.cols])

    def matrix(self):
        """Dense matrix, rows = flattened codomain, columns = flattened domain."""
        cdims = [s.dim for s in self.codomain]
        nrows, ncols = self.shape
        m = [[mpq(0)] * ncols for _ in range(nrows)]
        for j, col in enumerate(self.cols):
            for k, v in col.items():
                m[_flat_index(cdims, k)][j] = v
        return m

    def rank(self):
        return linalg.rank(self.matrix())

    def inverse(self):
        nrows, ncols = self.shape
        if nrows != ncols:
            raise NotInvertible("non-square map")
        cdims = [s.dim for s in self.codomain]
        ddims = [s.dim for s in self.domain]
        cols = [{_flat_index(cdims, k): v for k, v in col.items()} for col in self.cols]
        if self.rank() != ncols:
            raise NotInvertible("map is not bijective")
        inv_cols = []
        for i in range(nrows):
            x = linalg.solve(cols, {i: mpq(1)}, ncols)
            inv_cols.append({_unflat_index(ddims, j): c for j, c in enumerate(x) if c})
        return LinearMap(self.codomain, self.domain, inv_cols)

    def transpose(self, domain_dual, codomain_dual):
        """Transpose as a map between the dual spaces (single-leg only)."""
        m = self.matrix()
        nrows, ncols = self.shape
        cols = [{(j,): m[i][j] for j in range(ncols) if m[i][j]} for i in range(nrows)]
        return LinearMap((codomain_dual,), (domain_dual,), cols)

    def image_rows(self):
        """Images of all domain basis vectors as sparse flat rows (for span checks)."""
        cdims = [s.dim for s in self.codomain]
        return [{_flat_index(cdims, k): v for k, v in col.items()} for col in self.cols]

    def relabel(self, domain=None, codomain=None):
        return LinearMap(domain or self.domain, codomain or self.codomain, self.cols)

    def is_multiplicative(self):
        """First basis pair (i, j) with f(e_i e_j) != f(e_i) f(e_j), or None.

        Domain and codomain must both be single algebras.
        """
        (a,), (b,) = self.domain, self.codomain
        images = [self.image(i) for i in range(a.dim)]
        for i in range(a.dim):
            for j in range(a.dim):
                lhs = self(Tensor((a,), {(k,): c for k, c in a.table[i][j]}))
                rhs = images[i] * images[j]
                if lhs != rhs:
                    return (i, j), lhs, rhs
        return None

    def is_unital(self):
        (a,), (b,) = self.domain, self.codomain
        return self(a.one()) == b.one()
