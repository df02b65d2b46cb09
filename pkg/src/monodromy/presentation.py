"""JSON presentation files: Hopf algebras (or plain algebras) with named R-matrices.

Layout (format ``monodromy-hopf/1``)::

    {"format": "monodromy-hopf/1", "kind": "hopf", "name": "...",
     "field": "Q" | {"cyclotomic": n},
     "basis": [labels...],
     "unit": {label: scalar},
     "mult": {a: {b: {c: scalar}}},          # e_a e_b = sum scalar e_c
     "comult": {a: [[b, c, scalar], ...]},
     "counit": {a: scalar},
     "antipode": {a: {b: scalar}},
     "r_matrices": {name: [[a, b, scalar], ...]}}

Scalars are exact strings "p/q" (lists of them, one per power of zeta, for
cyclotomic fields).  Missing entries are zero.  ``kind: "algebra"`` files carry
only unit and mult.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .errors import DivisionByZero, MalformedPresentation
from .fields import QQ, Field, format_scalar, parse_scalar
from .hopf import HopfAlgebra
from .tensor import Algebra, Tensor

FORMAT = "monodromy-hopf/1"

__all__ = ["FORMAT", "Presentation", "load", "loads", "parse", "dump", "dumps", "bundled", "bundled_names",
           "resolve"]

ALIASES = {"h4": "sweedler_h4"}


@dataclass
class Presentation:
    algebra: Algebra
    r_matrices: dict = field(default_factory=dict)
    kind: str = "hopf"

    @property
    def is_hopf(self):
        return isinstance(self.algebra, HopfAlgebra)

    def r_matrix(self, name=None):
        """(name, R); with no name: the only/first R, or the trivial 1 (x) 1 when none is listed."""
        if name is None:
            if not self.r_matrices:
                return "trivial", Tensor.unit((self.algebra, self.algebra))
            name = next(iter(self.r_matrices))
        if name in ("trivial", "1") and name not in self.r_matrices:
            return "trivial", Tensor.unit((self.algebra, self.algebra))
        try:
            return name, self.r_matrices[name]
        except KeyError:
            raise MalformedPresentation(f"no R-matrix named {name!r}", "r_matrices") from None


def _field(spec):
    if spec in (None, "Q", "QQ", "rationals"):
        return QQ
    if isinstance(spec, dict) and set(spec) == {"cyclotomic"} and isinstance(spec["cyclotomic"], int) \
            and spec["cyclotomic"] >= 1:
        return Field.cyclotomic(spec["cyclotomic"])
    raise MalformedPresentation(f"unknown field {spec!r}", "field")


def _field_spec(F):
    return "Q" if F.is_rational else {"cyclotomic": F.n}


class _Reader:
    def __init__(self, doc):
        self.doc = doc
        self.F = QQ
        self.index = {}

    def scalar(self, value, where):
        try:
            return parse_scalar(value, self.F)
        except DivisionByZero:
            raise MalformedPresentation(f"zero denominator {value!r}", where) from None
        except (ValueError, TypeError) as exc:
            raise MalformedPresentation(f"bad scalar {value!r}: {exc}", where) from None

    def label(self, name, where):
        try:
            return self.index[name]
        except (KeyError, TypeError):
            raise MalformedPresentation(f"unknown basis label {name!r}", where) from None

    def section(self, key, kind=dict, required=True):
        if key not in self.doc:
            if required:
                raise MalformedPresentation(f"missing field {key!r}", key)
            return kind()
        value = self.doc[key]
        if not isinstance(value, kind):
            raise MalformedPresentation(f"{key!r} must be a {kind.__name__}", key)
        return value

    def vector(self, obj, where):
        if not isinstance(obj, dict):
            raise MalformedPresentation("expected {label: scalar}", where)
        out = {}
        for name, value in obj.items():
            k = self.label(name, f"{where}.{name}")
            c = self.scalar(value, f"{where}.{name}")
            if c:
                out[k] = out.get(k, 0) + c
        return out

    def triples(self, obj, where):
        if not isinstance(obj, list):
            raise MalformedPresentation("expected a list of [label, label, scalar]", where)
        out = {}
        for t, entry in enumerate(obj):
            loc = f"{where}[{t}]"
            if not isinstance(entry, list) or len(entry) != 3:
                raise MalformedPresentation("expected [label, label, scalar]", loc)
            key = (self.label(entry[0], loc), self.label(entry[1], loc))
            c = self.scalar(entry[2], loc)
            if c:
                out[key] = out.get(key, 0) + c
        return out


def parse(doc):
    """Build a Presentation from decoded JSON; structural problems raise MalformedPresentation."""
    if not isinstance(doc, dict):
        raise MalformedPresentation("top level must be an object", "$")
    if doc.get("format") != FORMAT:
        raise MalformedPresentation(f"format must be {FORMAT!r}", "format")
    kind = doc.get("kind", "hopf")
    if kind not in ("hopf", "algebra"):
        raise MalformedPresentation(f"unknown kind {kind!r}", "kind")
    rd = _Reader(doc)
    rd.F = _field(doc.get("field"))
    basis = rd.section("basis", list)
    if not basis or not all(isinstance(b, str) for b in basis) or len(set(basis)) != len(basis):
        raise MalformedPresentation("basis must be a non-empty list of distinct strings", "basis")
    rd.index = {b: i for i, b in enumerate(basis)}
    n = len(basis)
    name = doc.get("name", "H")
    if not isinstance(name, str):
        raise MalformedPresentation("name must be a string", "name")
    unit = rd.vector(rd.section("unit"), "unit")
    mult = rd.section("mult")
    table = [[() for _ in range(n)] for _ in range(n)]
    for a, row in mult.items():
        i = rd.label(a, f"mult.{a}")
        if not isinstance(row, dict):
            raise MalformedPresentation("expected {label: vector}", f"mult.{a}")
        for b, vec in row.items():
            j = rd.label(b, f"mult.{a}.{b}")
            table[i][j] = tuple(sorted(rd.vector(vec, f"mult.{a}.{b}").items()))
    if kind == "algebra":
        if "r_matrices" in doc:
            raise MalformedPresentation("plain algebras carry no R-matrices", "r_matrices")
        return Presentation(Algebra(n, table, unit, basis, rd.F, name), {}, kind)
    comult = [{} for _ in range(n)]
    for a, terms in rd.section("comult").items():
        comult[rd.label(a, f"comult.{a}")] = rd.triples(terms, f"comult.{a}")
    counit = [rd.F(0)] * n
    for a, value in rd.section("counit").items():
        counit[rd.label(a, f"counit.{a}")] = rd.scalar(value, f"counit.{a}")
    antipode = [{} for _ in range(n)]
    for a, vec in rd.section("antipode").items():
        antipode[rd.label(a, f"antipode.{a}")] = rd.vector(vec, f"antipode.{a}")
    H = HopfAlgebra(n, table, unit, comult, counit, antipode, basis, rd.F, name)
    rs = {}
    for rname, terms in rd.section("r_matrices", required=False).items():
        rs[rname] = Tensor((H, H), rd.triples(terms, f"r_matrices.{rname}"))
    return Presentation(H, rs, kind)


def loads(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedPresentation(f"invalid JSON: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from None
    return parse(doc)


def load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise MalformedPresentation(f"cannot read file: {exc.strerror}", str(path)) from None
    return loads(text)


def _vec_out(labels, vec):
    return {labels[k]: format_scalar(c) for k, c in sorted(vec.items()) if c}


def _triples_out(labels, d):
    return [[labels[i], labels[j], format_scalar(c)] for (i, j), c in sorted(d.items()) if c]


def to_document(A, r_matrices=None):
    labels = list(A.labels)
    if len(set(labels)) != len(labels):
        raise MalformedPresentation("basis labels are not distinct", "basis")
    is_hopf = isinstance(A, HopfAlgebra)
    doc = {"format": FORMAT, "kind": "hopf" if is_hopf else "algebra", "name": A.name,
           "field": _field_spec(A.field), "basis": labels, "unit": _vec_out(labels, A.unit)}
    mult = {}
    for i in range(A.dim):
        row = {}
        for j in range(A.dim):
            if A.table[i][j]:
                row[labels[j]] = _vec_out(labels, dict(A.table[i][j]))
        if row:
            mult[labels[i]] = row
    doc["mult"] = mult
    if is_hopf:
        doc["comult"] = {labels[i]: _triples_out(labels, d) for i, d in enumerate(A.comult) if d}
        doc["counit"] = {labels[i]: format_scalar(c) for i, c in enumerate(A.counit) if c}
        doc["antipode"] = {labels[i]: _vec_out(labels, d) for i, d in enumerate(A.antipode) if d}
        if r_matrices:
            doc["r_matrices"] = {name: _triples_out(labels, R.data) for name, R in r_matrices.items()}
    elif r_matrices:
        raise MalformedPresentation("plain algebras carry no R-matrices", "r_matrices")
    return doc


def _compact(value):
    return json.dumps(value, ensure_ascii=False, separators=(", ", ": "))


def dumps(A, r_matrices=None):
    """Deterministic text: one line per top-level field, one line per basis element inside sections."""
    doc = to_document(A, r_matrices)
    lines = ["{"]
    keys = list(doc)
    for t, key in enumerate(keys):
        value = doc[key]
        end = "," if t < len(keys) - 1 else ""
        if isinstance(value, dict) and value and key not in ("field", "unit", "counit"):
            lines.append(f"  {_compact(key)}: {{")
            inner = list(value.items())
            for u, (k, v) in enumerate(inner):
                lines.append(f"    {_compact(k)}: {_compact(v)}" + ("," if u < len(inner) - 1 else ""))
            lines.append("  }" + end)
        else:
            lines.append(f"  {_compact(key)}: {_compact(value)}{end}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump(A, path, r_matrices=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(A, r_matrices))


def bundled_names():
    root = resources.files("monodromy") / "data"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def bundled(name):
    """Text of a bundled corpus file (``sweedler_h4``, ``h4``, ``z2_group``, ...)."""
    name = ALIASES.get(name, name)
    path = resources.files("monodromy") / "data" / f"{name}.json"
    if not path.is_file():
        raise MalformedPresentation(f"no bundled presentation {name!r}", name)
    return path.read_text(encoding="utf-8")


def resolve(spec):
    """A path, or the name of a bundled presentation (with or without .json)."""
    import os
    if os.path.exists(spec):
        return load(spec)
    stem = os.path.basename(spec)
    if stem.endswith(".json"):
        stem = stem[:-5]
    if os.sep not in spec and (ALIASES.get(stem, stem) in bundled_names()):
        return loads(bundled(stem))
    raise MalformedPresentation("cannot read file: no such file or bundled presentation", spec)
