import json

import pytest

from monodromy import presentation
from monodromy.errors import MalformedPresentation
from monodromy.hopf import check_hopf_axioms

NAMES = presentation.bundled_names()


def test_bundled_names():
    assert {"z2_group", "sweedler_h4", "double_z2", "s3_group", "z3_cyclotomic"} <= set(NAMES)


@pytest.mark.parametrize("name", NAMES)
def test_round_trip_byte_exact(name):
    text = presentation.bundled(name)
    p = presentation.loads(text)
    assert presentation.dumps(p.algebra, p.r_matrices) == text


def test_alias_and_default_r():
    p = presentation.resolve("h4")
    assert p.algebra.name == "H4"
    name, _ = p.r_matrix()
    assert name == "R0"
    with pytest.raises(MalformedPresentation):
        p.r_matrix("nope")


def test_trivial_r_when_none_listed():
    p = presentation.resolve("z2_group")
    name, R = p.r_matrix()
    assert name == "trivial"
    assert R.nnz == 1


@pytest.mark.parametrize("mutate,locus", [
    (lambda d: d.pop("basis"), "basis"),
    (lambda d: d.__setitem__("format", "other/1"), "format"),
    (lambda d: d["mult"]["e"].__setitem__("q", {"e": "1"}), "mult.e.q"),
    (lambda d: d["counit"].__setitem__("g", "1/0"), "counit.g"),
    (lambda d: d["counit"].__setitem__("g", "one"), "counit.g"),
    (lambda d: d.__setitem__("field", {"cyclotomic": 0}), "field"),
])
def test_malformed_located(mutate, locus):
    d = json.loads(presentation.bundled("z2_group"))
    mutate(d)
    with pytest.raises(MalformedPresentation) as exc:
        presentation.parse(d)
    assert exc.value.locus == locus


def test_invalid_json_reports_position():
    with pytest.raises(MalformedPresentation) as exc:
        presentation.loads('{"format": ')
    assert exc.value.locus.startswith("line 1 column")


def test_cyclotomic_field_survives(tmp_path):
    p = presentation.resolve("z3_cyclotomic")
    assert not p.algebra.field.is_rational
    out = tmp_path / "z3.json"
    presentation.dump(p.algebra, out, p.r_matrices)
    q = presentation.load(out)
    assert check_hopf_axioms(q.algebra).ok
    assert set(q.r_matrices) == {"k1", "k2"}
