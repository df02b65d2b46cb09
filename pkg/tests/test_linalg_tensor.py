import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from monodromy import LinearMap, Tensor, sweedler_h4
from monodromy.errors import NotInvertible, SignatureMismatch
from monodromy.linalg import inverse, kernel_dim, rank, same_row_space, solve
from monodromy.tensor import tensor_invert

small = st.integers(-3, 3).map(mpq)
H4 = sweedler_h4()


def elements(H):
    return st.lists(small, min_size=H.dim, max_size=H.dim).map(
        lambda cs: Tensor((H,), {(i,): c for i, c in enumerate(cs)}))


def test_rank_and_kernel():
    m = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    m = [[mpq(v) for v in row] for row in m]
    assert rank(m) == 2
    assert kernel_dim(m) == 1


def test_inverse_exact():
    m = [[mpq(2), mpq(1)], [mpq(1), mpq(1)]]
    assert inverse(m) == [[1, -1], [-1, 2]]
    with pytest.raises(NotInvertible):
        inverse([[mpq(1), mpq(2)], [mpq(2), mpq(4)]])


def test_solve_inconsistent():
    with pytest.raises(NotInvertible):
        solve([{0: mpq(1)}, {0: mpq(1)}], {1: mpq(1)}, 2)


def test_row_space():
    a = [{0: mpq(1)}, {1: mpq(1)}]
    b = [{0: mpq(1), 1: mpq(1)}, {0: mpq(1), 1: mpq(-1)}]
    assert same_row_space(a, b)
    assert not same_row_space(a, [{0: mpq(1)}])


@settings(max_examples=40, deadline=None)
@given(elements(H4), elements(H4), elements(H4))
def test_h4_associative_random(a, b, c):
    assert (a * b) * c == a * (b * c)


def test_embed_and_flip():
    g = Tensor.basis((H4,), (1,))
    x = Tensor.basis((H4,), (2,))
    gx = g.outer(x)
    assert gx.flip() == x.outer(g)
    e = gx.embed((0, 2), (H4, H4, H4))
    assert e == g.outer(Tensor.unit((H4,))).outer(x)


def test_tensor_invert_and_failure():
    g = Tensor.basis((H4,), (1,))
    assert tensor_invert(g) == g
    x = Tensor.basis((H4,), (2,))
    with pytest.raises(NotInvertible):
        tensor_invert(x)
    # a wrong candidate is ignored, the solve still finds the inverse
    assert tensor_invert(g, candidate=x) == g


def test_linear_map_basics():
    ident = LinearMap.identity((H4,))
    assert ident.rank() == 4
    assert ident @ ident == ident
    assert ident.inverse() == ident
    assert ident.is_multiplicative() is None
    assert ident.is_unital()
    zero = LinearMap((H4,), (H4,), [{}] * 4)
    with pytest.raises(NotInvertible):
        zero.inverse()
    with pytest.raises(SignatureMismatch):
        LinearMap((H4,), (H4,), [{}] * 3)


def test_distinct_spaces_do_not_mix():
    other = sweedler_h4()
    with pytest.raises(SignatureMismatch):
        Tensor.unit((H4,)) + Tensor.unit((other,))
