import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import (
    dense_product,
    dense_table,
    identity_violation_count,
    invertible_matrices,
    left_leibniz_tables,
    opposite_binary,
    vectors,
)
from trileibniz import catalog
from trileibniz.algebra import (
    TriAlgebra,
    ad_operator,
    check_binary_leibniz,
    check_fundamental_identity,
    direct_sum,
    from_binary_leibniz,
    is_3leibniz,
    lie_span,
    opposite,
    scaled,
    standard_embedding_check,
    ternary_derivation_defect,
    transport,
)
from trileibniz.errors import DimensionMismatch, LeibnizIdentityError, MalformedInput, PreconditionError
from trileibniz.linalg import unit_vec


def test_example_table_has_twenty_products():
    A = catalog.example_algebra()
    assert A.nonzero_products == 20
    h, p, q, e, f = A.basis()
    assert A.triple_product(h, h, e) == (0, 0, 0, 4, 0)
    assert A.triple_product(q, h, e) == (0, 2, 0, 0, 0)
    assert A.triple_product(h, p, q) == (0,) * 5


def test_right_lift_of_binary_table_reproduces_ternary_table():
    # the printed ternary table is [x, [y, z]] of the printed binary table
    A = from_binary_leibniz(5, catalog.example_binary_table(), catalog.EXAMPLE_LABELS, side="right")
    assert A == catalog.example_algebra()


def test_binary_table_is_right_not_left_leibniz():
    table = catalog.example_binary_table()
    assert check_binary_leibniz(5, table, "right") == []
    assert check_binary_leibniz(5, table, "left")
    with pytest.raises(LeibnizIdentityError) as info:
        from_binary_leibniz(5, table, side="left")
    assert info.value.witness in check_binary_leibniz(5, table, "left")


def test_example_identity_violations_match_dense_oracle():
    A = catalog.example_algebra()
    found = check_fundamental_identity(A)
    assert len(found) == identity_violation_count(A) == 152
    v = found[0]
    t = dense_table(A)
    e = A.basis()
    x, y, a, b, c = v.indices
    assert list(v.lhs) == dense_product(t, e[x], e[y], t[a][b][c])


def test_example_satisfies_mirrored_identity():
    A = catalog.example_algebra()
    assert check_fundamental_identity(A, "right") == []
    assert is_3leibniz(opposite(A))
    assert identity_violation_count(opposite(A)) == 0


def test_skew_3lie_and_abelian():
    assert is_3leibniz(catalog.skew_3lie())
    assert is_3leibniz(TriAlgebra(3, {}))
    A = catalog.skew_3lie()
    assert A.triple_product(unit_vec(4, 1), unit_vec(4, 0), unit_vec(4, 2)) == (0, 0, 0, -1)


def test_ad_operators_of_3lie_are_derivations():
    A = catalog.skew_3lie()
    basis = A.basis()
    for x, y in itertools.product(basis, repeat=2):
        D = ad_operator(A, x, y)
        for a, b, c in itertools.product(basis, repeat=3):
            assert not any(ternary_derivation_defect(A, D, a, b, c))


def test_standard_embedding_on_opposite_example():
    rep = standard_embedding_check(opposite(catalog.example_algebra()))
    assert rep.passed, rep.witnesses
    assert rep.lie_dim == lie_span(opposite(catalog.example_algebra())).dim


def test_standard_embedding_refuses_non_leibniz_input():
    with pytest.raises(PreconditionError) as info:
        standard_embedding_check(catalog.example_algebra())
    assert info.value.stage == "identity"


def test_zero_products_are_dropped_and_bad_shapes_rejected():
    A = TriAlgebra(2, {(0, 0, 0): (0, 0), (0, 1, 1): (1, 0)})
    assert A.nonzero_products == 1
    with pytest.raises(DimensionMismatch):
        TriAlgebra(2, {(0, 0, 0): (1, 0, 0)})
    with pytest.raises(MalformedInput):
        TriAlgebra(2, {(0, 0, 5): (1, 0)})
    with pytest.raises(DimensionMismatch):
        A.triple_product((1, 0), (1, 0), (1, 0, 0))


def test_opposite_is_an_involution():
    A = catalog.example_algebra()
    assert opposite(opposite(A)) == A


@settings(max_examples=200)
@given(left_leibniz_tables())
def test_left_lift_always_satisfies_identity(data):
    n, table = data
    A = from_binary_leibniz(n, table, side="left")
    assert check_fundamental_identity(A) == []


@settings(max_examples=50)
@given(left_leibniz_tables())
def test_right_lift_satisfies_mirrored_identity(data):
    n, table = data
    A = from_binary_leibniz(n, opposite_binary(table), side="right")
    assert check_fundamental_identity(A, "right") == []


@settings(max_examples=100)
@given(st.sampled_from(["sl2_lift", "example_opposite", "skew_3lie", "filiform_lift"]), st.data())
def test_identity_is_invariant_under_transport(name, data):
    A = catalog.graded_catalog()[name].algebra
    P = data.draw(invertible_matrices(A.dim))
    B = transport(A, P)
    assert check_fundamental_identity(B) == []


def test_transport_round_trip():
    A = catalog.example_algebra()
    P = [[1, 2, 0, 0, 0], [0, 1, 0, 0, -1], [0, 0, 1, 3, 0], [0, 0, 0, 1, 0], [1, 0, 0, 0, 1]]
    assert transport(transport(A, P), _inverse(P)) == A


@settings(max_examples=200)
@given(st.sampled_from(["example", "sl2_lift", "skew_3lie"]), st.data())
def test_trilinearity(name, data):
    A = catalog.graded_catalog()[name].algebra
    n = A.dim
    x, y, z, w = (data.draw(vectors(n)) for _ in range(4))
    c = data.draw(st.fractions(-3, 3, max_denominator=4))
    xw = tuple(a + c * b for a, b in zip(x, w))
    lhs = A.triple_product(xw, y, z)
    rhs = tuple(a + c * b for a, b in zip(A.triple_product(x, y, z), A.triple_product(w, y, z)))
    assert lhs == rhs
    assert list(A.triple_product(x, y, z)) == dense_product(dense_table(A), x, y, z)


def test_direct_sum_and_scaling_preserve_identity():
    B = opposite(catalog.example_algebra())
    assert is_3leibniz(direct_sum(B, catalog.skew_3lie()))
    assert is_3leibniz(scaled(B, Fraction(-2, 3)))


def _inverse(P):
    from trileibniz.algebra import invert_matrix

    return invert_matrix(P)


# the sparse route is slow on dense tables, so fewer and smaller cases here
@settings(max_examples=40)
@given(st.sampled_from(["sl2_lift", "skew_3lie", "example", "two_axis_sum"]), st.data())
def test_dense_and_sparse_identity_checks_agree(name, data):
    A = catalog.graded_catalog()[name].algebra
    if A.dim <= 4:
        A = transport(A, data.draw(invertible_matrices(A.dim)))
    B = scaled(A, data.draw(st.sampled_from([1, Fraction(1, 3), -2])))
    assert check_fundamental_identity(B, method="dense") == check_fundamental_identity(B, method="sparse")
