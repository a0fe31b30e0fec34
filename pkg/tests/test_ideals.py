import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import catalog_entries, graded_catalog, homogeneous_vectors, invertible_matrices, vectors
from trileibniz import catalog
from trileibniz.algebra import TriAlgebra, direct_sum, scaled, transport
from trileibniz.analysis import partition_support
from trileibniz.errors import PreconditionError
from trileibniz.grading import is_maximal_length
from trileibniz.ideals import (
    annihilator,
    check_t1_span,
    class_ideal,
    decompose,
    direct_sum_condition,
    graded_view,
    ideal_closure,
    insertion_images,
    is_ideal,
    j_literal,
    lambda_ideal,
    largest_ideal_in,
    lie_annihilator,
    mixed_products,
    polarized_generators,
    split_support,
    t1_sigma1_span,
    validate_j_candidate,
)
from trileibniz.linalg import Subspace, span, unit_vec

H, P, Q, E, F = (unit_vec(5, i) for i in range(5))


def test_closures_on_example():
    A = catalog.example_algebra()
    assert ideal_closure(A, [P]) == catalog.example_j()
    assert ideal_closure(A, [Q]) == catalog.example_j()
    for v in (H, E, F):
        assert ideal_closure(A, [v]).is_full()
    assert ideal_closure(A, []) == Subspace.zero(5)


def test_literal_j_of_example_is_everything():
    A = catalog.example_algebra()
    assert polarized_generators(A)
    assert j_literal(A).is_full()


def test_literal_j_vanishes_on_skew_3lie():
    assert j_literal(catalog.skew_3lie()).is_zero()


def test_candidate_j_validates():
    v = validate_j_candidate(catalog.example(), catalog.example_j())
    assert v.passed and v.witnesses == []


def test_literal_j_fails_right_annihilation_with_witness():
    A = catalog.example_algebra()
    v = validate_j_candidate(catalog.example(), j_literal(A))
    assert v.is_ideal and v.is_graded and not v.right_annihilated
    assert v.witnesses[0] == "[h, h, e] = 4e != 0"
    key, img = v.eq22_violations[0]
    assert key == (0, 0, 3) and img == (0, 0, 0, 4, 0)


def test_non_graded_candidate_is_reported():
    GA = catalog.example()
    S = span([tuple(a + b for a, b in zip(H, P))], 5)
    v = validate_j_candidate(GA, S)
    assert not v.is_graded and not v.is_ideal


def test_annihilators_on_example():
    GA = catalog.example()
    assert annihilator(GA.algebra).is_zero()
    assert lie_annihilator(GA, catalog.example_j()).is_zero()
    with pytest.raises(PreconditionError):
        lie_annihilator(GA, span([tuple(a + b for a, b in zip(H, P))], 5))


def test_split_support():
    GA = catalog.example()
    sj, sj0 = split_support(GA, catalog.example_j())
    assert sorted(g.flat()[0] for g in sj) == [-1, 1]
    assert sorted(g.flat()[0] for g in sj0) == [-2, 2]


def test_decomposition_of_example():
    GA = catalog.example()
    dec = decompose(GA)
    assert dec.t1_sigma1 == GA.t1 == span([H], 5)
    assert dec.complement.is_zero()
    assert len(dec.class_ideals) == 1 and dec.class_ideals[0].total.is_full()
    assert dec.ideals_ok == [True] and dec.recovers_t and dec.overlap == 0
    assert check_t1_span(GA) and direct_sum_condition(GA)


def test_decomposition_of_two_axis_sum():
    GA = catalog.two_axis_sum()
    dec = decompose(GA)
    assert len(dec.class_ideals) == 2 and dec.ideals_ok == [True, True]
    I1, I2 = (ci.total for ci in dec.class_ideals)
    assert I1 == span([unit_vec(10, i) for i in range(5)], 10)
    assert I2 == span([unit_vec(10, i) for i in range(5, 10)], 10)
    for s in mixed_products(GA.algebra, I1, I2).values():
        assert s.is_zero()
    assert dec.orthogonality_verified and dec.recovers_t and dec.overlap == 0


def test_decomposition_of_abelian_algebra():
    GA = catalog.abelian()
    dec = decompose(GA)
    assert t1_sigma1_span(GA).is_zero()
    assert dec.complement == GA.t1
    ci = dec.class_ideals[0]
    assert ci.i1.is_zero() and ci.v.dim == 2
    assert dec.recovers_t and not check_t1_span(GA)


def test_class_ideal_of_example_degree_one():
    GA = catalog.example()
    ci = class_ideal(GA, sorted(GA.sigma1))
    assert ci.i1 == span([H], 5) and ci.total.is_full()


def test_lambda_ideals_on_example():
    GA = catalog.example()
    one = next(g for g in GA.sigma1 if g.flat() == [1])
    two = next(g for g in GA.sigma1 if g.flat() == [2])
    lam = lambda_ideal(GA, one, "J", catalog.example_j())
    assert lam.status in ("verified", "failed")
    assert sorted(g.flat()[0] for g in lam.members) == [-1, 1]
    lam0 = lambda_ideal(GA, two, "J0", catalog.example_j())
    assert lam0.status == "unverified"
    with pytest.raises(PreconditionError):
        lambda_ideal(GA, two, "J", catalog.example_j())


def test_largest_ideal_inside():
    A = catalog.example_algebra()
    assert largest_ideal_in(A, span([H, P, Q], 5)) == catalog.example_j()
    assert largest_ideal_in(A, span([H], 5)).is_zero()
    assert largest_ideal_in(A, Subspace.full(5)).is_full()


@given(catalog_entries(), st.data())
def test_closure_is_extensive_idempotent_monotone(entry, data):
    name, GA = entry
    A = GA.algebra
    n = GA.dim
    gens = data.draw(st.lists(vectors(n), max_size=2))
    more = gens + data.draw(st.lists(vectors(n), max_size=1))
    c = ideal_closure(A, gens)
    assert span(gens, n) <= c
    assert is_ideal(A, c)
    assert ideal_closure(A, c.rows) == c
    assert c <= ideal_closure(A, more)


@given(catalog_entries(), st.data())
def test_largest_ideal_is_an_ideal_containing_smaller_ideals(entry, data):
    name, GA = entry
    A = GA.algebra
    n = GA.dim
    V = span(data.draw(st.lists(vectors(n), max_size=n)), n)
    M = largest_ideal_in(A, V)
    assert M <= V and is_ideal(A, M)
    for i in range(n):
        c = ideal_closure(A, [unit_vec(n, i)])
        if c <= V:
            assert c <= M


def _graded_ideal(GA, data):
    gens = data.draw(st.lists(homogeneous_vectors(GA), max_size=2))
    return ideal_closure(GA.algebra, gens)


@given(catalog_entries(), st.data())
def test_ann_inside_ann_lie(entry, data):
    name, GA = entry
    J = _graded_ideal(GA, data)
    assert graded_view(GA, J).graded
    assert annihilator(GA.algebra) <= lie_annihilator(GA, J)


MAXIMAL = [k for k, GA in graded_catalog().items() if is_maximal_length(GA)]


@given(catalog_entries(MAXIMAL), st.data())
def test_graded_ideals_split_along_the_partition(entry, data):
    name, GA = entry
    J = _graded_ideal(GA, data)
    I = _graded_ideal(GA, data)
    part = partition_support(GA, J)
    view = graded_view(GA, I)
    assert view.graded
    support = {g for g in view.support() if not g.is_identity}
    pieces = [I.intersect(GA.t1)]
    for g in sorted(support):
        # maximal length: meeting a component means containing it
        assert GA.component(g) <= I
        assert g in part.sigma1_J or g in part.sigma1_J0
        assert (g in part.sigma1_J) == (GA.component(g) <= J)
        pieces.append(GA.component(g))
    total = span([r for p in pieces for r in p.rows], GA.dim)
    assert total == I
    assert sum(p.dim for p in pieces) == I.dim


@given(catalog_entries(), st.data())
def test_insertion_images_stay_in_ideals(entry, data):
    name, GA = entry
    I = _graded_ideal(GA, data)
    for r in I.rows:
        for w in insertion_images(GA.algebra, r):
            assert I.contains(w)


@given(st.data())
def test_literal_j_vanishes_on_skew_3lie_in_any_basis(data):
    A = catalog.skew_3lie()
    if data.draw(st.booleans()):
        A = direct_sum(A, TriAlgebra(data.draw(st.integers(1, 2)), {}))
    c = data.draw(st.fractions(min_value=-3, max_value=3, max_denominator=3).filter(bool))
    B = transport(scaled(A, c), data.draw(invertible_matrices(A.dim)))
    assert polarized_generators(B) == []
    assert j_literal(B).is_zero()
