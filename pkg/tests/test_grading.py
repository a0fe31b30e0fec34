import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import catalog_entries, sigma0_oracle
from trileibniz import catalog
from trileibniz.algebra import TriAlgebra, is_3leibniz
from trileibniz.errors import GroupMismatch, InvalidGroupElement, MalformedInput
from trileibniz.grading import (
    GradedAlgebra,
    GroupHom,
    check_grading_compat,
    component_dimensions,
    is_maximal_length,
    lie_bracket_grading_defects,
    regrade,
    support_data,
)
from trileibniz.groups import GroupSpec

Z = GroupSpec(1)


def ints(gs):
    return sorted(g.flat()[0] for g in gs)


def test_example_supports():
    GA = catalog.example()
    assert check_grading_compat(GA) == []
    assert ints(GA.sigma1) == [-2, -1, 1, 2]
    assert ints(GA.sigma0) == [-4, -3, -2, -1, 1, 2, 3, 4]
    assert GA.sigma0 == sigma0_oracle(GA)
    data = support_data(GA)
    assert data.sigma1_symmetric and data.sigma0_symmetric


def test_identity_component_is_not_in_the_supports():
    GA = catalog.example()
    assert GA.t1.dim == 1
    assert all(not g.is_identity for g in GA.sigma1 | GA.sigma0)


def test_nilpotent_sigma0():
    GA = catalog.nilpotent2()
    assert ints(GA.sigma0) == [2]
    # degree 2 for e2 is not compatible with [e1, e1, e1] = e2
    bad = check_grading_compat(catalog.nilpotent2((1, 2)))
    assert [v.indices for v in bad] == [(0, 0, 0)]


def test_abelian_has_empty_sigma0():
    assert catalog.abelian().sigma0 == frozenset()


def test_trivial_grading():
    A = catalog.example_algebra()
    GA = GradedAlgebra.build(A, GroupSpec(), [[]] * 5)
    assert check_grading_compat(GA) == []
    assert GA.sigma1 == frozenset() and GA.sigma0 == frozenset()
    assert GA.t1.is_full()


def test_two_axis_support():
    GA = catalog.two_axis_sum()
    expected = sorted([[a, 0] for a in (-2, -1, 1, 2)] + [[0, a] for a in (-2, -1, 1, 2)])
    assert sorted(g.flat() for g in GA.sigma1) == expected
    assert is_maximal_length(GA)


def test_maximal_length():
    assert is_maximal_length(catalog.example())
    assert not is_maximal_length(catalog.same_degree_sum())
    dims = component_dimensions(catalog.same_degree_sum())
    assert all(d == 2 for d in dims.values())


def test_mod4_coarsening():
    GA = catalog.example_mod4()
    assert check_grading_compat(GA) == []
    dims = {g.flat()[0]: d for g, d in component_dimensions(GA).items()}
    assert dims == {0: 1, 1: 1, 2: 2, 3: 1}
    assert not is_maximal_length(GA)


def test_regrade_along_injective_hom_keeps_maximal_length():
    GA = catalog.example()
    twice = GroupHom(Z, Z, ((2,),))
    out = regrade(GA, twice)
    assert is_maximal_length(out)
    assert ints(out.sigma1) == [-4, -2, 2, 4]


def test_hom_to_torsion_and_bad_torsion_images():
    GA = catalog.example()
    out = regrade(GA, GroupHom(Z, GroupSpec(0, (4,)), ((1,),)))
    assert component_dimensions(out) == component_dimensions(catalog.example_mod4())
    with pytest.raises(InvalidGroupElement, match="ill-defined torsion image"):
        GroupHom(GroupSpec(0, (4,)), GroupSpec(0, (6,)), ((1,),))
    GroupHom(GroupSpec(0, (4,)), GroupSpec(0, (8,)), ((2,),))


def test_degree_checks():
    A = TriAlgebra(2, {})
    with pytest.raises(MalformedInput):
        GradedAlgebra.build(A, Z, [0])
    with pytest.raises(GroupMismatch):
        GradedAlgebra(A, Z, (GroupSpec(2).from_flat([0, 0]),) * 2)
    with pytest.raises(GroupMismatch):
        regrade(catalog.example(), GroupHom.identity(GroupSpec(2)))


@given(catalog_entries())
def test_components_sum_to_dimension_and_sigma0_matches_oracle(entry):
    name, GA = entry
    assert sum(component_dimensions(GA).values()) == GA.dim
    assert GA.sigma0 == sigma0_oracle(GA)


@given(catalog_entries(), st.integers(-3, 3).filter(bool), st.integers(0, 5))
def test_regrade_to_cyclic_groups_keeps_compatibility(entry, k, m):
    name, GA = entry
    if GA.group != Z:
        return
    target = GroupSpec(0, (m,)) if m > 1 else Z
    out = regrade(GA, GroupHom(Z, target, ((k,),)))
    assert check_grading_compat(out) == []
    # the operator supports only shrink or move along the hom
    hom = GroupHom(Z, target, ((k,),))
    assert out.sigma0 <= {hom(g) for g in GA.sigma0}


def test_operator_components_bracket_correctly_on_3leibniz_fixtures():
    for name, GA in catalog.graded_catalog().items():
        if is_3leibniz(GA.algebra):
            assert lie_bracket_grading_defects(GA) == [], name
