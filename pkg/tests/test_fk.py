"""Quadratic algebras on transpositions with sign-twisted conjugation."""

from nicholsalg.braided import check_braid_equation
from nicholsalg.cyclo import one
from nicholsalg.tensoralg import TensorElement, braiding_operator, ideal_component
from nicholsalg.fk import (
    build_fk_space,
    fk_bialgebra,
    fk_chi,
    fk_dims_rewriting,
    fk_dims_symmetrizer,
    fk_relations,
    fk_rigidity,
    group_degree_of,
    transpositions,
)


def test_chi_rule():
    swap12 = (1, 0, 2, 3)
    assert fk_chi(swap12, (1, 2)) == -1  # sigma reverses its own pair
    assert fk_chi(swap12, (3, 4)) == 1  # disjoint pair untouched
    assert fk_chi(swap12, (1, 3)) == 1  # 1 -> 2 < 3
    swap13 = (2, 1, 0)
    assert fk_chi(swap13, (1, 2)) == -1  # 1 -> 3 > 2


def test_braiding_is_twisted_conjugation():
    V = build_fk_space(3)
    pairs = transpositions(3)
    i12, i13, i23 = (pairs.index(p) for p in ((1, 2), (1, 3), (2, 3)))
    out = braiding_operator(V, TensorElement.monomial((i12, i13)), 0)
    assert out.support == {(i23, i12): one()}
    out = braiding_operator(V, TensorElement.monomial((i13, i12)), 0)
    assert out.support == {(i23, i13): -one()}


def test_relation_counts():
    assert len(fk_relations(3)) == 5
    assert len(fk_relations(4)) == 17
    assert len(fk_relations(5)) == 45


def test_braid_equation_through_n6():
    for n in (3, 4, 5, 6):
        ok, bad = check_braid_equation(build_fk_space(n))
        assert ok, (n, bad)


def test_n3_dims_both_routes():
    assert fk_dims_rewriting(3, 4) == [1, 3, 4, 3, 1]
    assert fk_dims_symmetrizer(3, 4) == [1, 3, 4, 3, 1]


def test_degree2_kernel_is_relation_span():
    for n in (3, 4):
        V = build_fk_space(n)
        assert len(ideal_component(V, 2)) == len(fk_relations(n))


def test_hilbert_series_palindromic():
    dims = fk_dims_rewriting(3, 4)
    assert dims == dims[::-1]
    assert sum(dims) == 12


def test_relations_group_homogeneous():
    V = build_fk_space(4)
    for rel in fk_relations(4):
        assert group_degree_of(V, rel) is not None


def test_rigidity_bookkeeping():
    for n in (3, 4, 10):
        verdict, details = fk_rigidity(n)
        assert verdict == "Rigid" and not details, n


def test_bialgebra_category_action():
    B, _ = fk_bialgebra(3)
    cat = B.category
    # labels multiply like Sym(3); the unit label is the identity permutation
    assert cat.tuple_label(()) == cat.label_unit
    for i in range(B.dim):
        for j in range(B.dim):
            lij = cat.label_mul(cat.labels[i], cat.labels[j])
            for k in B.mult(i, j):
                assert cat.labels[k] == lij
