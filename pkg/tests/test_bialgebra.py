"""Finite graded bialgebras presented by rewriting."""

import pytest

from nicholsalg.braided import build_diagonal
from nicholsalg.configs import load_shipped
from nicholsalg.cyclo import one, rational, zeta
from nicholsalg.fk import fk_bialgebra
from nicholsalg.tensoralg import TensorElement, ideal_component
from nicholsalg.bialgebra import (
    attach_diagonal_category,
    biideal_witness,
    from_nichols,
    nichols_ideal_biideal_check,
)
from nicholsalg.relations import canonical_realization
from nicholsalg.rewriting import rewrite_dims


def rank1_algebra(N):
    V = build_diagonal([[zeta(N)]])
    rels = [TensorElement.monomial((0,) * N)]
    return V, from_nichols(V, rels, N + 1)


def test_truncated_line_structure():
    V, B = rank1_algebra(3)
    assert B.dims() == [1, 1, 1]
    assert B.top_degree == 2
    x = B.index[(0,)]
    x2 = B.index[(0, 0)]
    assert B.mult(x, x) == {x2: one()}
    assert B.mult(x2, x) == {}
    cop = B.coprod(x2)
    assert cop[(x, x)] == one() + zeta(3)
    assert cop[(0, x2)] == one() and cop[(x2, 0)] == one()


def test_axioms_hold():
    for N in (2, 3, 4):
        _, B = rank1_algebra(N)
        report = B.check_all()
        assert all(ok for ok, _ in report.values()), (N, report)


def test_primitive_dims_rank1():
    _, B = rank1_algebra(3)
    assert B.primitive_dims() == [0, 1, 0]


def test_fk3_primitives_and_dims():
    B, _ = fk_bialgebra(3)
    assert B.dims() == [1, 3, 4, 3, 1]
    assert B.primitive_dims() == [0, 3, 0, 0, 0]
    report = B.check_all()
    assert all(ok for ok, _ in report.values()), report


def test_category_labels_multiplicative():
    cfg = load_shipped("a2_super")
    V = cfg.space()
    rels = ideal_component(V, 2) + ideal_component(V, 3) + ideal_component(V, 4)
    B = from_nichols(V, rels, cfg.budgets["max_degree"])
    attach_diagonal_category(B, cfg.realization(V))
    cat = B.category
    for i in range(B.dim):
        for j in range(B.dim):
            lij = cat.label_mul(cat.labels[i], cat.labels[j])
            for k in B.mult(i, j):
                assert cat.labels[k] == lij


def test_non_coideal_rejected():
    # x^2 - x is not homogeneous-compatible with the coproduct
    V = build_diagonal([[rational(2)]])
    rel = TensorElement.monomial((0, 0)) - TensorElement.monomial((0,))
    with pytest.raises(ValueError):
        from_nichols(V, [rel], 4)


def test_biideal_witness_reports_leftover():
    V = build_diagonal([[rational(2)]])
    rels = [TensorElement.monomial((0, 0))]
    _, rs = rewrite_dims(1, rels, 4)
    bad = biideal_witness(V, rs, rels)
    # x^2 with q generic: Delta(x^2) has (1+q) x (x) x, not in the ideal
    assert bad is not None


def test_nichols_ideal_is_biideal():
    for name in ("rank1_zeta4", "a2_cartan_zeta3", "rank3_square"):
        V = load_shipped(name).space()
        ok, witness = nichols_ideal_biideal_check(V, max_degree=4)
        assert ok, (name, witness)


def test_braid_tensor_matches_category():
    V, B = rank1_algebra(3)
    attach_diagonal_category(B, canonical_realization(V))
    x = B.index[(0,)]
    out = B.braid(x, x)
    assert out == {(x, x): zeta(3)}
