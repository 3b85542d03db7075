"""Degree-truncated rewriting and normal-word counting."""

from hypothesis import given, settings
from hypothesis import strategies as st

from nicholsalg.braided import build_diagonal
from nicholsalg.cyclo import one, rational, zeta
from nicholsalg.tensoralg import TensorElement, nichols_dims
from nicholsalg.rewriting import RewriteSystem, rewrite_dims


def test_power_relation_truncates():
    dims, _ = rewrite_dims(1, [TensorElement.monomial((0, 0, 0))], 6)
    assert dims == [1, 1, 1, 0, 0, 0, 0]


def test_commutative_pair():
    # yx = xy: dims of the polynomial ring in 2 variables
    rel = TensorElement.monomial((1, 0)) - TensorElement.monomial((0, 1))
    dims, _ = rewrite_dims(2, [rel], 5)
    assert dims == [1, 2, 3, 4, 5, 6]


def test_overlap_completion_needed():
    # quantum plane with both square relations: overlaps produce new rules
    q = zeta(3)
    rels = [
        TensorElement.monomial((0, 0)),
        TensorElement.monomial((1, 1)),
        TensorElement.monomial((1, 0)) - TensorElement.monomial((0, 1)).scale(q),
    ]
    dims, rs = rewrite_dims(2, rels, 8)
    assert dims[:5] == [1, 2, 1, 0, 0]


def test_normal_form_idempotent():
    rel = TensorElement.monomial((1, 0)) - TensorElement.monomial((0, 1))
    _, rs = rewrite_dims(2, [rel], 6)
    nf = rs.normal_form_word((1, 0, 1, 0))
    again = {}
    for w, c in nf.items():
        for w2, c2 in rs.normal_form_word(w).items():
            again[w2] = again.get(w2, rational(0)) + c * c2
    assert nf == again


small_roots = st.sampled_from([rational(-1), zeta(3), zeta(4)])


@given(small_roots, small_roots, small_roots)
@settings(max_examples=15, deadline=None)
def test_serre_presentation_matches_symmetrizer(q11, q12, q22):
    """Kernel-of-symmetrizer generators in degree <= 3 bound the dims above.

    Rewriting by low-degree ideal generators can only overshoot the
    symmetrizer dims, never undershoot.
    """
    from nicholsalg.tensoralg import ideal_component

    V = build_diagonal([[q11, q12], [one(), q22]])
    rels = ideal_component(V, 2) + ideal_component(V, 3)
    cap = 5
    dims, _ = rewrite_dims(2, rels, cap)
    nd = nichols_dims(V, cap)
    assert all(a >= b for a, b in zip(dims, nd))


def test_rule_interreduction():
    rs = RewriteSystem(1, 8)
    rs.add_relation({(0, 0, 0, 0): one()})
    # a shorter lead subsumes the longer rule
    rs.add_relation({(0, 0): one()})
    assert set(rs.rules) == {(0, 0)}
