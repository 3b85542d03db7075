"""Relation catalogs, realizations, and the grading-pair rigidity test."""

import pytest

from nicholsalg.braided import build_diagonal
from nicholsalg.configs import load_shipped
from nicholsalg.cyclo import one, zeta, rational
from nicholsalg.relations import (
    canonical_realization,
    check_prop_gchi,
    g_chi,
    generate_relations,
    quotient_realization,
    rigidity_verdict,
)
from nicholsalg.tensoralg import is_in_nichols_ideal


def a2_cartan():
    return build_diagonal([[zeta(3), zeta(3, 2)], [one(), zeta(3)]])


def test_canonical_realization_reproduces_qmatrix():
    V = a2_cartan()
    real = canonical_realization(V)
    for i in range(2):
        for j in range(2):
            assert real.char_value(real.chi[j], real.g[i]) == V.q(i, j)


def test_quotient_realization_requires_divisibility():
    V = a2_cartan()
    real = quotient_realization(V, 3)
    assert real.invariant_factors == (3, 3)
    assert real.normalize((4, -1)) == (1, 2)
    with pytest.raises(ValueError):
        quotient_realization(V, 2)


def test_a2_relation_families():
    V = a2_cartan()
    rels = generate_relations(V)
    fams = {r.family for r in rels}
    assert "quantum_serre" in fams
    assert "cartan_root_power" in fams
    # every instance carrying an element lands in the defining ideal
    for r in rels:
        if r.element is not None and sum(r.degree) <= 6:
            assert is_in_nichols_ideal(V, r.element), (r.family, r.participants)


def test_relation_degrees_match_elements():
    cfg = load_shipped("a2_super")
    V = cfg.space()
    for r in generate_relations(V):
        if r.element is None:
            continue
        for word in r.element.support:
            deg = [0] * V.rank
            for letter in word:
                deg[letter] += 1
            assert tuple(deg) == r.degree


def test_gchi_witness_square_of_bracket():
    cfg = load_shipped("rank3_square")
    V = cfg.space()
    real = cfg.realization(V)
    rels = [r for r in generate_relations(V) if r.family == "square_of_bracket"]
    assert rels
    _, _, scalar = g_chi(real, rels[0])
    assert scalar == one()


def test_gchi_witness_mid_vertex_bracket():
    cfg = load_shipped("rank3_super_a3")
    V = cfg.space()
    real = cfg.realization(V)
    rels = [r for r in generate_relations(V) if r.family == "mid_vertex_bracket"]
    assert (0, 1, 2) in [r.participants for r in rels]
    for r in rels:
        _, _, scalar = g_chi(real, r)
        assert scalar == V.q(0, 0) * V.q(2, 2)
        assert scalar == -zeta(3)


def test_prop_gchi_reports_shape():
    V = a2_cartan()
    reports = check_prop_gchi(V, canonical_realization(V), generate_relations(V))
    assert reports and all(rep["ok"] for rep in reports)
    for rep in reports:
        assert "chi_R(g_R)" in rep["witnesses"]


def test_rigidity_verdicts():
    for name in ("rank1_zeta3", "a2_cartan_zeta3", "b2", "rank3_triangle"):
        cfg = load_shipped(name)
        V = cfg.space()
        verdict, _ = rigidity_verdict(V, cfg.realization(V))
        assert verdict == "Rigid", name


def test_pre_nichols_filter():
    V = a2_cartan()
    _, reports = rigidity_verdict(V, pre_nichols=True)
    assert all(r["instance"].family != "cartan_root_power" for r in reports)
    verdict, _ = rigidity_verdict(V, pre_nichols=True)
    assert verdict == "Rigid"


def test_rigidity_requires_finite_type():
    V = build_diagonal([[zeta(3), zeta(3)], [one(), zeta(3)]])
    with pytest.raises(ValueError):
        rigidity_verdict(V, cap=1)
