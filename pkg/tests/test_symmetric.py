"""Sign twists of symmetric braidings and braided Lie data."""

import pytest

from nicholsalg.cyclo import one, rational, zeta
from nicholsalg.liealg import (
    AbelianBicharacter,
    GradedAlgebraData,
    braided_commutator,
    check_braided_lie,
    check_cocycle_random,
    color_pair,
    color_triple,
    enveloping_dims,
    heisenberg_flip,
    scheunert_cocycle,
    sign_twist_report,
    sl2_flip,
    superline,
    twist_algebra,
)


def test_trivially_signed_needs_no_twist():
    beta = AbelianBicharacter([[-one()]])
    sigma, bs = scheunert_cocycle(beta)
    assert sigma.values == [[one()]]
    assert bs.values == [[-one()]]


def test_two_generator_twist():
    q = zeta(5)
    beta = AbelianBicharacter([[-one(), q], [q.inverse(), -one()]], skew=True)
    sigma, bs = scheunert_cocycle(beta)
    # both generators odd: sigma(e2, e1) = beta(e1, e2) / (-1) = -q
    assert sigma.values[1][0] == -q
    assert bs.values[0][1] == -one() and bs.values[1][0] == -one()
    assert bs.is_sign()


def test_nonsign_diagonal_rejected():
    beta = AbelianBicharacter([[zeta(3)]])
    with pytest.raises(ValueError):
        scheunert_cocycle(beta)


def test_cocycle_identity_random():
    q = zeta(7, 3)
    beta = AbelianBicharacter([[-one(), q], [q.inverse(), one()]], skew=True)
    sigma, _ = scheunert_cocycle(beta)
    ok, bad = check_cocycle_random(sigma, trials=300, seed=3)
    assert ok, bad


def test_axioms_on_examples():
    for L in (heisenberg_flip(), superline(), color_pair(), sl2_flip(),
              color_triple(zeta(5))):
        rep = check_braided_lie(L)
        assert all(ok for ok, _ in rep.values()), (L.names, rep)


def test_scaled_sl2_fails_with_witness():
    rep = check_braided_lie(sl2_flip(scale=rational(3)))
    ok_anti, wit = rep["anticomm"]
    assert not ok_anti and wit is not None
    assert not rep["jacobi"][0]


def test_commutator_of_matrix_algebra():
    # 2x2 matrix units with trivial grading and flip braiding give gl2
    beta = AbelianBicharacter([[one()]])
    units = [(0, 0), (0, 1), (1, 0), (1, 1)]
    mult = {}
    for i, (a, b) in enumerate(units):
        for j, (c, d) in enumerate(units):
            if b == c:
                mult[(i, j)] = {units.index((a, d)): one()}
    A = GradedAlgebraData(((0,),) * 4, mult)
    L = braided_commutator(A, beta)
    rep = check_braided_lie(L)
    assert all(ok for ok, _ in rep.values()), rep
    e, f = units.index((0, 1)), units.index((1, 0))
    assert L.bra(e, f) == {0: one(), 3: -one()}


def test_commutator_rejects_bad_braiding():
    beta = AbelianBicharacter([[zeta(3)]])
    mult = {(0, 0): {0: one()}}
    A = GradedAlgebraData(((1,),), mult)
    with pytest.raises(ValueError):
        braided_commutator(A, beta)


def test_twist_round_trip():
    L = color_triple(zeta(5))
    out = sign_twist_report(L)
    sigma = out["sigma"]
    inv = AbelianBicharacter(
        [[v.inverse() for v in row] for row in sigma.values], sigma.orders
    )
    mult = {k: dict(v) for k, v in out["twisted"].bracket.items()}
    A = GradedAlgebraData(L.degrees, mult, L.names)
    back = twist_algebra(A, inv)
    assert back.mult == {k: dict(v) for k, v in L.bracket.items()}


def test_sign_twist_reports():
    out = sign_twist_report(color_triple(zeta(5)))
    assert out["beta_sigma"].is_sign()
    assert all(ok for ok, _ in out["report"].values())
    assert out["even_dim"] == 1 and not out["purely_odd"]
    assert sign_twist_report(superline())["purely_odd"]


def test_enveloping_dims_match():
    cases = {
        "heisenberg": (heisenberg_flip(), [1, 3, 6, 10, 15]),
        "superline": (superline(), [1, 1, 0, 0, 0]),
        "color_pair": (color_pair(), [1, 2, 2, 2, 2]),
        "color_triple": (color_triple(zeta(3)), [1, 3, 4, 4, 4]),
    }
    for name, (L, want) in cases.items():
        out = enveloping_dims(L, 4)
        assert out["gr"] == out["nichols"] == want, (name, out)
