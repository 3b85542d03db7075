"""Braided Lie algebras over symmetric diagonal braidings.

Bicharacters on finitely generated abelian groups, the basis-ordered
bilinear cocycle that twists a skew-symmetric bicharacter with +-1 diagonal
into a sign bicharacter, cocycle twists of graded algebras, the three
braided Lie axioms, braided commutators, and filtered dimensions of the
universal envelope U_c(L) compared against the Nichols dimensions of the
underlying braided space.
"""

import random
from dataclasses import dataclass, field

from .braided import build_diagonal, check_braid_equation
from .cyclo import CycNumber, one, rational
from .linalg import Echelon, row_axpy
from .tensoralg import nichols_dims


def _cyc_pow(c, n):
    if n == 0:
        return one()
    base = c if n > 0 else c.inverse()
    out = one()
    for _ in range(abs(n)):
        out = out * base
    return out


class AbelianBicharacter:
    """Bimultiplicative form on Z^r x prod Z/N_i, given by generator values.

    orders[i] = 0 marks a free generator. Values are checked to be well
    defined on torsion and, when skew is requested, to satisfy
    beta(g,h)beta(h,g) = 1 on generators.
    """

    def __init__(self, values, orders=None, skew=False):
        self.values = [list(row) for row in values]
        self.n = len(values)
        self.orders = tuple(orders) if orders else (0,) * self.n
        assert len(self.orders) == self.n
        for i, ni in enumerate(self.orders):
            if ni == 0:
                continue
            for j in range(self.n):
                if not (_cyc_pow(self.values[i][j], ni) - one()).is_zero():
                    raise ValueError(f"beta(a{i},a{j}) not well defined mod order {ni}")
                if not (_cyc_pow(self.values[j][i], ni) - one()).is_zero():
                    raise ValueError(f"beta(a{j},a{i}) not well defined mod order {ni}")
        if skew:
            for i in range(self.n):
                for j in range(self.n):
                    p = self.values[i][j] * self.values[j][i]
                    if not (p - one()).is_zero():
                        raise ValueError(f"not skew-symmetric at ({i},{j})")

    def __call__(self, a, b):
        out = one()
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out = out * _cyc_pow(self.values[i][j], ai * bj)
        return out

    def is_sign(self):
        mone = -one()
        return all(
            v == one() or v == mone for row in self.values for v in row
        )

    def cocycle_defect(self, g, h, k):
        """sigma(g,h)sigma(gh,k) - sigma(h,k)sigma(g,hk); zero for bilinear maps."""
        gh = tuple(x + y for x, y in zip(g, h))
        hk = tuple(x + y for x, y in zip(h, k))
        return self(g, h) * self(gh, k) - self(h, k) * self(g, hk)


def scheunert_cocycle(beta):
    """Bilinear sigma with beta_sigma a sign bicharacter; (sigma, beta_sigma).

    Requires beta skew-symmetric with beta(a_i, a_i) = +-1 for every
    generator. sigma(a_j, a_k) = 1 for j <= k; below the diagonal it is
    chosen so that the twist beta_sigma(g,h) = sigma(h,g)^-1 beta(g,h)
    sigma(g,h) takes the value -1 exactly when both arguments are odd.
    """
    n = beta.n
    mone = -one()
    diag = [beta.values[i][i] for i in range(n)]
    for i, d in enumerate(diag):
        if d != one() and d != mone:
            raise ValueError(f"beta(a{i},a{i}) = {d} is not a sign")
    for i in range(n):
        for j in range(n):
            p = beta.values[i][j] * beta.values[j][i]
            if not (p - one()).is_zero():
                raise ValueError("beta is not skew-symmetric")
    sig = [[one() for _ in range(n)] for _ in range(n)]
    for j in range(n):
        for k in range(j + 1, n):
            eps = mone if diag[j] == mone and diag[k] == mone else one()
            sig[k][j] = beta.values[j][k] * eps.inverse()
    sigma = AbelianBicharacter(sig, beta.orders)
    bs = [
        [
            sigma.values[j][i].inverse() * beta.values[i][j] * sigma.values[i][j]
            for j in range(n)
        ]
        for i in range(n)
    ]
    beta_sigma = AbelianBicharacter(bs, beta.orders)
    assert beta_sigma.is_sign()
    for i in range(n):
        assert beta_sigma.values[i][i] == diag[i]
    return sigma, beta_sigma


def check_cocycle_random(sigma, trials=1000, seed=0, span=5):
    """Right-2-cocycle identity on random triples of group elements."""
    rng = random.Random(seed)
    for _ in range(trials):
        g, h, k = (
            tuple(rng.randint(-span, span) for _ in range(sigma.n))
            for _ in range(3)
        )
        if not sigma.cocycle_defect(g, h, k).is_zero():
            return False, (g, h, k)
    return True, None


# -- graded algebras and braided Lie data -----------------------------------


@dataclass
class GradedAlgebraData:
    """Finite-dimensional algebra with abelian group degrees on its basis."""

    degrees: tuple  # tuple of degree tuples, one per basis vector
    mult: dict  # (i, j) -> {k: coeff}
    names: tuple = None

    @property
    def dim(self):
        return len(self.degrees)

    def check_homogeneous(self):
        for (i, j), out in self.mult.items():
            want = tuple(x + y for x, y in zip(self.degrees[i], self.degrees[j]))
            for k in out:
                if self.degrees[k] != want:
                    return False, (i, j, k)
        return True, None


def twist_algebra(A, sigma):
    """sigma-twist: m_sigma(a, b) = sigma(deg a, deg b) m(a, b)."""
    ok, bad = A.check_homogeneous()
    if not ok:
        raise ValueError(f"multiplication not homogeneous at {bad}")
    mult = {
        (i, j): {
            k: sigma(A.degrees[i], A.degrees[j]) * c for k, c in out.items()
        }
        for (i, j), out in A.mult.items()
    }
    return GradedAlgebraData(A.degrees, mult, A.names)


@dataclass
class BraidedLieData:
    """Bracket structure constants on a diagonally braided space.

    The braiding is c(x_i (x) x_j) = q_ij x_j (x) x_i with
    q_ij = beta(deg_i, deg_j); the bracket is given per ordered basis pair.
    """

    degrees: tuple
    beta: AbelianBicharacter
    bracket: dict  # (i, j) -> {k: coeff}
    names: tuple = None

    @property
    def dim(self):
        return len(self.degrees)

    def q(self, i, j):
        return self.beta(self.degrees[i], self.degrees[j])

    def bra(self, i, j):
        return self.bracket.get((i, j), {})


def check_braided_lie(L):
    """The three axioms: braiding compatibility, anticommutativity, Jacobi.

    Requires the braiding symmetric (c squared = id); returns a dict
    {axiom: (ok, witness)}.
    """
    n = L.dim
    for i in range(n):
        for j in range(n):
            if not (L.q(i, j) * L.q(j, i) - one()).is_zero():
                raise ValueError(f"braiding not symmetric at ({i},{j})")
    report = {}

    witness = None
    for i in range(n):
        for j in range(n):
            want = tuple(
                x + y for x, y in zip(L.degrees[i], L.degrees[j])
            )
            for k, c in L.bra(i, j).items():
                if L.degrees[k] != want and not c.is_zero():
                    witness = (i, j, k)
    report["compat"] = (witness is None, witness)

    witness = None
    for i in range(n):
        for j in range(n):
            acc = dict(L.bra(i, j))
            row_axpy(acc, L.q(i, j), L.bra(j, i))
            if acc:
                witness = (i, j)
    report["anticomm"] = (witness is None, witness)

    # Jacobi: [,]([,] x id)(id + rho + rho^2) = 0 with rho the braided
    # 3-cycle (c x id)(id x c)
    def rho(i, j, k):
        c = L.q(j, k) * L.q(i, k)
        return (k, i, j), c

    witness = None
    for i in range(n):
        for j in range(n):
            for k in range(n):
                acc = {}
                triple, coeff = (i, j, k), one()
                for _ in range(3):
                    a, b, c3 = triple
                    for m, cm in L.bra(a, b).items():
                        for p, cp in L.bra(m, c3).items():
                            cur = acc.get(p, rational(0))
                            nv = cur + coeff * cm * cp
                            if nv.is_zero():
                                acc.pop(p, None)
                            else:
                                acc[p] = nv
                    triple, c2 = rho(*triple)
                    coeff = coeff * c2
                if acc:
                    witness = (i, j, k)
    report["jacobi"] = (witness is None, witness)
    return report


def braided_commutator(A, beta):
    """Braided Lie algebra m(id - c) of an associative A commuting with c.

    Verifies associativity of A, symmetry of the braiding on A's degrees,
    and that multiplication commutes with the braiding before building the
    bracket.
    """
    n = A.dim
    q = lambda i, j: beta(A.degrees[i], A.degrees[j])
    for i in range(n):
        for j in range(n):
            if not (q(i, j) * q(j, i) - one()).is_zero():
                raise ValueError(f"braiding not symmetric at ({i},{j})")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                acc = {}
                for a, c in A.mult.get((i, j), {}).items():
                    row_axpy(acc, c, A.mult.get((a, k), {}))
                for a, c in A.mult.get((j, k), {}).items():
                    row_axpy(acc, -c, A.mult.get((i, a), {}))
                if acc:
                    raise ValueError(f"not associative at ({i},{j},{k})")
    ok, bad = A.check_homogeneous()
    if not ok:
        raise ValueError(f"multiplication does not commute with braiding: {bad}")
    bracket = {}
    for i in range(n):
        for j in range(n):
            acc = dict(A.mult.get((i, j), {}))
            row_axpy(acc, -q(i, j), A.mult.get((j, i), {}))
            if acc:
                bracket[(i, j)] = acc
    return BraidedLieData(A.degrees, beta, bracket, A.names)


# -- universal envelope ------------------------------------------------------


def _desc_len_key(word):
    return (-len(word), word)


def enveloping_dims(L, max_degree, slack=2):
    """Filtered dims of U_c(L) and graded dims of gr, vs Nichols dims.

    U_c(L) = T(L)/(x (x) y - c(x (x) y) - [x, y]); the ideal is
    inhomogeneous, so filtration components are computed by echelonizing
    all word multiples u r v with |u| + |v| + 2 <= max_degree + slack under
    a length-primary descending order. In that order every reduced row's
    terms are no longer than its lead, so leads of length <= d count
    dim(I cap T_{<= d}) exactly once the span has saturated.
    """
    rep = check_braided_lie(L)
    assert all(ok for ok, _ in rep.values()), f"braided Lie axioms fail: {rep}"
    n = L.dim
    rels = []
    for i in range(n):
        for j in range(n):
            row = {(i, j): one()}
            _nz_acc(row, (j, i), -L.q(i, j))
            for k, c in L.bra(i, j).items():
                _nz_acc(row, (k,), -c)
            if row:
                rels.append(row)
    ech = Echelon(key=_desc_len_key)
    bound = max_degree + slack

    def words(length):
        if length == 0:
            yield ()
            return
        for w in words(length - 1):
            for a in range(n):
                yield w + (a,)

    for total in range(bound - 1):
        for la in range(total + 1):
            lb = total - la
            for u in words(la):
                for v in words(lb):
                    for r in rels:
                        row = {u + w + v: c for w, c in r.items()}
                        ech.add(row)
    ideal_counts = [0] * (bound + 1)
    for lead in ech.pivots:
        ideal_counts[len(lead)] += 1
    filtered = []
    cum_words = 0
    cum_ideal = 0
    for d in range(max_degree + 1):
        cum_words += n ** d
        cum_ideal += ideal_counts[d]
        filtered.append(cum_words - cum_ideal)
    gr = [filtered[0]] + [
        filtered[d] - filtered[d - 1] for d in range(1, max_degree + 1)
    ]
    qmatrix = [[L.q(i, j) for j in range(n)] for i in range(n)]
    V = build_diagonal(qmatrix)
    nich = nichols_dims(V, max_degree)
    return {"filtered": filtered, "gr": gr, "nichols": nich}


def _nz_acc(row, key, val):
    cur = row.get(key)
    nv = val if cur is None else cur + val
    if nv.is_zero():
        row.pop(key, None)
    else:
        row[key] = nv


def sign_twist_report(L):
    """Twist the braiding to signs and re-check the braided Lie axioms.

    Returns sigma, the sign bicharacter beta_sigma, the twisted bracket
    data, its axiom report, and the dimension of the even part (generators
    g with beta(g, g) = 1); a zero even part is the purely odd case of the
    symmetric-braiding dichotomy.
    """
    sigma, beta_sigma = scheunert_cocycle(L.beta)
    bracket = {
        (i, j): {
            k: sigma(L.degrees[i], L.degrees[j]) * c for k, c in out.items()
        }
        for (i, j), out in L.bracket.items()
    }
    twisted = BraidedLieData(L.degrees, beta_sigma, bracket, L.names)
    report = check_braided_lie(twisted)
    even = sum(
        1 for d in L.degrees if L.beta(d, d) == one()
    )
    return {
        "sigma": sigma,
        "beta_sigma": beta_sigma,
        "twisted": twisted,
        "report": report,
        "even_dim": even,
        "purely_odd": even == 0,
    }


# -- shipped examples --------------------------------------------------------


def heisenberg_flip():
    """3-dim Heisenberg Lie algebra x, y, z with [x, y] = z, flip braiding."""
    beta = AbelianBicharacter([[one()]])
    degs = ((0,), (0,), (0,))
    bracket = {(0, 1): {2: one()}, (1, 0): {2: -one()}}
    return BraidedLieData(degs, beta, bracket, ("x", "y", "z"))


def superline():
    """1-dim odd space with zero bracket and q = -1."""
    beta = AbelianBicharacter([[-one()]])
    return BraidedLieData(((1,),), beta, {}, ("x",))


def color_pair():
    """x odd of degree e1, y = [x, x] of degree 2 e1, over Z with beta(1,1) = -1."""
    beta = AbelianBicharacter([[-one()]])
    degs = ((1,), (2,))
    bracket = {(0, 0): {1: one()}}
    return BraidedLieData(degs, beta, bracket, ("x", "y"))


def sl2_flip(scale=None):
    """sl2 with flip braiding; optional asymmetric scaling to break axioms."""
    beta = AbelianBicharacter([[one()]])
    degs = ((0,), (0,), (0,))
    two = rational(2)
    bracket = {
        (0, 1): {2: one()},  # [e, f] = h
        (1, 0): {2: -one()},
        (2, 0): {0: two},  # [h, e] = 2e
        (0, 2): {0: -two},
        (2, 1): {1: -two},  # [h, f] = -2f
        (1, 2): {1: two},
    }
    if scale is not None:
        bracket[(0, 1)] = {2: scale}
    return BraidedLieData(degs, beta, bracket, ("e", "f", "h"))


def color_triple(q):
    """Z^2-color example: x, y odd, z = [x, y] even, mixed values q, -1/q.

    beta(e1, e1) = beta(e2, e2) = -1, beta(e1, e2) = q; skew forces
    beta(e2, e1) = 1/q. The bracket constants follow from anticommutativity
    and the Jacobi identity for this grading.
    """
    beta = AbelianBicharacter(
        [[-one(), q], [q.inverse(), -one()]], skew=True
    )
    degs = ((1, 0), (0, 1), (1, 1))
    bracket = {
        (0, 1): {2: one()},
        (1, 0): {2: -q.inverse()},
    }
    return BraidedLieData(degs, beta, bracket, ("x", "y", "z"))
