"""Braided vector spaces with a chosen basis.

Both supported kinds act on basis vectors monomially:
    c(x_i (x) x_j) = scal[i][j] * x_{act[i][j]} (x) x_i
Diagonal braidings have act[i][j] = j and scal[i][j] = q_ij; group-type
braidings (sign-twisted conjugation over a group) carry a group degree per
basis vector and an explicit action table.
"""

from dataclasses import dataclass
from typing import Optional

from .cyclo import CycNumber, cyc_order, one, rational

DEFAULT_CARTAN_CAP = 50


@dataclass(frozen=True)
class BraidedSpace:
    kind: str  # "diagonal" | "group"
    basis: tuple  # labels
    act: tuple  # act[i][j] -> basis index
    scal: tuple  # scal[i][j] -> CycNumber
    qmatrix: Optional[tuple] = None  # diagonal only
    group_degrees: Optional[tuple] = None  # group only; hashable elements
    group: object = None  # group only; object with mul/inv/act hooks

    @property
    def rank(self):
        return len(self.basis)

    def q(self, i, j):
        if self.qmatrix is None:
            raise ValueError("q-matrix only defined for diagonal braidings")
        return self.qmatrix[i][j]

    def qtilde(self, i, j):
        return self.q(i, j) * self.q(j, i)

    def braid_pair(self, i, j):
        """c(x_i (x) x_j) = coeff * x_k (x) x_i; returns (coeff, k)."""
        return self.scal[i][j], self.act[i][j]


def build_diagonal(qmatrix, basis=None):
    """Braided space with c(x_i (x) x_j) = q_ij x_j (x) x_i."""
    theta = len(qmatrix)
    rows = []
    for i, row in enumerate(qmatrix):
        if len(row) != theta:
            raise ValueError("q-matrix must be square")
        ents = []
        for j, q in enumerate(row):
            if not isinstance(q, CycNumber):
                q = rational(q)
            if q.is_zero():
                raise ValueError(f"q[{i}][{j}] must be nonzero")
            ents.append(q)
        rows.append(tuple(ents))
    if basis is None:
        basis = tuple(f"x{i + 1}" for i in range(theta))
    act = tuple(tuple(range(theta)) for _ in range(theta))
    scal = tuple(rows[i] for i in range(theta))
    return BraidedSpace(
        kind="diagonal", basis=tuple(basis), act=act, scal=scal, qmatrix=tuple(rows)
    )


def build_group_type(basis, act, scal, group_degrees, group=None):
    return BraidedSpace(
        kind="group",
        basis=tuple(basis),
        act=tuple(tuple(r) for r in act),
        scal=tuple(tuple(r) for r in scal),
        group_degrees=tuple(group_degrees),
        group=group,
    )


def apply_braiding_word(V, word, pos):
    """Apply c at tensor slots (pos, pos+1) of a basis word (0-based pos).

    Returns (coeff, new_word). Monomial braidings keep words monomial.
    """
    if not 0 <= pos < len(word) - 1:
        raise ValueError(f"braiding position {pos} out of range for |word|={len(word)}")
    i, j = word[pos], word[pos + 1]
    coeff, k = V.braid_pair(i, j)
    return coeff, word[:pos] + (k, i) + word[pos + 2 :]


def apply_inverse_braiding_word(V, word, pos):
    """Inverse of apply_braiding_word at the same slot."""
    if not 0 <= pos < len(word) - 1:
        raise ValueError(f"braiding position {pos} out of range for |word|={len(word)}")
    k, i = word[pos], word[pos + 1]
    # find j with act[i][j] = k; group-type actions are bijective per row
    row = V.act[i]
    for j, kk in enumerate(row):
        if kk == k:
            return V.scal[i][j].inverse(), word[:pos] + (i, j) + word[pos + 2 :]
    raise ValueError("braiding action row is not surjective")


def braid_word_blocks(V, left, right):
    """Braiding c_{V^a, V^b} on a pair of basis words: returns (coeff, new_left, new_right).

    The left block crosses over the right one; for our monomial braidings
    the right output block equals the original left word.
    """
    word = left + right
    a, b = len(left), len(right)
    coeff = one()
    # move each left-block letter past the right block, innermost first
    for src in range(a - 1, -1, -1):
        for pos in range(src, src + b):
            c, word = apply_braiding_word(V, word, pos)
            coeff = coeff * c
    return coeff, word[:b], word[b:]


def check_braid_equation(V, degree=3):
    """Exhaustively verify the braid equation on basis words of V^(x)3.

    Returns (True, None) or (False, offending_word).
    """
    theta = V.rank
    for a in range(theta):
        for b in range(theta):
            for c in range(theta):
                w = (a, b, c)
                c1, w1 = apply_braiding_word(V, w, 0)
                c2, w2 = apply_braiding_word(V, w1, 1)
                c3, w3 = apply_braiding_word(V, w2, 0)
                d1, v1 = apply_braiding_word(V, w, 1)
                d2, v2 = apply_braiding_word(V, v1, 0)
                d3, v3 = apply_braiding_word(V, v2, 1)
                if w3 != v3 or c1 * c2 * c3 != d1 * d2 * d3:
                    return False, w
    return True, None


def q_number(m, q):
    """(m)_q = 1 + q + ... + q^(m-1)."""
    total = rational(0)
    power = one()
    for _ in range(m):
        total = total + power
        power = power * q
    return total


def cartan_integer(V, i, j, cap=DEFAULT_CARTAN_CAP):
    """-min{n >= 0 : (n+1)_{q_ii} (1 - q_ii^n qt_ij) = 0}, or None past cap."""
    if i == j:
        raise ValueError("Cartan integer requires i != j")
    qii = V.q(i, i)
    qt = V.qtilde(i, j)
    power = one()
    for n in range(cap + 1):
        if q_number(n + 1, qii).is_zero() or (one() - power * qt).is_zero():
            return -n
        power = power * qii
    return None


def dynkin_diagram(V):
    """Vertex labels q_ii, edge labels qt_ij (edges present iff label != 1)."""
    theta = V.rank
    vertices = tuple(V.q(i, i) for i in range(theta))
    edges = {}
    for i in range(theta):
        for j in range(i + 1, theta):
            qt = V.qtilde(i, j)
            if not qt.is_one():
                edges[(i, j)] = qt
    return DynkinDiagram(vertices=vertices, edges=edges)


class DynkinDiagram:
    def __init__(self, vertices, edges):
        self.vertices = tuple(vertices)
        self.edges = dict(edges)

    def key(self):
        return (self.vertices, tuple(sorted(self.edges.items())))

    def __eq__(self, other):
        return isinstance(other, DynkinDiagram) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def is_cartan_vertex(V, i, cap=DEFAULT_CARTAN_CAP):
    """Cartan vertex test; in rank 1 the vertex counts as Cartan iff q_11
    is a root of unity of order >= 3 (so its cube-or-higher power relation
    comes from the Cartan-root family rather than the simple-power one)."""
    theta = V.rank
    if theta == 1:
        order = cyc_order(V.q(0, 0))
        return order is not None and order >= 3
    for j in range(theta):
        if j == i:
            continue
        cij = cartan_integer(V, i, j, cap=cap)
        if cij is None:
            raise ValueError(f"Cartan integer c[{i}][{j}] undefined within cap {cap}")
        if V.qtilde(i, j) != V.q(i, i) ** cij:
            return False
    return True
