"""Root systems of diagonal braidings via reflections of the q-matrix.

States are q-matrices; reflections act through the bicharacter
chi(alpha, beta) = prod q_ij^(a_i b_j) on Z^theta. A breadth-first walk
over reflection-equivalent matrices collects positive roots as images of
the simple roots under composed reflections.
"""

from dataclasses import dataclass, field
from typing import Optional

from .braided import (
    DEFAULT_CARTAN_CAP,
    build_diagonal,
    cartan_integer,
    cyc_order,
    dynkin_diagram,
    is_cartan_vertex,
)
from .cyclo import one

DEFAULT_OBJECT_CAP = 64


def bichar_eval(V, alpha, beta):
    """chi(alpha, beta) = prod_{i,j} q_ij^(alpha_i beta_j)."""
    out = one()
    for i, a in enumerate(alpha):
        if a == 0:
            continue
        for j, b in enumerate(beta):
            if b == 0:
                continue
            out = out * V.q(i, j) ** (a * b)
    return out


def cartan_row(V, i, cap=DEFAULT_CARTAN_CAP):
    """Row i of the Cartan-scheme matrix (c_ii = 2); None entry aborts."""
    row = []
    for j in range(V.rank):
        if j == i:
            row.append(2)
            continue
        cij = cartan_integer(V, i, j, cap=cap)
        if cij is None:
            raise ValueError(f"Cartan integer c[{i}][{j}] undefined within cap {cap}")
        row.append(cij)
    return row


def reflect_qmatrix(V, i, cap=DEFAULT_CARTAN_CAP):
    """q-matrix of the i-th reflection: q'_jk = chi(s_i a_j, s_i a_k)."""
    theta = V.rank
    crow = cartan_row(V, i, cap=cap)

    def s_i(j):
        alpha = [0] * theta
        alpha[j] = 1
        alpha[i] -= crow[j]
        return tuple(alpha)

    images = [s_i(j) for j in range(theta)]
    return tuple(
        tuple(bichar_eval(V, images[j], images[k]) for k in range(theta))
        for j in range(theta)
    )


@dataclass
class RootSystemData:
    finite: bool
    positive_roots: list  # tuples in N_0^theta, at the initial object
    cartan_roots: list  # subset closed under the groupoid action
    objects: int
    qmatrix: tuple

    def root_scalar(self, V, alpha):
        """q_alpha = chi(alpha, alpha)."""
        return bichar_eval(V, alpha, alpha)

    def root_order(self, V, alpha) -> Optional[int]:
        """N_alpha = ord(q_alpha), None if q_alpha is not a root of unity."""
        return cyc_order(self.root_scalar(V, alpha))


def enumerate_roots(V, cap=DEFAULT_CARTAN_CAP, object_cap=DEFAULT_OBJECT_CAP):
    """Walk the reflection groupoid from V and collect the root data.

    Each state carries the integer matrix M sending the current object's
    simple roots back to degrees at the initial object. Roots of the
    initial object are the columns of all visited M (both signs); the walk
    is declared infinite past object_cap objects.
    """
    theta = V.rank
    start = V.qmatrix
    ident = tuple(tuple(1 if r == c else 0 for c in range(theta)) for r in range(theta))
    seen_objects = {}  # qmatrix -> index
    queue = [(start, ident)]
    seen_objects[start] = 0
    seen_states = {(start, ident)}
    roots = set()
    cartan = set()
    while queue:
        qm, M = queue.pop(0)
        W = build_diagonal(qm)
        for j in range(theta):
            col = tuple(M[r][j] for r in range(theta))
            roots.add(col)
            if is_cartan_vertex(W, j, cap=cap):
                cartan.add(col)
        for i in range(theta):
            try:
                qm2 = reflect_qmatrix(W, i, cap=cap)
            except ValueError:
                return RootSystemData(False, [], [], len(seen_objects), start)
            crow = cartan_row(W, i, cap=cap)
            # columns of M compose: new simple a_j at qm2 maps to M(s_i a_j)
            M2 = tuple(
                tuple(
                    M[r][j] - crow[j] * M[r][i] if j != i else -M[r][i]
                    for j in range(theta)
                )
                for r in range(theta)
            )
            if qm2 not in seen_objects:
                if len(seen_objects) >= object_cap:
                    return RootSystemData(False, [], [], len(seen_objects), start)
                seen_objects[qm2] = len(seen_objects)
            state = (qm2, M2)
            if state not in seen_states:
                # morphism count of a finite groupoid is bounded; bail out
                # instead of walking an infinite Weyl groupoid forever
                if len(seen_states) >= 1000 * object_cap:
                    return RootSystemData(False, [], [], len(seen_objects), start)
                seen_states.add(state)
                queue.append(state)
    positive = sorted(r for r in roots if all(x >= 0 for x in r) and any(r))
    negatives = {tuple(-x for x in r) for r in positive}
    if not set(r for r in roots if any(r)) <= set(positive) | negatives:
        return RootSystemData(False, [], [], len(seen_objects), start)
    cartan_pos = sorted(
        {r if all(x >= 0 for x in r) else tuple(-x for x in r) for r in cartan}
    )
    return RootSystemData(True, positive, cartan_pos, len(seen_objects), start)


def cartan_roots(V, cap=DEFAULT_CARTAN_CAP, object_cap=DEFAULT_OBJECT_CAP):
    data = enumerate_roots(V, cap=cap, object_cap=object_cap)
    if not data.finite:
        raise ValueError("root system not shown finite within caps")
    return data.cartan_roots


def diagram_summary(V, cap=DEFAULT_CARTAN_CAP):
    """Printable diagram data: vertex scalars, edges, Cartan matrix, vertex types."""
    theta = V.rank
    diag = dynkin_diagram(V)
    cmat = [cartan_row(V, i, cap=cap) for i in range(theta)]
    kinds = ["cartan" if is_cartan_vertex(V, i, cap=cap) else "non-cartan" for i in range(theta)]
    return diag, cmat, kinds
