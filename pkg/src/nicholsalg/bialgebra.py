"""Finite graded braided bialgebras presented as T(V)/(relations).

The basis in each degree is the set of irreducible words of a completed
rewriting system; multiplication is concatenate-and-reduce, the coproduct
is pushed down from the tensor algebra (legal once the relation span is
checked to be a coideal), and the braiding descends word by word.

A bialgebra can carry a category structure: a (group, character)-style
label per basis element plus, for nonabelian gradings, explicit action
matrices. Cohomology computations constrain all maps to be morphisms for
this structure.
"""

from itertools import product

from .braided import braid_word_blocks
from .cyclo import one
from .linalg import nullspace, row_axpy, sparse_rank
from .rewriting import rewrite_dims
from .tensoralg import TensorElement, braided_coproduct


class CategoryStructure:
    """Homogeneity data making B an object of a braided module category.

    labels[i] is a hashable degree label of the i-th basis element;
    label_mul/label_unit give the label monoid. action_gens, when present,
    is a list of matrices (vec dicts per basis index) generating the group
    action; for abelian diagonal braidings the action is encoded in the
    labels and action_gens stays None.
    """

    def __init__(self, labels, label_mul, label_unit, action_gens=None):
        self.labels = list(labels)
        self.label_mul = label_mul
        self.label_unit = label_unit
        self.action_gens = action_gens

    def tuple_label(self, idx_tuple):
        lab = self.label_unit
        for i in idx_tuple:
            lab = self.label_mul(lab, self.labels[i])
        return lab


class GradedBialgebraData:
    """Structure constants of a finite graded quotient bialgebra."""

    def __init__(self, V, rs, basis_by_degree):
        self.V = V
        self.rs = rs
        self.basis = basis_by_degree  # words per degree, degree 0 first
        self.flat = [w for level in basis_by_degree for w in level]
        self.index = {w: i for i, w in enumerate(self.flat)}
        self.degrees = [len(w) for w in self.flat]
        self.unit = self.index[()]
        self.category = None
        self._mult = {}
        self._coprod = {}
        self._braid = {}
        self._braid_tensor = {}
        self._coprod_tensor = {}
        self._iter_coprod = {}

    # -- bookkeeping -------------------------------------------------------

    @property
    def dim(self):
        return len(self.flat)

    @property
    def top_degree(self):
        return len(self.basis) - 1

    def dims(self):
        return [len(level) for level in self.basis]

    def degree(self, i):
        return self.degrees[i]

    def positive(self):
        """Indices of the augmentation ideal basis."""
        return [i for i in range(self.dim) if self.degrees[i] > 0]

    def positive_tuples(self, p):
        return list(product(self.positive(), repeat=p))

    def vec_of(self, word_support):
        """Reduce a {word: coeff} element to basis coordinates."""
        out = {}
        for w, c in self.rs.reduce(dict(word_support)).items():
            idx = self.index.get(w)
            assert idx is not None, f"normal word {w} missing from the basis"
            out[idx] = c
        return out

    def counit(self, i):
        return one() if i == self.unit else None

    # -- structure constants -----------------------------------------------

    def mult(self, i, j):
        """Product of basis elements as {index: coeff}."""
        key = (i, j)
        hit = self._mult.get(key)
        if hit is None:
            hit = self.vec_of({self.flat[i] + self.flat[j]: one()})
            self._mult[key] = hit
        return hit

    def coprod(self, i):
        """Coproduct as {(left index, right index): coeff}, unit legs included."""
        hit = self._coprod.get(i)
        if hit is None:
            out = {}
            full = braided_coproduct(self.V, TensorElement.monomial(self.flat[i]))
            for (u, v), c in full.items():
                for iu, cu in self.vec_of({u: one()}).items():
                    for iv, cv in self.vec_of({v: one()}).items():
                        _acc(out, (iu, iv), c * cu * cv)
            self._coprod[i] = hit = out
        return hit

    def braid(self, i, j):
        """c(e_i (x) e_j) as {(k, l): coeff}."""
        key = (i, j)
        hit = self._braid.get(key)
        if hit is None:
            coeff, right, left = braid_word_blocks(self.V, self.flat[i], self.flat[j])
            out = {}
            for ir, cr in self.vec_of({right: one()}).items():
                for il, cl in self.vec_of({left: one()}).items():
                    _acc(out, (ir, il), coeff * cr * cl)
            self._braid[key] = hit = out
        return hit

    # -- tensor power structure --------------------------------------------

    def braid_tensor(self, left, right):
        """c_{B^a, B^b} on basis tuples: {(right', left'): coeff}."""
        key = (left, right)
        hit = self._braid_tensor.get(key)
        if hit is not None:
            return hit
        if not left or not right:
            hit = {(right, left): one()}
        elif len(left) == 1:
            # cross the single letter over the right block, left to right
            states = {((), left[0]): one()}
            for vj in right:
                nxt = {}
                for (pv, x), c in states.items():
                    for (k, l), co in self.braid(x, vj).items():
                        _acc(nxt, (pv + (k,), l), c * co)
                states = nxt
            hit = {}
            for (pv, x), c in states.items():
                _acc(hit, (pv, (x,)), c)
        else:
            head, rest = left[:1], left[1:]
            hit = {}
            for (r1, rest1), c1 in self.braid_tensor(rest, right).items():
                for (r2, head1), c2 in self.braid_tensor(head, r1).items():
                    _acc(hit, (r2, head1 + rest1), c1 * c2)
        self._braid_tensor[key] = hit
        return hit

    def mult_tensor(self, t1, t2):
        """Product in the braided tensor-power algebra B^(x)q."""
        assert len(t1) == len(t2)
        if not t1:
            return {(): one()}
        out = {}
        u1, urest = t1[0], t1[1:]
        v1, vrest = t2[0], t2[1:]
        for (v1p, urestp), cb in self.braid_tensor(urest, (v1,)).items():
            for k0, c0 in self.mult(u1, v1p[0]).items():
                for trest, cr in self.mult_tensor(urestp, vrest).items():
                    _acc(out, (k0,) + trest, cb * c0 * cr)
        return out

    def coprod_tensor(self, t):
        """Coproduct of the braided tensor-power coalgebra B^(x)q."""
        hit = self._coprod_tensor.get(t)
        if hit is not None:
            return hit
        if not t:
            hit = {((), ()): one()}
        else:
            hit = {}
            head, rest = t[0], t[1:]
            for (a, b), c0 in self.coprod(head).items():
                for (t1, t2), c1 in self.coprod_tensor(rest).items():
                    for (t1p, bp), cb in self.braid_tensor((b,), t1).items():
                        _acc(hit, ((a,) + t1p, bp + t2), c0 * c1 * cb)
        self._coprod_tensor[t] = hit
        return hit

    def iter_coprod(self, i, q):
        """Iterated coproduct Delta^(q): B -> B^(x)q on a basis element."""
        key = (i, q)
        hit = self._iter_coprod.get(key)
        if hit is not None:
            return hit
        if q == 0:
            hit = {(): one()} if i == self.unit else {}
        elif q == 1:
            hit = {(i,): one()}
        else:
            hit = {}
            for t, c in self.iter_coprod(i, q - 1).items():
                for (a, b), c0 in self.coprod(t[0]).items():
                    _acc(hit, (a, b) + t[1:], c * c0)
        self._iter_coprod[key] = hit
        return hit

    def mprod(self, t):
        """Iterated product of a basis tuple: {index: coeff}."""
        cur = {self.unit: one()}
        for i in t:
            nxt = {}
            for j, c in cur.items():
                for k, cm in self.mult(j, i).items():
                    _acc(nxt, k, c * cm)
            cur = nxt
        return cur

    def act_left(self, i, t):
        """Regular left action of e_i on B^(x)q via the iterated coproduct."""
        out = {}
        for u, cu in self.iter_coprod(i, len(t)).items():
            for t2, c in self.mult_tensor(u, t).items():
                _acc(out, t2, cu * c)
        return out

    def act_right(self, t, i):
        out = {}
        for u, cu in self.iter_coprod(i, len(t)).items():
            for t2, c in self.mult_tensor(t, u).items():
                _acc(out, t2, cu * c)
        return out

    def coact_left(self, t):
        """Left coaction B^(x)p -> B (x) B^(x)p: {(j, t'): coeff}."""
        out = {}
        for (t1, t2), c in self.coprod_tensor(t).items():
            for j, cm in self.mprod(t1).items():
                _acc(out, (j, t2), c * cm)
        return out

    def coact_right(self, t):
        out = {}
        for (t1, t2), c in self.coprod_tensor(t).items():
            for j, cm in self.mprod(t2).items():
                _acc(out, (t1, j), c * cm)
        return out

    # -- axiom checks ------------------------------------------------------

    def check_associativity(self):
        for i, j, k in product(range(self.dim), repeat=3):
            left = {}
            for a, c in self.mult(i, j).items():
                row_axpy(left, c, self.mult(a, k))
            right = {}
            for a, c in self.mult(j, k).items():
                row_axpy(right, c, self.mult(i, a))
            row_axpy(left, -one(), right)
            if left:
                return False, (i, j, k)
        return True, None

    def check_coassociativity(self):
        for i in range(self.dim):
            left = {}
            right = {}
            for (a, b), c in self.coprod(i).items():
                for (a1, a2), ca in self.coprod(a).items():
                    _acc(left, (a1, a2, b), c * ca)
                for (b1, b2), cb in self.coprod(b).items():
                    _acc(right, (a, b1, b2), c * cb)
            row_axpy(left, -one(), right)
            if left:
                return False, i
        return True, None

    def check_unit_counit(self):
        for i in range(self.dim):
            if self.mult(self.unit, i) != {i: one()}:
                return False, ("unit-left", i)
            if self.mult(i, self.unit) != {i: one()}:
                return False, ("unit-right", i)
            left = {}
            right = {}
            for (a, b), c in self.coprod(i).items():
                if a == self.unit:
                    _acc(left, b, c)
                if b == self.unit:
                    _acc(right, a, c)
            if left != {i: one()} or right != {i: one()}:
                return False, ("counit", i)
        return True, None

    def check_compatibility(self):
        """Delta m = (m (x) m)(id (x) c (x) id)(Delta (x) Delta) on basis pairs."""
        for i, j in product(range(self.dim), repeat=2):
            left = {}
            for k, c in self.mult(i, j).items():
                row_axpy(left, c, self.coprod(k))
            right = {}
            for (a, b), c1 in self.coprod(i).items():
                for (s, t), c2 in self.coprod(j).items():
                    for (sp, bp), cb in self.braid(b, s).items():
                        for u, cu in self.mult(a, sp).items():
                            for v, cv in self.mult(bp, t).items():
                                _acc(right, (u, v), c1 * c2 * cb * cu * cv)
            row_axpy(left, -one(), right)
            if left:
                return False, (i, j)
        return True, None

    def check_all(self):
        report = {
            "associativity": self.check_associativity(),
            "coassociativity": self.check_coassociativity(),
            "unit_counit": self.check_unit_counit(),
            "compatibility": self.check_compatibility(),
        }
        return report

    # -- derived data ------------------------------------------------------

    def primitive_dims(self):
        """Dimension of the primitive space per degree."""
        out = [0] * (self.top_degree + 1)
        for d in range(1, self.top_degree + 1):
            cols = [self.index[w] for w in self.basis[d]]
            rows = {}
            for i in cols:
                for (a, b), c in self.coprod(i).items():
                    if a == self.unit or b == self.unit:
                        continue
                    rows.setdefault((a, b), {})[i] = c
            out[d] = len(cols) - sparse_rank(rows.values())
        return out

    def primitive_basis(self, d):
        cols = [self.index[w] for w in self.basis[d]]
        rows = {}
        for i in cols:
            for (a, b), c in self.coprod(i).items():
                if a == self.unit or b == self.unit:
                    continue
                rows.setdefault((a, b), {})[i] = c
        return nullspace(rows.values(), cols)


def _acc(out, key, val):
    cur = out.get(key)
    nv = val if cur is None else cur + val
    if nv.is_zero():
        out.pop(key, None)
    else:
        out[key] = nv


def biideal_witness(V, rs, relations):
    """First relation whose pushed coproduct fails to vanish, or None.

    The relation span generates a coideal iff (pi (x) pi)Delta kills every
    generator; rs must already reduce each generator to zero.
    """
    for rel in relations:
        elem = rel if isinstance(rel, TensorElement) else TensorElement(dict(rel))
        if rs.reduce(dict(elem.support)):
            return rel, "relation does not reduce to zero"
        leftover = {}
        for (u, v), c in braided_coproduct(V, elem).items():
            for wu, cu in rs.reduce({u: one()}).items():
                for wv, cv in rs.reduce({v: one()}).items():
                    _acc(leftover, (wu, wv), c * cu * cv)
        if leftover:
            return rel, leftover
    return None


def from_nichols(V, relations, max_degree):
    """Finite graded bialgebra T(V)/(relations), basis and structure constants.

    Raises if the quotient is not visibly finite within max_degree or if
    the relation span fails the coideal test (witness attached).
    """
    relations = list(relations)
    dims, rs = rewrite_dims(V.rank, relations, max_degree)
    if dims[-1] != 0:
        raise ValueError(
            f"quotient not finite within degree {max_degree}: dims {dims}"
        )
    top = max(d for d, n in enumerate(dims) if n)
    if max_degree < 2 * top:
        # re-complete far enough that any product of two basis words reduces
        dims, rs = rewrite_dims(V.rank, relations, 2 * top)
        assert all(n == 0 for n in dims[top + 1 :])
    basis = [[()]]
    for d in range(1, top + 1):
        level = []
        for w in basis[d - 1]:
            for a in range(V.rank):
                cand = w + (a,)
                if rs._find_redex(cand) is None:
                    level.append(cand)
        assert len(level) == dims[d], f"basis count mismatch at degree {d}"
        basis.append(level)
    bad = biideal_witness(V, rs, relations)
    if bad is not None:
        raise ValueError(f"relation span is not a coideal: witness {bad}")
    return GradedBialgebraData(V, rs, basis)


def attach_diagonal_category(B, realization):
    """Label each basis word by its (group, character) degree.

    For abelian gradings the group action is diagonal and fully captured by
    the character half of the label, so no action generators are stored.
    """
    theta = B.V.rank
    ngen = len(realization.invariant_factors)

    def word_label(w):
        deg = [0] * theta
        for t in w:
            deg[t] += 1
        return (realization.group_product(deg), realization.char_product(deg))

    def label_mul(l1, l2):
        g = realization.normalize(tuple(a + b for a, b in zip(l1[0], l2[0])))
        chi = tuple(a * b for a, b in zip(l1[1], l2[1]))
        return (g, chi)

    unit = (
        realization.normalize((0,) * ngen),
        tuple(one() for _ in range(ngen)),
    )
    labels = [word_label(w) for w in B.flat]
    B.category = CategoryStructure(labels, label_mul, unit)
    return B.category


def attach_group_category(B, group_elements, letter_action):
    """Group-type category data from an explicit action.

    group_elements: hashable labels with B.V.group_degrees per letter;
    letter_action(gamma, t) -> (t', coeff) for each group element gamma and
    letter t. Action matrices on the whole basis extend letterwise and are
    reduced to normal form.
    """
    degs = B.V.group_degrees

    def word_label(w):
        lab = None
        for t in w:
            lab = degs[t] if lab is None else _compose_perm(lab, degs[t])
        if lab is None:
            lab = tuple(range(len(degs[0])))
        return lab

    def label_mul(l1, l2):
        return _compose_perm(l1, l2)

    unit = tuple(range(len(degs[0])))
    labels = [word_label(w) for w in B.flat]

    action_gens = []
    for gamma in group_elements:
        mat = []
        for w in B.flat:
            coeff = one()
            img = []
            for t in w:
                t2, c = letter_action(gamma, t)
                coeff = coeff * c
                img.append(t2)
            vec = {
                k: coeff * c for k, c in B.vec_of({tuple(img): one()}).items()
            }
            mat.append(vec)
        action_gens.append(mat)
    B.category = CategoryStructure(labels, label_mul, unit, action_gens)
    return B.category


def _compose_perm(p, q):
    return tuple(p[q[i]] for i in range(len(p)))


def nichols_ideal_biideal_check(V, max_degree=4):
    """Coproduct closure of the symmetrizer-kernel ideal in low degrees.

    For each degree d <= max_degree and each kernel basis element r, checks
    that every middle component of the braided coproduct of r lies in
    I (x) T + T (x) I. Returns (True, None) or (False, witness).
    """
    from itertools import product as iproduct

    from .linalg import Echelon
    from .tensoralg import braided_coproduct, ideal_component

    ideal = {d: ideal_component(V, d) for d in range(2, max_degree + 1)}
    for d in range(2, max_degree + 1):
        for r in ideal[d]:
            cop = braided_coproduct(V, r)
            by_split = {}
            for (u, v), c in cop.items():
                if u and v:
                    by_split.setdefault((len(u), len(v)), {})[(u, v)] = c
            for (a, b), comp in by_split.items():
                ech = Echelon()
                for ie in ideal.get(a, []):
                    for v in iproduct(range(V.rank), repeat=b):
                        ech.add({(u, v): c for u, c in ie.support.items()})
                for u in iproduct(range(V.rank), repeat=a):
                    for je in ideal.get(b, []):
                        ech.add({(u, v): c for v, c in je.support.items()})
                if not ech.contains(comp):
                    return False, (d, (a, b))
    return True, None
