"""Tensor algebra elements, quantum symmetrizers and Nichols-ideal data.

Elements of T(V) are finitely supported maps from basis words (tuples of
basis indices) to cyclotomic scalars. All braidings in scope are monomial,
so braid-group lifts act on words one at a time.
"""

from itertools import permutations, product

from .braided import apply_braiding_word, braid_word_blocks
from .cyclo import one, rational
from .linalg import Echelon, nullspace, row_axpy

DENSE_WORD_BUDGET = 2 * 10**7


class TensorElement:
    """Homogeneous element of T(V): {word: coeff} with zero coeffs absent."""

    __slots__ = ("support",)

    def __init__(self, support=None):
        self.support = {}
        if support:
            for w, c in support.items():
                if not c.is_zero():
                    self.support[w] = c

    @staticmethod
    def monomial(word, coeff=None):
        t = TensorElement()
        coeff = one() if coeff is None else coeff
        if not coeff.is_zero():
            t.support[tuple(word)] = coeff
        return t

    @staticmethod
    def generator(i):
        return TensorElement.monomial((i,))

    def is_zero(self):
        return not self.support

    def degree(self):
        if not self.support:
            return None
        degs = {len(w) for w in self.support}
        if len(degs) != 1:
            raise ValueError("element is not homogeneous in word length")
        return degs.pop()

    def multidegree(self, rank):
        """N_0^theta degree (letter counts); requires homogeneity."""
        degs = set()
        for w in self.support:
            d = [0] * rank
            for i in w:
                d[i] += 1
            degs.add(tuple(d))
        if len(degs) != 1:
            raise ValueError("element is not multidegree-homogeneous")
        return degs.pop()

    def __add__(self, other):
        out = dict(self.support)
        row_axpy(out, one(), other.support)
        return TensorElement(out)

    def __sub__(self, other):
        out = dict(self.support)
        row_axpy(out, rational(-1), other.support)
        return TensorElement(out)

    def __neg__(self):
        return TensorElement({w: -c for w, c in self.support.items()})

    def scale(self, coeff):
        if coeff.is_zero():
            return TensorElement()
        return TensorElement({w: c * coeff for w, c in self.support.items()})

    def concat(self, other):
        """Product in T(V) (word concatenation)."""
        out = {}
        for u, a in self.support.items():
            for v, b in other.support.items():
                w = u + v
                c = a * b
                cur = out.get(w)
                nc = c if cur is None else cur + c
                if nc.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = nc
        return TensorElement(out)

    def __eq__(self, other):
        return isinstance(other, TensorElement) and self.support == other.support

    def __repr__(self):
        if not self.support:
            return "TensorElement(0)"
        parts = [f"{c!r}*{w}" for w, c in sorted(self.support.items())]
        return "TensorElement(" + " + ".join(parts) + ")"


def braiding_operator(V, element, pos):
    """Apply the braiding at tensor slots (pos, pos+1); pure, monomial."""
    out = {}
    for w, c in element.support.items():
        coeff, nw = apply_braiding_word(V, w, pos)
        cur = out.get(nw)
        nc = coeff * c if cur is None else cur + coeff * c
        if nc.is_zero():
            out.pop(nw, None)
        else:
            out[nw] = nc
    return TensorElement(out)


def braid_blocks(V, a, b):
    """Braiding of a pair of tensor elements as word blocks.

    Returns TensorElement-valued pairs as dict {(right', left'): coeff}
    via braid_word_blocks on each support pair.
    """
    out = {}
    for u, cu in a.support.items():
        for v, cv in b.support.items():
            coeff, nv, nu = braid_word_blocks(V, u, v)
            key = (nv, nu)
            c = coeff * cu * cv
            cur = out.get(key)
            nc = c if cur is None else cur + c
            if not nc.is_zero():
                out[key] = nc
            else:
                out.pop(key, None)
    return out


def braided_commutator(V, a, b):
    """[a, b]_c = a b - m(c(a (x) b)) in T(V)."""
    first = a.concat(b)
    out = dict(first.support)
    for (nv, nu), coeff in braid_blocks(V, a, b).items():
        w = nv + nu
        cur = out.get(w)
        nc = -coeff if cur is None else cur - coeff
        if nc.is_zero():
            out.pop(w, None)
        else:
            out[w] = nc
    return TensorElement(out)


def braided_adjoint_power(V, i, power, target):
    """(ad_c x_i)^power applied to target."""
    xi = TensorElement.generator(i)
    out = target
    for _ in range(power):
        out = braided_commutator(V, xi, out)
    return out


def symmetrizer_image_word(V, word, _cache=None):
    """Quantum symmetrizer S_n applied to a basis word: dict {word: coeff}.

    Well-defined on braid-group lifts because the braid equation holds
    (checked at space construction in callers). Computed by the coset
    recursion S_n = (S_{n-1} (x) id) . sum of descending crossing chains,
    which keeps the work polynomial in the output support size.
    """
    cache = {} if _cache is None else _cache
    return _symmetrize(V, tuple(word), cache)


def _symmetrize(V, word, cache):
    n = len(word)
    if n <= 1:
        return {word: one()}
    hit = cache.get(word)
    if hit is not None:
        return hit
    out = {}
    # chain k moves the letter at slot k to the last slot (k = n-1: identity)
    for k in range(n):
        coeff = one()
        w = word
        for pos in range(k, n - 1):
            c, w = apply_braiding_word(V, w, pos)
            coeff = coeff * c
        prefix, last = w[:-1], w[-1]
        for pw, pc in _symmetrize(V, prefix, cache).items():
            key = pw + (last,)
            val = pc * coeff
            cur = out.get(key)
            nv = val if cur is None else cur + val
            if nv.is_zero():
                out.pop(key, None)
            else:
                out[key] = nv
    cache[word] = out
    return out


def matsumoto_symmetrizer(V, element, _cache=None):
    """Quantum symmetrizer S_n applied to a homogeneous tensor element."""
    cache = {} if _cache is None else _cache
    out = {}
    for w, c in element.support.items():
        row_axpy(out, c, symmetrizer_image_word(V, w, _cache=cache))
    return TensorElement(out)


def _word_blocks(V, degree):
    """Partition basis words of the given degree into symmetrizer-invariant
    blocks (connected components of the braid-group action)."""
    theta = V.rank
    if theta**degree > DENSE_WORD_BUDGET:
        raise MemoryError(
            f"{theta}^{degree} basis words exceed the dense symmetrizer budget; "
            "use the rewriting engine instead"
        )
    seen = set()
    blocks = []
    for start in product(range(theta), repeat=degree):
        if start in seen:
            continue
        block = []
        stack = [start]
        seen.add(start)
        while stack:
            w = stack.pop()
            block.append(w)
            for pos in range(degree - 1):
                _, nw = apply_braiding_word(V, w, pos)
                if nw not in seen:
                    seen.add(nw)
                    stack.append(nw)
        blocks.append(block)
    return blocks


def symmetrizer_rank(V, degree, _cache=None):
    """Exact rank of S_degree on V^(x)degree, blockwise."""
    if degree <= 1:
        return V.rank if degree == 1 else 1
    cache = {} if _cache is None else _cache
    total = 0
    for block in _word_blocks(V, degree):
        ech = Echelon()
        for w in block:
            ech.add(symmetrizer_image_word(V, w, _cache=cache))
        total += ech.rank
    return total


def nichols_dims(V, max_degree):
    """Graded dimensions of the Nichols algebra through max_degree."""
    cache = {}
    dims = [1]
    for d in range(1, max_degree + 1):
        dims.append(symmetrizer_rank(V, d, _cache=cache))
    return dims


def ideal_component(V, degree):
    """Basis of ker S_degree as TensorElements."""
    if degree <= 1:
        return []
    basis = []
    cache = {}
    for block in _word_blocks(V, degree):
        # equations indexed by output word: sum_w S[out][w] x_w = 0
        mat = {}
        for w in block:
            for out_word, c in symmetrizer_image_word(V, w, _cache=cache).items():
                mat.setdefault(out_word, {})[w] = c
        rows = list(mat.values())
        for vec in nullspace(rows, block):
            basis.append(TensorElement(vec))
    return basis


def is_in_nichols_ideal(V, element):
    """True iff the quantum symmetrizer kills the (homogeneous) element."""
    if element.is_zero():
        return True
    element.degree()  # raises if inhomogeneous
    return matsumoto_symmetrizer(V, element).is_zero()


def braided_coproduct(V, element):
    """Coproduct of T(V) with primitive generators, as {(u, v): coeff}.

    Computed by folding letters through the braided-bialgebra rule
    Delta(ab) = Delta(a) Delta(b) with (a (x) b)(s (x) t) = a c(b (x) s) t.
    """
    out = {}
    for w, c in element.support.items():
        terms = {((), ()): one()}
        for letter in w:
            nxt = {}
            for (u, v), coeff in terms.items():
                # times (x_letter (x) 1): crosses v over the letter
                cb, nl, nv = braid_word_blocks(V, v, (letter,))
                key = (u + nl, nv)
                cur = nxt.get(key)
                val = coeff * cb
                nxt[key] = val if cur is None else cur + val
                # times (1 (x) x_letter): no crossing
                key = (u, v + (letter,))
                cur = nxt.get(key)
                nxt[key] = coeff if cur is None else cur + coeff
            terms = {k: v2 for k, v2 in nxt.items() if not v2.is_zero()}
        for key, coeff in terms.items():
            val = coeff * c
            cur = out.get(key)
            nv2 = val if cur is None else cur + val
            if nv2.is_zero():
                out.pop(key, None)
            else:
                out[key] = nv2
    return out


def reduced_coproduct(V, element):
    """Coproduct with the (x (x) 1) and (1 (x) x) terms removed."""
    full = braided_coproduct(V, element)
    return {k: v for k, v in full.items() if k[0] and k[1]}


def root_vector_word(V, alpha):
    """A Lyndon-word based PBW root vector of multidegree alpha.

    Chooses the lexicographically smallest Lyndon word with letter counts
    alpha and brackets it along its standard factorization. Degree-only
    convention; validated against ideal membership in tests.
    """
    letters = []
    for i, a in enumerate(alpha):
        letters.extend([i] * a)
    if len(letters) == 1:
        return TensorElement.generator(letters[0])
    word = _smallest_lyndon(tuple(sorted(letters)))
    if word is None:
        raise ValueError(f"no Lyndon word of multidegree {alpha}")
    return _bracket_lyndon(V, word)


def _is_lyndon(w):
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


def _smallest_lyndon(sorted_letters):
    best = None
    for perm in sorted(set(permutations(sorted_letters))):
        if _is_lyndon(perm):
            return perm
    return best


def _bracket_lyndon(V, w):
    if len(w) == 1:
        return TensorElement.generator(w[0])
    # standard factorization: w = uv with v the longest proper Lyndon suffix
    for split in range(1, len(w)):
        v = w[split:]
        if _is_lyndon(v):
            u = w[:split]
            return braided_commutator(V, _bracket_lyndon(V, u), _bracket_lyndon(V, v))
    raise ValueError(f"{w} is not a Lyndon word")
