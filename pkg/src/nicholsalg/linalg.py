"""Sparse exact linear algebra over cyclotomic fields.

Rows are dicts {column_key: CycNumber}. Column keys can be arbitrary
hashable objects (basis words, tensor indices); an explicit key order is
only needed where nullspaces are extracted.
"""


def row_is_zero(row):
    return all(v.is_zero() for v in row.values())


def row_scale(row, c):
    return {k: v * c for k, v in row.items()}


def row_axpy(target, coeff, source):
    """target += coeff * source, dropping zeros; returns target (mutated)."""
    for k, v in source.items():
        cur = target.get(k)
        nv = v * coeff if cur is None else cur + v * coeff
        if nv.is_zero():
            target.pop(k, None)
        else:
            target[k] = nv
    return target


class Echelon:
    """Incremental reduced echelon form with pluggable pivot order."""

    def __init__(self, key=None):
        self.pivots = {}  # pivot column -> row (pivot coeff 1)
        self.key = key or (lambda c: c)

    def reduce(self, row):
        """Fully reduce a row against the current basis; returns a new dict."""
        row = {k: v for k, v in row.items() if not v.is_zero()}
        for col in sorted(row, key=self.key):
            piv = self.pivots.get(col)
            if piv is not None:
                row_axpy(row, -row[col], piv)
        return row

    def add(self, row):
        """Reduce and insert; returns the reduced row (empty if dependent)."""
        row = self.reduce(row)
        if not row:
            return row
        col = min(row, key=self.key)
        inv = row[col].inverse()
        row = row_scale(row, inv)
        # back-substitute into existing pivot rows to keep the form reduced
        for pcol, prow in self.pivots.items():
            if col in prow:
                row_axpy(prow, -prow[col], row)
        self.pivots[col] = row
        return row

    @property
    def rank(self):
        return len(self.pivots)

    def contains(self, row):
        return not self.reduce(row)


def sparse_rank(rows, key=None):
    ech = Echelon(key=key)
    for row in rows:
        ech.add(row)
    return ech.rank


def nullspace(rows, columns, key=None):
    """Basis of the right kernel of the matrix whose rows are equations.

    columns is the full ordered list of column keys; returns a list of
    dicts {column: CycNumber} spanning {v : row . v = 0 for all rows}.
    """
    ech = Echelon(key=key)
    for row in rows:
        ech.add(row)
    from .cyclo import rational

    basis = []
    pivot_cols = set(ech.pivots)
    for free in columns:
        if free in pivot_cols:
            continue
        vec = {free: rational(1)}
        for pcol, prow in ech.pivots.items():
            c = prow.get(free)
            if c is not None and not c.is_zero():
                vec[pcol] = -c
        basis.append(vec)
    return basis


def span_dims_by(rows, grading):
    """Echelonize rows and count pivots grouped by grading(pivot column)."""
    ech = Echelon()
    for row in rows:
        ech.add(row)
    out = {}
    for col in ech.pivots:
        g = grading(col)
        out[g] = out.get(g, 0) + 1
    return out
