"""Exact integer linear algebra on sparse rows.

Rows are dicts ``{column: nonzero int}``.  Rank and row compression use a
fully reduced rational echelon form, whose entries stay bounded by minors;
lattice work (Hermite forms, integer kernels) uses Euclidean elimination
on the leading column.
"""
from fractions import Fraction
from math import lcm


class IntMatrix:
    """Sparse integer matrix; explicit zeros are never stored."""

    def __init__(self, rows, cols, entries=()):
        self.rows = rows
        self.cols = cols
        self.data = [dict() for _ in range(rows)]
        for i, j, v in entries:
            if v:
                self.data[i][j] = v

    @classmethod
    def from_dense(cls, dense, cols=None):
        rows = len(dense)
        if cols is None:
            cols = len(dense[0]) if dense else 0
        return cls(rows, cols, ((i, j, v) for i, r in enumerate(dense)
                                for j, v in enumerate(r)))

    @classmethod
    def from_rows(cls, sparse_rows, cols):
        m = cls(len(sparse_rows), cols)
        m.data = [{j: v for j, v in r.items() if v} for r in sparse_rows]
        return m

    def to_dense(self):
        out = [[0] * self.cols for _ in range(self.rows)]
        for i, r in enumerate(self.data):
            for j, v in r.items():
                out[i][j] = v
        return out

    def transpose(self):
        t = IntMatrix(self.cols, self.rows)
        for i, r in enumerate(self.data):
            for j, v in r.items():
                t.data[j][i] = v
        return t

    def to_text(self):
        lines = [f"{self.rows} {self.cols}"]
        for i, r in enumerate(self.data):
            for j in sorted(r):
                lines.append(f"{i} {j} {r[j]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        lines = [l.split() for l in text.splitlines() if l.strip()]
        rows, cols = map(int, lines[0])
        return cls(rows, cols, ((int(i), int(j), int(v)) for i, j, v in lines[1:]))

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __repr__(self):
        return f"IntMatrix({self.to_dense()})"


def _axpy(row, k, other):
    """row + k * other (new dict)."""
    out = dict(row)
    for j, v in other.items():
        w = out.get(j, 0) + k * v
        if w:
            out[j] = w
        else:
            out.pop(j, None)
    return out


def _comb(a, ra, b, rb):
    """a * ra + b * rb."""
    out = {}
    for j, v in ra.items():
        out[j] = a * v
    for j, v in rb.items():
        w = out.get(j, 0) + b * v
        if w:
            out[j] = w
        else:
            out.pop(j, None)
    return {j: v for j, v in out.items() if v}


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


class Echelon:
    """Incrementally maintained integer row echelon form.

    ``add`` reduces a new row against the stored pivots.  A row is keyed on
    its leading column among ``key_cols`` (all columns if None); rows whose
    key part vanishes are returned to the caller instead of stored.  Every
    update is a unimodular operation on the stored rows plus the new one.
    """

    def __init__(self, key_cols=None):
        self.pivots = {}
        self.key_cols = key_cols

    def _lead(self, row):
        if self.key_cols is None:
            return min(row) if row else None
        keys = [j for j in row if j < self.key_cols]
        return min(keys) if keys else None

    def add(self, row):
        row = dict(row)
        while True:
            c = self._lead(row)
            if c is None:
                return row
            p = self.pivots.get(c)
            if p is None:
                if row[c] < 0:
                    row = {j: -v for j, v in row.items()}
                self.pivots[c] = row
                return None
            a, b = row[c], p[c]
            if a % b == 0:
                row = _axpy(row, -(a // b), p)
                continue
            g, s, t = _xgcd(a, b)
            new_p = _comb(s, row, t, p)
            rest = _comb(b // g, row, -(a // g), p)
            if new_p[c] < 0:
                new_p = {j: -v for j, v in new_p.items()}
            self.pivots[c] = new_p
            row = rest

    @property
    def rank(self):
        return len(self.pivots)

    def reduced_rows(self):
        """Rows in Hermite normal form (positive pivots, reduced above)."""
        cols = sorted(self.pivots)
        rows = {c: dict(self.pivots[c]) for c in cols}
        for i, c in enumerate(cols):
            piv = rows[c][c]
            for c2 in cols[:i]:
                v = rows[c2].get(c, 0)
                q = v // piv
                if q:
                    rows[c2] = _axpy(rows[c2], -q, rows[c])
        return [rows[c] for c in cols]


def hnf(m):
    """Row-style Hermite normal form ``H`` and unimodular ``U`` with ``H = U m``."""
    n = m.rows
    cols = m.cols
    # augment each row with its identity row, shifted past the real columns
    ech = Echelon(key_cols=cols)
    zero_rows = []
    for i, r in enumerate(m.data):
        aug = dict(r)
        aug[cols + i] = 1
        left = ech.add(aug)
        if left is not None:
            zero_rows.append(left)
    pivot_rows = ech.reduced_rows()
    H = IntMatrix(n, cols)
    U = IntMatrix(n, n)
    for k, row in enumerate(pivot_rows + zero_rows):
        H.data[k] = {j: v for j, v in row.items() if j < cols}
        U.data[k] = {j - cols: v for j, v in row.items() if j >= cols}
    return H, U


def rational_rref(rows):
    """Reduced row echelon form over Q: ``{pivot column: row}``, pivots 1."""
    piv = {}
    for r in rows:
        row = {j: Fraction(v) for j, v in r.items() if v}
        hit = [j for j in row if j in piv]
        while hit:
            for j in hit:
                v = row.get(j)
                if v:
                    for k, w in piv[j].items():
                        x = row.get(k, 0) - v * w
                        if x:
                            row[k] = x
                        else:
                            row.pop(k, None)
            hit = [j for j in row if j in piv]
        if not row:
            continue
        c = min(row)
        inv = 1 / row[c]
        row = {j: v * inv for j, v in row.items()}
        for other in piv.values():
            v = other.get(c)
            if v:
                for k, w in row.items():
                    x = other.get(k, 0) - v * w
                    if x:
                        other[k] = x
                    else:
                        other.pop(k, None)
        piv[c] = row
    return piv


def _primitive(row):
    """Scale a rational row to coprime integers, leading entry positive."""
    den = lcm(*(v.denominator for v in row.values()))
    ints = {j: int(v * den) for j, v in row.items()}
    g = 0
    for v in ints.values():
        g = _xgcd(g, abs(v))[0] if g else abs(v)
    return {j: v // g for j, v in ints.items()}


def row_echelon(rows):
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech


def rank(m):
    rows = m.data if isinstance(m, IntMatrix) else m
    return len(rational_rref(rows))


def integer_kernel(m, reduce=True):
    """Basis of ``{v in Z^cols : m v = 0}``, as a list of dense vectors.

    The basis spans the full (saturated) integer kernel.  With ``reduce`` it
    is returned in Hermite normal form, which makes it canonical.
    """
    cols = m.cols
    rows = m.data
    # compress to integer multiples of the rational RREF rows: same rational
    # kernel, so the same integer kernel, and at most cols small rows
    rref = rational_rref(rows)
    h = [_primitive(rref[c]) for c in sorted(rref)]
    r = len(h)
    # row i of the transpose is column i of h, augmented with e_i
    ech = Echelon(key_cols=r)
    kernel = []
    for i in range(cols):
        aug = {k: row[i] for k, row in enumerate(h) if i in row}
        aug[r + i] = 1
        left = ech.add(aug)
        if left is not None:
            kernel.append({j - r: v for j, v in left.items()})
    if reduce:
        kernel = row_echelon(kernel).reduced_rows()
    return [[v.get(j, 0) for j in range(cols)] for v in kernel]


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))
