"""Finite biquandles stored as operation tables.

Elements are the integers ``1..n``.  ``up(x, y)`` is ``x^y`` and
``down(x, y)`` is ``x_y``; the block-matrix text form has row ``x`` and
column ``y``, with the ``x^y`` table on the left and ``x_y`` on the right.
"""
from itertools import product


class BiquandleError(ValueError):
    """Raised for malformed tables or failed axioms."""


class Biquandle:
    """An immutable finite biquandle.

    Construction always runs the full axiom check; every violation found is
    listed in the error message, not just the first one.
    """

    __slots__ = ("n", "_up", "_down", "_sinv", "_tinv", "_hash")

    def __init__(self, over_table, under_table):
        n = len(over_table)
        if n == 0:
            raise BiquandleError("a biquandle needs at least one element")
        for name, table in (("x^y", over_table), ("x_y", under_table)):
            if len(table) != n or any(len(row) != n for row in table):
                raise BiquandleError(f"{name} table is not {n}x{n}")
            for i, row in enumerate(table, 1):
                for j, v in enumerate(row, 1):
                    if not isinstance(v, int) or not 1 <= v <= n:
                        raise BiquandleError(
                            f"{name} entry ({i},{j}) = {v!r} not in 1..{n}")
        self.n = n
        # pad with a dummy row/column so elements index directly
        self._up = tuple([(0,) * (n + 1)] + [(0,) + tuple(r) for r in over_table])
        self._down = tuple([(0,) * (n + 1)] + [(0,) + tuple(r) for r in under_table])
        problems = _axiom_violations(self)
        if problems:
            raise BiquandleError("axiom violations:\n  " + "\n  ".join(problems))
        self._sinv = {self.S(x, y): (x, y) for x, y in self.pairs()}
        self._tinv = {self.T(x, y): (x, y) for x, y in self.pairs()}
        self._hash = hash((self._up, self._down))

    @property
    def elements(self):
        return range(1, self.n + 1)

    def pairs(self):
        return product(self.elements, repeat=2)

    def up(self, x, y):
        return self._up[x][y]

    def down(self, x, y):
        return self._down[x][y]

    @property
    def over_table(self):
        return [list(r[1:]) for r in self._up[1:]]

    @property
    def under_table(self):
        return [list(r[1:]) for r in self._down[1:]]

    def S(self, x, y):
        """The map ``(x, y) -> (y_x, x^y)``."""
        return self._down[y][x], self._up[x][y]

    def invert_S(self, u, v):
        return self._sinv[(u, v)]

    def T(self, x, y):
        """Crossing map ``(x, y) -> (x^y, y_x)``.

        With ``x`` the under-strand input and ``y`` the over-strand input this
        returns (under output, over output) at a positive crossing.
        """
        return self._up[x][y], self._down[y][x]

    def invert_T(self, u, v):
        return self._tinv[(u, v)]

    def is_quandle(self):
        return all(self.down(y, x) == y for x, y in self.pairs())

    def to_text(self):
        lines = [str(self.n)]
        for a, b in zip(self.over_table, self.under_table):
            lines.append(" ".join(str(v) for v in a + b))
        return "\n".join(lines) + "\n"

    def __eq__(self, other):
        return (isinstance(other, Biquandle)
                and self._up == other._up and self._down == other._down)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        rows = [a + b for a, b in zip(self.over_table, self.under_table)]
        return f"Biquandle({rows})"


def kink_solutions(b, x):
    """Kink partners of ``x``: the two sets whose sizes axiom (i) pins to one.

    First: ``w`` with ``w^x = x`` and ``x_w = w`` (kink entered over the
    crossing with a positive sign).  Second: ``w`` with ``x^w = w`` and
    ``w_x = x`` (entered under).
    """
    first = [w for w in b.elements if b.up(w, x) == x and b.down(x, w) == w]
    second = [w for w in b.elements if b.up(x, w) == w and b.down(w, x) == x]
    return first, second


def _axiom_violations(b):
    n = b.n
    els = range(1, n + 1)
    up, down = b.up, b.down
    out = []
    for x in els:
        first, second = kink_solutions(b, x)
        if len(first) != 1:
            out.append(f"axiom (i): x={x} has {len(first)} over-first kink labels {first}")
        if len(second) != 1:
            out.append(f"axiom (i): x={x} has {len(second)} under-first kink labels {second}")
    full = set(els)
    for y in els:
        if {up(x, y) for x in els} != full:
            out.append(f"axiom (ii): x -> x^y is not a bijection for y={y}")
    for x in els:
        if {down(y, x) for y in els} != full:
            out.append(f"axiom (ii): y -> y_x is not a bijection for x={x}")
    images = {}
    for x, y in product(els, repeat=2):
        images.setdefault((down(y, x), up(x, y)), []).append((x, y))
    for img, pre in sorted(images.items()):
        if len(pre) > 1:
            out.append(f"axiom (ii): S is not injective, {pre} -> {img}")
    for x, y, z in product(els, repeat=3):
        if up(up(x, y), z) != up(up(x, down(z, y)), up(y, z)):
            out.append(f"axiom (iii): first exchange law fails at {(x, y, z)}")
        if down(up(y, x), up(z, down(x, y))) != up(down(y, z), down(x, up(z, y))):
            out.append(f"axiom (iii): second exchange law fails at {(x, y, z)}")
        if down(down(x, y), z) != down(down(x, up(z, y)), down(y, z)):
            out.append(f"axiom (iii): third exchange law fails at {(x, y, z)}")
    return out


def is_biquandle(over_table, under_table):
    try:
        Biquandle(over_table, under_table)
    except BiquandleError:
        return False
    return True


def enumerate_biquandles(n):
    """Every biquandle structure on ``1..n`` (exhaustive, so only tiny n)."""
    if n > 2:
        raise BiquandleError(f"exhaustive sweep over {n}-element tables is too large")
    found = []
    cells = 2 * n * n
    for vals in product(range(1, n + 1), repeat=cells):
        over = [list(vals[i * n:(i + 1) * n]) for i in range(n)]
        under = [list(vals[n * n + i * n:n * n + (i + 1) * n]) for i in range(n)]
        if is_biquandle(over, under):
            found.append(Biquandle(over, under))
    return found


def parse_biquandle(text):
    """Parse block-matrix text (``n`` rows of ``2n`` integers).

    A leading line holding the single integer ``n`` is optional; ``#``
    starts a comment.
    """
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise BiquandleError(f"non-integer entry in line {raw!r}") from exc
    if rows and len(rows[0]) == 1 and len(rows) > 1:
        declared = rows.pop(0)[0]
        if declared != len(rows):
            raise BiquandleError(f"header says n={declared} but {len(rows)} rows follow")
    if not rows:
        raise BiquandleError("empty biquandle matrix")
    n = len(rows)
    for i, row in enumerate(rows, 1):
        if len(row) != 2 * n:
            raise BiquandleError(f"row {i} has {len(row)} entries, expected {2 * n}")
    return Biquandle([r[:n] for r in rows], [r[n:] for r in rows])


def load_biquandle(path):
    with open(path) as fh:
        return parse_biquandle(fh.read())


def make_alexander(m, t, s):
    """Alexander biquandle on Z_m: ``x^y = t x + (1 - s^-1 t) y``, ``x_y = s^-1 x``.

    Residue ``r`` is element ``r + 1``.
    """
    try:
        sinv = pow(s, -1, m)
        pow(t, -1, m)
    except ValueError:
        raise BiquandleError(f"t={t} and s={s} must be units mod {m}") from None
    over = [[(t * x + (1 - sinv * t) * y) % m + 1 for y in range(m)] for x in range(m)]
    under = [[(sinv * x) % m + 1 for _ in range(m)] for x in range(m)]
    return Biquandle(over, under)


def make_constant_action(sigma):
    """Constant action biquandle ``x^y = sigma(x)``, ``x_y = sigma^-1(x)``.

    ``sigma`` is a sequence with ``sigma[i-1]`` the image of ``i``.  The
    under-strand moves by ``sigma`` and the over-strand by its inverse, so a
    kink returns every label to itself.
    """
    n = len(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise BiquandleError(f"{list(sigma)} is not a permutation of 1..{n}")
    inverse = [0] * n
    for i, v in enumerate(sigma, 1):
        inverse[v - 1] = i
    over = [[sigma[x - 1]] * n for x in range(1, n + 1)]
    under = [[inverse[x - 1]] * n for x in range(1, n + 1)]
    return Biquandle(over, under)


def _check_group(table):
    n = len(table)
    els = range(n)
    if any(len(r) != n or sorted(r) != list(els) for r in table):
        raise BiquandleError("group table rows must be permutations of 0..n-1")
    if any(sorted(table[i][j] for i in els) != list(els) for j in els):
        raise BiquandleError("group table columns must be permutations of 0..n-1")
    ids = [e for e in els if all(table[e][x] == x == table[x][e] for x in els)]
    if not ids:
        raise BiquandleError("group table has no identity")
    for a, b, c in product(els, repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise BiquandleError(f"group table not associative at {(a, b, c)}")
    return ids[0]


def make_conjugation(group_table, k=1):
    """k-fold conjugation quandle ``x^y = y^-k x y^k`` of a group.

    ``group_table`` is a Cayley table on ``0..n-1``; group element ``g``
    becomes biquandle element ``g + 1``.
    """
    e = _check_group(group_table)
    n = len(group_table)
    mul = lambda a, b: group_table[a][b]
    inv = {a: next(b for b in range(n) if mul(a, b) == e) for a in range(n)}

    def power(g, m):
        base = g if m >= 0 else inv[g]
        acc = e
        for _ in range(abs(m)):
            acc = mul(acc, base)
        return acc

    over = [[mul(mul(power(y, -k), x), power(y, k)) + 1 for y in range(n)]
            for x in range(n)]
    under = [[x + 1] * n for x in range(n)]
    return Biquandle(over, under)


def symmetric_group_table(m):
    """Cayley table of S_m on permutations in lexicographic order."""
    from itertools import permutations
    perms = list(permutations(range(m)))
    index = {p: i for i, p in enumerate(perms)}
    return [[index[tuple(p[q[i]] for i in range(m))] for q in perms] for p in perms]


def cyclic_group_table(m):
    return [[(a + b) % m for b in range(m)] for a in range(m)]


def invert_S(b, pair):
    return b.invert_S(*pair)


FOX3 = [[1, 3, 2, 1, 1, 1], [3, 2, 1, 2, 2, 2], [2, 1, 3, 3, 3, 3]]
X1 = [[1, 1, 1, 1], [2, 2, 2, 2]]
X2 = [[2, 2, 2, 2], [1, 1, 1, 1]]


def from_matrix(rows):
    n = len(rows)
    return Biquandle([list(r[:n]) for r in rows], [list(r[n:]) for r in rows])


def fox3():
    return from_matrix(FOX3)


def x1():
    return from_matrix(X1)


def x2():
    return from_matrix(X2)


def trivial(n=1):
    return make_constant_action(list(range(1, n + 1)))
