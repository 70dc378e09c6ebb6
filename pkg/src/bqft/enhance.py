"""Finite type enhancements of the biquandle counting invariant."""
import random
from collections import Counter
from fractions import Fraction

from .arrow import AlgebraElement, expand, inner_product
from .labeling import enumerate_labelings


class EnhancementError(ValueError):
    pass


class EnhancementValue:
    """Multiset of inner products, one per labeling, with a polynomial view."""

    def __init__(self, values):
        self.multiset = sorted(values)

    @classmethod
    def from_polynomial(cls, poly):
        return cls([e for e, k in poly.items() for _ in range(k)])

    @property
    def counting(self):
        return len(self.multiset)

    @property
    def polynomial(self):
        """``{exponent: coefficient}`` in ascending exponent order."""
        return dict(sorted(Counter(self.multiset).items()))

    def render(self):
        if not self.multiset:
            return "0"
        terms = []
        for e, k in self.polynomial.items():
            if e == 0:
                terms.append(str(k))
                continue
            mono = "u" if e == 1 else f"u^{e}"
            terms.append(mono if k == 1 else f"{k}{mono}")
        return " + ".join(terms)

    def to_json(self):
        return {"counting": self.counting, "multiset": self.multiset,
                "polynomial": self.render()}

    def __eq__(self, other):
        if isinstance(other, EnhancementValue):
            return self.multiset == other.multiset
        return NotImplemented

    def __repr__(self):
        return f"EnhancementValue({self.render()!r})"

    __str__ = render


def element_components(a):
    cs = {d.n_circles for d, _ in a}
    if len(cs) > 1:
        raise EnhancementError(f"element mixes component counts {sorted(cs)}")
    return cs.pop() if cs else None


def enhancement(d, b, a, n):
    """Phi_X^A of ``d``: inner products of ``a`` with every labeled expansion."""
    c = element_components(a)
    if c is not None and c != d.n_circles:
        raise EnhancementError(
            f"element lives on {c} circles but the diagram has {d.n_circles}")
    values = [inner_product(a, expand(d, f, n)) for f in enumerate_labelings(d, b)]
    return EnhancementValue(values)


def parity_oracle(d):
    """P - N over the odd-parity arrows of a one-component diagram.

    Counted straight from the endpoint sequence: an arrow is odd when an odd
    number of endpoints sits strictly between its two ends.
    """
    if d.n_circles != 1:
        raise EnhancementError("parity oracle needs a single component")
    seq = d.circles[0]
    where = {}
    for pos, code in enumerate(seq):
        where.setdefault(code // 2, []).append(pos)
    total = 0
    for arrow, (p, q) in where.items():
        if (q - p - 1) % 2:
            total += d.signs[arrow]
    return total


def linking_number(d, i, j):
    """``(lk_{i/j}, lk_{j/i}, lk)`` for components ``i`` and ``j``.

    ``lk_{i/j}`` is the signed count of arrows with tail on ``i`` and head on
    ``j``.  ``lk`` is their half-sum, a Fraction when it is not integral.
    """
    c = d.n_circles
    if i == j or not (0 <= i < c and 0 <= j < c):
        raise EnhancementError(f"bad component pair ({i}, {j}) for {c} components")
    ends = d.ends()
    lk_ij = lk_ji = 0
    for arrow, ((tc, _), (hc, _)) in enumerate(ends):
        if (tc, hc) == (i, j):
            lk_ij += d.signs[arrow]
        elif (tc, hc) == (j, i):
            lk_ji += d.signs[arrow]
    total = Fraction(lk_ij + lk_ji, 2)
    return lk_ij, lk_ji, int(total) if total.denominator == 1 else total


def linking_element(b):
    """Degree-1 two-component element counting signed mixed-colour crossings.

    Every inter-component one-arrow diagram whose over and under labels
    differ gets coefficient equal to its sign.
    """
    from .arrow import enumerate_basis
    terms = {}
    for g in enumerate_basis(b, 1, 2):
        ((tc, _), (hc, _)), = g.ends()
        oi, _, ui, _ = g.labels[0]
        if tc != hc and oi != ui:
            terms[g] = g.signs[0]
    return AlgebraElement(terms)


def _solve(rows, target):
    """Exact least-norm-free solve of ``rows @ x = target``; None if inconsistent."""
    m = [[Fraction(v) for v in r] + [Fraction(t)] for r, t in zip(rows, target)]
    ncols = len(rows[0]) if rows else 0
    piv_cols, r = [], 0
    for col in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        m[r] = [v / m[r][col] for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                m[i] = [a - m[i][col] * c for a, c in zip(m[i], m[r])]
        piv_cols.append(col)
        r += 1
    if any(row[-1] for row in m[r:]):
        return None
    x = [Fraction(0)] * ncols
    for i, col in enumerate(piv_cols):
        x[col] = m[i][-1]
    return x


def fit_element(p, probes, functional):
    """Combination of ``p``'s vectors matching ``functional`` on labeled probes.

    ``probes`` are diagrams; ``functional(d)`` gives the wanted inner product
    for every labeling of ``d``.  Returns an AlgebraElement or None.
    """
    elements = p.elements()
    rows, target = [], []
    for d in probes:
        want = functional(d)
        for f in enumerate_labelings(d, p.biquandle):
            e = expand(d, f, p.degree)
            rows.append([inner_product(a, e) for a in elements])
            target.append(want)
    x = _solve(rows, target)
    if x is None or any(v.denominator != 1 for v in x):
        return None
    total = AlgebraElement()
    for coeff, a in zip(x, elements):
        total = total + a * int(coeff)
    return total


def parity_probes(seed=0, count=30, max_arrows=5):
    from .gauss import parse_gauss_code, random_diagram
    rng = random.Random(seed)
    probes = [parse_gauss_code("O1+U2+U1+O2+")]
    probes += [random_diagram(rng, rng.randint(1, max_arrows), 1) for _ in range(count)]
    return probes


def parity_element(p):
    """The degree-1 element whose exponent is P - N, fitted on probe diagrams."""
    return fit_element(p, parity_probes(), parity_oracle)


def is_nonclassical(d, b, a, n=1):
    """True when some exponent is nonzero, which rules out a classical knot."""
    return any(enhancement(d, b, a, n).multiset)
