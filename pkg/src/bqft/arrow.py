"""The labeled arrow algebra.

Basis elements are canonical locally labeled dashed-arrow diagrams (see
:class:`~bqft.gauss.GaussDiagram` with ``labels`` set).  An
:class:`AlgebraElement` is a sparse integer combination of them.
"""
import json
from collections import Counter
from itertools import combinations, permutations, product

from .gauss import GaussDiagram, compositions, from_json
from .labeling import labeled_diagram


def make_labeled_arrow(sign, first, second, b):
    """Complete two labels to ``(over_in, over_out, under_in, under_out)``.

    For a positive arrow ``(first, second)`` is ``(over_in, under_in)``; for a
    negative arrow it is ``(over_out, under_out)``.
    """
    if sign > 0:
        under_out, over_out = b.T(second, first)
        return (first, over_out, second, under_out)
    under_in, over_in = b.T(second, first)
    return (over_in, first, under_in, second)


def is_locally_valid(sign, labels, b):
    oi, oo, ui, uo = labels
    if sign > 0:
        return b.T(ui, oi) == (uo, oo)
    return b.T(uo, oo) == (ui, oi)


def arrow_labelings(b):
    """Every valid ``(sign, labels)`` pair for a single arrow."""
    out = []
    for sign in (1, -1):
        for x, y in b.pairs():
            out.append((sign, make_labeled_arrow(sign, x, y, b)))
    return out


class AlgebraElement:
    """Sparse integer combination of canonical diagrams."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for d, c in items:
                if c:
                    self.terms[d] = self.terms.get(d, 0) + c
            self.terms = {d: c for d, c in self.terms.items() if c}

    @classmethod
    def basis(cls, d):
        return cls({d: 1})

    def __add__(self, other):
        out = dict(self.terms)
        for d, c in other.terms.items():
            v = out.get(d, 0) + c
            if v:
                out[d] = v
            else:
                out.pop(d, None)
        return AlgebraElement(out)

    def __neg__(self):
        return AlgebraElement({d: -c for d, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        return AlgebraElement({d: k * c for d, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def coefficient(self, d):
        return self.terms.get(d, 0)

    def truncate(self, n):
        return AlgebraElement({d: c for d, c in self.terms.items() if d.n_arrows <= n})

    def without_empty(self):
        return AlgebraElement({d: c for d, c in self.terms.items() if d.n_arrows})

    def to_vector(self, index):
        """Dense coefficient vector over a basis given as ``{diagram: column}``."""
        vec = [0] * len(index)
        for d, c in self.terms.items():
            vec[index[d]] += c
        return vec

    def to_sparse(self, index):
        return {index[d]: c for d, c in self.terms.items()}

    @classmethod
    def from_vector(cls, vec, basis):
        return cls({basis[i]: c for i, c in enumerate(vec) if c})

    def to_json(self):
        return [{"diagram": d.to_json(), "coeff": c}
                for d, c in sorted(self.terms.items(), key=lambda t: t[0].sort_key())]

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls({from_json(t["diagram"]).canonical(): t["coeff"] for t in obj})

    def __repr__(self):
        inner = ", ".join(f"{c}*{d!r}" for d, c in self.terms.items())
        return f"AlgebraElement({inner})"


def inner_product(a, b):
    if len(a.terms) > len(b.terms):
        a, b = b, a
    return sum(c * b.terms.get(d, 0) for d, c in a.terms.items())


def subdiagram_sum(d, n, forced=()):
    """Sum of canonical restrictions of ``d`` to arrow subsets of size <= n.

    Only subsets containing every arrow in ``forced`` are used.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    forced = tuple(sorted(forced))
    free = [a for a in range(d.n_arrows) if a not in forced]
    counts = Counter()
    for k in range(0, n - len(forced) + 1):
        for extra in combinations(free, k):
            counts[d.restrict(forced + extra).canonical()] += 1
    return AlgebraElement(counts)


def expand(d, f, n):
    """Truncated dashed-arrow expansion of ``d`` labeled by ``f``.

    ``f`` is a labeling (tuple per semiarc) or None for the unlabeled
    expansion.  The empty subdiagram is included with coefficient 1.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    ld = d if f is None else labeled_diagram(d, f)
    return subdiagram_sum(ld, n)


def _skeletons(k, c):
    """Canonical unlabeled skeletons with ``k`` arrows on ``c`` circles."""
    seen = set()
    codes = list(range(2 * k))
    for perm in permutations(codes):
        for cuts in compositions(2 * k, c):
            circles, pos = [], 0
            for size in cuts:
                circles.append(perm[pos:pos + size])
                pos += size
            sk = GaussDiagram(circles, [1] * k).canonical()
            seen.add(sk)
    return sorted(seen, key=lambda g: g.sort_key())


def enumerate_basis(b, n, c=1):
    """Canonical locally labeled diagrams with 1..n arrows on c circles.

    ``b`` may be None for the unlabeled arrow algebra.  The result is sorted
    by (arrow count, skeleton, arrow attributes).
    """
    choices = arrow_labelings(b) if b is not None else [(1, None), (-1, None)]
    found = set()
    for k in range(1, n + 1):
        for sk in _skeletons(k, c):
            for attrs in product(choices, repeat=k):
                signs = [s for s, _ in attrs]
                labels = None if b is None else [l for _, l in attrs]
                found.add(GaussDiagram(sk.circles, signs, labels).canonical())
    return sorted(found, key=lambda g: g.sort_key())


def basis_index(basis):
    return {d: i for i, d in enumerate(basis)}
