"""Labeled Reidemeister relations and truncated labeled Polyak algebras.

A move instance is a local picture: a few strand pieces carrying the move's
arrows, with given labels on the incoming ends.  Its relation in degree n
is embedded into every context: extra locally labeled arrows placed around
the pieces on the c circles.  For context C the relation is

    sum_{T <= site A} D(C + T)  -  sum_{T <= site B} D(C + T),

truncated to diagrams with at most n arrows.  The truncated Polyak algebra
is the integer kernel of the stacked relations over the arrow basis.
"""
import random
from dataclasses import dataclass, field
from itertools import permutations, product

from . import arrow as arr
from .arrow import AlgebraElement, basis_index, enumerate_basis, inner_product
from .gauss import GaussDiagram, compositions
from .linalg import IntMatrix, integer_kernel, rank


class TangleError(ValueError):
    pass


# Move pictures.  A side is a list of strand pieces; a piece lists the arrow
# endpoints met along the strand as (arrow, end) with end 0 = tail.  Signs are
# per arrow.  Both sides of a move share the strands and their incoming labels.

def r1_pattern(first, sign):
    piece = [(0, 0), (0, 1)] if first == "tail" else [(0, 1), (0, 0)]
    return {"A": ([piece], [sign]), "B": ([[]], []), "closed": True}


def r2_pattern(reverse, first_sign):
    over = [(0, 0), (1, 0)]
    under = [(1, 1), (0, 1)] if reverse else [(0, 1), (1, 1)]
    return {"A": ([over, under], [first_sign, -first_sign]),
            "B": ([[], []], []), "closed": True}


# arrows: 0 = top/middle, 1 = top/bottom, 2 = middle/bottom, all positive
R3_PATTERN = {
    "A": ([[(0, 0), (1, 0)], [(0, 1), (2, 0)], [(1, 1), (2, 1)]], [1, 1, 1]),
    "B": ([[(1, 0), (0, 0)], [(2, 0), (0, 1)], [(2, 1), (1, 1)]], [1, 1, 1]),
    "closed": False,
}


def move_patterns():
    """Every move picture used for relations, keyed by a readable name."""
    out = {}
    for first in ("tail", "head"):
        for sign in (1, -1):
            out[f"R1/{first}/{'+' if sign > 0 else '-'}"] = r1_pattern(first, sign)
    for reverse in (False, True):
        for fs in (1, -1):
            kind = "reverse" if reverse else "direct"
            out[f"R2/{kind}/{'+' if fs > 0 else '-'}"] = r2_pattern(reverse, fs)
    out["R3"] = R3_PATTERN
    return out


def solve_tangle(pieces, signs, ins, b, closed):
    """Labels of every arrow in a local tangle.

    ``ins`` are the incoming labels of the pieces.  When ``closed`` each
    piece must leave with its incoming label (the other side of the move has
    no crossings there).  Returns ``(arrow_labels, out_labels)``; raises if
    the solution is not unique.
    """
    # semiarc (i, j): piece i, after its j-th endpoint (j = -1 is incoming)
    unknown = [(i, j) for i, piece in enumerate(pieces) for j in range(len(piece))]
    sols = []
    for vals in product(b.elements, repeat=len(unknown)):
        lab = dict(zip(unknown, vals))
        for i, x in enumerate(ins):
            lab[(i, -1)] = x
        if closed and any(lab[(i, len(p) - 1)] != ins[i]
                          for i, p in enumerate(pieces) if p):
            continue
        at = {}
        for i, piece in enumerate(pieces):
            for j, (a, end) in enumerate(piece):
                at[(a, end)] = (lab[(i, j - 1)], lab[(i, j)])
        labels = []
        ok = True
        for a, sign in enumerate(signs):
            (oi, oo), (ui, uo) = at[(a, 0)], at[(a, 1)]
            if not arr.is_locally_valid(sign, (oi, oo, ui, uo), b):
                ok = False
                break
            labels.append((oi, oo, ui, uo))
        if ok:
            outs = tuple(lab[(i, len(p) - 1)] for i, p in enumerate(pieces))
            sols.append((labels, outs))
    if len(sols) != 1:
        raise TangleError(f"tangle with inputs {ins} has {len(sols)} labelings")
    return sols[0]


@dataclass(frozen=True)
class RelationGenerator:
    element: AlgebraElement
    move: str
    labels: tuple
    context: tuple = field(default=(), compare=False)


def _site_instances(pattern, b):
    """Labeled sides of one move picture: yields (ins, sideA, sideB).

    A side is (pieces, signs, arrow labels or None).
    """
    (pa, sa), (pb, sb) = pattern["A"], pattern["B"]
    strands = len(pa)
    if b is None:
        yield (), (pa, sa, None), (pb, sb, None)
        return
    for ins in product(b.elements, repeat=strands):
        la, outa = solve_tangle(pa, sa, ins, b, pattern["closed"])
        lb, outb = solve_tangle(pb, sb, ins, b, pattern["closed"])
        if outa != outb:
            raise TangleError(f"move sides disagree on outputs for inputs {ins}")
        yield ins, (pa, sa, la), (pb, sb, lb)


def _arrangements(n_pieces, n_ends, c):
    """Ways to lay pieces and context endpoints on c circles.

    Yields lists of circles; each circle is a list of items ``("p", i)`` or
    ``("e", code)``.  Rotations of the first circle are partly pruned.
    """
    items = [("p", i) for i in range(n_pieces)] + [("e", k) for k in range(n_ends)]
    for perm in permutations(items):
        for cuts in compositions(len(items), c):
            circles, pos = [], 0
            for size in cuts:
                circles.append(list(perm[pos:pos + size]))
                pos += size
            if c == 1 and perm and perm[0] != items[0]:
                continue
            yield circles


def _assemble(circles_items, side, ctx_signs, ctx_labels):
    pieces, signs, labels = side
    n_site = len(signs)
    circles = []
    for items in circles_items:
        row = []
        for kind, v in items:
            if kind == "p":
                row.extend(2 * a + end for a, end in pieces[v])
            else:
                row.append(2 * n_site + v)
        circles.append(row)
    all_signs = list(signs) + list(ctx_signs)
    all_labels = None if labels is None else list(labels) + list(ctx_labels)
    return GaussDiagram(circles, all_signs, all_labels)


def relation_generators(b, n, c=1, moves=None):
    """Deduplicated labeled Reidemeister relations for ``A^X_{n,c}``.

    ``b`` may be None for the unlabeled construction.  ``moves`` optionally
    restricts the move pictures by name prefix (e.g. ``("R1", "R2")``).
    """
    if n < 1:
        raise ValueError("degree must be at least 1")
    choices = arr.arrow_labelings(b) if b is not None else [(1, None), (-1, None)]
    seen = {}
    for name, pattern in move_patterns().items():
        if moves is not None and not name.startswith(tuple(moves)):
            continue
        instances = list(_site_instances(pattern, b))
        n_pieces = len(pattern["A"][0])
        for k in range(0, n):
            arrangements = list(_arrangements(n_pieces, 2 * k, c))
            for ctx in product(choices, repeat=k):
                ctx_signs = [s for s, _ in ctx]
                ctx_labels = [l for _, l in ctx]
                forced_a = None
                for circles_items in arrangements:
                    for ins, side_a, side_b in instances:
                        ga = _assemble(circles_items, side_a, ctx_signs, ctx_labels)
                        gb = _assemble(circles_items, side_b, ctx_signs, ctx_labels)
                        ctx_a = range(len(side_a[1]), len(side_a[1]) + k)
                        ctx_b = range(len(side_b[1]), len(side_b[1]) + k)
                        rel = (arr.subdiagram_sum(ga, n, ctx_a)
                               - arr.subdiagram_sum(gb, n, ctx_b))
                        if rel and rel not in seen and -rel not in seen:
                            seen[rel] = RelationGenerator(
                                rel, name, ins, (tuple(map(tuple, circles_items)), tuple(ctx)))
    return list(seen.values())


@dataclass
class PolyakBasis:
    biquandle: object
    degree: int
    components: int
    basis: list
    vectors: list
    relation_rank: int
    relations: list = field(default_factory=list, repr=False)

    @property
    def dim_arrow(self):
        return len(self.basis)

    @property
    def dim(self):
        return len(self.vectors)

    def element(self, i):
        return AlgebraElement.from_vector(self.vectors[i], self.basis)

    def elements(self):
        return [self.element(i) for i in range(self.dim)]

    def contains(self, a):
        """True if ``a`` is orthogonal to every relation."""
        return all(inner_product(a, r.element) == 0 for r in self.relations)

    def to_json(self):
        return {
            "degree": self.degree,
            "components": self.components,
            "dim_arrow": self.dim_arrow,
            "relation_rank": self.relation_rank,
            "dim": self.dim,
            "basis": [d.to_json() for d in self.basis],
            "vectors": self.vectors,
        }


def relation_matrix(relations, index):
    return [r.element.to_sparse(index) for r in relations]


def polyak_basis(b, n, c=1, relations=None):
    """Integer basis of the truncated labeled Polyak algebra ``P^X_{n,c}``.

    The kernel lattice is reported in Hermite normal form, then rebased so
    that the first vector is the sum of all of them (unimodular; puts an
    automorphism-symmetric element first), signed so that its last nonzero
    entry is positive.
    """
    basis = enumerate_basis(b, n, c)
    index = basis_index(basis)
    if relations is None:
        relations = relation_generators(b, n, c)
    rows = relation_matrix(relations, index)
    r = rank(rows)
    kernel = integer_kernel(IntMatrix.from_rows(rows, len(basis)))
    if len(kernel) > 1:
        total = [sum(col) for col in zip(*kernel)]
        kernel = [total] + kernel[1:]
    if kernel:
        # positive-sign diagrams sort last; make the first vector end positive
        last = next(v for v in reversed(kernel[0]) if v)
        if last < 0:
            kernel[0] = [-v for v in kernel[0]]
    return PolyakBasis(b, n, c, basis, kernel, r, relations)


def is_orthogonal(p):
    index = basis_index(p.basis)
    rows = relation_matrix(p.relations, index)
    for v in p.vectors:
        for row in rows:
            if sum(c * v[j] for j, c in row.items()):
                return False
    return True


def verify_invariance(p, trials=100, seed=0, max_arrows=6):
    """Randomized invariance check of every basis vector.

    Each trial draws a random diagram with at most ``max_arrows`` arrows,
    one of its labelings, and a random legal move, then compares inner
    products before and after.  Returns a dict with counts and failures.
    """
    from .gauss import legal_moves, move_with_map, random_diagram
    from .labeling import enumerate_labelings, transport
    from .arrow import expand

    rng = random.Random(seed)
    elements = p.elements()
    failures = []
    checked = 0
    attempts = 0
    while checked < trials and attempts < 50 * trials:
        attempts += 1
        d = random_diagram(rng, rng.randint(0, max_arrows), p.components)
        labs = enumerate_labelings(d, p.biquandle)
        if not labs:
            continue
        f = rng.choice(labs)
        moves = legal_moves(d)
        r3 = [m for m in moves if m[0] == "R3"]
        mv, site, var = rng.choice(r3 if r3 and rng.random() < 0.5 else moves)
        d2, smap = move_with_map(d, mv, site, var)
        f2 = transport(d2, smap, f, p.biquandle)
        e1, e2 = expand(d, f, p.degree), expand(d2, f2, p.degree)
        for i, a in enumerate(elements):
            v1, v2 = inner_product(a, e1), inner_product(a, e2)
            if v1 != v2:
                failures.append({"vector": i, "diagram": d.to_json(), "labeling": f,
                                 "move": mv, "site": site, "variant": var,
                                 "before": v1, "after": v2})
        checked += 1
    return {"trials": checked, "failures": failures}


def _phi(b, x, y):
    """Positive one-arrow diagram with under input ``x`` and over input ``y``."""
    labels = arr.make_labeled_arrow(1, y, x, b)
    return AlgebraElement.basis(GaussDiagram([[0, 1]], [1], [labels]).canonical())


def cocycle_functional(b, x, y, z):
    """Biquandle 2-cocycle condition at ``(x, y, z)`` as a one-arrow vector.

    ``x``, ``y``, ``z`` enter the bottom, middle and top strands of the R3
    picture.  In the crossing convention used here the condition reads

        phi(y, z) + phi(x, z_y) + phi(x^{z_y}, y^z)
          - phi(x, y) - phi(x^y, z) - phi(y_x, z_{x^y}) = 0,

    which for a quandle is phi(x, z) + phi(x^z, y^z) = phi(x, y) + phi(x^y, z).
    """
    up, down = b.up, b.down
    zy = down(z, y)
    xy = up(x, y)
    return (_phi(b, y, z) + _phi(b, x, zy) + _phi(b, up(x, zy), up(y, z))
            - _phi(b, x, y) - _phi(b, xy, z) - _phi(b, down(y, x), down(z, xy)))


def r3_degree1_generators(b):
    """Degree-1 R3 generators, one per input triple (top, middle, bottom)."""
    out = {}
    for ins, side_a, side_b in _site_instances(R3_PATTERN, b):
        ga = _assemble([[("p", 0), ("p", 1), ("p", 2)]], side_a, [], [])
        gb = _assemble([[("p", 0), ("p", 1), ("p", 2)]], side_b, [], [])
        out[ins] = (arr.subdiagram_sum(ga, 1) - arr.subdiagram_sum(gb, 1)).without_empty()
    return out
