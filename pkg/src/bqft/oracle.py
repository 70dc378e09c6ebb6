"""Slow brute-force references, used by the tests to cross-check fast code."""
import random
from itertools import product

from .arrow import _skeletons, basis_index, enumerate_basis, expand
from .gauss import GaussDiagram, legal_moves, move_with_map
from .labeling import enumerate_labelings, transport
from .linalg import IntMatrix

BRUTE_LIMIT = 10 ** 7
STACK_LIMIT = 2 * 10 ** 6
MAX_STACK_ARROWS = 4


class OracleSizeError(ValueError):
    pass


def brute_labelings(d, b):
    """Every assignment of elements to semiarcs, filtered by the crossing rule."""
    ns = d.n_semiarcs
    if b.n ** ns > BRUTE_LIMIT:
        raise OracleSizeError(f"{b.n}^{ns} assignments exceed {BRUTE_LIMIT}")
    out = []
    cross = list(zip(d.signs, d.crossing_semiarcs()))
    for f in product(b.elements, repeat=ns):
        ok = True
        for sign, (oi, oo, ui, uo) in cross:
            if sign > 0:
                ok = b.up(f[ui], f[oi]) == f[uo] and b.down(f[oi], f[ui]) == f[oo]
            else:
                ok = b.up(f[uo], f[oo]) == f[ui] and b.down(f[oo], f[uo]) == f[oi]
            if not ok:
                break
        if ok:
            out.append(f)
    return out


def all_diagrams(k, c):
    """Canonical unlabeled diagrams with exactly ``k`` arrows on ``c`` circles."""
    found = set()
    for sk in _skeletons(k, c):
        for signs in product((1, -1), repeat=k):
            found.add(GaussDiagram(sk.circles, signs).canonical())
    return sorted(found, key=lambda g: g.sort_key())


def _grows_to(move, k):
    return k + {"R1": 1, "R2": 2}.get(move, 0)


def global_relation_stack(b, n, c=1, max_arrows=None):
    """Truncated expansion differences over move-related labeled diagrams.

    Every diagram with at most ``n + 2`` arrows is paired with each diagram
    reached by one insertion or R3 move that stays within that bound; the
    deletions give the same pairs read backwards.  Rows are over the
    ``enumerate_basis(b, n, c)`` columns.  ``max_arrows`` raises the bound.
    """
    top = n + 2 if max_arrows is None else max_arrows
    if top > MAX_STACK_ARROWS:
        # skeleton enumeration walks (2k)! endpoint orders
        raise OracleSizeError(f"{top} arrows exceed {MAX_STACK_ARROWS}")
    diagrams = [d for k in range(top + 1) for d in all_diagrams(k, c)]
    work = sum(b.n ** d.n_semiarcs for d in diagrams)
    if work > STACK_LIMIT:
        raise OracleSizeError(f"{work} labeled diagrams exceed {STACK_LIMIT}")
    index = basis_index(enumerate_basis(b, n, c))
    rows = []
    seen = set()
    for d in diagrams:
        labs = enumerate_labelings(d, b)
        if not labs:
            continue
        for move, site, var in legal_moves(d):
            if move not in ("R1", "R2", "R3") or _grows_to(move, d.n_arrows) > top:
                continue
            d2, smap = move_with_map(d, move, site, var)
            for f in labs:
                f2 = transport(d2, smap, f, b)
                diff = (expand(d, f, n) - expand(d2, f2, n)).without_empty()
                if not diff:
                    continue
                row = tuple(sorted(diff.to_sparse(index).items()))
                if row not in seen:
                    seen.add(row)
                    rows.append(dict(row))
    return IntMatrix.from_rows(rows, len(index))


def move_walk(d, f, steps, seed, b, max_arrows=8):
    """Yield ``(move, d, f)`` after each of ``steps`` random legal moves.

    The labeling is carried along; insertions are skipped once the diagram
    holds ``max_arrows`` arrows.
    """
    rng = random.Random(seed)
    for _ in range(steps):
        moves = legal_moves(d, inserts=d.n_arrows < max_arrows)
        if not moves:
            moves = legal_moves(d)
        move, site, var = rng.choice(moves)
        d2, smap = move_with_map(d, move, site, var)
        f = transport(d2, smap, f, b)
        d = d2
        yield move, d, f


def random_move_walk(d, f, steps, seed, b, max_arrows=8):
    """The diagram and labeling left after ``steps`` random legal moves."""
    for _, d, f in move_walk(d, f, steps, seed, b, max_arrows):
        pass
    return d, f


def surface_genus(d):
    """Genus of the closed surface carrying ``d`` (0 exactly for classical diagrams).

    Each crossing gets the counterclockwise rotation of its four half-edges
    fixed by its sign; faces are the orbits of rotation after edge reversal.
    A diagram whose arrows do not connect all circles is treated as one
    surface per connected piece, so split links still give 0.
    """
    out_dart, in_dart = {}, {}
    for ci, circ in enumerate(d.circles):
        k = len(circ)
        for p in range(k):
            s = d.semiarc(ci, p)
            out_dart[(ci, p)] = (s, 0)
            in_dart[(ci, (p + 1) % k)] = (s, 1)
    rot = {}
    for a, (t, h) in enumerate(d.ends()):
        oo, oi, uo, ui = out_dart[t], in_dart[t], out_dart[h], in_dart[h]
        ring = [oo, uo, oi, ui] if d.signs[a] > 0 else [oo, ui, oi, uo]
        for i, x in enumerate(ring):
            rot[x] = ring[(i + 1) % 4]
    faces, seen = 0, set()
    for x in rot:
        if x in seen:
            continue
        faces += 1
        while x not in seen:
            seen.add(x)
            x = rot[(x[0], 1 - x[1])]
    pieces = _pieces(d)
    euler = d.n_arrows - 2 * d.n_arrows + faces
    # each connected piece with arrows contributes 2 - 2g
    return (2 * pieces - euler) // 2


def _pieces(d):
    parent = list(range(d.n_circles))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for (tc, _), (hc, _) in d.ends():
        parent[find(tc)] = find(hc)
    return len({find(ci) for ci, circ in enumerate(d.circles) if circ})
