"""Multi-component signed Gauss diagrams.

A diagram is a tuple of circles, each a cyclic sequence of arrow endpoints.
An endpoint is encoded as ``2 * arrow + end`` with ``end`` 0 for the tail
(over-instance) and 1 for the head (under-instance).  Arrows may carry a
4-tuple of labels ``(over_in, over_out, under_in, under_out)``; unlabeled
diagrams have ``labels = None``.

Semiarcs are numbered globally: circle ``c`` with ``k`` slots owns semiarcs
``offset(c) .. offset(c) + k - 1`` where semiarc ``offset(c) + j`` leaves
slot ``j``.  An empty circle owns a single semiarc.
"""
import json
import re
from itertools import product

TAIL, HEAD = 0, 1


class GaussCodeError(ValueError):
    pass


class MoveError(ValueError):
    pass


class GaussDiagram:
    __slots__ = ("circles", "signs", "labels", "_hash", "_ends")

    def __init__(self, circles, signs, labels=None):
        self.circles = tuple(tuple(c) for c in circles)
        self.signs = tuple(signs)
        # an arrowless diagram is the same whether or not it is 'labeled'
        self.labels = None if labels is None or not self.signs else tuple(tuple(l) for l in labels)
        self._hash = None
        self._ends = None

    # -- basic structure -------------------------------------------------
    @property
    def n_arrows(self):
        return len(self.signs)

    @property
    def n_circles(self):
        return len(self.circles)

    def ends(self):
        """``ends()[a] == ((circle, pos) of tail, (circle, pos) of head)``."""
        if self._ends is None:
            loc = [[None, None] for _ in self.signs]
            for ci, circ in enumerate(self.circles):
                for pos, code in enumerate(circ):
                    loc[code >> 1][code & 1] = (ci, pos)
            self._ends = tuple((t, h) for t, h in loc)
        return self._ends

    def semiarc_offsets(self):
        offs, acc = [], 0
        for circ in self.circles:
            offs.append(acc)
            acc += max(1, len(circ))
        return offs, acc

    @property
    def n_semiarcs(self):
        return self.semiarc_offsets()[1]

    def semiarc(self, ci, pos):
        """Global index of the semiarc leaving slot ``pos`` of circle ``ci``."""
        offs, _ = self.semiarc_offsets()
        k = len(self.circles[ci])
        return offs[ci] + (pos % k if k else 0)

    def crossing_semiarcs(self):
        """Per arrow: semiarc indices (over_in, over_out, under_in, under_out)."""
        offs, _ = self.semiarc_offsets()
        out = []
        for (tc, tp), (hc, hp) in self.ends():
            kt, kh = len(self.circles[tc]), len(self.circles[hc])
            out.append((offs[tc] + (tp - 1) % kt, offs[tc] + tp,
                        offs[hc] + (hp - 1) % kh, offs[hc] + hp))
        return out

    def parity(self, arrow):
        """Number of endpoints strictly between tail and head, mod 2."""
        (tc, tp), (hc, hp) = self.ends()[arrow]
        if tc != hc:
            raise ValueError("parity is defined for intra-component arrows only")
        k = len(self.circles[tc])
        return ((hp - tp) % k - 1) % 2

    # -- canonical forms -------------------------------------------------
    def _key(self, rotation):
        renum = {}
        tokens = []
        for circ, r in zip(self.circles, rotation):
            row = []
            for code in circ[r:] + circ[:r]:
                a = code >> 1
                if a not in renum:
                    renum[a] = len(renum)
                row.append(2 * renum[a] + (code & 1))
            tokens.append(tuple(row))
        order = sorted(renum, key=renum.get)
        if self.labels is None:
            attrs = tuple(self.signs[a] for a in order)
        else:
            attrs = tuple((self.signs[a],) + self.labels[a] for a in order)
        return tuple(tokens), attrs

    def canonical(self):
        """Least representative under independent rotation of every circle."""
        best = None
        for rot in product(*(range(max(1, len(c))) for c in self.circles)):
            key = self._key(rot)
            if best is None or key < best:
                best = key
        tokens, attrs = best
        if self.labels is None:
            return GaussDiagram(tokens, attrs)
        return GaussDiagram(tokens, [a[0] for a in attrs], [a[1:] for a in attrs])

    def unlabeled(self):
        return GaussDiagram(self.circles, self.signs)

    def with_labels(self, labels):
        return GaussDiagram(self.circles, self.signs, labels)

    def sort_key(self):
        if self.labels is None:
            attrs = self.signs
        else:
            attrs = tuple((s,) + l for s, l in zip(self.signs, self.labels))
        return (self.n_arrows, tuple(len(c) for c in self.circles), self.circles, attrs)

    def __eq__(self, other):
        return (isinstance(other, GaussDiagram) and self.circles == other.circles
                and self.signs == other.signs and self.labels == other.labels)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.circles, self.signs, self.labels))
        return self._hash

    def __repr__(self):
        if self.labels is None:
            return f"GaussDiagram({to_gauss_code(self)!r})"
        return f"GaussDiagram({to_gauss_code(self)!r}, labels={self.labels})"

    # -- sub-diagrams ----------------------------------------------------
    def restrict(self, arrows):
        """Keep only ``arrows`` (an iterable of arrow indices); circles stay."""
        keep = sorted(arrows)
        renum = {a: i for i, a in enumerate(keep)}
        circles = [[2 * renum[c >> 1] + (c & 1) for c in circ if (c >> 1) in renum]
                   for circ in self.circles]
        signs = [self.signs[a] for a in keep]
        labels = None if self.labels is None else [self.labels[a] for a in keep]
        return GaussDiagram(circles, signs, labels)

    # -- serialization ---------------------------------------------------
    def to_json(self):
        ends = self.ends()
        arrows = []
        for a, ((tc, tp), (hc, hp)) in enumerate(ends):
            entry = {"tail": [tc, tp], "head": [hc, hp], "sign": self.signs[a]}
            if self.labels is not None:
                entry["labels"] = list(self.labels[a])
            arrows.append(entry)
        return {"components": [len(c) for c in self.circles], "arrows": arrows}


def from_json(obj):
    if isinstance(obj, str):
        obj = json.loads(obj)
    circles = [[None] * k for k in obj["components"]]
    signs, labels = [], []
    for a, entry in enumerate(obj["arrows"]):
        tc, tp = entry["tail"]
        hc, hp = entry["head"]
        circles[tc][tp] = 2 * a
        circles[hc][hp] = 2 * a + 1
        signs.append(entry["sign"])
        labels.append(tuple(entry["labels"]) if "labels" in entry else None)
    if any(c is None for circ in circles for c in circ):
        raise GaussCodeError("JSON diagram has unfilled slots")
    if all(l is None for l in labels):
        labels = None
    elif any(l is None for l in labels):
        raise GaussCodeError("either all arrows carry labels or none do")
    return GaussDiagram(circles, signs, labels)


_TOKEN = re.compile(r"([OU])(\d+)([+-])", re.IGNORECASE)


def parse_gauss_code(code):
    """Parse a signed Gauss code such as ``"U1-O2-U3+O4+U2-O1-U4+O3+"``.

    Components are separated by ``;``.  The result keeps the reading order;
    call :meth:`GaussDiagram.canonical` to forget the base points.
    """
    text = re.sub(r"\s+", "", code)
    seen = {}
    parsed = []
    for ci, part in enumerate(text.split(";")):
        pos = 0
        row = []
        while pos < len(part):
            m = _TOKEN.match(part, pos)
            if m is None:
                raise GaussCodeError(f"malformed token at {part[pos:pos + 8]!r}")
            kind, ident, sign = m.group(1).upper(), int(m.group(2)), m.group(3)
            end = TAIL if kind == "O" else HEAD
            sgn = 1 if sign == "+" else -1
            rec = seen.setdefault(ident, {})
            if end in rec:
                raise GaussCodeError(f"crossing {ident} has two {kind} instances")
            rec[end] = sgn
            row.append((ident, end))
            pos = m.end()
        parsed.append(row)
    order = {}
    for row in parsed:
        for ident, _ in row:
            order.setdefault(ident, len(order))
    signs = [None] * len(order)
    for ident, rec in seen.items():
        if len(rec) != 2:
            missing = "U" if TAIL in rec else "O"
            raise GaussCodeError(f"crossing {ident} has no {missing} instance")
        if rec[TAIL] != rec[HEAD]:
            raise GaussCodeError(f"crossing {ident} has mismatched signs")
        signs[order[ident]] = rec[TAIL]
    circles = [[2 * order[i] + e for i, e in row] for row in parsed]
    return GaussDiagram(circles, signs)


def to_gauss_code(d):
    parts = []
    for circ in d.circles:
        toks = []
        for code in circ:
            a = code >> 1
            toks.append(("O" if code & 1 == TAIL else "U") + str(a + 1)
                        + ("+" if d.signs[a] > 0 else "-"))
        parts.append("".join(toks))
    return ";".join(parts)


def canonical_form(d):
    return d.canonical()


def unknot(c=1):
    return GaussDiagram([()] * c, ())


# -- Reidemeister moves ----------------------------------------------------
#
# Every move returns (new_diagram, semiarc_map) where semiarc_map[i] is the
# old semiarc whose label the new semiarc i inherits, or None for semiarcs
# created inside the move site.  Labels are dropped; labelings are
# transported separately (see labeling.transport).

def _entries(d):
    offs, _ = d.semiarc_offsets()
    return [[[code, offs[ci] + j] for j, code in enumerate(circ)]
            for ci, circ in enumerate(d.circles)]


def _build(entries, signs, empty_maps):
    circles = [[e[0] for e in row] for row in entries]
    smap = []
    for ci, row in enumerate(entries):
        if row:
            smap.extend(e[1] for e in row)
        else:
            smap.append(empty_maps[ci])
    return GaussDiagram(circles, signs), smap


def _locate(d, s):
    offs, total = d.semiarc_offsets()
    if not 0 <= s < total:
        raise MoveError(f"semiarc {s} out of range")
    for ci in range(len(offs) - 1, -1, -1):
        if s >= offs[ci]:
            return ci, s - offs[ci]


def _insert(d, placements, new_signs):
    """Insert pieces of endpoint codes; ``placements`` is [(semiarc, codes)].

    Pieces sharing a semiarc are laid down in list order along the circle.
    """
    offs, _ = d.semiarc_offsets()
    entries = _entries(d)
    empty_maps = [offs[ci] if not circ else None for ci, circ in enumerate(d.circles)]
    by_sem = {}
    for s, codes in placements:
        by_sem.setdefault(s, []).append(codes)
    # insert from the highest position down so earlier positions stay valid
    for s in sorted(by_sem, reverse=True):
        ci, j = _locate(d, s)
        new = []
        for codes in by_sem[s]:
            new.extend([c, None] for c in codes)
            new[-1][1] = s
        at = j + 1 if d.circles[ci] else 0
        entries[ci][at:at] = new
    return _build(entries, list(d.signs) + list(new_signs), empty_maps)


def _delete(d, arrows, empty_maps=None):
    arrows = set(arrows)
    keep = [a for a in range(d.n_arrows) if a not in arrows]
    renum = {a: i for i, a in enumerate(keep)}
    entries = []
    maps = []
    for ci, row in enumerate(_entries(d)):
        if row and all((e[0] >> 1) in arrows for e in row):
            given = empty_maps[ci] if empty_maps else None
            maps.append(row[-1][1] if given is None else given)
        else:
            maps.append(None if row else d.semiarc_offsets()[0][ci])
        entries.append([[2 * renum[e[0] >> 1] + (e[0] & 1), e[1]]
                        for e in row if (e[0] >> 1) not in arrows])
    # a slot preceding a deleted run keeps its own (outer) semiarc, which
    # already is what _entries recorded
    return _build(entries, [d.signs[a] for a in keep], maps)


def r1_insert(d, semiarc, first="tail", sign=1):
    a = d.n_arrows
    codes = [2 * a, 2 * a + 1] if first == "tail" else [2 * a + 1, 2 * a]
    return _insert(d, [(semiarc, codes)], [sign])


def _adjacent(d, ci, p):
    k = len(d.circles[ci])
    if k < 2:
        raise MoveError("circle has fewer than two slots")
    return d.circles[ci][p % k], d.circles[ci][(p + 1) % k]


def r1_delete(d, ci, p):
    """Remove the kink whose endpoints sit at slots ``p`` and ``p + 1``."""
    c1, c2 = _adjacent(d, ci, p)
    if c1 >> 1 != c2 >> 1:
        raise MoveError(f"slots {p}, {p + 1} of circle {ci} are not one kink")
    k = len(d.circles[ci])
    maps = [None] * d.n_circles
    maps[ci] = d.semiarc(ci, (p + 1) % k)
    return _delete(d, [c1 >> 1], maps)


def r2_insert(d, over_semiarc, under_semiarc, reverse=False, first_sign=1,
              under_first=False):
    """Insert a pair of opposite-sign arrows, tails on ``over_semiarc``."""
    a, b = d.n_arrows, d.n_arrows + 1
    tails = [2 * a, 2 * b]
    heads = [2 * b + 1, 2 * a + 1] if reverse else [2 * a + 1, 2 * b + 1]
    pieces = [(over_semiarc, tails), (under_semiarc, heads)]
    if under_first:
        if over_semiarc != under_semiarc:
            raise MoveError("under_first only applies when both pieces share a semiarc")
        pieces.reverse()
    return _insert(d, pieces, [first_sign, -first_sign])


def r2_site(d, a, b):
    """Return 'direct' or 'reverse' if arrows a, b form an R2 pair, else None."""
    if a == b or d.signs[a] != -d.signs[b]:
        return None
    (tac, tap), (hac, hap) = d.ends()[a]
    (tbc, tbp), (hbc, hbp) = d.ends()[b]
    if tac != tbc or (tap + 1) % len(d.circles[tac]) != tbp:
        return None
    if hac == hbc:
        k = len(d.circles[hac])
        if (hap + 1) % k == hbp:
            return "direct"
        if (hbp + 1) % k == hap:
            return "reverse"
    return None


def r2_delete(d, a, b):
    if r2_site(d, a, b) is None:
        raise MoveError(f"arrows {a}, {b} do not form an R2 pair")
    (tc, tp), (hc, hp) = d.ends()[a]
    if r2_site(d, a, b) == "reverse":
        hp = d.ends()[b][1][1]
    maps = [None] * d.n_circles
    # outer semiarcs: the ones leaving the second slot of each piece
    maps[hc] = d.semiarc(hc, hp + 1)
    maps[tc] = d.semiarc(tc, tp + 1)
    return _delete(d, [a, b], maps)


def r3_side(d, tm, tb, mb):
    """1 or 2 if (top/middle, top/bottom, middle/bottom) arrows form an R3
    triangle in the first or second position, else None."""
    if len({tm, tb, mb}) < 3 or any(d.signs[x] != 1 for x in (tm, tb, mb)):
        return None
    e = d.ends()

    def follows(p, q):
        return p[0] == q[0] and (p[1] + 1) % len(d.circles[p[0]]) == q[1]

    t_tm, h_tm = e[tm]
    t_tb, h_tb = e[tb]
    t_mb, h_mb = e[mb]
    if follows(t_tm, t_tb) and follows(h_tm, t_mb) and follows(h_tb, h_mb):
        return 1
    if follows(t_tb, t_tm) and follows(t_mb, h_tm) and follows(h_mb, h_tb):
        return 2
    return None


def r3(d, tm, tb, mb):
    side = r3_side(d, tm, tb, mb)
    if side is None:
        raise MoveError(f"arrows {(tm, tb, mb)} do not form an R3 triangle")
    e = d.ends()
    if side == 1:
        pieces = [e[tm][0], e[tm][1], e[tb][1]]
    else:
        pieces = [e[tb][0], e[mb][0], e[mb][1]]
    circles = [list(c) for c in d.circles]
    smap = list(range(d.n_semiarcs))
    for ci, p in pieces:
        k = len(circles[ci])
        q = (p + 1) % k
        circles[ci][p], circles[ci][q] = circles[ci][q], circles[ci][p]
        smap[d.semiarc(ci, p)] = None
    return GaussDiagram(circles, d.signs), smap


MOVES = ("R1", "R1inv", "R2", "R2inv", "R3")


def move_with_map(d, move, site, variant=None):
    variant = variant or {}
    if move == "R1":
        return r1_insert(d, site, **variant)
    if move == "R1inv":
        return r1_delete(d, *site)
    if move == "R2":
        return r2_insert(d, *site, **variant)
    if move == "R2inv":
        return r2_delete(d, *site)
    if move == "R3":
        return r3(d, *site)
    raise MoveError(f"unknown move {move!r}")


def apply_move(d, move, site, variant=None):
    """Apply one oriented Reidemeister move; see :func:`legal_moves` for sites."""
    return move_with_map(d.unlabeled(), move, site, variant)[0]


def legal_moves(d, inserts=True):
    """All (move, site, variant) triples applicable to ``d``."""
    out = []
    ns = d.n_semiarcs
    if inserts:
        for s in range(ns):
            for first in ("tail", "head"):
                for sign in (1, -1):
                    out.append(("R1", s, {"first": first, "sign": sign}))
        for so, su in product(range(ns), repeat=2):
            orders = (False, True) if so == su else (False,)
            for uf in orders:
                for rev in (False, True):
                    for fs in (1, -1):
                        out.append(("R2", (so, su),
                                    {"reverse": rev, "first_sign": fs, "under_first": uf}))
    for ci, circ in enumerate(d.circles):
        k = len(circ)
        if k >= 2:
            for p in range(k):
                if circ[p] >> 1 == circ[(p + 1) % k] >> 1:
                    out.append(("R1inv", (ci, p), None))
    n = d.n_arrows
    for a, b in product(range(n), repeat=2):
        if r2_site(d, a, b):
            out.append(("R2inv", (a, b), None))
    pos = [a for a in range(n) if d.signs[a] == 1]
    for tm, tb, mb in product(pos, repeat=3):
        if r3_side(d, tm, tb, mb):
            out.append(("R3", (tm, tb, mb), None))
    return out


def compositions(total, parts):
    """Ordered splits of ``total`` into ``parts`` nonnegative sizes."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def random_diagram(rng, n_arrows, n_circles=1, signs=None):
    """Random Gauss diagram; endpoints are scattered uniformly over circles."""
    codes = list(range(2 * n_arrows))
    rng.shuffle(codes)
    cuts = sorted(rng.randint(0, len(codes)) for _ in range(n_circles - 1))
    bounds = [0] + cuts + [len(codes)]
    circles = [codes[bounds[i]:bounds[i + 1]] for i in range(n_circles)]
    if signs is None:
        signs = [rng.choice((1, -1)) for _ in range(n_arrows)]
    return GaussDiagram(circles, signs)
