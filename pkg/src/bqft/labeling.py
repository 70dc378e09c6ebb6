"""Biquandle labelings of Gauss diagrams.

A labeling is a tuple holding one element of ``X`` per semiarc.  At an arrow
write ``x``/``y`` for the labels entering the head/tail and ``x'``/``y'`` for
the labels leaving them.  A positive arrow requires ``(x', y') = (x^y, y_x)``;
a negative arrow requires ``(x, y) = (x'^y', y'_x')``.
"""
from .gauss import GaussDiagram


class LabelingError(ValueError):
    pass


def _constraints(d):
    """Per arrow ``(p, q, r, s)`` with ``(f[r], f[s]) == T(f[p], f[q])``."""
    out = []
    for sign, (oi, oo, ui, uo) in zip(d.signs, d.crossing_semiarcs()):
        if sign > 0:
            out.append((ui, oi, uo, oo))
        else:
            out.append((uo, oo, ui, oi))
    return out


def _propagate(lab, cons, b):
    changed = True
    while changed:
        changed = False
        for p, q, r, s in cons:
            if lab[p] and lab[q]:
                u, v = b.T(lab[p], lab[q])
                for idx, val in ((r, u), (s, v)):
                    if not lab[idx]:
                        lab[idx] = val
                        changed = True
                    elif lab[idx] != val:
                        return False
            elif lab[r] and lab[s]:
                u, v = b.invert_T(lab[r], lab[s])
                for idx, val in ((p, u), (q, v)):
                    if not lab[idx]:
                        lab[idx] = val
                        changed = True
                    elif lab[idx] != val:
                        return False
    return True


def enumerate_labelings(d, b, fixed=None):
    """All labelings of ``d`` by ``b``, sorted lexicographically.

    ``fixed`` optionally maps semiarc indices to prescribed labels.
    """
    cons = _constraints(d)
    start = [0] * d.n_semiarcs
    for idx, val in (fixed or {}).items():
        start[idx] = val
    found = []

    def search(lab):
        if not _propagate(lab, cons, b):
            return
        try:
            i = lab.index(0)
        except ValueError:
            if all(b.T(lab[p], lab[q]) == (lab[r], lab[s]) for p, q, r, s in cons):
                found.append(tuple(lab))
            return
        for x in b.elements:
            nxt = lab[:]
            nxt[i] = x
            search(nxt)

    search(start)
    return sorted(set(found))


def counting_invariant(d, b):
    return len(enumerate_labelings(d, b))


def is_labeling(d, b, f):
    if len(f) != d.n_semiarcs or any(not 1 <= x <= b.n for x in f):
        return False
    return all(b.T(f[p], f[q]) == (f[r], f[s]) for p, q, r, s in _constraints(d))


def arrow_labels(d, f):
    """Per arrow ``(over_in, over_out, under_in, under_out)`` read off ``f``."""
    return tuple((f[oi], f[oo], f[ui], f[uo])
                 for oi, oo, ui, uo in d.crossing_semiarcs())


def labeled_diagram(d, f):
    return GaussDiagram(d.circles, d.signs, arrow_labels(d, f))


def transport(new_d, semiarc_map, f, b):
    """The labeling of ``new_d`` agreeing with ``f`` outside a move site."""
    fixed = {i: f[old] for i, old in enumerate(semiarc_map) if old is not None}
    found = enumerate_labelings(new_d, b, fixed)
    if len(found) != 1:
        raise LabelingError(f"expected one transported labeling, found {len(found)}")
    return found[0]


def format_labeling(f):
    return " ".join(f"{i}->{x}" for i, x in enumerate(f))
