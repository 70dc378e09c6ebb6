import random

import pytest

from bqft.biquandle import fox3, x1, x2
from bqft.gauss import legal_moves, move_with_map, parse_gauss_code, random_diagram, unknot
from bqft.labeling import (LabelingError, arrow_labels, counting_invariant,
                           enumerate_labelings, is_labeling, transport)
from bqft.oracle import brute_labelings
from conftest import HOPF, TREFOIL, VIRTUAL_HOPF, VIRTUAL_TREFOIL, small_biquandles


@pytest.mark.parametrize("code, b, count", [
    ("", fox3(), 3),
    (TREFOIL, fox3(), 9),
    (VIRTUAL_TREFOIL, x2(), 2),
    (VIRTUAL_HOPF, x2(), 0),
    (VIRTUAL_HOPF, x1(), 4),
    (HOPF, x1(), 4),
])
def test_counts(code, b, count):
    assert counting_invariant(parse_gauss_code(code), b) == count


def test_every_labeling_is_valid(trefoil):
    for f in enumerate_labelings(trefoil, fox3()):
        assert is_labeling(trefoil, fox3(), f)


def test_trefoil_labels_at_a_crossing(trefoil):
    # a Fox colouring is either constant or uses all three colours
    for f in enumerate_labelings(trefoil, fox3()):
        assert len(set(f)) in (1, 3)
        for oi, oo, ui, uo in arrow_labels(trefoil, f):
            assert oi == oo


def test_fixed_semiarcs(trefoil):
    labs = enumerate_labelings(trefoil, fox3(), {0: 2})
    assert labs and all(f[0] == 2 for f in labs)


def test_backtracking_matches_brute_force():
    rng = random.Random(4)
    for b in small_biquandles().values():
        for _ in range(25):
            d = random_diagram(rng, rng.randint(0, 4), rng.randint(1, 2))
            assert enumerate_labelings(d, b) == brute_labelings(d, b)


def test_counting_invariance_and_transport():
    rng = random.Random(8)
    for b in small_biquandles().values():
        for _ in range(40):
            d = random_diagram(rng, rng.randint(0, 4), rng.randint(1, 2))
            move, site, var = rng.choice(legal_moves(d))
            d2, smap = move_with_map(d, move, site, var)
            labs = enumerate_labelings(d, b)
            assert len(labs) == counting_invariant(d2, b)
            moved = {transport(d2, smap, f, b) for f in labs}
            assert len(moved) == len(labs)


def test_transport_needs_a_unique_answer():
    d = unknot()
    with pytest.raises(LabelingError):
        transport(d, [None], (1,), fox3())
