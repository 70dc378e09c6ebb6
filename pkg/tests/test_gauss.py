import random

import pytest
from hypothesis import given, settings, strategies as st

from bqft.gauss import (GaussCodeError, GaussDiagram, MoveError, apply_move, canonical_form,
                        from_json, legal_moves, move_with_map, parse_gauss_code,
                        r1_delete, r1_insert, r2_delete, r2_insert, r3, random_diagram,
                        to_gauss_code, unknot)
from conftest import FIGURE_EIGHT, TREFOIL, VIRTUAL_HOPF, VIRTUAL_TREFOIL


def test_figure_eight_parse():
    d = parse_gauss_code(FIGURE_EIGHT)
    assert d.n_circles == 1 and len(d.circles[0]) == 8
    assert d.signs == (-1, -1, 1, 1)
    # first token U1 is a head, second O2 a tail
    assert d.circles[0][:2] == (1, 2)


def test_virtual_trefoil_parse():
    d = parse_gauss_code(VIRTUAL_TREFOIL)
    assert d.circles == ((0, 3, 1, 2),)
    assert d.signs == (1, 1)


def test_virtual_hopf_parse():
    d = parse_gauss_code(VIRTUAL_HOPF)
    assert d.n_circles == 2 and d.n_arrows == 1
    assert d.ends()[0] == ((1, 0), (0, 0))


def test_whitespace_and_case():
    assert parse_gauss_code(" o1+ u1+ ") == parse_gauss_code("O1+U1+")


@pytest.mark.parametrize("code, msg", [
    ("O1+X2+", "malformed"),
    ("O1+O1+", "two O"),
    ("O1+", "no U"),
    ("O1+U1-", "mismatched"),
    ("O1U1", "malformed"),
])
def test_parse_errors(code, msg):
    with pytest.raises(GaussCodeError, match=msg):
        parse_gauss_code(code)


def test_semiarc_counts():
    assert parse_gauss_code(FIGURE_EIGHT).n_semiarcs == 8
    assert unknot().n_semiarcs == 1
    assert parse_gauss_code("O1+U1+;").n_semiarcs == 3


def test_rotation_classes():
    assert parse_gauss_code("O1+U1+").canonical() == parse_gauss_code("U1+O1+").canonical()
    assert unknot().canonical() == unknot()
    # component order is kept
    a = parse_gauss_code("O1+;U1+").canonical()
    b = parse_gauss_code("U1+;O1+").canonical()
    assert a != b


def _rotate(d, rng):
    circles = []
    for c in d.circles:
        k = rng.randrange(len(c)) if c else 0
        circles.append(c[k:] + c[:k])
    return GaussDiagram(circles, d.signs)


def test_canonical_form_under_random_rotation():
    rng = random.Random(11)
    for _ in range(1000):
        d = random_diagram(rng, rng.randint(0, 5), rng.randint(1, 2))
        assert canonical_form(_rotate(d, rng)) == canonical_form(d)


def test_canonical_is_idempotent():
    rng = random.Random(2)
    for _ in range(200):
        d = random_diagram(rng, rng.randint(0, 5), 2).canonical()
        assert d.canonical() == d


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_code_round_trip(seed):
    rng = random.Random(seed)
    d = random_diagram(rng, rng.randint(0, 5), rng.randint(1, 3)).canonical()
    assert parse_gauss_code(to_gauss_code(d)).canonical() == d
    assert from_json(d.to_json()) == d


def test_json_shape():
    obj = parse_gauss_code(VIRTUAL_HOPF).to_json()
    assert obj == {"components": [1, 1],
                   "arrows": [{"tail": [1, 0], "head": [0, 0], "sign": 1}]}


def test_r1_on_unknot():
    d, _ = r1_insert(unknot(), 0)
    assert d.canonical() == parse_gauss_code("O1+U1+").canonical()
    back, _ = r1_delete(d, 0, 0)
    assert back == unknot()


def test_r2_on_unknot():
    d, _ = r2_insert(unknot(), 0, 0, first_sign=-1)
    assert d.canonical() == parse_gauss_code("O1+U2-U1+O2-").canonical()
    back, _ = r2_delete(d, 0, 1)
    assert back == unknot()


def test_illegal_sites():
    d = parse_gauss_code(TREFOIL)
    with pytest.raises(MoveError):
        r1_delete(d, 0, 0)
    with pytest.raises(MoveError):
        r2_delete(d, 0, 1)
    with pytest.raises(MoveError):
        r3(d, 0, 1, 2)


def test_r3_round_trip():
    d = parse_gauss_code("O1+O2+U1+O3+U2+U3+")
    sites = [m for m in legal_moves(d) if m[0] == "R3"]
    assert sites
    for _, site, _ in sites:
        once, _ = r3(d, *site)
        twice, _ = r3(once, *site)
        assert twice.canonical() == d.canonical()


def _inverse_sites(d, before):
    """Deletion moves on ``d`` that bring back ``before``."""
    for move, site, var in legal_moves(d, inserts=False):
        if apply_move(d, move, site, var).canonical() == before.canonical():
            return True
    return False


def test_insert_then_inverse_restores():
    rng = random.Random(5)
    for _ in range(150):
        d = random_diagram(rng, rng.randint(0, 3), rng.randint(1, 2))
        move, site, var = rng.choice([m for m in legal_moves(d) if m[0] in ("R1", "R2")])
        assert _inverse_sites(apply_move(d, move, site, var), d)


def _parities(d):
    out = {}
    for a in range(d.n_arrows):
        (tc, _), (hc, _) = d.ends()[a]
        if tc == hc:
            out[a] = d.parity(a)
    return out


def test_parity_preserved_by_moves():
    rng = random.Random(9)
    for _ in range(300):
        d = random_diagram(rng, rng.randint(0, 5), 1)
        move, site, var = rng.choice(legal_moves(d))
        d2, _ = move_with_map(d, move, site, var)
        before, after = _parities(d), _parities(d2)
        # surviving arrows keep their index when nothing is deleted
        if move in ("R1", "R2", "R3"):
            for a, p in before.items():
                assert after[a] == p
