import math
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from bqft.biquandle import (Biquandle, BiquandleError, FOX3, enumerate_biquandles,
                            fox3, is_biquandle, kink_solutions, load_biquandle,
                            make_alexander, make_constant_action, make_conjugation,
                            parse_biquandle, symmetric_group_table, cyclic_group_table,
                            trivial, x1, x2)
from bqft import data_path


def test_shipped_tables_validate():
    for name in ("fox3", "X1", "X2", "alexander3"):
        b = load_biquandle(data_path(name + ".bq"))
        assert b.n in (2, 3)
    assert load_biquandle(data_path("fox3.bq")) == fox3()
    assert load_biquandle(data_path("alexander3.bq")) == make_alexander(3, 1, 2)


def test_fox_is_a_quandle():
    assert fox3().is_quandle()
    assert x1().is_quandle()
    assert not x2().is_quandle()


def test_two_element_sweep_finds_x1_and_x2():
    found = enumerate_biquandles(2)
    assert found == [x1(), x2()]
    assert enumerate_biquandles(1) == [trivial(1)]


def test_sweep_refuses_large_sizes():
    with pytest.raises(BiquandleError):
        enumerate_biquandles(3)


def test_bad_table_lists_every_violation():
    # x^y = y is not a bijection in x, and kinks fail too
    with pytest.raises(BiquandleError) as err:
        Biquandle([[1, 2], [1, 2]], [[1, 1], [2, 2]])
    msg = str(err.value)
    assert "axiom (ii)" in msg and msg.count("\n") >= 2


def test_out_of_range_entry():
    with pytest.raises(BiquandleError, match="not in 1..2"):
        Biquandle([[1, 3], [2, 1]], [[1, 1], [2, 2]])


def test_parse_with_header_and_comments():
    text = "# fox\n3\n" + "\n".join(" ".join(map(str, r)) for r in FOX3)
    assert parse_biquandle(text) == fox3()
    assert parse_biquandle("\n".join(" ".join(map(str, r)) for r in FOX3)) == fox3()


@pytest.mark.parametrize("text", ["", "1 2 3", "2\n1 1 1 1", "1 x\n2 2"])
def test_parse_errors(text):
    with pytest.raises(BiquandleError):
        parse_biquandle(text)


def test_text_round_trip():
    for b in (fox3(), x2(), make_alexander(4, 1, 3)):
        assert parse_biquandle(b.to_text()) == b


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_alexander_family(m):
    units = [u for u in range(1, m) if math.gcd(u, m) == 1]
    for t, s in product(units, repeat=2):
        make_alexander(m, t, s)


def test_alexander_needs_units():
    with pytest.raises(BiquandleError):
        make_alexander(4, 2, 1)


def test_conjugation_quandles():
    make_conjugation(symmetric_group_table(3))
    make_conjugation(cyclic_group_table(4), k=2)


def test_constant_action_kinks_fix_labels():
    b = make_constant_action([2, 3, 1])
    for x in b.elements:
        first, second = kink_solutions(b, x)
        assert len(first) == len(second) == 1


def test_crossing_map_inverse():
    b = make_alexander(5, 2, 3)
    for x, y in b.pairs():
        assert b.invert_T(*b.T(x, y)) == (x, y)
        assert b.invert_S(*b.S(x, y)) == (x, y)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(1, 2), min_size=8, max_size=8))
def test_only_x1_and_x2_pass_on_two_elements(vals):
    over = [vals[0:2], vals[2:4]]
    under = [vals[4:6], vals[6:8]]
    assert is_biquandle(over, under) == ((over, under) in (
        ([[1, 1], [2, 2]], [[1, 1], [2, 2]]), ([[2, 2], [1, 1]], [[2, 2], [1, 1]])))
