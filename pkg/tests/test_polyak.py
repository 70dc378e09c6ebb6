import copy

import pytest

from bqft.arrow import AlgebraElement, enumerate_basis, inner_product
from bqft.biquandle import fox3, make_alexander, trivial, x1, x2
from bqft.gauss import parse_gauss_code, r2_insert
from bqft.labeling import enumerate_labelings, transport
from bqft.arrow import expand
from bqft.polyak import (cocycle_functional, is_orthogonal, move_patterns, polyak_basis,
                         r3_degree1_generators, relation_generators, solve_tangle,
                         verify_invariance, TangleError, R3_PATTERN)
from conftest import VIRTUAL_TREFOIL, small_biquandles


def test_x2_degree_one_numbers():
    p = polyak_basis(x2(), 1, 1)
    assert (p.dim_arrow, p.relation_rank, p.dim) == (8, 6, 2)


def test_trivial_one_element_has_no_degree_one_invariants():
    p = polyak_basis(trivial(1), 1, 1)
    assert (p.dim_arrow, p.relation_rank, p.dim) == (2, 2, 0)


def test_x1_has_two_dimensional_degree_one():
    p = polyak_basis(x1(), 1, 1)
    assert (p.relation_rank, p.dim) == (6, 2)


@pytest.mark.parametrize("name", list(small_biquandles()))
@pytest.mark.parametrize("c", [1, 2])
def test_basis_is_orthogonal_to_relations(name, c):
    p = polyak_basis(small_biquandles()[name], 1, c)
    assert is_orthogonal(p)
    assert p.dim + p.relation_rank == p.dim_arrow
    for a in p.elements():
        assert p.contains(a)


def test_basis_is_deterministic():
    a, b = polyak_basis(fox3(), 1, 2), polyak_basis(fox3(), 1, 2)
    assert a.vectors == b.vectors and a.basis == b.basis


def test_relation_generators_are_distinct_up_to_sign():
    gens = relation_generators(fox3(), 1)
    seen = set()
    for g in gens:
        assert g.element and g.element not in seen and -g.element not in seen
        seen.add(g.element)


def test_move_names():
    names = set(move_patterns())
    assert {"R1/tail/+", "R1/head/-", "R2/direct/+", "R2/reverse/-", "R3"} <= names
    assert len(names) == 9


def test_r2_generator_shape():
    # one R2 instance at degree 1 is the sum of its two labeled arrows
    gens = [g for g in relation_generators(x2(), 1, moves=("R2",))]
    assert gens
    for g in gens:
        assert len(g.element) in (1, 2)
        assert all(d.n_arrows == 1 for d, _ in g.element)


def test_tangle_solution_is_unique():
    b = fox3()
    pieces, signs = R3_PATTERN["A"]
    labels, outs = solve_tangle(pieces, signs, (1, 2, 3), b, False)
    assert len(labels) == 3 and len(outs) == 3


def test_unsolvable_tangle_raises():
    with pytest.raises(TangleError):
        # a closed R2 piece fed mismatched labels has no solution
        solve_tangle([[(0, 0)], [(0, 1)]], [1], (1, 2), x2(), True)


@pytest.mark.parametrize("b", [fox3(), make_alexander(3, 1, 2), x2(), make_alexander(4, 1, 3)])
def test_r3_degree_one_matches_cocycle_condition(b):
    gens = r3_degree1_generators(b)
    assert len(gens) == b.n ** 3
    for (top, middle, bottom), g in gens.items():
        assert g == cocycle_functional(b, bottom, middle, top)


def test_cocycle_condition_reduces_for_quandles():
    # for a quandle the six terms collapse to the familiar four-term rule
    b = fox3()
    for x in b.elements:
        for y in b.elements:
            for z in b.elements:
                f = cocycle_functional(b, x, y, z)
                assert sum(abs(c) for _, c in f) <= 4


def test_specialization_to_unlabeled():
    for n in (1, 2):
        labeled = polyak_basis(trivial(1), n, 1)
        plain = polyak_basis(None, n, 1)
        forget = [d.unlabeled() for d in labeled.basis]
        assert forget == plain.basis
        assert labeled.vectors == plain.vectors
        assert labeled.relation_rank == plain.relation_rank


def test_virtual_trefoil_after_r2():
    b = x2()
    p = polyak_basis(b, 1, 1)
    a = p.element(0)
    d = parse_gauss_code(VIRTUAL_TREFOIL)
    d2, smap = r2_insert(d, 0, 2, reverse=False, first_sign=1)
    for f in enumerate_labelings(d, b):
        f2 = transport(d2, smap, f, b)
        assert inner_product(a, expand(d, f, 1)) == inner_product(a, expand(d2, f2, 1)) == 2


def test_verify_invariance_passes_and_catches_bad_vectors():
    p = polyak_basis(x2(), 1, 1)
    assert verify_invariance(p, 100, seed=3)["failures"] == []
    bad = copy.copy(p)
    bad.vectors = [[1] + [0] * (p.dim_arrow - 1)]
    report = verify_invariance(bad, 100, seed=3)
    assert report["failures"]
    assert {"diagram", "labeling", "move", "before", "after"} <= set(report["failures"][0])


def test_zero_vector_is_invariant():
    p = polyak_basis(x1(), 1, 1)
    zero = copy.copy(p)
    zero.vectors = [[0] * p.dim_arrow]
    assert verify_invariance(zero, 50, seed=0)["failures"] == []


def test_degree_must_be_positive():
    with pytest.raises(ValueError):
        relation_generators(x2(), 0)
