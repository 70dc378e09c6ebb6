import random

from hypothesis import given, settings, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from bqft.linalg import IntMatrix, dot, hnf, integer_kernel, rank

matrices = st.integers(1, 6).flatmap(lambda r: st.integers(1, 7).flatmap(
    lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c),
                       min_size=r, max_size=r)))


def _is_hnf(h):
    last = -1
    for row in h:
        nz = [j for j, v in enumerate(row) if v]
        if not nz:
            continue
        lead = nz[0]
        if lead <= last or row[lead] <= 0:
            return False
        last = lead
    for i, row in enumerate(h):
        nz = [j for j, v in enumerate(row) if v]
        if not nz:
            continue
        lead, piv = nz[0], row[nz[0]]
        for above in h[:i]:
            if not 0 <= above[lead] < piv:
                return False
    return True


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_rank_matches_sympy(dense):
    assert rank(IntMatrix.from_dense(dense)) == Matrix(dense).rank()


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_hnf_is_unimodular_and_reduced(dense):
    m = IntMatrix.from_dense(dense)
    h, u = hnf(m)
    H, U = Matrix(h.to_dense()), Matrix(u.to_dense())
    assert H == U * Matrix(dense)
    assert abs(U.det()) == 1
    assert _is_hnf(h.to_dense())


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_kernel_is_saturated_basis(dense):
    m = IntMatrix.from_dense(dense)
    cols = len(dense[0])
    kernel = integer_kernel(m)
    assert len(kernel) == cols - Matrix(dense).rank()
    for v in kernel:
        assert all(dot(row, v) == 0 for row in dense)
    if kernel:
        # all invariant factors equal to one means the lattice is saturated
        snf = smith_normal_form(Matrix(kernel), domain=ZZ)
        assert all(abs(snf[i, i]) == 1 for i in range(len(kernel)))
        assert _is_hnf(kernel)


def test_kernel_of_zero_matrix_is_identity():
    assert integer_kernel(IntMatrix(2, 3)) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_kernel_of_a_non_primitive_row():
    m = IntMatrix.from_dense([[2, 4, 6]])
    k = integer_kernel(m)
    assert len(k) == 2
    assert Matrix(k).rank() == 2
    assert all(dot([2, 4, 6], v) == 0 for v in k)


def test_text_round_trip_and_transpose():
    rng = random.Random(1)
    dense = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(4)]
    m = IntMatrix.from_dense(dense)
    assert IntMatrix.from_text(m.to_text()) == m
    assert m.transpose().transpose() == m
    assert m.transpose().to_dense() == [list(c) for c in zip(*dense)]


def test_rank_on_500_random_matrices():
    rng = random.Random(12)
    for _ in range(500):
        r, c = rng.randint(1, 12), rng.randint(1, 12)
        dense = [[rng.choice((0, 0, 0, rng.randint(-5, 5))) for _ in range(c)] for _ in range(r)]
        assert rank(IntMatrix.from_dense(dense)) == Matrix(dense).rank()


def test_hnf_examples():
    eye = IntMatrix.from_dense([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    h, u = hnf(eye)
    assert h == eye and u == eye
    h, u = hnf(IntMatrix.from_dense([[2, 4], [1, 2]]))
    assert h.to_dense() == [[1, 2], [0, 0]]
    assert Matrix(h.to_dense()) == Matrix(u.to_dense()) * Matrix([[2, 4], [1, 2]])


def test_kernel_examples():
    assert integer_kernel(IntMatrix.from_dense([[1, 1]])) == [[1, -1]]
