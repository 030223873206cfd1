import random
from fractions import Fraction

import pytest

from utils.errors import RejectError
from utils.linalg import (
    dickson_radical, generic_rank, identity, kernel, matmul, poly_ring, rank, span_closure, transpose,
    unit_matrix, zeros,
)


def test_rank_small_cases():
    assert rank(identity(3)) == 3
    assert rank(zeros(4, 2)) == 0
    assert rank([[1, 2], [2, 4]]) == 1


def test_rank_matches_transpose():
    rng = random.Random(7)
    for _ in range(10):
        m = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(5)] for _ in range(4)]
        assert rank(m) == rank(transpose(m))


def test_kernel():
    assert kernel(identity(3)) == []
    assert len(kernel(zeros(2, 3), 3)) == 3
    (v,) = kernel([[1, 1]], 2)
    assert v[0] == -v[1] and v[0] != 0


def test_generic_rank_detects_dependent_rows():
    R, (x, y) = poly_ring(["x", "y"])
    assert generic_rank([[x, y], [2 * x, 2 * y]]).rank == 1


def test_generic_rank_witness_reaches_rank():
    R, (x,) = poly_ring(["x"])
    result = generic_rank([[x, R.one], [R.one, x]])
    assert result.rank == 2
    point = Fraction(result.witness["x"])
    assert rank([[point, 1], [1, point]]) == 2


def test_generic_rank_of_constant_matrix():
    assert generic_rank(identity(4)).rank == 4


def test_span_closure():
    assert len(span_closure([], 2)) == 1
    assert len(span_closure([[[1, 0], [0, -1]]])) == 2
    assert len(span_closure([unit_matrix(2, 0, 1), unit_matrix(2, 1, 0)])) == 4


def test_span_closure_is_closed():
    basis = span_closure([unit_matrix(3, 0, 1), unit_matrix(3, 1, 2)])
    # 严格上三角加单位元
    assert len(basis) == 4
    dickson_radical(basis)


def test_dickson_radical():
    full = span_closure([unit_matrix(2, 0, 1), unit_matrix(2, 1, 0)])
    assert dickson_radical(full) == []
    upper = span_closure([unit_matrix(2, 0, 0), unit_matrix(2, 0, 1)])
    assert len(upper) == 3
    (rad,) = dickson_radical(upper)
    assert rad[1][0] == 0 and rad[0][0] == 0 and rad[1][1] == 0 and rad[0][1] != 0


def test_dickson_radical_of_odd_abelian_image():
    image = span_closure([unit_matrix(2, 1, 0)])
    rad = dickson_radical(image)
    assert len(rad) == 1
    assert matmul(rad[0], rad[0]) == zeros(2, 2)


def test_dickson_radical_rejects_non_closed_input():
    with pytest.raises(RejectError):
        dickson_radical([unit_matrix(2, 0, 1), unit_matrix(2, 1, 0)])
