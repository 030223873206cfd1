from fractions import Fraction

import pytest

from tools.harmonic import expected_kernel_weights, osp_harmonic_suite, p_contraction_suite
from tools.weights import Weight
from utils.errors import RejectError


@pytest.mark.slow
@pytest.mark.parametrize("m, n2, semisimple", [(3, 2, True), (2, 4, False), (5, 2, True)])
def test_osp_harmonic_suite(m, n2, semisimple):
    state = osp_harmonic_suite(m, n2, max_degree=4)
    assert state.report.ok
    assert state.semisimple is semisimple


def test_h_scalar():
    state = osp_harmonic_suite(3, 2, max_degree=2)
    assert state.h_scalar(0) == Fraction(-1, 2)
    assert state.h_scalar(2) == Fraction(-5, 2)
    assert state.harmonic_dims()[0] == 1


def test_osp_suite_rejects_bad_parameters():
    with pytest.raises(RejectError):
        osp_harmonic_suite(3, 3)
    with pytest.raises(RejectError):
        osp_harmonic_suite(3, 2, max_degree=7)


def test_expected_kernel_weights():
    assert expected_kernel_weights(2, 2) == sorted(
        [Weight.from_coeffs([2, 0], 2), Weight.from_coeffs([1, -1], 2), Weight.from_coeffs([-1, -1], 2)],
        key=lambda w: w.sort_key(),
    )
    assert len(expected_kernel_weights(3, 1)) == 2


def test_p2_contraction():
    state = p_contraction_suite(2)
    assert state.report.ok
    assert state.max_degree == 4


@pytest.mark.slow
def test_p3_contraction():
    assert p_contraction_suite(3, 5).report.ok


def test_contraction_rank_range():
    with pytest.raises(RejectError):
        p_contraction_suite(4)
    with pytest.raises(RejectError):
        p_contraction_suite(2, 5)
