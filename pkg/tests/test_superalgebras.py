from fractions import Fraction

import pytest

from tools.root_data import exceptional_root_datum
from tools.superalgebras import (
    build_algebra, check_closure, check_jacobi, check_root_labels, even_subalgebra, preserves_osp_form,
)
from tools.weights import SuperDim
from utils.errors import RejectError


@pytest.mark.parametrize(
    "kind, m, n, superdim",
    [
        ("gl", 2, 3, SuperDim(13, 12)),
        ("gl", 1, 2, SuperDim(5, 4)),
        ("osp", 3, 1, SuperDim(6, 6)),
        ("osp", 2, 2, SuperDim(11, 8)),
        ("p", 3, 0, SuperDim(9, 9)),
        ("q", 2, 0, SuperDim(4, 4)),
    ],
)
def test_superdimensions(kind, m, n, superdim):
    assert build_algebra(kind, m, n).superdim == superdim


@pytest.mark.parametrize("kind, m, n", [("gl", 1, 2), ("osp", 3, 1), ("p", 2, 0), ("q", 2, 0)])
def test_structure_checks(kind, m, n):
    g = build_algebra(kind, m, n)
    assert check_closure(g)
    assert check_jacobi(g) is None
    assert check_root_labels(g)


def test_osp_preserves_form():
    assert preserves_osp_form(build_algebra("osp", 3, 1))
    assert preserves_osp_form(build_algebra("osp", 2, 2))


def test_q_has_odd_cartan():
    g = build_algebra("q", 3)
    assert len(g.odd_cartan) == 3


def test_build_is_cached():
    assert build_algebra("gl", 2, 2) is build_algebra("gl", 2, 2)


def test_even_subalgebra_is_even():
    g0 = even_subalgebra(build_algebra("gl", 2, 3))
    assert not any(g0.parities)
    assert g0.dim == 13


@pytest.mark.parametrize("kind, m, n", [("gl", 0, 0), ("osp", 1, 0), ("p", 0, 0), ("sl", 2, 2)])
def test_degenerate_parameters_rejected(kind, m, n):
    with pytest.raises(RejectError):
        build_algebra(kind, m, n)


def test_exceptional_root_counts():
    assert len(exceptional_root_datum("G12").odd_roots()) == 14
    assert len(exceptional_root_datum("F13").odd_roots()) == 16
    assert len(exceptional_root_datum("D21a", Fraction(2)).odd_roots()) == 8


@pytest.mark.parametrize("alpha", [Fraction(1), Fraction(-2), Fraction(-1, 2)])
def test_d21a_redirect(alpha):
    assert exceptional_root_datum("D21a", alpha).redirect == "osp(4|2)"


def test_d21a_generic_has_no_redirect():
    assert exceptional_root_datum("D21a", Fraction(1, 3)).redirect is None


@pytest.mark.parametrize("alpha", [Fraction(0), Fraction(-1)])
def test_d21a_degenerate(alpha):
    with pytest.raises(RejectError):
        exceptional_root_datum("D21a", alpha)
