import pytest

from tools.borels import borel_from_coweight, standard_borel
from tools.highest_weight import irreducible_quotient, kac_module_typeI, nabla_explicit, radical, thin_kac_p
from tools.modules import (
    adjoint_module, character_twist, dual, is_completely_reducible, is_irreducible, parity_shift, quotient_module,
    socle, socle_filtration, standard_module, sym_power, tensor, trivial_module, u11_module, verify_representation,
)
from tools.superalgebras import build_algebra
from tools.weights import SuperDim, Weight
from utils.errors import RejectError


@pytest.mark.parametrize("kind, m, n", [("gl", 1, 2), ("gl", 2, 2), ("osp", 3, 1), ("p", 0, 3), ("q", 0, 2)])
def test_standard_and_adjoint_verify(kind, m, n):
    g = build_algebra(kind, m, n)
    assert verify_representation(standard_module(g))
    assert verify_representation(adjoint_module(g))


def test_sym_square_dimensions():
    g = build_algebra("gl", 1, 2)
    s2 = sym_power(standard_module(g), 2)
    assert s2.superdim == SuperDim(2, 2)
    assert verify_representation(s2)
    assert sym_power(standard_module(build_algebra("gl", 2, 3)), 2).superdim == SuperDim(6, 6)


def test_parity_shift_and_dual():
    v = standard_module(build_algebra("gl", 2, 3))
    assert parity_shift(v).superdim == SuperDim(3, 2)
    d = dual(v)
    assert d.superdim == v.superdim
    assert sorted(w.sort_key() for w in d.weights) == sorted((-w).sort_key() for w in v.weights)
    assert verify_representation(d)


def test_tensor_with_trivial():
    g = build_algebra("gl", 1, 1)
    v = standard_module(g)
    t = tensor(v, trivial_module(g))
    assert t.superdim == v.superdim
    assert verify_representation(t)


def test_broken_representation_is_reported():
    v = standard_module(build_algebra("gl", 1, 1))
    broken = parity_shift(v)
    broken.ops = [list(cols) for cols in broken.ops]
    broken.ops[0] = [{0: 2}, {}]
    result = verify_representation(broken)
    assert not result
    assert result.message


def test_u11_is_not_completely_reducible():
    assert not is_completely_reducible(u11_module())
    assert is_completely_reducible(standard_module(build_algebra("gl", 1, 2)))


def test_reducibility_cap():
    with pytest.raises(RejectError):
        is_completely_reducible(adjoint_module(build_algebra("gl", 2, 2)), dim_cap=4)


def test_typical_kac_module():
    g = build_algebra("gl", 1, 2)
    hw = kac_module_typeI(g, Weight.unit(1, 2, 0, "1/2"))
    assert hw.superdim == SuperDim(2, 2)
    top = irreducible_quotient(hw)
    assert top.superdim == SuperDim(2, 2)
    assert is_irreducible(top, standard_borel(g))


def test_trivial_top_of_kac_module():
    g = build_algebra("gl", 1, 2)
    hw = kac_module_typeI(g, Weight.zero(1, 2))
    assert irreducible_quotient(hw).superdim == SuperDim(1, 0)
    assert radical(hw).superdim == SuperDim(1, 2)


def test_kac_module_needs_type_one():
    with pytest.raises(RejectError):
        kac_module_typeI(build_algebra("osp", 3, 1), Weight.zero(1, 1))


def test_nabla_explicit():
    rep = nabla_explicit()
    assert verify_representation(rep)
    assert rep.superdim == SuperDim(4, 4)
    c23 = next(k for k, b in enumerate(rep.algebra.basis) if b.label == "C23")
    mat = rep.matrix(c23)
    assert mat[2][7] == 1
    assert mat[3][6] == -1


def test_thin_kac_socle_layers():
    hw = thin_kac_p(3)
    assert hw.superdim == SuperDim(4, 4)
    borel = borel_from_coweight(hw.rep.algebra, [3, 2, 1])
    layers = socle_filtration(hw.rep, borel)
    assert [str(layer.superdim) for layer in layers] == ["(0|1)", "(3|3)", "(1|0)"]
    assert radical(hw).superdim == SuperDim(3, 4)
    low = quotient_module(hw.rep, socle(hw.rep, standard_borel(hw.rep.algebra)))
    assert low.superdim == SuperDim(4, 3)


def test_thin_kac_needs_rank_two():
    with pytest.raises(RejectError):
        thin_kac_p(1)


@pytest.mark.slow
def test_osp24_irreducible():
    g = build_algebra("osp", 2, 2)
    rep = irreducible_quotient(kac_module_typeI(g, Weight.from_coeffs([-1, 1, 1], 1)))
    assert rep.superdim == SuperDim(6, 4)


def test_character_twist():
    g = build_algebra("gl", 1, 2)
    v = standard_module(g)
    ber = Weight.from_coeffs([1, -1, -1], 1)
    twisted = character_twist(v, -ber)
    assert verify_representation(twisted)
    assert Weight.from_coeffs([0, 1, 1], 1) in twisted.weights
    assert character_twist(v, Weight.zero(1, 2)).weights == v.weights
    with pytest.raises(RejectError):
        character_twist(v, Weight.from_coeffs([1, 0, 0], 1))
