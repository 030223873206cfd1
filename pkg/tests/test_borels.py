import pytest

from tools.borels import (
    EpsDeltaSequence, HookPartition, borel_from_sequence, character_constants, enumerate_borel_classes,
    hook_from_weight, is_dominant, max_odd_borel_dim, odd_reflection, pattern_gl_standard, pattern_osp_standard,
    pattern_pi_osp, pattern_s2gl, reflect_highest_weight, standard_borel, weight_from_hook, weyl_dim_even,
)
from tools.superalgebras import build_algebra
from tools.weights import Weight
from utils.errors import ParseError, RejectError


def test_sequence_parsing():
    assert str(EpsDeltaSequence.parse("d2e2")) == "ddee"
    assert EpsDeltaSequence.parse("(-e)dd").tokens == ("-e", "d", "d")
    assert EpsDeltaSequence.parse("εδδ").pretty() == "εδδ"
    with pytest.raises(ParseError):
        EpsDeltaSequence.parse("x")
    with pytest.raises(ParseError):
        EpsDeltaSequence.parse("")


def test_gl12_classes():
    labels = [b.label for b in enumerate_borel_classes(build_algebra("gl", 1, 2))]
    assert sorted(labels) == ["dde", "ded", "edd"]


def test_gl22_class_count():
    assert len(enumerate_borel_classes(build_algebra("gl", 2, 2))) == 6


def test_osp24_classes_include_signed():
    labels = {b.label for b in enumerate_borel_classes(build_algebra("osp", 2, 2))}
    assert {"edd", "(-e)dd", "ded", "d(-e)d", "dde"} == labels


def test_standard_borels():
    assert standard_borel(build_algebra("gl", 2, 3)).label == "eeddd"
    assert standard_borel(build_algebra("osp", 3, 1)).label == "de"
    assert standard_borel(build_algebra("osp", 2, 2)).label == "edd"


def test_borel_dimensions():
    g = build_algebra("gl", 1, 2)
    b = borel_from_sequence(g, "ded")
    assert b.odd_dim == 2
    assert b.even_dim == 4
    assert max_odd_borel_dim(g) == 2


def test_sequence_length_is_checked():
    with pytest.raises((ParseError, RejectError)):
        borel_from_sequence(build_algebra("gl", 1, 2), "ed")


def test_even_part_is_a_borel_of_g0():
    b0 = standard_borel(build_algebra("gl", 2, 2)).even_part()
    assert not any(b0.algebra.parities)
    assert b0.odd_dim == 0


@pytest.mark.parametrize(
    "text, gl, s2gl",
    [("ddee", True, True), ("eedd", False, True), ("ded", False, False), ("dedd", False, True), ("edd", False, True)],
)
def test_gl_patterns(text, gl, s2gl):
    seq = EpsDeltaSequence.parse(text)
    assert pattern_gl_standard(seq) is gl
    assert pattern_s2gl(seq) is s2gl


def test_osp_patterns():
    assert pattern_osp_standard(2)(EpsDeltaSequence.parse("(-e)dd"))
    assert not pattern_osp_standard(3)(EpsDeltaSequence.parse("de"))
    assert pattern_pi_osp(EpsDeltaSequence.parse("de"))


def test_hook_partition_conditions():
    assert HookPartition((3, 1, 1), 1, 1).conjugate() == (3, 1, 1)
    with pytest.raises(RejectError):
        HookPartition((2, 2), 1, 1)


def test_hook_round_trip_for_osp32():
    g = build_algebra("osp", 3, 1)
    hook = HookPartition((2, 1), 1, 1)
    lam = weight_from_hook(g, hook)
    assert lam == Weight.from_coeffs([1, 2], 1)
    assert hook_from_weight(g, lam)[0] == hook


def test_odd_reflection_gl12():
    g = build_algebra("gl", 1, 2)
    std = standard_borel(g)
    alpha = Weight.from_coeffs([1, -1, 0], 1)
    reflected = odd_reflection(g, std.simple_roots, alpha)
    assert set(reflected) == set(borel_from_sequence(g, "ded").simple_roots)
    assert set(odd_reflection(g, reflected, -alpha)) == set(std.simple_roots)
    with pytest.raises(RejectError):
        odd_reflection(g, std.simple_roots, Weight.from_coeffs([0, 1, -1], 1))


def test_reflect_highest_weight():
    g = build_algebra("gl", 1, 2)
    alpha = Weight.from_coeffs([1, -1, 0], 1)
    zero = Weight.zero(1, 2)
    assert reflect_highest_weight(g, zero, 0, alpha) == (zero, 0)
    assert reflect_highest_weight(g, Weight.from_coeffs([1, 0, 0], 1), 0, alpha) == (Weight.from_coeffs([0, 1, 0], 1), 1)
    lam = Weight.from_coeffs([-1, 1, 0], 1)
    assert reflect_highest_weight(g, lam, 0, alpha) == (lam, 0)


def test_weyl_dim_even():
    assert weyl_dim_even(build_algebra("gl", 2, 1), Weight.from_coeffs([2, 0, 0], 2)) == 3
    assert weyl_dim_even(build_algebra("gl", 1, 2), Weight.from_coeffs([-3, 2, 1], 1)) == 2
    with pytest.raises(RejectError):
        weyl_dim_even(build_algebra("gl", 2, 1), Weight.from_coeffs([0, 1, 0], 2))


def test_character_constants():
    gens, odd = character_constants(build_algebra("gl", 2, 3))
    assert gens == [Weight.from_coeffs([1, 1, -1, -1, -1], 2)]
    assert not odd
    assert character_constants(build_algebra("osp", 3, 1)) == ([], False)
    assert character_constants(build_algebra("q", 2)) == ([], True)


def test_dominance():
    assert is_dominant(build_algebra("gl", 2, 2), None, Weight.from_coeffs([1, 0, 0, 0], 2))
    assert not is_dominant(build_algebra("q", 2), None, Weight.from_coeffs([1, 1], 2))
    with pytest.raises(RejectError):
        is_dominant(build_algebra("gl", 2, 2), None, Weight.from_coeffs([1, 0], 1))
