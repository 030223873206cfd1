import pytest

from tools.borels import borel_from_sequence, standard_borel
from tools.modules import (
    adjoint_module, parity_shift, restrict_even, standard_module, sym_power, trivial_module,
)
from tools.sphericity import (
    g0_spherical, is_numerically_spherical, is_spherical, orbit_rank, spherical_borels, stabilizer,
    stabilizer_complement_check,
)
from tools.superalgebras import build_algebra
from tools.weights import SuperDim
from utils.errors import RejectError
from utils.specs import parse_module


@pytest.mark.parametrize(
    "kind, m, n, module, borel, expected",
    [
        ("gl", 2, 3, "std", "dddee", True),
        ("gl", 2, 3, "std", "eeddd", False),
        ("gl", 1, 2, "sym2:std", "dde", True),
        ("gl", 1, 2, "sym2:std", "ded", False),
        ("osp", 3, 1, "std", "ed", True),
        ("osp", 3, 1, "std", "de", False),
        ("osp", 3, 1, "pi:std", "de", True),
        ("osp", 1, 1, "std", None, False),
        ("q", 0, 2, "std", None, True),
    ],
)
def test_family_members(kind, m, n, module, borel, expected):
    g = build_algebra(kind, m, n)
    rep = parse_module(module, g)
    b = borel_from_sequence(g, borel) if borel else standard_borel(g)
    report = is_spherical(rep, b)
    assert report.spherical is expected
    assert report.dim == rep.dim


def test_p_only_spherical_after_shift():
    g = build_algebra("p", 2)
    assert spherical_borels(standard_module(g), jobs=1) == []
    assert spherical_borels(parity_shift(standard_module(g)), jobs=1)


def test_witness_rechecks():
    g = build_algebra("gl", 2, 3)
    rep = standard_module(g)
    borel = borel_from_sequence(g, "dddee")
    report = is_spherical(rep, borel)
    assert report.witness is not None
    assert all(x == 0 for j, x in enumerate(report.witness) if rep.parities[j])
    assert orbit_rank(rep, report.witness, borel.indices) == rep.dim
    assert report.to_json()["verdict"] == "spherical"


def test_no_even_vectors():
    rep = parity_shift(trivial_module(build_algebra("gl", 1, 1)))
    report = is_spherical(rep)
    assert not report.spherical
    assert report.method == "empty"


def test_borel_from_other_algebra():
    with pytest.raises(RejectError):
        is_spherical(standard_module(build_algebra("gl", 1, 2)), standard_borel(build_algebra("gl", 2, 1)))


@pytest.mark.parametrize(
    "kind, m, n, borel, superdim",
    [("gl", 2, 2, "d2e2", SuperDim(6, 6)), ("osp", 3, 1, "ed", SuperDim(4, 4))],
)
def test_stabilizers(kind, m, n, borel, superdim):
    g = build_algebra(kind, m, n)
    rep = standard_module(g)
    report = is_spherical(rep, borel_from_sequence(g, borel))
    stab = stabilizer(rep, report.witness)
    assert stab.superdim == superdim
    assert stab.closed
    assert stabilizer_complement_check(rep, report.witness)


def test_numerical_sphericity():
    assert not is_numerically_spherical(adjoint_module(build_algebra("gl", 2, 2)))
    assert is_numerically_spherical(standard_module(build_algebra("gl", 2, 3)))


def test_g0_spherical():
    assert g0_spherical(standard_module(build_algebra("osp", 3, 0)))
    assert not g0_spherical(sym_power(standard_module(build_algebra("gl", 3, 0)), 3))
    with pytest.raises(RejectError):
        g0_spherical(standard_module(build_algebra("gl", 1, 1)))


def test_even_restriction_is_g0_module():
    rep = restrict_even(standard_module(build_algebra("gl", 2, 3)), 0)
    assert rep.superdim == SuperDim(2, 0)
    assert not any(rep.algebra.parities)


def test_quotient_by_socle_is_spherical():
    g = build_algebra("p", 3)
    assert is_spherical(parse_module("mod-soc:thin-kac:w", g)).spherical
