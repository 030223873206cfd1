from fractions import Fraction

import pytest

from tools.root_data import RootDatum
from tools.superalgebras import build_algebra
from tools.weights import SuperDim, Weight
from utils.errors import ParseError, RejectError
from utils.specs import build_from_args, parse_borel, parse_module, parse_rational, parse_weight


def test_parse_rational():
    assert parse_rational("−1/2") == Fraction(-1, 2)
    with pytest.raises(ParseError):
        parse_rational("x")
    with pytest.raises(ParseError):
        parse_rational("1/0")


def test_parse_weight():
    g = build_algebra("gl", 1, 2)
    assert parse_weight("e:1/2;d:0,-1", g) == Weight.from_coeffs([Fraction(1, 2), 0, -1], 1)
    assert parse_weight("d:1,0", g) == Weight.from_coeffs([0, 1, 0], 1)
    with pytest.raises(ParseError):
        parse_weight("e:1,2", g)
    with pytest.raises(ParseError):
        parse_weight("x:1", g)


def test_build_from_args():
    assert build_from_args("q", 0, 3).name == build_algebra("q", 3).name
    datum = build_from_args("d21a", alpha="-2")
    assert isinstance(datum, RootDatum)
    assert datum.redirect == "osp(4|2)"
    with pytest.raises(RejectError):
        build_from_args("sl", 2, 1)


@pytest.mark.parametrize(
    "spec, superdim",
    [
        ("std", SuperDim(1, 2)),
        ("pi:std", SuperDim(2, 1)),
        ("dual:sym2:std", SuperDim(2, 2)),
        ("alt:2:std", SuperDim(3, 2)),
        ("sym:3:std", SuperDim(2, 2)),
        ("kac:t=1/2", SuperDim(2, 2)),
        ("triv", SuperDim(1, 0)),
    ],
)
def test_parse_module_gl12(spec, superdim):
    assert parse_module(spec, build_algebra("gl", 1, 2)).superdim == superdim


def test_parse_module_errors():
    g = build_algebra("gl", 1, 2)
    with pytest.raises(ParseError):
        parse_module("bogus", g)
    with pytest.raises(ParseError):
        parse_module("sym:x:std", g)
    with pytest.raises(RejectError):
        parse_module("family:t=1", g)
    with pytest.raises(RejectError):
        parse_module("thin-kac:w", g)


def test_parse_borel():
    g = build_algebra("gl", 1, 2)
    assert parse_borel(None, g).label == "edd"
    std = parse_borel("st", g)
    opposite = parse_borel("st-op", g)
    assert set(opposite.positive_roots) == {-r for r in std.positive_roots}
    assert parse_borel("d2e", g).label == "dde"
    p = build_algebra("p", 2)
    with pytest.raises(ParseError):
        parse_borel("ed", p)
