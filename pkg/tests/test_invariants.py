import pytest

from tools.borels import borel_from_sequence
from tools.invariants import (
    MONOID_ROWS, format_zeta, highest_weight_functions, hook_partitions, monoid_closure_violations,
    nest_hooks, strict_partitions, truncated_monoid, weight_monoid,
)
from tools.modules import standard_module
from tools.superalgebras import build_algebra
from tools.weights import Weight
from utils.errors import NotSphericalError, RejectError
from utils.specs import parse_borel, parse_module


def test_nest_hooks():
    assert nest_hooks((4, 3, 1)) == (5, 5, 4, 2)
    assert nest_hooks(()) == ()
    assert nest_hooks((1,)) == (2,)
    with pytest.raises(RejectError):
        nest_hooks((2, 2))


def test_partition_counts():
    assert len(hook_partitions(3, 1, 1)) == 3
    assert len(hook_partitions(4, 1, 1)) == 4
    assert strict_partitions(6, 3) == [(6,), (5, 1), (4, 2), (3, 2, 1)]


def test_truncated_monoid():
    zero = Weight.zero(1, 1)
    a = Weight.from_coeffs([1, 0], 1)
    assert len(truncated_monoid([(a, 1)], zero, 3)) == 4
    assert len(truncated_monoid([(a, 1), (zero, 2)], zero, 3)) == 6
    with pytest.raises(RejectError):
        truncated_monoid([(a, 0)], zero, 3)


def test_format_zeta():
    zero = Weight.zero(1, 1)
    assert format_zeta(zero, 1) == "ζ"
    assert format_zeta(zero, 2) == "2ζ"
    assert format_zeta(zero, 0) == zero.format()


def test_osp_row_matches():
    row = next(r for r in MONOID_ROWS if r.key == "OSP")
    g = build_algebra(*row.algebra)
    rep = parse_module(row.module, g)
    report = weight_monoid(rep, parse_borel(row.borel, g), 3, row.generator_weights(g.split[0]))
    assert report.matches
    assert report.multiplicity_free
    assert not monoid_closure_violations(report)
    assert report.to_json()["matches"] is True


def test_degree_zero_has_constants():
    g = build_algebra("osp", 3, 1)
    rep = standard_module(g)
    functions = highest_weight_functions(rep, borel_from_sequence(g, "ed"), 0)
    assert len(functions) == 1
    assert functions[0].weight.is_zero()


def test_not_spherical_raises():
    g = build_algebra("osp", 3, 1)
    with pytest.raises(NotSphericalError):
        weight_monoid(standard_module(g), borel_from_sequence(g, "de"), 2)
