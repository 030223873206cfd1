import pytest

from tools.candidates import candidate_weights, datum_l0_spherical
from tools.root_data import d21a_weight, exceptional_root_datum
from tools.superalgebras import build_algebra


@pytest.mark.slow
@pytest.mark.parametrize("kind, alpha", [
    ("G12", None), ("F13", None), ("D21a", "1/3"), ("D21a", 2), ("D21a", "1/2"), ("D21a", -3), ("D21a", 5),
])
@pytest.mark.parametrize("parity", [0, 1])
def test_exceptional_have_no_candidates(kind, alpha, parity):
    datum = exceptional_root_datum(kind, alpha)
    assert candidate_weights(datum, parity) == []


@pytest.mark.parametrize("kind, alpha, sizes", [("G12", None, [1, 2]), ("F13", None, [1, 3]), ("D21a", 2, [1, 1, 1])])
def test_even_factors(kind, alpha, sizes):
    datum = exceptional_root_datum(kind, alpha)
    assert sorted(len(f) for f in datum.even_factors()) == sizes


@pytest.mark.parametrize("labels, expected", [
    ((0, 0, 0), True),
    ((2, 0, 0), True),
    ((0, 1, 0), True),
    ((1, 1, 0), True),
    ((3, 0, 0), False),
    ((2, 1, 0), False),
    ((1, 1, 1), False),
])
def test_d21a_even_sphericity(labels, expected):
    datum = exceptional_root_datum("D21a", 2)
    assert datum_l0_spherical(datum, d21a_weight(datum, *labels)) is expected


@pytest.mark.parametrize("kind", ["G12", "F13"])
def test_large_factor_sphericity(kind):
    datum = exceptional_root_datum(kind)
    roots = [w for w in datum.positive_even_roots() if w.coeffs[-1] == 0]
    shortest = min(abs(datum.pair(w, w)) for w in roots)

    def highest(ws):
        return max(ws, key=lambda w: sum(datum.simple_coordinates(w)))

    # 最高短根给出 7 维表示（G2）或矢量表示（B3），最高长根给出伴随表示
    assert datum_l0_spherical(datum, highest([w for w in roots if abs(datum.pair(w, w)) == shortest]))
    assert not datum_l0_spherical(datum, highest([w for w in roots if abs(datum.pair(w, w)) != shortest]))


def test_gl12_has_a_family():
    found = candidate_weights(build_algebra("gl", 1, 2))
    assert any(c.weight.has_parameter for c in found)
    families = [c for c in found if c.weight.has_parameter]
    assert found[:len(families)] == families
    assert all(c.format() for c in found)


def test_q_ignores_parity():
    g = build_algebra("q", 2)
    assert [c.weight for c in candidate_weights(g, 0)] == [c.weight for c in candidate_weights(g, 1)]
