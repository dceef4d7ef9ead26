from fractions import Fraction
from pathlib import Path

import pytest

import pcup

FIXTURES = Path(__file__).resolve().parents[2] / "fixtures"


def load(name):
    return pcup.Complex.load(str(FIXTURES / f"{name}.json"))


def cochain(name, dim=2):
    return pcup.Cochain.from_json((FIXTURES / f"{name}.json").read_text(), dim)


def test_square_structure():
    sq = load("square")
    assert len(sq) == 9
    assert sq.top_dim == 2
    assert [sq.cohomology_rank(p) for p in range(3)] == [1, 0, 0]
    assert pcup.Complex.from_json(sq.to_json()).to_json() == sq.to_json()


def test_vol1_squared():
    sq = load("square")
    vol1 = pcup.vol_cocycle(sq, 1)
    prod = pcup.cup(sq, vol1, vol1, [1, 2])
    assert prod.values() == {8: {(1, 2): Fraction(2)}}
    assert prod == pcup.vol_cocycle(sq, 2)


def test_unit_and_ring_mismatch():
    sq = load("square")
    r = cochain("square_r1")
    one = pcup.unit_cochain(sq, exterior=False)
    assert pcup.cup(sq, one, r, ["1", "2"]) == r
    with pytest.raises(pcup.PcupError) as info:
        pcup.cup(sq, pcup.vol_cocycle(sq, 1), r, [1, 2])
    assert info.value.kind == "RingMismatch"


def test_not_convenient():
    sq = load("square")
    vol1 = pcup.vol_cocycle(sq, 1)
    with pytest.raises(pcup.PcupError) as info:
        pcup.cup(sq, vol1, vol1, [0, 1])
    assert info.value.kind == "NotConvenient"
    assert info.value.witness[0] == 8
    assert not pcup.is_convenient(sq, [0, 1])["convenient"]


def test_volumes():
    cube = [[i >> k & 1 for k in range(3)] for i in range(8)]
    assert pcup.volume(cube) == 1
    assert pcup.volume([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]) == Fraction(1, 6)
    assert pcup.volume([[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]]) == 0
    a, b = [[0, 0], [1, 0]], [[0, 0], [0, 1]]
    assert pcup.mixed_volume([a, b]) == Fraction(1, 2)
    assert pcup.mixed_volume([b, a]) == Fraction(1, 2)


def test_discriminant_and_wall_crossing():
    sq = load("square")
    assert pcup.discriminant(sq) == [[0, 1], [1, 0]]
    assert pcup.discriminant(load("path")) == []
    assert pcup.classify_point(sq, [0, 1])["kind"] == "on-unconvenient-hyperplane"
    assert pcup.classify_point(sq, [1, 2])["kind"] == "convenient"
    r = cochain("square_r1")
    delta = pcup.wall_crossing_delta(sq, r, r, [1, 2], [-1, 2])
    assert delta == pcup.cup(sq, r, r, [-1, 2]) - pcup.cup(sq, r, r, [1, 2])
    v = pcup.sample_convenient(sq, 1)
    assert v == pcup.sample_convenient(sq, 1)
    assert all(x * n[0] + y * n[1] != 0 for n in pcup.discriminant(sq) for x, y in [v])


def test_cech_and_subdivision():
    fine, coarse = load("square_split"), load("square")
    vol1 = cochain("square_split_vol1")
    v = pcup.sample_convenient(fine, 3)
    assert pcup.cech_cup(fine, vol1, vol1, pcup.ascending_order(fine, v)) == pcup.cup(fine, vol1, vol1, v)
    assert pcup.restrict(fine, coarse, vol1) == pcup.vol_cocycle(coarse, 1)
    defect, witness = pcup.subdivision_defect(fine, coarse, vol1, vol1, [3, 7])
    assert defect.is_zero() and witness is not None


def test_validation_errors():
    with pytest.raises(pcup.PcupError) as info:
        load("square_missing_edge")
    assert info.value.kind == "NotAFaceClosure"
    with pytest.raises(pcup.PcupError) as info:
        load("crossing_segments")
    assert info.value.kind == "BadIntersection"
