import pytest

from pogcut.gf2 import EdgeVector
from pogcut.model import build_p12
from pogcut.pog import CapabilityError, build_triad
from pogcut.rozig import edge_id, num_edges
from pogcut.verify import (
    brute_force_points,
    enumerate_01_points,
    enumerate_cuts,
    integer_box_scan,
    maxcut_oracle,
    model_solve,
)


def unit(z, i, j):
    obj = [0] * num_edges(z)
    obj[edge_id(i, j, z)] = 1
    return obj


@pytest.mark.parametrize("z,n", [(6, 32), (8, 128)])
def test_cut_count(z, n):
    cuts = enumerate_cuts(z)
    assert len(cuts) == n
    assert all(1 not in c.side for c in cuts)


def test_cut_weights():
    z = 8
    weights = sorted(c.bits.weight() for c in enumerate_cuts(z))
    assert weights[0] == 0 and weights[-1] == z * z // 4
    for c in enumerate_cuts(6):
        k = len(c.side)
        assert c.bits.weight() == k * (6 - k)


def test_oracle_examples():
    assert maxcut_oracle(6, [1] * 15).value == 9
    assert maxcut_oracle(6, unit(6, 2, 5)).value == 1
    c5 = [0] * 15
    for i, j in [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]:
        c5[edge_id(i, j, 6)] = 1
    assert maxcut_oracle(6, c5).value == 4
    assert maxcut_oracle(6, [0] * 15) .value == 0


def test_oracle_tie_break():
    sol = maxcut_oracle(6, [0] * 15)
    assert sol.side == frozenset()
    sol = maxcut_oracle(6, unit(6, 1, 2))
    assert sol.side == frozenset({2})


def test_oracle_errors():
    with pytest.raises(ValueError):
        maxcut_oracle(6, [1] * 14)
    with pytest.raises(CapabilityError):
        maxcut_oracle(32, [0] * num_edges(32))


def test_points_equal_cuts(triad6):
    pts = enumerate_01_points(build_p12(triad6))
    assert pts == {c.bits for c in enumerate_cuts(6)}


def test_pruned_search_matches_brute_force(triad6):
    p12 = build_p12(triad6)
    brute = brute_force_points(p12, 1)
    assert {EdgeVector(sum(1 << e for e, v in enumerate(x) if v), 15) for x in brute} == enumerate_01_points(p12)
    # unit bounds implied: the 3^15 box holds no point with a coordinate 2
    assert integer_box_scan(p12, 2) == brute


@pytest.mark.slow
def test_box_scan_matches_unpruned_scan(triad6):
    # 3^15 points, about half a minute
    p12 = build_p12(triad6)
    assert integer_box_scan(p12, 2) == brute_force_points(p12, 2)


def test_all_twos_infeasible(triad6):
    p12 = build_p12(triad6)
    assert not p12.feasible([2] * 15)
    assert not p12.feasible([0] * 14 + [2])


def test_threads_agree(triad6):
    p12 = build_p12(triad6)
    assert enumerate_01_points(p12, threads=2) == enumerate_01_points(p12)


def test_guards():
    with pytest.raises(CapabilityError):
        integer_box_scan(build_p12(build_triad(8)), 2)
    with pytest.raises(CapabilityError):
        enumerate_01_points(build_p12(build_triad(10)))


def test_model_solve(triad6):
    p12 = build_p12(triad6)
    pts = enumerate_01_points(p12)
    assert model_solve(p12, [1] * 15, pts).value == 9
    assert model_solve(p12, [0] * 15, pts).value == 0
    assert model_solve(p12, [0] * 15, pts).argmax.bits == 0
    for e in range(15):
        obj = [0] * 15
        obj[e] = 1
        assert model_solve(p12, obj, pts).value == 1
    weighted = list(range(-7, 8))
    assert model_solve(p12, weighted, pts).value == maxcut_oracle(6, weighted).value
