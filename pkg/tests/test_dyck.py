import pytest
from hypothesis import given

from springer_comb.dyck import DyckPath, InvalidPath, arm_leg, codinv, dinv, enumerate_dyck
from springer_comb.oracle import dinv_rational

from conftest import dyck_paths, params

EXPECTED_232 = [
    (0, 0, 0, 0), (0, 0, 0, 1), (0, 0, 0, 2), (0, 0, 0, 3), (0, 0, 0, 4),
    (0, 0, 1, 1), (0, 0, 1, 2), (0, 0, 1, 3), (0, 0, 1, 4), (0, 0, 2, 2),
    (0, 0, 2, 3), (0, 0, 2, 4), (0, 0, 3, 3), (0, 0, 3, 4), (0, 1, 1, 1),
    (0, 1, 1, 2), (0, 1, 1, 3), (0, 1, 1, 4), (0, 1, 2, 2), (0, 1, 2, 3),
    (0, 1, 2, 4), (0, 1, 3, 3), (0, 1, 3, 4),
]


def test_enumerate_232():
    assert [D.y for D in enumerate_dyck(params(2, 3, 2))] == EXPECTED_232


def test_enumerate_small():
    assert [D.y for D in enumerate_dyck(params(2, 3, 1))] == [(0, 0), (0, 1)]
    assert len(enumerate_dyck(params(2, 3, 3))) == 377


@pytest.mark.parametrize("y", [(0, 0, 2, 1), (0, 2, 2, 2), (1, 1, 1, 1), (0, 0, 0), (0, 0, 0, 5)])
def test_invalid_paths(y):
    with pytest.raises(InvalidPath):
        DyckPath(y, params(2, 3, 2))


def test_arm_leg_example():
    D = DyckPath((0, 0, 3, 4), params(2, 3, 2))
    assert arm_leg(D, 3, 2) == (1, 2)
    assert D.rank_vector()[3] == 9 - 2 * 4
    assert 3 * 3 - 2 * 2 == 5
    with pytest.raises(InvalidPath):
        arm_leg(D, 3, 5)
    with pytest.raises(InvalidPath):
        arm_leg(D, 1, 1)


def test_top_box_trivial():
    D = DyckPath((0, 0, 0, 4), params(2, 3, 2))
    assert arm_leg(D, 3, 4) == (0, 0)


def test_dinv_example():
    p = params(2, 3, 3)
    D = DyckPath((0, 0, 0, 1, 2, 7), p)
    pairs = [arm_leg(D, x, y) for x, y in D.boxes()]
    # slope test failures split by which inequality breaks
    too_steep = sum(1 for a, l in pairs if p.n * l > p.m * (a + 1))
    too_flat = sum(1 for a, l in pairs if a > 0 and p.n * (l + 1) <= p.m * a)
    assert (too_steep, too_flat) == (5, 0)
    assert D.size() == 10 and dinv(D) == 5 and codinv(D) == 16


def test_dinv_trivial():
    p = params(2, 3, 2)
    assert dinv(DyckPath((0,) * 4, p)) == 0 and codinv(DyckPath((0,) * 4, p)) == 8
    assert codinv(DyckPath((0, 1, 3, 4), p)) == 0


@given(dyck_paths())
def test_dinv_bounds(D):
    assert 0 <= dinv(D) <= D.size()
    assert 0 <= codinv(D) <= D.params.delta


@given(dyck_paths())
def test_dinv_integer_form_matches_rational(D):
    assert dinv(D) == dinv_rational(D)


@given(dyck_paths())
def test_codinv_decomposition(D):
    outside = sum(1 for _ in D.complement_boxes())
    failing = D.size() - dinv(D)
    assert codinv(D) == outside + failing


@given(dyck_paths())
def test_rank_vector(D):
    p = D.params
    rk = D.rank_vector()
    for x, r in enumerate(rk):
        assert 0 <= r <= p.m * x and (r - p.m * x) % p.n == 0
        if x + 1 < len(rk):
            assert rk[x + 1] <= r + p.m


@given(dyck_paths())
def test_arm_leg_ranges(D):
    for x, y in D.boxes():
        a, l = arm_leg(D, x, y)
        assert 0 <= a <= x and 0 <= l < D.y[x]
