import pytest
from hypothesis import given

from springer_comb.dyck import enumerate_dyck
from springer_comb.semigroup import semigroup_contains
from springer_comb.semimodule import (
    CMatrix,
    NotAdmissible,
    NotInSemimodule,
    Semimodule,
    check_cmatrix,
    contains,
    dim_floor_sum,
    dim_gaps,
    dim_gc,
    enumerate_admissible,
    from_cmatrix,
    gaps_from,
    is_admissible_definition,
    to_cmatrix,
)

from conftest import SMALL, admissible_modules, matrices, modules, params

C_FIRST = ((0, 1), (0, 3), (3, 5))
C_SECOND = ((0, 1), (0, 3), (2, 4))


def mod(c, t=(2, 3, 3)):
    return from_cmatrix(CMatrix(c, params(*t)))


def test_first_example():
    s = mod(C_FIRST)
    assert s.gens == (0, 3, 19, 10, 20, 17)
    assert s.e == 12 and s.conductor == 15
    assert s.gap_list() == [1, 2, 4, 5, 7, 8, 11, 13, 14]
    assert [contains(s, x) for x in (12, 13, 14)] == [True, False, False]


def test_second_example():
    s = mod(C_SECOND)
    assert s.gens == (0, 3, 19, 10, 26, 23)
    assert to_cmatrix(s).c == C_SECOND


def test_zero_matrix_is_semigroup():
    p = params(2, 3, 3)
    s = from_cmatrix(CMatrix(((0, 0),) * 3, p))
    assert s.gens == p.ahat_flat() and s.e == 0
    assert all(contains(s, x) == semigroup_contains(p, x) for x in range(4 * p.delta + 1))
    assert to_cmatrix(s).c == ((0, 0),) * 3
    assert gaps_from(s, 0)[0] == p.delta
    assert dim_gaps(s) == dim_gc(s) == p.delta


def test_gaps_from():
    s = mod(C_FIRST)
    assert gaps_from(s, 12) == (2, (13, 14))
    assert gaps_from(s, s.conductor)[0] == 0
    with pytest.raises(NotInSemimodule):
        gaps_from(s, 13)


def test_dimensions():
    assert dim_gaps(mod(C_FIRST)) == dim_gc(mod(C_FIRST)) == 14
    assert dim_gaps(mod(C_SECOND)) == dim_gc(mod(C_SECOND)) == 16
    assert dim_gc(modules(2, 3, 1)[0]) == 1


def test_counts():
    assert len(enumerate_admissible(params(2, 3, 1))) == 2
    assert len(enumerate_admissible(params(2, 3, 2))) == 23
    assert len(enumerate_admissible(params(2, 3, 3))) == 377


@pytest.mark.parametrize("t", SMALL)
def test_counts_match_dyck(t):
    assert len(matrices(*t)) == len(enumerate_dyck(params(*t)))


@pytest.mark.parametrize("t", SMALL)
def test_enumeration_sorted(t):
    flat = [c.flat() for c in matrices(*t)]
    assert flat == sorted(flat) and len(set(flat)) == len(flat)


@pytest.mark.parametrize("t", SMALL)
def test_round_trip(t):
    for c in matrices(*t):
        assert to_cmatrix(from_cmatrix(c)) == c


@pytest.mark.parametrize(
    "c",
    [((0, 2), (0, 3)), ((1, 1), (3, 4)), ((0, 1), (0, 0)), ((0, 1), (0, 2))],
)
def test_rejects_invalid(c):
    with pytest.raises(NotAdmissible):
        check_cmatrix(CMatrix(c, params(2, 3, 2)))


def test_rejects_bad_generators():
    p = params(2, 3, 2)
    with pytest.raises(NotAdmissible):
        Semimodule.from_generators(p, [0, 6, 13])
    with pytest.raises(NotAdmissible):
        Semimodule.from_generators(p, [4, 6, 13, 19])


@given(admissible_modules())
def test_definitional_admissibility(s):
    assert is_admissible_definition(s)


@given(admissible_modules())
def test_closure_and_dmn1_invariance(s):
    p = s.params
    for a in s.gens:
        for g in (p.dn, p.dm, p.dmns):
            assert contains(s, a + g)


@given(admissible_modules())
def test_delta_bounds(s):
    p = s.params
    assert s.delta_inv == len(s.gap_list()) <= p.delta
    assert (s.delta_inv == p.delta) == (s.gens == p.ahat_flat())
    assert s.conductor <= p.delta + s.delta_inv
    assert s.e == sum(to_cmatrix(s).flat())


@given(admissible_modules())
def test_three_dimension_formulas(s):
    assert dim_gaps(s) == dim_gc(s) == dim_floor_sum(s) >= 0


@given(admissible_modules())
def test_gap_count_closed_form(s):
    for b in s.gens:
        count, gaps = gaps_from(s, b)
        assert count == len(gaps)
        assert all(not contains(s, x) for x in gaps)


@given(admissible_modules())
def test_beyond_conductor(s):
    assert all(contains(s, x) for x in range(s.conductor, s.conductor + 2 * s.params.dn))
    if s.conductor > 0:
        assert not contains(s, s.conductor - 1)
