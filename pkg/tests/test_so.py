import pytest

import oracles
from unitary_hw.errors import WrongCaseError
from unitary_hw.numeric import HalfInteger, SOStar, halves, parse_coords, rho
from unitary_hw.so import (
    PCase,
    QCase,
    case_profile,
    classify_halfint_so,
    classify_integer_so,
    classify_so,
    is_unitary_so,
    unitary_hasse_points_so,
    zero_structure,
)
from unitary_hw.weyl import DominantParameter, enumerate_so, sign_change_count

EX_INT = "9,4,3,3,2,1,1,0"
EX_HALF = "13/2,9/2,7/2,5/2,5/2,3/2,3/2,1/2,-1/2"


def dom(n, text):
    return DominantParameter(SOStar(n), parse_coords(text))


def coords_set(items):
    return {it.arrangement.coords for it in items}


@pytest.mark.parametrize(
    "text, expected",
    [("3,2,1,0", PCase(4)), ("3,0,-1,-2", QCase(4)), ("9,4,3,2,1,0,-1,-3", QCase(7)), ("2,0,-1,-3", QCase(3))],
)
def test_case_profile(text, expected):
    assert case_profile(parse_coords(text)) == expected


def test_is_unitary_so_examples():
    assert is_unitary_so(parse_coords("2,0,-1,-3"))
    assert not is_unitary_so(parse_coords("3,2,0,-1"))
    assert is_unitary_so(parse_coords("7/2,5/2,3/2,1/2,-1/2,-3/2,-5/2,-9/2,-13/2"))
    assert not is_unitary_so(parse_coords("9/2,7/2,5/2,3/2,1/2,-1/2,-3/2"))


def test_zero_structure():
    z = zero_structure(dom(8, EX_INT))
    assert (z.x, z.u, z.repeated_above) == (HalfInteger(1), 3, (2,))
    z = zero_structure(dom(4, "3,2,1,0"))
    assert (z.x, z.u, z.repeated_above) == (HalfInteger(0), 3, ())
    z = zero_structure(dom(9, EX_HALF))
    assert (z.x, z.u, z.repeated_above) == (HalfInteger("5/2"), 2, ())
    assert zero_structure(dom(3, "3,2,1")) is None
    assert zero_structure(dom(2, "5/2,1/2")) is None


def test_integer_with_zero_example():
    items = classify_integer_so(dom(8, EX_INT))
    assert coords_set(items) == {
        halves([3, 1, 0, -1, -2, -3, -4, -9]),
        halves([4, 3, 2, 1, 0, -1, -3, -9]),
        halves([3, 2, 1, 0, -1, -3, -4, -9]),
    }
    assert all(it.parity_used == "zero-absorbed" for it in items)


def test_rho_n4():
    items = classify_integer_so(dom(4, "3,2,1,0"))
    assert coords_set(items) == {
        halves(c)
        for c in ([3, 0, -1, -2], [2, 0, -1, -3], [3, 2, 1, 0], [2, 1, 0, -3], [1, 0, -2, -3], [0, -1, -2, -3])
    }


def test_repeats_above_x_plus_u_give_nothing():
    notes = []
    assert classify_integer_so(dom(5, "7,7,5,5,0"), notes) == []
    assert any("above x+u" in n for n in notes)
    assert classify_halfint_so(dom(6, "15/2,15/2,11/2,11/2,1/2,1/2")) == []


def test_half_integer_example():
    notes = []
    items = classify_halfint_so(dom(9, EX_HALF), notes)
    assert coords_set(items) == {
        parse_coords("9/2,5/2,3/2,1/2,-1/2,-3/2,-5/2,-7/2,-13/2"),
        parse_coords("7/2,5/2,3/2,1/2,-1/2,-3/2,-5/2,-9/2,-13/2"),
    }
    third = "(5/2, 3/2, 1/2, -1/2, -3/2, -5/2, -7/2, -9/2, -13/2)"
    assert any(third in n and "parity = odd" in n for n in notes)


def test_half_integer_small():
    assert coords_set(classify_halfint_so(dom(2, "5/2,3/2"))) == {parse_coords("-3/2,-5/2")}


def test_wrong_class():
    with pytest.raises(WrongCaseError):
        classify_integer_so(dom(2, "5/2,3/2"))
    with pytest.raises(WrongCaseError):
        classify_halfint_so(dom(2, "2,1"))


@pytest.mark.parametrize("n", range(2, 8))
def test_hasse_points_equal_rho_classification(n):
    d = DominantParameter(SOStar(n), rho(SOStar(n)).coords)
    assert coords_set(unitary_hasse_points_so(n)) == coords_set(classify_integer_so(d))


def test_hasse_points_small():
    assert coords_set(unitary_hasse_points_so(2)) == {halves([1, 0]), halves([0, -1])}
    assert len(unitary_hasse_points_so(4)) == 6


def test_oracle_equivalence_against_highest_weight_form():
    for n, coords in oracles.so_dominants(5, 11):
        d = DominantParameter(SOStar(n), halves(coords))
        want = {
            oracles.frac(a.coords) for a in enumerate_so(d) if oracles.so_unitary_hw(a.coords)
        }
        assert {oracles.frac(c) for c in coords_set(classify_so(d))} == want, coords


def test_items_respect_parity_and_zero_string():
    for n, coords in oracles.so_dominants(6, 9):
        d = DominantParameter(SOStar(n), halves(coords))
        z = zero_structure(d)
        for it in classify_so(d):
            arr = it.arrangement
            assert arr.flips == sign_change_count(d, arr)
            if not arr.has_zero:
                assert arr.flips % 2 == 0
            if z is not None and d.coords[0].is_integer:
                # the full string x, ..., -x sits contiguously in the arrangement
                k = arr.coords.index(z.x)
                block = arr.coords[k : k + 2 * int(z.x) + 1]
                assert block == tuple(z.x - j for j in range(2 * int(z.x) + 1))


def test_no_divergence_notes():
    for n, coords in oracles.so_dominants(6, 9):
        notes = []
        classify_so(DominantParameter(SOStar(n), halves(coords)), notes)
        assert not [x for x in notes if x.startswith("divergence")], coords
