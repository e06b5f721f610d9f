import itertools
import math
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from montesinos.model import (
    FormKind,
    InfiniteTangle,
    IntegralTangle,
    MontesinosTuple,
    NotAKnot,
    ReducedForm,
    TooFewTangles,
    is_alternating_form,
    normalize,
    parse_tuple,
    validate_knot,
)


def test_validate_examples():
    assert validate_knot([F(1, 2), F(1, 3), F(-2, 3)]).tangles == (F(1, 2), F(1, 3), F(-2, 3))
    validate_knot([F(1, 3)] * 3)
    with pytest.raises(NotAKnot):
        validate_knot([F(1, 2), F(1, 4), F(1, 3)])


def test_validate_errors():
    with pytest.raises(IntegralTangle):
        validate_knot([F(1, 2), F(2), F(1, 3)])
    with pytest.raises(TooFewTangles):
        validate_knot([F(1, 2), F(1, 3)])
    with pytest.raises(InfiniteTangle):
        validate_knot("1/2,1/0,1/3")
    # all odd denominators but an even number of odd numerators
    with pytest.raises(NotAKnot):
        validate_knot("1/3,2/3,1/5")


def test_parse_tuple():
    assert parse_tuple("1/2,1/3,-2/3") == (F(1, 2), F(1, 3), F(-2, 3))
    assert parse_tuple("(1/2, 1/3, -2/3)") == (F(1, 2), F(1, 3), F(-2, 3))
    assert str(validate_knot("1/2,1/3,-2/3")) == "1/2,1/3,-2/3"


def _shifts(src, out):
    return [o - s for s, o in zip(src, out)]


def test_normalize_examples():
    r = normalize(validate_knot("1/2,1/3,-2/3"))
    assert r.tangles == (F(1, 2), F(1, 3), F(-2, 3)) and r.kind is FormKind.MIXED

    # These two are links (two even denominators) so they go in as raw tuples.
    src = (F(5, 2), F(-1, 3), F(1, 4))
    r = normalize(src)
    assert r.tangles == (F(3, 2), F(2, 3), F(1, 4)) and r.kind is FormKind.ALL_POSITIVE
    assert _shifts(src, r.tangles) == [-1, 1, 0]

    src = (F(3, 2), F(-1, 3), F(-3, 4))
    r = normalize(src)
    assert r.tangles == (F(-1, 2), F(2, 3), F(1, 4)) and r.kind is FormKind.MIXED
    assert _shifts(src, r.tangles) == [-2, 1, 1]


def test_normalize_all_negative_branch():
    src = (F(-7, 2), F(-1, 3), F(1, 5))  # floors -4, -1, 0 -> e0 = -5 <= -3
    r = normalize(src)
    assert r.kind is FormKind.ALL_NEGATIVE
    assert r.tangles == (F(-5, 2), F(-1, 3), F(-4, 5))
    assert sum(r.tangles) == sum(src)


@pytest.mark.parametrize(
    "text, expected",
    [("1/2,1/3,1/7", True), ("1/2,1/3,-1/3", False), ("-1/2,-1/3,-2/3", True)],
)
def test_is_alternating_form(text, expected):
    assert is_alternating_form(normalize(validate_knot(text))) is expected


def test_reduced_form_rejects_unreduced():
    with pytest.raises(ValueError):
        ReducedForm.from_tangles([F(3, 2), F(-1, 3), F(1, 5)])
    with pytest.raises(ValueError):
        ReducedForm((F(1, 2), F(1, 3), F(1, 5)), FormKind.MIXED)


def _grid(max_den, max_int):
    b = max_int + 1
    return sorted(
        {F(p, q) for q in range(2, max_den + 1) for p in range(-b * q + 1, b * q) if math.gcd(p, q) == 1}
    )


def _valid_tuples(max_den, max_int, n=3):
    for combo in itertools.product(_grid(max_den, max_int), repeat=n):
        try:
            yield validate_knot(combo)
        except NotAKnot:
            continue


def test_normalize_properties_exhaustive():
    for t in _valid_tuples(5, 2):
        r = normalize(t)
        assert normalize(r.tangles) == r
        assert sum(r.tangles) == t.total()
        assert sorted(x - math.floor(x) for x in r.tangles) == sorted(x - math.floor(x) for x in t)
        assert all((y - x).denominator == 1 for x, y in zip(t, r.tangles))
        validate_knot(r.tangles)


tangle = st.builds(F, st.integers(-60, 60), st.integers(2, 12)).filter(lambda r: r.denominator > 1)


@given(st.lists(tangle, min_size=3, max_size=6))
def test_normalize_reduces_any_tuple(tangles):
    r = normalize(tangles)
    assert sum(r.tangles) == sum(tangles)
    if r.kind is FormKind.MIXED:
        assert all(abs(x) < 1 for x in r.tangles)
    assert normalize(r.tangles) == r


def test_mirror_of_tuple():
    t = validate_knot("1/2,1/3,-2/3")
    assert (-t).tangles == (F(-1, 2), F(-1, 3), F(2, 3))
    assert isinstance(-t, MontesinosTuple)
