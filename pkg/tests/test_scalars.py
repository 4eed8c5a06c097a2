import pytest

from hypothesis import given
from hypothesis import strategies as st

from leibnizx.scalars import Q, rat_from_str, rat_to_str


def test_parse_forms():
    assert rat_from_str("3") == Q(3)
    assert rat_from_str("-4/6") == Q(-2, 3)
    assert rat_from_str(" 7/2 ") == Q(7, 2)


def test_zero_denominator_rejected():
    with pytest.raises(ValueError):
        rat_from_str("1/0")


def test_to_str_lowest_terms():
    assert rat_to_str(Q(4, 2)) == "2"
    assert rat_to_str(Q(-6, 4)) == "-3/2"


@given(st.integers(-10**6, 10**6), st.integers(1, 10**4))
def test_roundtrip(n, d):
    x = Q(n, d)
    assert rat_from_str(rat_to_str(x)) == x
