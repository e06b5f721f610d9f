from fractions import Fraction as F

import pytest

from montesinos.harness import check_theorem, iter_tuples, summarize, sweep, tangle_values
from montesinos.model import NotAKnot, TooFewTangles, check_knot


@pytest.mark.parametrize(
    "text, cr, bound, alt",
    [
        ("1/2,1/3,-1/3", 8, 16, False),
        ("1/2,1/3,1/7", 12, 24, True),
        ("1/2,1/3,-2/3", 8, 16, False),
        ("-1/2,-1/3,-1/5", 10, 20, True),
    ],
)
def test_check_theorem_examples(text, cr, bound, alt):
    rec = check_theorem(text)
    assert (rec.crossing, rec.bound, rec.alternating) == (cr, bound, alt)
    assert rec.holds and not rec.violation
    assert rec.to_dict()["bound"] == str(bound)


def test_check_theorem_rejects_links_and_short_tuples():
    with pytest.raises(NotAKnot):
        check_theorem("1/2,1/4,1/3")
    with pytest.raises(TooFewTangles):
        check_theorem("1/2,1/3")


def test_tangle_values_grid():
    vals = tangle_values(3, 0)
    assert vals == [F(-2, 3), F(-1, 2), F(-1, 3), F(1, 3), F(1, 2), F(2, 3)]
    assert F(3, 2) in tangle_values(2, 1) and F(-3, 2) in tangle_values(2, 1)
    assert F(5, 2) not in tangle_values(2, 1)
    with pytest.raises(ValueError):
        tangle_values(1)


def test_iter_tuples_matches_naive_filter():
    import itertools

    def is_knot(c):
        try:
            check_knot(c)
        except NotAKnot:
            return False
        return True

    vals = tangle_values(4, 0)
    naive = [c for c in itertools.product(vals, repeat=3) if is_knot(c)]
    got = [t.tangles for t in iter_tuples(4, 3, 0)]
    assert got == naive


def test_iter_tuples_rejects_integral_grid():
    with pytest.raises(ValueError):
        list(iter_tuples(3, 3, values=[F(1, 2), F(1)]))
    with pytest.raises(ValueError):
        list(iter_tuples(3, 2))


def test_sweep_summary():
    s = summarize(sweep(3, 3))
    d = s.to_dict()
    assert d == {"summary": True, "records": 128, "holds": 128, "equality": 128, "alternating": 32, "violations": 0}


def test_sweep_deterministic():
    a = [r.to_dict() for r in sweep(4, 3)]
    b = [r.to_dict() for r in sweep(4, 3)]
    assert a == b and len(a) > 0
