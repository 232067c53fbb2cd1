import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cyclicrank.errors import GenusError, PreconditionError
from cyclicrank.superelliptic import (INF, BranchPoint, CurveDivisor, CyclicCoverSpec,
                                      canonical_divisor, catanese_dettweiler_spec,
                                      finite_chart, genus, mobius, parse_location,
                                      ramification_divisor, ramification_points,
                                      riemann_hurwitz, simple_cyclic_spec,
                                      variable_ramification_divisor)


@pytest.mark.parametrize("n,m,expected", [(2, 6, 2), (3, 9, 7), (2, 2, 0)])
def test_genus_examples(n, m, expected):
    assert genus(simple_cyclic_spec(n, range(m), 0)) == expected


def test_genus_of_standard_case():
    assert genus(catanese_dettweiler_spec(7)) == 6
    assert riemann_hurwitz(7, 0, [[7]] * 4) == 6


def test_riemann_hurwitz_examples():
    assert riemann_hurwitz(2, 0, [[2]] * 6) == 2
    assert riemann_hurwitz(1, 0, []) == 0
    with pytest.raises(GenusError):
        riemann_hurwitz(3, 0, [])
    with pytest.raises(GenusError):
        riemann_hurwitz(2, 0, [[2]] * 3)
    with pytest.raises(GenusError):
        riemann_hurwitz(3, 0, [[2, 2]])


def test_spec_validation():
    with pytest.raises(PreconditionError, match="n must divide"):
        simple_cyclic_spec(3, range(8), 1)
    with pytest.raises(PreconditionError):
        CyclicCoverSpec(2, (BranchPoint(0), BranchPoint(0)))
    with pytest.raises(PreconditionError):
        CyclicCoverSpec(1, ())
    with pytest.raises(PreconditionError):
        BranchPoint(0, 0)


def test_ramification_divisor_degrees():
    assert ramification_divisor(simple_cyclic_spec(2, range(6))).degree(
        simple_cyclic_spec(2, range(6))) == 6
    s = simple_cyclic_spec(5, range(10))
    R = ramification_divisor(s)
    assert dict(R.ram_part) == {j: 4 for j in range(10)}
    assert R.degree(s) == 40
    assert ramification_divisor(simple_cyclic_spec(2, [0, 1])).degree(
        simple_cyclic_spec(2, [0, 1])) == 2


def test_variable_ramification_divisor():
    s = simple_cyclic_spec(2, range(6), 1)
    assert variable_ramification_divisor(s) == CurveDivisor({0: 1})
    s = simple_cyclic_spec(3, range(9), 2)
    assert variable_ramification_divisor(s).degree(s) == 4
    with pytest.raises(PreconditionError):
        variable_ramification_divisor(simple_cyclic_spec(3, range(9), 0))


def test_fibres_of_standard_case():
    s = catanese_dettweiler_spec(7)
    by_loc = {fb.location: fb for fb in s.fibres()}
    assert by_loc[Fraction(0)].ell == 4 and by_loc[Fraction(0)].e == 7
    assert by_loc[INF].ell == -(7 * 6) // 7
    assert [p.index for p in ramification_points(s)] == [7, 7, 7, 7]


def test_canonical_divisor_degree():
    for s in (simple_cyclic_spec(3, range(9)), catanese_dettweiler_spec(5),
              simple_cyclic_spec(2, [0, 1, 2, 3, 4, "inf"])):
        assert canonical_divisor(s).degree(s) == 2 * genus(s) - 2


def test_json_roundtrip():
    s = simple_cyclic_spec(3, ["1/2", 1, 2, 3, 4, "inf"], [0, 2])
    doc = json.loads(s.to_json())
    assert doc["branch"][0] == {"x": "1/2", "mult": 1, "moving": True}
    assert doc["branch"][5]["x"] == "inf"
    assert CyclicCoverSpec.from_json(s.to_json()) == s
    with pytest.raises(ValueError):
        CyclicCoverSpec.from_dict({"n": 2})


def test_parse_location():
    assert parse_location("inf") is INF
    assert parse_location("-3/4") == Fraction(-3, 4)
    with pytest.raises(ValueError):
        parse_location("x")


def test_finite_chart_moves_infinity():
    s = catanese_dettweiler_spec(7)
    matrix = finite_chart(s)
    t = mobius(s, matrix)
    assert INF not in t.locations
    assert genus(t) == genus(s)
    assert finite_chart(simple_cyclic_spec(2, range(6))) is None


@st.composite
def reduced_covers(draw):
    n = draw(st.sampled_from([2, 3, 4, 5]))
    m = n * draw(st.integers(1, 4))
    pts = draw(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=5),
                        min_size=m, max_size=m, unique=True))
    return n, m, pts


@given(reduced_covers(), st.randoms(use_true_random=False))
def test_genus_formula_and_relabeling(data, rnd):
    n, m, pts = data
    s = simple_cyclic_spec(n, pts, 0)
    g = genus(s)
    assert 2 * g == (n - 1) * (m - 2)
    rnd.shuffle(pts)
    assert genus(simple_cyclic_spec(n, pts, 0)) == g
    R = ramification_divisor(s)
    assert R.degree(s) == 2 * g - 2 + 2 * n


@given(reduced_covers(), st.integers(0, 3))
def test_variable_divisor_below_ramification(data, k):
    n, m, pts = data
    k = min(k, m)
    if k == 0:
        return
    s = simple_cyclic_spec(n, pts, k)
    assert variable_ramification_divisor(s).leq(ramification_divisor(s), s)
