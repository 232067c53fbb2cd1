import json

import pytest
from hypothesis import given, strategies as st

from cyclicrank import ranks
from cyclicrank.errors import PreconditionError
from cyclicrank.superelliptic import (BranchPoint, CyclicCoverSpec, simple_cyclic_spec)


def test_kernel_bounds_examples():
    assert ranks.kernel_bounds(7, 4, 0) == ranks.KernelBounds(3, 3)
    assert ranks.kernel_bounds(5, 0, 0) == ranks.KernelBounds(5, 5)
    b = ranks.kernel_bounds(6, 6, 2)
    assert (b.lower, b.upper, b.exact) == (2, 4, False)
    with pytest.raises(PreconditionError):
        ranks.kernel_bounds(3, -1, 0)


def test_rigid_family_rank():
    assert ranks.rigid_family_rank(2, 1) == 1
    assert ranks.rigid_family_rank(4, 4) == 0
    assert ranks.rigid_family_rank(7, 4) == 3
    with pytest.raises(PreconditionError):
        ranks.rigid_family_rank(3, 0)


@pytest.mark.parametrize("nmk,fields", [
    ((2, 6, 1), dict(g=2, rk_K=1, rk_U_upper=1, singular_fibers=5)),
    ((3, 9, 2), dict(g=7, rk_K=3, singular_fibers=16, strict_inclusion=False)),
    ((3, 9, 1), dict(rk_K=5, strict_inclusion=True)),
])
def test_cyclic_rank_report_examples(nmk, fields):
    rep = ranks.cyclic_rank_report(*nmk)
    for k, v in fields.items():
        assert getattr(rep, k) == v
    assert rep.monodromy_finite_claimed and rep.non_isotrivial


def test_report_schema():
    doc = json.loads(ranks.cyclic_rank_report(2, 6, 1).to_json())
    assert set(doc) == {"g", "rk_K", "rk_U_upper", "rk_U_exact", "strict_inclusion",
                        "singular_fibers", "base_genus", "monodromy_finite_claimed",
                        "non_isotrivial", "certified_by_oracle"}
    assert doc["rk_U_exact"] is None


@pytest.mark.parametrize("nmk,msg", [((3, 8, 1), "n must divide m"), ((2, 6, 3), "k < m/n"),
                                     ((2, 6, 0), "isotrivial"), ((2, 4, 1), "genus")])
def test_cyclic_rank_report_preconditions(nmk, msg):
    with pytest.raises(PreconditionError, match=msg):
        ranks.cyclic_rank_report(*nmk)


def test_base_curve_genus():
    assert ranks.base_curve_genus(2, 6, 1) == 2
    assert ranks.base_curve_genus(3, 9, 1) == 7
    # k divisible by n: infinity is not a branch point
    assert ranks.base_curve_genus(2, 8, 2) == (14 - 2) // 2


@pytest.mark.parametrize("n,g,rk,r", [(5, 4, 2, 1), (7, 6, 4, 2), (11, 10, 6, 3), (13, 12, 8, 4)])
def test_cd_standard_report(n, g, rk, r):
    rep = ranks.cd_standard_report(n)
    assert (rep.g, rep.rk_K, rep.rk_U, rep.r_D, rep.q) == (g, rk, rk, r, (n - 1) // 2)
    assert rep.h0_nP == n // 3 + 2
    assert rep.rk_U <= rep.rk_K_upper == 2 * r
    assert list(rep.pushforward) == [(-3 * i) // n for i in range(n)]


@pytest.mark.parametrize("n", [3, 6, 9, 10])
def test_cd_rejects(n):
    with pytest.raises(PreconditionError):
        ranks.cd_standard_report(n)


def test_certify_rank():
    rep = ranks.certify_rank(simple_cyclic_spec(2, range(6), 1))
    assert rep.rk_K == 1 and rep.certified_by_oracle
    rep = ranks.certify_rank(simple_cyclic_spec(3, range(9), 1))
    assert rep.rk_K == 5
    with pytest.raises(PreconditionError, match="isotrivial"):
        ranks.certify_rank(simple_cyclic_spec(2, range(6), 0))


def test_certify_rank_rejects_nonrigid():
    # moving three of six points of a genus-2 curve: D = p1+p2+p3 has h0 = 2
    s = simple_cyclic_spec(2, range(6), 3)
    with pytest.raises(PreconditionError):
        ranks.certify_rank(s)


def test_certify_rank_mismatch_is_fatal(monkeypatch):
    from cyclicrank import oracle
    from cyclicrank.errors import OracleMismatchError
    monkeypatch.setattr(oracle, "kernel_dimension", lambda B: -1)
    with pytest.raises(OracleMismatchError):
        ranks.certify_rank(simple_cyclic_spec(2, range(6), 1))


@st.composite
def valid_nmk(draw):
    n = draw(st.integers(2, 8))
    m = n * draw(st.integers(2, 8))
    k = draw(st.integers(1, m // n - 1)) if m // n > 1 else 1
    return n, m, k


@given(valid_nmk())
def test_rank_identities(nmk):
    n, m, k = nmk
    if (n - 1) * (m - 2) < 4 or k * n >= m:
        return
    rep = ranks.cyclic_rank_report(n, m, k)
    assert 2 * rep.rk_K == (n - 1) * (m - 2 - 2 * k)
    assert 0 <= rep.rk_K < rep.g
    b = ranks.kernel_bounds(rep.g, (n - 1) * k, 0)
    assert b.lower == b.upper == rep.rk_K
    if rep.strict_inclusion:
        assert rep.rk_U_upper < rep.rk_K
