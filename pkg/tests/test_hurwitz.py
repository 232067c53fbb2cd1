import itertools
import random

import pytest
from hypothesis import given, strategies as st

from cyclicrank import _perm, _perm_py, hurwitz as hz
from cyclicrank.errors import CycleParseError, OrbitCapError, PreconditionError

S3_TRANSPOSITIONS = "(1 2);(1 2);(2 3);(2 3)"
S4_SIX = "(1 2);(1 2);(2 3);(2 3);(3 4);(3 4)"
S3_MIXED = "(1 2 3);(1 3 2);(1 2 3);(1 3 2);(1 2 3);(1 3 2)"


def test_validate_examples():
    assert hz.validate(hz.parse_tuple(";".join(["(1 2)"] * 6)))
    c = hz.parse_permutation("(1 2 3)")
    assert hz.validate(hz.HurwitzTuple.from_perms([c, c, c]))
    assert not hz.validate(hz.HurwitzTuple.from_perms([(0, 1), (0, 1)]))
    assert not hz.validate(hz.parse_tuple("(1 2);(2 3)"))


def test_genus_examples():
    assert hz.genus_of(hz.cyclic_tuple(2, 6)) == 2
    c7 = tuple((i + 1) % 7 for i in range(7))
    c7_4 = tuple((i + 4) % 7 for i in range(7))
    t = hz.HurwitzTuple.from_perms([c7, c7, c7, c7_4])
    assert hz.validate(t) and hz.genus_of(t) == 6
    for n, m in [(2, 6), (3, 9), (4, 8), (3, 6)]:
        assert hz.genus_of(hz.cyclic_tuple(n, m)) == (n - 1) * (m - 2) // 2


def test_cyclic_tuple():
    assert hz.format_tuple(hz.cyclic_tuple(2, 6)) == ";".join(["(1 2)"] * 6)
    assert hz.cyclic_tuple(3, 9).cycle_types() == ((3,),) * 9
    with pytest.raises(PreconditionError, match="n must divide m"):
        hz.cyclic_tuple(3, 8)


def test_hurwitz_move_explicit():
    t = hz.parse_tuple(S3_TRANSPOSITIONS)
    moved = hz.hurwitz_move(t, 2)
    # (1 2)(2 3)(1 2) = (1 3)
    assert hz.format_tuple(moved) == "(1 2);(1 3);(1 2);(2 3)"
    assert hz.hurwitz_move_inverse(moved, 2) == t
    six = hz.cyclic_tuple(2, 6)
    assert hz.hurwitz_move(six, 1) == six
    with pytest.raises(IndexError):
        hz.hurwitz_move(t, 4)


def test_parser():
    assert hz.parse_permutation("(1 2 3)(4 5)") == (1, 2, 0, 4, 3)
    # rightmost cycle acts first
    assert hz.parse_permutation("(1 2)(2 3)") == hz.parse_permutation("(1 2 3)")
    assert hz.parse_permutation("()", 3) == (0, 1, 2)
    for bad in ["(1 2", "1 2)", "(1 1)", "(a b)", "(0 1)", "(1 2)x", ")("]:
        with pytest.raises(CycleParseError):
            hz.parse_permutation(bad)
    with pytest.raises(CycleParseError):
        hz.parse_permutation("(1 5)", 3)


@given(st.permutations(range(5)))
def test_format_parse_roundtrip(p):
    p = tuple(p)
    assert hz.parse_permutation(hz.format_permutation(p), 5) == p


def _brute_canonical(t):
    best = None
    for c in itertools.permutations(range(t.n)):
        cand = t.conjugate(c).flat
        if best is None or cand < best:
            best = cand
    return best


@pytest.mark.parametrize("text", [S3_TRANSPOSITIONS, S4_SIX, S3_MIXED,
                                  "(1 2 3 4);(1 2 3 4);(1 2 3 4);(1 2 3 4)"])
def test_canonical_form_separates_like_brute_force(text):
    t = hz.parse_tuple(text)
    rnd = random.Random(5)
    for _ in range(20):
        c = list(range(t.n))
        rnd.shuffle(c)
        assert t.conjugate(c).canonical() == t.canonical()
    # two tuples share a canonical form exactly when they share the brute-force minimum
    u = hz.hurwitz_move(t, 1)
    assert (u.canonical() == t.canonical()) == (_brute_canonical(u) == _brute_canonical(t))


def test_backends_agree():
    t = hz.parse_tuple(S4_SIX)
    for i in range(5):
        assert _perm.hurwitz_move(t.flat, 4, i) == _perm_py.hurwitz_move(t.flat, 4, i)
        assert (_perm.hurwitz_move_inverse(t.flat, 4, i)
                == _perm_py.hurwitz_move_inverse(t.flat, 4, i))
    assert _perm.canonical_form(t.flat, 4, 6) == _perm_py.canonical_form(t.flat, 4, 6)
    assert _perm.is_transitive(t.flat, 4, 6) and _perm_py.is_transitive(t.flat, 4, 6)
    assert _perm.product_is_identity(t.flat, 4, 6)
    assert _perm.BACKEND in ("cython", "python")


def test_orbit_trivial_for_abelian_profile():
    a = hz.braid_orbit(hz.parse_tuple(";".join(["(1 2)"] * 6), 1))
    assert a.to_dict() == {"N": 1, "image_order": 1, "kernel_index": 1, "policy": "standard"}


@pytest.mark.parametrize("policy", hz.POLICIES)
def test_orbit_closed_and_profile_preserved(policy):
    t = hz.parse_tuple(S4_SIX, 2)
    a = hz.braid_orbit(t, policy)
    types = sorted(t.cycle_types())
    for flat in a.cover_classes:
        u = hz.HurwitzTuple(4, flat, 2)
        assert hz.validate(u) and hz.genus_of(u) == hz.genus_of(t)
        assert sorted(u.cycle_types()) == types


def test_orbit_cyclic_3_9():
    a = hz.braid_orbit(hz.cyclic_tuple(3, 9, 1))
    assert a.N == 1
    for flat in a.cover_classes:
        assert all(ct == (3,) for ct in hz.HurwitzTuple(3, flat).cycle_types())


def test_orbit_cap():
    with pytest.raises(OrbitCapError):
        hz.braid_orbit(hz.parse_tuple(S4_SIX, 2), cap=5)


def test_orbit_rejects_invalid():
    with pytest.raises(PreconditionError):
        hz.braid_orbit(hz.parse_tuple("(1 2);(2 3)"))
    with pytest.raises(ValueError):
        hz.generator_words(4, 1, "bogus")


def test_pure_braid_words():
    assert hz.pure_braid_word(1, 2) == [1, 1]
    assert hz.pure_braid_word(1, 3) == [2, 1, 1, -2]
    assert hz.pure_braid_word(2, 4) == [3, 2, 2, -3]


@pytest.mark.parametrize("text,k", [(S3_TRANSPOSITIONS, 1), (S4_SIX, 2), (S3_MIXED, 2)])
def test_kernel_index_divides_factorial(text, k):
    from math import factorial
    a = hz.braid_orbit(hz.parse_tuple(text, k))
    order = a.image_order()
    assert a.kernel_index() == order
    assert factorial(a.N) % order == 0


@given(st.lists(st.integers(1, 5).flatmap(lambda i: st.sampled_from([i, -i])),
                min_size=1, max_size=30))
def test_random_words_preserve_invariants(word):
    t = hz.parse_tuple(S4_SIX, 2)
    u = hz.apply_word(t, word)
    assert hz.validate(u)
    assert hz.genus_of(u) == hz.genus_of(t)
    assert sorted(u.cycle_types()) == sorted(t.cycle_types())
    inverse = [-x for x in reversed(word)]
    assert hz.apply_word(u, inverse) == t
