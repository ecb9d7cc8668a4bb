import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from helpers import random_grouplike, random_lie
from qgt import lie
from qgt.errors import DomainError, StructureError
from qgt.series import (
    XY,
    Alphabet,
    FreeWord,
    NCSeries,
    coproduct,
    exp,
    inverse,
    is_grouplike,
    is_primitive,
    log,
    magnus,
    power,
    scalar,
    series,
    substitute,
    swap_xy,
)

N = 4
fractions = st.fractions(min_value=-3, max_value=3, max_denominator=4)
words = st.lists(st.integers(0, 1), max_size=N).map(tuple)
series_st = st.dictionaries(words, fractions, max_size=6).map(lambda d: NCSeries(XY, N, d))
positive_series = series_st.map(lambda s: s - NCSeries.constant(XY, N, s.constant_term))


def test_scalar_refuses_floats():
    with pytest.raises(TypeError):
        scalar(0.5)
    assert scalar("3/6") == Fraction(1, 2)


def test_alphabet_and_words():
    A = Alphabet(("a", "b", "c"), (1, 2, 1))
    assert A.degree((0, 1)) == 3
    assert sorted(A.words(2), key=A.sort_key) == A.words(2)
    assert {w for w in A.words(2)} == {(0, 0), (0, 2), (2, 0), (2, 2), (1,)}
    assert A.format_word(()) == "1" and A.parse_word("a.b") == (0, 1)
    with pytest.raises(StructureError):
        A.parse_word("a.z")


def test_truncation_drops_high_degree():
    X = NCSeries.generator(XY, 2, "X")
    assert (X * X * X).is_zero()
    assert (X * X).coefficient("X.X") == 1


def test_mismatched_structures():
    a = NCSeries.generator(XY, 3, 0)
    b = NCSeries.generator(XY, 4, 0)
    with pytest.raises(StructureError):
        a + b
    with pytest.raises(StructureError):
        a * NCSeries.generator(Alphabet(("X", "Z")), 3, 0)


@given(series_st, series_st, series_st)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert a + b == b + a
    one = NCSeries.one(XY, N)
    assert a * one == a == one * a


@given(series_st, series_st)
def test_product_matches_oracle(a, b):
    assert oracle.from_series(a * b) == oracle.mul(oracle.from_series(a), oracle.from_series(b), N)


@given(positive_series)
def test_exp_log_inverse(a):
    assert log(exp(a)) == a
    e = exp(a)
    assert exp(log(e)) == e
    assert e * inverse(e) == 1 == inverse(e) * e
    assert oracle.from_series(e) == oracle.exp(oracle.from_series(a), N)


@given(positive_series, st.integers(0, 4))
def test_power(a, k):
    e = exp(a)
    assert power(e, k) == e**k
    assert power(e, Fraction(1, 2)) ** 2 == e
    assert power(e, -k) == inverse(e) ** k


def test_log_domain():
    with pytest.raises(DomainError):
        log(NCSeries.generator(XY, 3, 0))
    with pytest.raises(DomainError):
        inverse(NCSeries.generator(XY, 3, 0))


def test_substitute_is_homomorphism():
    rng = random.Random(1)
    for _ in range(10):
        f, g = random_grouplike(rng, N), random_grouplike(rng, N)
        u, v = lie.embed_lie(random_lie(rng, N)), lie.embed_lie(random_lie(rng, N))
        sub = {"X": u, "Y": v}
        assert substitute(f * g, sub) == substitute(f, sub) * substitute(g, sub)


def test_substitute_refuses_constant_terms():
    f = series(XY, 3, {"X": 1})
    with pytest.raises(DomainError):
        substitute(f, {"X": exp(NCSeries.generator(XY, 3, 0)), "Y": NCSeries.generator(XY, 3, 1)})


def test_swap():
    f = series(XY, 3, {"X.Y": 2, "Y": 1})
    assert swap_xy(f) == series(XY, 3, {"Y.X": 2, "X": 1})
    assert swap_xy(swap_xy(f)) == f


def test_coproduct_oracle():
    rng = random.Random(2)
    for _ in range(10):
        f = random_grouplike(rng, N)
        assert is_grouplike(f) and oracle.is_grouplike(oracle.from_series(f), N)
        assert coproduct(f) == coproduct(f)
        a = lie.embed_lie(random_lie(rng, N))
        assert is_primitive(a) and oracle.is_primitive(oracle.from_series(a))
    not_gl = series(XY, 3, {"1": 1, "X.Y": 1})
    assert not is_grouplike(not_gl) and not oracle.is_grouplike(oracle.from_series(not_gl), 3)
    assert not is_primitive(series(XY, 3, {"X.Y": 1}))


def test_grouplike_needs_unit_constant():
    assert not is_grouplike(NCSeries.zero(XY, 3))
    assert not is_grouplike(exp(NCSeries.generator(XY, 3, 0)).scale(2))


def test_free_words_and_magnus():
    w = FreeWord.parse("x y yi xi x")
    assert str(w) == "x"
    a = FreeWord.parse("x y xi")
    b = FreeWord.parse("y y x")
    assert magnus(a * b, 5) == magnus(a, 5) * magnus(b, 5)
    assert magnus(a * a.inverse(), 5) == 1
    X = NCSeries.generator(XY, 5, 0)
    # group-like normalization: x -> exp(X)
    assert magnus(FreeWord.parse("x"), 5) == exp(X)
    # commutator [x, y] starts in degree 2 with XY - YX
    c = magnus(FreeWord.parse("x y xi yi"), 5) - 1
    assert c.min_degree() == 2
    assert c.degree_part(2) == series(XY, 5, {"X.Y": 1, "Y.X": -1})


@settings(max_examples=30)
@given(st.lists(st.sampled_from([1, -1, 2, -2]), max_size=8), st.lists(st.sampled_from([1, -1, 2, -2]), max_size=8))
def test_magnus_homomorphism(u, v):
    a, b = FreeWord(tuple(u)), FreeWord(tuple(v))
    assert magnus(a * b, 4) == magnus(a, 4) * magnus(b, 4)
    assert is_grouplike(magnus(a, 4))


def test_format_lines():
    f = series(XY, 3, {"1": 1, "Y": Fraction(-1, 2), "X": 3})
    assert f.format_lines() == ["1 * 1", "3 * X", "-1/2 * Y"]
