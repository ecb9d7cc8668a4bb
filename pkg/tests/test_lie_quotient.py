import random
from fractions import Fraction

import pytest

import oracle
from helpers import random_lie
from qgt import lie
from qgt.errors import DomainError, StructureError
from qgt.quotient import QuotientAlgebra, drinfeld_kohno, reduce, t_gen
from qgt.series import XY, Alphabet, NCSeries, is_primitive, series


@pytest.mark.parametrize("k", [2, 3])
def test_lyndon_counts_match_necklaces(k):
    A = Alphabet(tuple("abc"[:k]))
    for d in range(1, 7):
        assert len(lie.lyndon_basis(d, A)) == oracle.necklace_count(d, k) == lie.free_lie_dimension(d, k)


def test_lyndon_words_are_lyndon():
    for d in range(1, 8):
        for w in lie.lyndon_basis(d):
            assert lie.is_lyndon(w)
            u, v = lie.standard_factorization(w) if d > 1 else (w, ())
            if d > 1:
                assert lie.is_lyndon(u) and lie.is_lyndon(v) and u + v == w
    assert not lie.is_lyndon((1, 0)) and not lie.is_lyndon((0, 0))


def test_bracketing_is_a_basis():
    # leading word of P(w) is w itself, so the bracketings are independent
    for d in range(1, 7):
        for w in lie.lyndon_basis(d):
            p = lie.bracketing(w, XY, d)
            assert p.coefficient(w) == 1
            assert all(u >= w for u in p)
            assert is_primitive(p)


def test_bracketing_small_cases():
    assert lie.bracketing((0, 1), XY, 3) == series(XY, 3, {"X.Y": 1, "Y.X": -1})
    xxy = series(XY, 3, {"X.X.Y": 1, "X.Y.X": -2, "Y.X.X": 1})
    assert lie.bracketing((0, 0, 1), XY, 3) == xxy


def test_project_embed_round_trip():
    rng = random.Random(5)
    for _ in range(20):
        a = random_lie(rng, 6)
        assert lie.project_lie(lie.embed_lie(a)) == a


def test_project_rejects_non_primitive():
    with pytest.raises(DomainError):
        lie.project_lie(series(XY, 3, {"X.Y": 1}))


def test_lie_bracket_antisymmetry_and_jacobi():
    rng = random.Random(6)
    for _ in range(10):
        a, b, c = (random_lie(rng, 5, max_degree=2) for _ in range(3))
        assert lie.lie_bracket(a, b) == -lie.lie_bracket(b, a)
        jac = lie.lie_bracket(a, lie.lie_bracket(b, c)) + lie.lie_bracket(b, lie.lie_bracket(c, a)) + lie.lie_bracket(c, lie.lie_bracket(a, b))
        assert jac.is_zero()
        assert lie.embed_lie(lie.lie_bracket(a, b)) == lie.embed_lie(a).bracket(lie.embed_lie(b))


def test_lie_element_arithmetic():
    x = lie.LieElement.generator(XY, 3, "X")
    y = lie.LieElement.generator(XY, 3, "Y")
    assert (x + y - x) == y
    assert (x * Fraction(1, 2)).coordinate((0,)) == Fraction(1, 2)
    assert x.bracket(y).coordinate((0, 1)) == 1


def test_quotient_rejects_inhomogeneous():
    with pytest.raises(StructureError):
        QuotientAlgebra(XY, [series(XY, 3, {"X": 1, "X.Y": 1})], 3)


def test_commutative_quotient():
    # k<X,Y>/(XY - YX) is the polynomial ring: dimension d + 1 in degree d
    Q = QuotientAlgebra(XY, [series(XY, 5, {"X.Y": 1, "Y.X": -1})], 5)
    assert [Q.graded_dimension(d) for d in range(6)] == [1, 2, 3, 4, 5, 6]
    a = series(XY, 5, {"Y.X.Y": 1})
    b = series(XY, 5, {"X.Y.Y": 1})
    assert Q.equal(a, b)
    assert reduce(a, Q) == reduce(b, Q)


def test_reduce_is_idempotent_and_linear():
    Q = drinfeld_kohno(3, 4)
    alpha = Q.alphabet
    rng = random.Random(7)
    for _ in range(10):
        terms = {}
        for d in range(1, 5):
            for w in rng.sample(alpha.words(d), 2):
                terms[w] = Fraction(rng.randint(-3, 3))
        a = NCSeries(alpha, 4, terms)
        b = NCSeries(alpha, 4, {w: c * 2 for w, c in terms.items()})
        ra = reduce(a, Q)
        assert reduce(ra, Q) == ra
        assert reduce(a + b, Q) == ra + reduce(b, Q)


def test_t3_relations_reduce_to_zero():
    Q = drinfeld_kohno(3, 3)
    t12, t13, t23 = (t_gen(Q.alphabet, 3, i, j) for i, j in ((1, 2), (1, 3), (2, 3)))
    assert reduce(t12.bracket(t13 + t23), Q).is_zero()
    c = t12 + t13 + t23
    for t in (t12, t13, t23):
        assert reduce(c.bracket(t), Q).is_zero()


def test_t4_graded_dimensions():
    # t4 = free Lie(3) + t3 as vector spaces, so U(t4) has Hilbert series 1 / ((1-3t)(1-2t)(1-t))
    Q = drinfeld_kohno(4, 3)
    t4_lie = {d: oracle.necklace_count(d, 3) + (3 if d == 1 else oracle.necklace_count(d, 2)) for d in range(1, 4)}
    assert [Q.graded_dimension(d) for d in range(4)] == oracle.pbw_dimensions(t4_lie, 3) == [1, 6, 25, 90]
