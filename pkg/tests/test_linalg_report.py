import random
from fractions import Fraction

import sympy

from qgt.linalg import Echelon, inverse, rank, rref, solve_affine
from qgt.report import FAILS, HOLDS, Report


def random_rows(rng, m, n):
    return [{j: Fraction(rng.randint(-3, 3)) for j in range(n) if rng.random() < 0.5} for _ in range(m)]


def dense(rows, n):
    return sympy.Matrix([[r.get(j, 0) for j in range(n)] for r in rows])


def test_rank_and_rref_match_sympy():
    rng = random.Random(41)
    for _ in range(30):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        rows = random_rows(rng, m, n)
        M = dense(rows, n)
        assert rank(rows, n) == M.rank()
        ref, pivots = M.rref()
        ours = rref(rows, n)
        assert tuple(p for p, _ in ours) == pivots
        for (p, row), i in zip(ours, range(len(pivots))):
            assert [row.get(j, 0) for j in range(n)] == list(ref.row(i))


def test_solve_affine():
    rng = random.Random(42)
    for _ in range(30):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        rows = random_rows(rng, m, n)
        rhs = [Fraction(rng.randint(-3, 3)) for _ in range(m)]
        particular, kernel = solve_affine(rows, rhs, n)
        M, b = dense(rows, n), sympy.Matrix(rhs)
        consistent = M.rank() == M.row_join(b).rank()
        assert (particular is not None) == consistent
        if particular is not None:
            assert M * sympy.Matrix(particular) == b
            assert len(kernel) == n - M.rank()
            for v in kernel:
                assert M * sympy.Matrix(v) == sympy.zeros(m, 1)


def test_echelon_membership_and_inverse():
    ech = Echelon([{0: 1, 1: 1}, {1: 1, 2: 1}], 3)
    assert ech.dimension == 2
    assert ech.contains({0: 1, 2: -1})
    assert not ech.contains({0: 1})
    A = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]
    assert inverse(A) == [[1, -1], [-1, 2]]
    assert inverse([[1, 2], [2, 4]]) is None


def test_report():
    r = Report("demo")
    r.add("a", HOLDS)
    r.add("b", FAILS, ("x", "y"), "detail")
    assert not r.ok and r.failures[0].name == "b"
    assert r["b"].line() == "b: fails (witness x, y) - detail"
    assert r.to_dict()["checks"][1]["witness"] == ["x", "y"]
    assert "a" in r and "c" not in r
