"""Regenerate corpus/ from library constructors.  Run from the repository root."""

from fractions import Fraction
from pathlib import Path

from qgt import io
from qgt.braid import BraidWord
from qgt.gtrel import GTElement, solve_relations
from qgt.hgt import HGTPair
from qgt.hopf import (
    cyclic_group_algebra,
    drinfeld_double,
    dual_hopf,
    group_algebra,
    sweedler_h4,
    symmetric_group_algebra_s3,
    with_antipode,
)
from qgt.ihara import MetrizedLieAlgebra
from qgt.series import XY, NCSeries, exp
from qgt.trialgebra import diagonal_quadraalgebra, diagonal_trialgebra

OUT = Path(__file__).resolve().parent.parent / "corpus"
h = Fraction(1, 2)


def hopf(H, **extras):
    return io.AlgebraDocument("hopf", H, extras)


def lie_series(terms, n=6):
    return io.AlgebraDocument("series", NCSeries.from_text(XY, n, terms))


def sl2():
    # basis H, E, F: [H,E] = 2E, [H,F] = -2F, [E,F] = H
    c = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    for (i, j, k, v) in ((0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)):
        c[i][j][k], c[j][i][k] = v, -v
    return MetrizedLieAlgebra(("H", "E", "F"), c, [[2, 0, 0], [0, 0, 1], [0, 1, 0]])


def so3():
    c = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        c[i][j][k], c[j][i][k] = 1, -1
    return MetrizedLieAlgebra(("L1", "L2", "L3"), c, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def documents():
    z2, z3 = cyclic_group_algebra(2), cyclic_group_algebra(3)
    z2xz2 = group_algebra(["e", "a", "b", "ab"], [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]])
    h4 = with_antipode(sweedler_h4())
    s3 = symmetric_group_algebra_s3()
    z2_R = [[h, h], [h, -h]]
    z2_char = [[1, 1], [1, -1]]
    yield "z2_group_algebra", hopf(z2, r_matrix=z2_R, coquasi_form=z2_char, pairing=z2_char)
    yield "z3_group_algebra", hopf(z3)
    chars = [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]]
    yield "z2xz2_group_algebra", hopf(z2xz2, pairing=chars)
    h4_R = [[h, h, 0, 0], [h, -h, 0, 0], [0, 0, h, -h], [0, 0, h, h]]
    h4_pairing = [[1, 1, 0, 0], [1, -1, 0, 0], [0, 0, -1, 1], [0, 0, 1, 1]]
    yield "sweedler_h4", hopf(h4, r_matrix=h4_R, pairing=h4_pairing)
    yield "s3_group_algebra", hopf(s3)
    for name, H in (("z2", z2), ("z3", z3), ("sweedler_h4", h4)):
        yield f"{name}_dual", hopf(dual_hopf(H))
    for name, H in (("z2", z2), ("z3", z3)):
        D, R = drinfeld_double(H)
        yield f"{name}_double", hopf(D, r_matrix=R)
    yield "z2_diagonal", io.AlgebraDocument(
        "trialgebra", diagonal_trialgebra(z2), {"r_dot": z2_R, "r_star": z2_char, "pairing": z2_char}
    )
    yield "z3_diagonal", io.AlgebraDocument("trialgebra", diagonal_trialgebra(z3))
    yield "s3_diagonal", io.AlgebraDocument("trialgebra", diagonal_trialgebra(s3))
    yield "z2_quadraalgebra", io.AlgebraDocument("quadraalgebra", diagonal_quadraalgebra(z2))
    yield "s3_quadraalgebra", io.AlgebraDocument("quadraalgebra", diagonal_quadraalgebra(s3))
    yield "sl2", io.AlgebraDocument("lie-metrized", sl2())
    yield "so3", io.AlgebraDocument("lie-metrized", so3())

    X = NCSeries.generator(XY, 5, 0)
    Y = NCSeries.generator(XY, 5, 1)
    yield "f_expX", io.AlgebraDocument("series", exp(X))
    yield "f_expXY", io.AlgebraDocument("series", exp(X) * exp(Y))
    yield "lie_x", lie_series({"X": 1})
    yield "lie_y", lie_series({"Y": 1})
    yield "lie_xy", lie_series({"X.Y": 1, "Y.X": -1})
    yield "lie_xxy", lie_series({"X.X.Y": 1, "X.Y.X": -2, "Y.X.X": 1})
    yield "braid_s1s2s1", io.AlgebraDocument("braid", BraidWord.parse("s1 s2 s1"))
    yield "braid_full_twist", io.AlgebraDocument("braid", BraidWord.parse("s1 s2") ** 3)
    yield "gt_identity", io.AlgebraDocument("gt-element", GTElement.identity(5))
    yield "gt_solved", io.AlgebraDocument("gt-element", solve_relations(1, 5).element())
    yield "gt_not_duality", io.AlgebraDocument("gt-element", GTElement(Fraction(1), exp(X.bracket(Y) * 2).truncate(5)))
    yield "hgt_identity", io.AlgebraDocument("hgt-pair", HGTPair.identity(5))
    yield "hgt_diagonal", io.AlgebraDocument("hgt-pair", HGTPair(exp(X) * exp(Y), exp(X) * exp(Y)))
    yield "hgt_mismatch", io.AlgebraDocument("hgt-pair", HGTPair(exp(X), exp(Y)))


def main() -> None:
    OUT.mkdir(exist_ok=True)
    for name, doc in documents():
        text = io.dumps(doc)
        assert io.dumps(io.loads(text)) == text, name
        (OUT / f"{name}.json").write_text(text, encoding="utf-8")
        print(f"wrote corpus/{name}.json")


if __name__ == "__main__":
    main()
