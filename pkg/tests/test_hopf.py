import copy
import json
import random
from fractions import Fraction

import pytest

from helpers import CORPUS
from qgt import io
from qgt.errors import NoAntipode, StructureError
from qgt.hopf import (
    HopfData,
    check_bialgebra,
    check_coquasitriangular,
    check_hopf,
    check_quasitriangular,
    check_selfdual,
    cyclic_group_algebra,
    drinfeld_double,
    dual_hopf,
    group_algebra,
    hopf_pairing_report,
    is_cocommutative,
    is_commutative,
    solve_antipode,
    sweedler_h4,
    with_antipode,
)

h = Fraction(1, 2)
H4_R = [[h, h, 0, 0], [h, -h, 0, 0], [0, 0, h, -h], [0, 0, h, h]]
Z2_R = [[h, h], [h, -h]]


HOPF_FILES = [p for p in sorted(CORPUS.glob("*.json")) if json.loads(p.read_text())["kind"] == "hopf"]


@pytest.mark.parametrize("path", HOPF_FILES, ids=lambda p: p.stem)
def test_corpus_hopf_files(path):
    doc = io.load(path)
    assert check_hopf(doc.payload).ok
    if "r_matrix" in doc.extras:
        assert check_quasitriangular(doc.payload, doc.extras["r_matrix"]).ok
    if "coquasi_form" in doc.extras:
        assert check_coquasitriangular(doc.payload, doc.extras["coquasi_form"]).ok
    if "pairing" in doc.extras:
        assert check_selfdual(doc.payload, doc.extras["pairing"])


def test_shape_validation():
    with pytest.raises(StructureError):
        HopfData(("a",), [[[1, 0]]], [1], [[[1]]], [1])


def test_perturbed_product_is_caught():
    H = sweedler_h4()
    mult = [[list(row) for row in plane] for plane in H.mult]
    mult[1][1] = [Fraction(0), Fraction(0), Fraction(1), Fraction(0)]  # g*g = x
    bad = HopfData(H.labels, mult, H.unit, H.comult, H.counit)
    report = check_bialgebra(bad)
    assert not report.ok
    failing = report.failures[0]
    assert failing.witness is not None


def test_antipode_solved_for_sweedler():
    H = sweedler_h4()
    S = solve_antipode(H)
    # S(g) = g, S(x) = -gx, S(gx) = x
    assert S[1] == [0, 1, 0, 0]
    assert S[2] == [0, 0, 0, -1]
    assert S[3] == [0, 0, 1, 0]


def test_monoid_bialgebra_has_no_antipode():
    # multiplicative monoid {1, 0}
    H = HopfData(
        ("e", "z"),
        [[[1, 0], [0, 1]], [[0, 1], [0, 1]]],
        [1, 0],
        [[[1, 0], [0, 0]], [[0, 0], [0, 1]]],
        [1, 1],
    )
    assert check_bialgebra(H).ok
    with pytest.raises(NoAntipode):
        solve_antipode(H)
    assert not check_hopf(H).ok


def test_wrong_supplied_antipode_fails():
    H = cyclic_group_algebra(3)
    bad = HopfData(H.labels, H.mult, H.unit, H.comult, H.counit, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert not check_hopf(bad).ok


def test_duality_is_an_involution():
    for H in (cyclic_group_algebra(3), with_antipode(sweedler_h4())):
        assert dual_hopf(dual_hopf(H)) == H


def test_commutativity_flags():
    z3 = cyclic_group_algebra(3)
    assert is_commutative(z3) and is_cocommutative(z3)
    h4 = sweedler_h4()
    assert not is_commutative(h4) and not is_cocommutative(h4)


def test_triangular_structures():
    z2 = cyclic_group_algebra(2)
    assert check_quasitriangular(z2, Z2_R).ok
    assert check_quasitriangular(z2, [[1, 0], [0, 0]]).ok
    assert check_quasitriangular(sweedler_h4(), H4_R).ok
    # the trivial R = 1 (x) 1 fails for the noncocommutative H4
    one = [[0] * 4 for _ in range(4)]
    one[0][0] = 1
    assert not check_quasitriangular(sweedler_h4(), one).ok


def test_random_r_matrices_fail():
    rng = random.Random(3)
    H = sweedler_h4()
    for _ in range(20):
        R = [[Fraction(rng.randint(-2, 2), 2) for _ in range(4)] for _ in range(4)]
        if R == H4_R:
            continue
        assert not check_quasitriangular(H, R).ok


def test_quasitriangular_dualizes_to_coquasitriangular():
    for H, R in ((cyclic_group_algebra(2), Z2_R), (with_antipode(sweedler_h4()), H4_R)):
        assert check_coquasitriangular(dual_hopf(H), R).ok
    bad = copy.deepcopy(H4_R)
    bad[2][2] = -bad[2][2]
    assert not check_coquasitriangular(dual_hopf(with_antipode(sweedler_h4())), bad).ok


def test_self_duality():
    z2xz2 = group_algebra(["e", "a", "b", "ab"], [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]])
    chars = [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]]
    assert check_selfdual(z2xz2, chars)
    pairing = [[1, 1, 0, 0], [1, -1, 0, 0], [0, 0, -1, 1], [0, 0, 1, 1]]
    assert check_selfdual(sweedler_h4(), pairing)
    degenerate = [[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
    report = hopf_pairing_report(sweedler_h4(), degenerate)
    assert report["nondegenerate"].status == "fails"


@pytest.mark.parametrize("H", [cyclic_group_algebra(2), cyclic_group_algebra(3), with_antipode(sweedler_h4())], ids=["z2", "z3", "h4"])
def test_drinfeld_double(H):
    D, R = drinfeld_double(H)
    assert D.dim == H.dim**2
    assert check_hopf(D).ok
    assert check_quasitriangular(D, R).ok
