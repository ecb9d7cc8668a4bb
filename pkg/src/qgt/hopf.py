"""Finite-dimensional bialgebras and Hopf algebras from structure constants.

Conventions (basis ``e_0 .. e_{n-1}``):

* ``mult[i][j][k]``   : ``e_i e_j = sum_k mult[i][j][k] e_k``
* ``unit[k]``         : ``1 = sum_k unit[k] e_k``
* ``comult[i][j][k]`` : ``Delta(e_i) = sum_{j,k} comult[i][j][k] e_j (x) e_k``
* ``counit[i]``       : ``eps(e_i)``
* ``antipode[i][j]``  : ``S(e_i) = sum_j antipode[i][j] e_j``
* an element ``R`` of ``H (x) H`` is the matrix ``R[i][j]`` of ``sum R[i][j] e_i (x) e_j``;
  a bilinear form ``r`` is the matrix ``r[i][j] = r(e_i, e_j)``.

Every check is exhaustive over basis tuples, so a pass is a proof in the
given dimension.  Failures report the first witness in lexicographic order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import DomainError, NoAntipode, StructureError
from .linalg import determinant_nonzero, inverse, solve_affine
from .report import FAILS, HOLDS, Report
from .series import scalar

Vec = dict[int, Fraction]
Tensor = dict[tuple[int, ...], Fraction]


def _frac_tensor(t, shape: tuple[int, ...], name: str):
    def conv(x, depth, path):
        if depth == len(shape):
            return scalar(x)
        if len(x) != shape[depth]:
            raise StructureError(f"{name}{path} has length {len(x)}, expected {shape[depth]}")
        return tuple(conv(y, depth + 1, f"{path}[{i}]") for i, y in enumerate(x))

    return conv(t, 0, "")


def _add(out: dict, key, value) -> None:
    v = out.get(key, 0) + value
    if v:
        out[key] = v
    else:
        out.pop(key, None)


@dataclass(frozen=True)
class HopfData:
    labels: tuple[str, ...]
    mult: tuple
    unit: tuple
    comult: tuple
    counit: tuple
    antipode: tuple | None = None

    def __post_init__(self):
        n = len(self.labels)
        if n == 0:
            raise StructureError("dimension must be positive")
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "mult", _frac_tensor(self.mult, (n, n, n), "mult"))
        object.__setattr__(self, "unit", _frac_tensor(self.unit, (n,), "unit"))
        object.__setattr__(self, "comult", _frac_tensor(self.comult, (n, n, n), "comult"))
        object.__setattr__(self, "counit", _frac_tensor(self.counit, (n,), "counit"))
        if self.antipode is not None:
            object.__setattr__(self, "antipode", _frac_tensor(self.antipode, (n, n), "antipode"))

    @property
    def dim(self) -> int:
        return len(self.labels)

    # sparse views

    @cached_property
    def _m(self) -> list[list[Vec]]:
        return [[{k: c for k, c in enumerate(row) if c} for row in plane] for plane in self.mult]

    @cached_property
    def _d(self) -> list[Tensor]:
        return [
            {(j, k): c for j, row in enumerate(plane) for k, c in enumerate(row) if c}
            for plane in self.comult
        ]

    @cached_property
    def unit_vec(self) -> Vec:
        return {k: c for k, c in enumerate(self.unit) if c}

    def basis(self, i: int) -> Vec:
        return {i: Fraction(1)}

    # linear operations on sparse vectors

    def mul(self, u: Vec, v: Vec) -> Vec:
        out: Vec = {}
        m = self._m
        for i, a in u.items():
            mi = m[i]
            for j, b in v.items():
                for k, c in mi[j].items():
                    _add(out, k, a * b * c)
        return out

    def delta(self, u: Vec) -> Tensor:
        out: Tensor = {}
        for i, a in u.items():
            for key, c in self._d[i].items():
                _add(out, key, a * c)
        return out

    def eps(self, u: Vec) -> Fraction:
        return sum((a * self.counit[i] for i, a in u.items()), Fraction(0))

    def tmul(self, x: Tensor, y: Tensor) -> Tensor:
        """Leg-wise product in ``H^(x)k``."""
        out: Tensor = {}
        m = self._m
        for kx, a in x.items():
            for ky, b in y.items():
                legs = [m[i][j] for i, j in zip(kx, ky)]
                if not all(legs):
                    continue
                ab = a * b
                for combo in itertools.product(*(leg.items() for leg in legs)):
                    coef = ab
                    for _, c in combo:
                        coef *= c
                    _add(out, tuple(k for k, _ in combo), coef)
        return out

    def delta_leg(self, x: Tensor, leg: int, opposite: bool = False) -> Tensor:
        """Apply the coproduct (or its opposite) to one tensor leg."""
        out: Tensor = {}
        for key, a in x.items():
            for (j, k), c in self._d[key[leg]].items():
                if opposite:
                    j, k = k, j
                _add(out, key[:leg] + (j, k) + key[leg + 1:], a * c)
        return out

    def apply(self, matrix, u: Vec) -> Vec:
        out: Vec = {}
        for i, a in u.items():
            for j, c in enumerate(matrix[i]):
                if c:
                    _add(out, j, a * c)
        return out

    def label(self, *idx: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in idx)


def matrix_tensor(R) -> Tensor:
    return {(i, j): scalar(c) for i, row in enumerate(R) for j, c in enumerate(row) if scalar(c)}


def tensor_matrix(x: Tensor, n: int) -> list[list[Fraction]]:
    return [[x.get((i, j), Fraction(0)) for j in range(n)] for i in range(n)]


def _first_failure(report: Report, name: str, tuples, predicate, H: HopfData, detail: str = "") -> bool:
    for t in tuples:
        if not predicate(*t):
            report.add(name, FAILS, H.label(*t), detail)
            return False
    report.add(name, HOLDS)
    return True


def check_bialgebra(H: HopfData) -> Report:
    n = H.dim
    report = Report(f"bialgebra axioms (dim {n})")
    e = H.basis
    one = H.unit_vec
    r1, r2, r3 = range(n), itertools.product(range(n), repeat=2), itertools.product(range(n), repeat=3)

    _first_failure(report, "associativity", r3,
                   lambda i, j, k: H.mul(H.mul(e(i), e(j)), e(k)) == H.mul(e(i), H.mul(e(j), e(k))), H)
    _first_failure(report, "unit", ((i,) for i in r1),
                   lambda i: H.mul(one, e(i)) == e(i) == H.mul(e(i), one), H)

    def coassoc(i):
        d = H.delta(e(i))
        return H.delta_leg(d, 0) == H.delta_leg(d, 1)

    def counit(i):
        left: Vec = {}
        right: Vec = {}
        for (j, k), c in H.delta(e(i)).items():
            _add(left, k, c * H.counit[j])
            _add(right, j, c * H.counit[k])
        return left == e(i) == right

    _first_failure(report, "coassociativity", ((i,) for i in range(n)), coassoc, H)
    _first_failure(report, "counit", ((i,) for i in range(n)), counit, H)
    _first_failure(report, "coproduct multiplicative", itertools.product(range(n), repeat=2),
                   lambda i, j: H.delta(H.mul(e(i), e(j))) == H.tmul(H.delta(e(i)), H.delta(e(j))), H)
    unit_ok = H.delta(one) == {(i, j): a * b for i, a in one.items() for j, b in one.items()}
    report.add("coproduct unital", HOLDS if unit_ok else FAILS, None if unit_ok else ("1",))
    _first_failure(report, "counit multiplicative", r2,
                   lambda i, j: H.eps(H.mul(e(i), e(j))) == H.counit[i] * H.counit[j], H)
    eps_ok = H.eps(one) == 1
    report.add("counit unital", HOLDS if eps_ok else FAILS, None if eps_ok else ("1",))
    return report


def antipode_defects(H: HopfData, S) -> tuple[int, str] | None:
    """First basis index where ``m(S (x) id)Delta`` or ``m(id (x) S)Delta`` differs from ``eta eps``."""
    for i in range(H.dim):
        target = {k: H.counit[i] * c for k, c in H.unit_vec.items() if H.counit[i] * c}
        left: Vec = {}
        right: Vec = {}
        for (j, k), c in H.delta(H.basis(i)).items():
            for key, v in H.mul(H.apply(S, H.basis(j)), H.basis(k)).items():
                _add(left, key, c * v)
            for key, v in H.mul(H.basis(j), H.apply(S, H.basis(k))).items():
                _add(right, key, c * v)
        if left != target:
            return i, "left antipode equation"
        if right != target:
            return i, "right antipode equation"
    return None


def solve_antipode(H: HopfData) -> list[list[Fraction]]:
    """Solve the convolution equations for ``S``; raises :class:`NoAntipode` if there is none."""
    n = H.dim
    var = lambda j, l: j * n + l  # noqa: E731
    rows, rhs = [], []
    for a in range(n):
        left = [dict() for _ in range(n)]
        right = [dict() for _ in range(n)]
        for (j, k), c in H._d[a].items():
            for l in range(n):
                for m, v in H._m[l][k].items():
                    _add(left[m], var(j, l), c * v)
                for m, v in H._m[j][l].items():
                    _add(right[m], var(k, l), c * v)
        for m in range(n):
            target = H.counit[a] * H.unit[m]
            rows += [left[m], right[m]]
            rhs += [target, target]
    particular, kernel = solve_affine(rows, rhs, n * n)
    if particular is None:
        raise NoAntipode("antipode equations are inconsistent")
    if kernel:
        raise NoAntipode("antipode equations are underdetermined; input is not a bialgebra")
    return [particular[j * n:(j + 1) * n] for j in range(n)]


def check_hopf(H: HopfData) -> Report:
    report = check_bialgebra(H)
    report.title = f"Hopf algebra axioms (dim {H.dim})"
    if H.antipode is not None:
        bad = antipode_defects(H, H.antipode)
        if bad is None:
            report.add("antipode", HOLDS, detail="supplied antipode verified")
        else:
            report.add("antipode", FAILS, H.label(bad[0]), bad[1])
    elif report.ok:
        try:
            solve_antipode(H)
            report.add("antipode", HOLDS, detail="unique antipode solved")
        except NoAntipode as exc:
            report.add("antipode", FAILS, detail=str(exc))
    return report


def with_antipode(H: HopfData) -> HopfData:
    if H.antipode is not None:
        return H
    return HopfData(H.labels, H.mult, H.unit, H.comult, H.counit, solve_antipode(H))


def dual_hopf(H: HopfData) -> HopfData:
    """Dual in the dual basis: products and coproducts, units and counits trade places."""
    n = H.dim
    mult = [[[H.comult[k][i][j] for k in range(n)] for j in range(n)] for i in range(n)]
    comult = [[[H.mult[i][j][k] for j in range(n)] for i in range(n)] for k in range(n)]
    antipode = None
    if H.antipode is not None:
        antipode = [[H.antipode[j][i] for j in range(n)] for i in range(n)]
    labels = tuple(f"{l}*" if not l.endswith("*") else l[:-1] for l in H.labels)
    return HopfData(labels, mult, H.counit, comult, H.unit, antipode)


# quasitriangular structures


def _tensor_one(H: HopfData, k: int) -> Tensor:
    out: Tensor = {(): Fraction(1)}
    for _ in range(k):
        out = {key + (i,): c * u for key, c in out.items() for i, u in H.unit_vec.items()}
    return out


def _embed(H: HopfData, x: Tensor, legs: tuple[int, int], k: int = 3) -> Tensor:
    """Place a two-leg tensor into legs ``legs`` of ``H^(x)k``, units elsewhere."""
    out: Tensor = {}
    others = [i for i in range(k) if i not in legs]
    for (a, b), c in x.items():
        for fill in itertools.product(H.unit_vec.items(), repeat=len(others)):
            key = [0] * k
            coef = c
            key[legs[0]], key[legs[1]] = a, b
            for pos, (idx, u) in zip(others, fill):
                key[pos] = idx
                coef *= u
            _add(out, tuple(key), coef)
    return out


def tensor_inverse(H: HopfData, R: Tensor) -> Tensor | None:
    """Two-sided inverse of ``R`` in ``H (x) H``, or ``None``."""
    n = H.dim
    idx = {(i, j): i * n + j for i in range(n) for j in range(n)}
    one = _tensor_one(H, 2)
    rows = {key: {} for key in idx}
    for (i, j), c in R.items():
        for (k, l) in idx:
            for key, v in H.tmul({(i, j): c}, {(k, l): Fraction(1)}).items():
                _add(rows[key], idx[(k, l)], v)
    keys = sorted(rows)
    particular, _ = solve_affine([rows[k] for k in keys], [one.get(k, 0) for k in keys], n * n)
    if particular is None:
        return None
    inv = {key: particular[i] for key, i in idx.items() if particular[i]}
    if H.tmul(inv, R) != one:
        return None
    return inv


def check_quasitriangular(H: HopfData, R) -> Report:
    n = H.dim
    report = Report(f"quasitriangularity (dim {n})")
    Rt = matrix_tensor(R)
    inv = tensor_inverse(H, Rt)
    report.add("R invertible", HOLDS if inv is not None else FAILS, None if inv is not None else ("R",))

    def intertwines(a):
        d = H.delta(H.basis(a))
        dop = {(k, j): c for (j, k), c in d.items()}
        return H.tmul(Rt, d) == H.tmul(dop, Rt)

    _first_failure(report, "R Delta(a) = Delta^op(a) R", ((a,) for a in range(n)), intertwines, H)
    R13, R23, R12 = _embed(H, Rt, (0, 2)), _embed(H, Rt, (1, 2)), _embed(H, Rt, (0, 1))
    _tensor_check(report, "(Delta (x) id)R = R13 R23", H.delta_leg(Rt, 0), H.tmul(R13, R23), H)
    _tensor_check(report, "(id (x) Delta)R = R13 R12", H.delta_leg(Rt, 1), H.tmul(R13, R12), H)
    return report


def _tensor_check(report: Report, name: str, lhs: Tensor, rhs: Tensor, H: HopfData) -> None:
    diff = dict(lhs)
    for k, v in rhs.items():
        _add(diff, k, -v)
    if diff:
        report.add(name, FAILS, H.label(*min(diff)), f"coefficient defect {diff[min(diff)]}")
    else:
        report.add(name, HOLDS)


def _form(r) -> list[list[Fraction]]:
    return [[scalar(c) for c in row] for row in r]


def convolution_inverse(H: HopfData, r) -> list[list[Fraction]] | None:
    """Inverse of a bilinear form under convolution on ``H (x) H``."""
    n = H.dim
    r = _form(r)
    var = lambda i, j: i * n + j  # noqa: E731
    rows, rhs = [], []
    for a in range(n):
        for b in range(n):
            left, right = {}, {}
            for (a1, a2), ca in H._d[a].items():
                for (b1, b2), cb in H._d[b].items():
                    c = ca * cb
                    _add(left, var(a1, b1), c * r[a2][b2])
                    _add(right, var(a2, b2), c * r[a1][b1])
            target = H.counit[a] * H.counit[b]
            rows += [left, right]
            rhs += [target, target]
    particular, _ = solve_affine(rows, rhs, n * n)
    if particular is None:
        return None
    return [particular[i * n:(i + 1) * n] for i in range(n)]


def check_coquasitriangular(H: HopfData, r) -> Report:
    n = H.dim
    r = _form(r)
    report = Report(f"coquasitriangularity (dim {n})")
    inv = convolution_inverse(H, r)
    report.add("r convolution-invertible", HOLDS if inv is not None else FAILS, None if inv is not None else ("r",))

    def braided_commutative(a, b):
        lhs: Vec = {}
        rhs: Vec = {}
        for (a1, a2), ca in H._d[a].items():
            for (b1, b2), cb in H._d[b].items():
                c = ca * cb
                if r[a1][b1]:
                    for k, v in H.mul(H.basis(a2), H.basis(b2)).items():
                        _add(lhs, k, c * r[a1][b1] * v)
                if r[a2][b2]:
                    for k, v in H.mul(H.basis(b1), H.basis(a1)).items():
                        _add(rhs, k, c * r[a2][b2] * v)
        return lhs == rhs

    def form(u: Vec, v: Vec) -> Fraction:
        return sum((a * b * r[i][j] for i, a in u.items() for j, b in v.items()), Fraction(0))

    def mult_left(a, b, c):
        lhs = form(H.mul(H.basis(a), H.basis(b)), H.basis(c))
        rhs = sum((w * r[a][c1] * r[b][c2] for (c1, c2), w in H._d[c].items()), Fraction(0))
        return lhs == rhs

    def mult_right(a, b, c):
        lhs = form(H.basis(a), H.mul(H.basis(b), H.basis(c)))
        rhs = sum((w * r[a1][c] * r[a2][b] for (a1, a2), w in H._d[a].items()), Fraction(0))
        return lhs == rhs

    pairs = itertools.product(range(n), repeat=2)
    _first_failure(report, "r(a1,b1) a2 b2 = b1 a1 r(a2,b2)", pairs, braided_commutative, H)
    _first_failure(report, "r(ab,c) = r(a,c1) r(b,c2)", itertools.product(range(n), repeat=3), mult_left, H)
    _first_failure(report, "r(a,bc) = r(a1,c) r(a2,b)", itertools.product(range(n), repeat=3), mult_right, H)
    return report


# Drinfeld double


def drinfeld_double(H: HopfData) -> tuple[HopfData, list[list[Fraction]]]:
    """The double on ``H* (x) H`` with its canonical R-matrix.

    Basis ``e^p (x) e_q`` has index ``p*n + q``.  ``H*`` enters with the opposite
    coproduct; the cross relation is
    ``(1 (x) a)(psi (x) 1) = psi(S^-1(a3) ? a1) (x) a2``.
    The canonical element is ``R = sum_i (eps (x) e_i) (x) (e^i (x) 1)``.
    """
    n = H.dim
    S = H.antipode if H.antipode is not None else solve_antipode(H)
    S_inv = inverse(S)
    if S_inv is None:
        raise DomainError("antipode is not bijective")
    N = n * n
    idx = lambda p, q: p * n + q  # noqa: E731
    Hs = dual_hopf(HopfData(H.labels, H.mult, H.unit, H.comult, H.counit, None))

    def delta2(q: int) -> Tensor:
        return H.delta_leg(H.delta(H.basis(q)), 0)

    # cross[q][r] : (1 (x) e_q)(e^r (x) 1) as {(t_dual, y_H): coef}
    cross = [[{} for _ in range(n)] for _ in range(n)]
    for q in range(n):
        d2 = delta2(q)
        for r in range(n):
            out: Tensor = {}
            for (x, y, z), c in d2.items():
                s_inv_z = H.apply(S_inv, H.basis(z))
                for t in range(n):
                    val = H.mul(H.mul(s_inv_z, H.basis(t)), H.basis(x)).get(r, 0)
                    if val:
                        _add(out, (t, y), c * val)
            cross[q][r] = out

    mult = [[[Fraction(0)] * N for _ in range(N)] for _ in range(N)]
    for p, q, r, s in itertools.product(range(n), repeat=4):
        acc: Vec = {}
        for (t, y), c in cross[q][r].items():
            left = Hs.mul(Hs.basis(p), Hs.basis(t))
            right = H.mul(H.basis(y), H.basis(s))
            for k, u in left.items():
                for m, v in right.items():
                    _add(acc, idx(k, m), c * u * v)
        for k, v in acc.items():
            mult[idx(p, q)][idx(r, s)][k] = v

    comult = [[[Fraction(0)] * N for _ in range(N)] for _ in range(N)]
    for p, q in itertools.product(range(n), repeat=2):
        for (i, j), cp in Hs._d[p].items():
            for (x, y), cq in H._d[q].items():
                comult[idx(p, q)][idx(j, x)][idx(i, y)] += cp * cq

    unit = [Fraction(0)] * N
    counit = [Fraction(0)] * N
    for p, q in itertools.product(range(n), repeat=2):
        unit[idx(p, q)] = H.counit[p] * H.unit[q]
        counit[idx(p, q)] = H.unit[p] * H.counit[q]

    labels = tuple(f"{Hs.labels[p]}|{H.labels[q]}" for p in range(n) for q in range(n))
    D = HopfData(labels, mult, unit, comult, counit)
    D = HopfData(labels, mult, unit, comult, counit, solve_antipode(D))

    R = [[Fraction(0)] * N for _ in range(N)]
    for i in range(n):
        for a, ua in enumerate(H.counit):
            for b, ub in enumerate(H.unit):
                if ua and ub:
                    R[idx(a, i)][idx(i, b)] += ua * ub
    return D, R


# self-duality


def hopf_pairing_report(H: HopfData, pairing) -> Report:
    """Is ``<e_i, e_j> = pairing[i][j]`` a nondegenerate Hopf pairing of ``H`` with itself?"""
    n = H.dim
    P = _form(pairing)
    report = Report(f"self-duality pairing (dim {n})")
    nondeg = determinant_nonzero(P)
    report.add("nondegenerate", HOLDS if nondeg else FAILS, None if nondeg else ("pairing",))

    def pair(u: Vec, v: Vec) -> Fraction:
        return sum((a * b * P[i][j] for i, a in u.items() for j, b in v.items()), Fraction(0))

    def prod_left(a, b, c):
        lhs = pair(H.mul(H.basis(a), H.basis(b)), H.basis(c))
        return lhs == sum((w * P[a][c1] * P[b][c2] for (c1, c2), w in H._d[c].items()), Fraction(0))

    def prod_right(a, b, c):
        lhs = pair(H.basis(a), H.mul(H.basis(b), H.basis(c)))
        return lhs == sum((w * P[a1][b] * P[a2][c] for (a1, a2), w in H._d[a].items()), Fraction(0))

    triples = lambda: itertools.product(range(n), repeat=3)  # noqa: E731
    _first_failure(report, "<ab, c> = <a, c1><b, c2>", triples(), prod_left, H)
    _first_failure(report, "<a, bc> = <a1, b><a2, c>", triples(), prod_right, H)
    _first_failure(report, "<1, c> = eps(c)", ((c,) for c in range(n)),
                   lambda c: pair(H.unit_vec, H.basis(c)) == H.counit[c], H)
    _first_failure(report, "<a, 1> = eps(a)", ((a,) for a in range(n)),
                   lambda a: pair(H.basis(a), H.unit_vec) == H.counit[a], H)
    return report


def check_selfdual(H: HopfData, pairing) -> bool:
    return hopf_pairing_report(H, pairing).ok


def is_commutative(H: HopfData) -> bool:
    return all(H.mult[i][j] == H.mult[j][i] for i in range(H.dim) for j in range(H.dim))


def is_cocommutative(H: HopfData) -> bool:
    n = H.dim
    return all(H.comult[i][j][k] == H.comult[i][k][j] for i in range(n) for j in range(n) for k in range(n))


# group algebras (used to generate corpus data)


def group_algebra(labels: Sequence[str], table: Sequence[Sequence[int]]) -> HopfData:
    """``k[G]`` from a multiplication table of indices; the identity must be index 0."""
    n = len(labels)
    mult = [[[Fraction(int(table[i][j] == k)) for k in range(n)] for j in range(n)] for i in range(n)]
    comult = [[[Fraction(int(i == j == k)) for k in range(n)] for j in range(n)] for i in range(n)]
    inv = [next(j for j in range(n) if table[i][j] == 0) for i in range(n)]
    antipode = [[Fraction(int(inv[i] == j)) for j in range(n)] for i in range(n)]
    unit = [Fraction(int(k == 0)) for k in range(n)]
    return HopfData(tuple(labels), mult, unit, comult, [Fraction(1)] * n, antipode)


def cyclic_group_algebra(n: int) -> HopfData:
    labels = ["e"] + ["g" if k == 1 else f"g{k}" for k in range(1, n)]
    return group_algebra(labels, [[(i + j) % n for j in range(n)] for i in range(n)])


def symmetric_group_algebra_s3() -> HopfData:
    """``k[S3]``; elements are permutations of (0, 1, 2), identity first."""
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (0, 2, 1), (2, 1, 0)]
    labels = ["e", "r", "r2", "t01", "t12", "t02"]
    compose = lambda p, q: tuple(p[q[i]] for i in range(3))  # noqa: E731
    table = [[perms.index(compose(p, q)) for q in perms] for p in perms]
    return group_algebra(labels, table)


def sweedler_h4() -> HopfData:
    """Sweedler's four-dimensional algebra: ``g^2 = 1``, ``x^2 = 0``, ``xg = -gx``.

    Basis ``1, g, x, gx``; ``x`` is ``(g, 1)``-skew-primitive: ``Delta x = x (x) 1 + g (x) x``.
    """
    n = 4
    prod = {
        (0, 0): {0: 1}, (0, 1): {1: 1}, (0, 2): {2: 1}, (0, 3): {3: 1},
        (1, 0): {1: 1}, (1, 1): {0: 1}, (1, 2): {3: 1}, (1, 3): {2: 1},
        (2, 0): {2: 1}, (2, 1): {3: -1},
        (3, 0): {3: 1}, (3, 1): {2: -1},
    }
    cop = {0: {(0, 0): 1}, 1: {(1, 1): 1}, 2: {(2, 0): 1, (1, 2): 1}, 3: {(3, 1): 1, (0, 3): 1}}
    mult = [[[Fraction(prod.get((i, j), {}).get(k, 0)) for k in range(n)] for j in range(n)] for i in range(n)]
    comult = [[[Fraction(cop[i].get((j, k), 0)) for k in range(n)] for j in range(n)] for i in range(n)]
    return HopfData(("1", "g", "x", "gx"), mult, [1, 0, 0, 0], comult, [1, 1, 0, 0])
