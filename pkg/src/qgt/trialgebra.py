"""Trialgebras, quadraalgebras and the Eckmann-Hilton collapse.

A trialgebra carries a total product ``.``, a possibly partial product ``*``
and one coproduct; both products form bialgebras with the coproduct and they
obey the interchange law ``(a*b).(c*d) = (a.c)*(b.d)`` wherever both sides are
defined.  Partiality is a basis-pair mask extended bilinearly: ``u*v`` is
defined iff ``mask[i][j]`` holds for every ``i`` in the support of ``u`` and
``j`` in the support of ``v``.  An identity instance counts as defined when
every product occurring in it is defined.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, HypothesisError, StructureError
from .hopf import (
    HopfData,
    Tensor,
    Vec,
    _add,
    _frac_tensor,
    check_bialgebra,
    check_coquasitriangular,
    check_quasitriangular,
    matrix_tensor,
)
from .linalg import inverse
from .report import FAILS, HOLDS, VACUOUS, Report


def _sparse_mult(mult) -> list[list[Vec]]:
    return [[{k: c for k, c in enumerate(row) if c} for row in plane] for plane in mult]


def _product(m: list[list[Vec]], u: Vec, v: Vec, mask=None) -> Vec | None:
    out: Vec = {}
    for i, a in u.items():
        for j, b in v.items():
            if mask is not None and not mask[i][j]:
                return None
            for k, c in m[i][j].items():
                _add(out, k, a * b * c)
    return out


@dataclass(frozen=True)
class TrialgebraData:
    labels: tuple[str, ...]
    star_mult: tuple
    star_mask: tuple
    dot_mult: tuple
    comult: tuple
    counit: tuple
    star_unit: tuple | None = None
    dot_unit: tuple | None = None

    def __post_init__(self):
        n = len(self.labels)
        object.__setattr__(self, "labels", tuple(self.labels))
        for name in ("star_mult", "dot_mult", "comult"):
            object.__setattr__(self, name, _frac_tensor(getattr(self, name), (n, n, n), name))
        object.__setattr__(self, "counit", _frac_tensor(self.counit, (n,), "counit"))
        for name in ("star_unit", "dot_unit"):
            if getattr(self, name) is not None:
                object.__setattr__(self, name, _frac_tensor(getattr(self, name), (n,), name))
        mask = tuple(tuple(bool(x) for x in row) for row in self.star_mask)
        if len(mask) != n or any(len(row) != n for row in mask):
            raise StructureError(f"star_mask must be {n}x{n}")
        object.__setattr__(self, "star_mask", mask)

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def star_total(self) -> bool:
        return all(all(row) for row in self.star_mask)

    def dot_bialgebra(self) -> HopfData:
        if self.dot_unit is None:
            raise StructureError("the dot product needs a unit")
        return HopfData(self.labels, self.dot_mult, self.dot_unit, self.comult, self.counit)

    def star_bialgebra(self) -> HopfData:
        if not self.star_total:
            raise DomainError("the star product is only partially defined")
        if self.star_unit is None:
            raise StructureError("the star product needs a unit")
        return HopfData(self.labels, self.star_mult, self.star_unit, self.comult, self.counit)


def interchange_witness(star, dot, n: int, mask=None) -> tuple[tuple[int, int, int, int] | None, int]:
    """First basis quadruple violating ``(a*b).(c*d) = (a.c)*(b.d)``, and the number of defined instances."""
    S, D = _sparse_mult(star), _sparse_mult(dot)
    e = lambda i: {i: Fraction(1)}  # noqa: E731
    defined = 0
    for a, b, c, d in itertools.product(range(n), repeat=4):
        ab = _product(S, e(a), e(b), mask)
        cd = _product(S, e(c), e(d), mask)
        if ab is None or cd is None:
            continue
        rhs = _product(S, _product(D, e(a), e(c)), _product(D, e(b), e(d)), mask)
        if rhs is None:
            continue
        defined += 1
        if _product(D, ab, cd) != rhs:
            return (a, b, c, d), defined
    return None, defined


def _star_axioms(T: TrialgebraData, report: Report) -> None:
    n = T.dim
    S, mask = _sparse_mult(T.star_mult), T.star_mask
    e = lambda i: {i: Fraction(1)}  # noqa: E731
    H = HopfData(T.labels, T.star_mult, T.star_unit or [0] * n, T.comult, T.counit)

    def run(name, tuples, test):
        count = 0
        for t in tuples:
            verdict = test(*t)
            if verdict is None:
                continue
            count += 1
            if not verdict:
                report.add(name, FAILS, tuple(T.labels[i] for i in t))
                return
        report.add(name, HOLDS if count else VACUOUS, detail=f"{count} defined instances")

    def assoc(a, b, c):
        ab, bc = _product(S, e(a), e(b), mask), _product(S, e(b), e(c), mask)
        if ab is None or bc is None:
            return None
        lhs, rhs = _product(S, ab, e(c), mask), _product(S, e(a), bc, mask)
        if lhs is None or rhs is None:
            return None
        return lhs == rhs

    def tensor_product(x: Tensor, y: Tensor) -> Tensor | None:
        out: Tensor = {}
        for (i, j), a in x.items():
            for (k, l), b in y.items():
                left = _product(S, e(i), e(k), mask)
                right = _product(S, e(j), e(l), mask)
                if left is None or right is None:
                    return None
                for p, u in left.items():
                    for q, v in right.items():
                        _add(out, (p, q), a * b * u * v)
        return out

    def delta_mult(a, b):
        ab = _product(S, e(a), e(b), mask)
        if ab is None:
            return None
        rhs = tensor_product(H.delta(e(a)), H.delta(e(b)))
        if rhs is None:
            return None
        return H.delta(ab) == rhs

    def eps_mult(a, b):
        ab = _product(S, e(a), e(b), mask)
        if ab is None:
            return None
        return H.eps(ab) == T.counit[a] * T.counit[b]

    pairs = lambda: itertools.product(range(n), repeat=2)  # noqa: E731
    run("star: associativity", itertools.product(range(n), repeat=3), assoc)
    if T.star_unit is None:
        report.add("star: unit", VACUOUS, detail="no unit supplied")
    else:
        u = {k: c for k, c in enumerate(T.star_unit) if c}

        def unit(a):
            left, right = _product(S, u, e(a), mask), _product(S, e(a), u, mask)
            if left is None or right is None:
                return None
            return left == e(a) == right

        run("star: unit", ((a,) for a in range(n)), unit)
    run("star: coproduct multiplicative", pairs(), delta_mult)
    run("star: counit multiplicative", pairs(), eps_mult)


def check_trialgebra(T: TrialgebraData) -> Report:
    report = Report(f"trialgebra axioms (dim {T.dim})")
    dot = check_bialgebra(T.dot_bialgebra())
    report.extend(dot, "dot: ")
    _star_axioms(T, report)
    witness, defined = interchange_witness(T.star_mult, T.dot_mult, T.dim, T.star_mask)
    if witness is not None:
        report.add("interchange", FAILS, tuple(T.labels[i] for i in witness))
    else:
        report.add("interchange", HOLDS if defined else VACUOUS, detail=f"{defined} defined instances")
    return report


def lift_form(r, pairing) -> list[list[Fraction]]:
    """The element ``R^`` of ``A (x) A`` whose image under the pairing is the form ``r``."""
    P_inv = inverse(pairing)
    if P_inv is None:
        raise DomainError("pairing is degenerate")
    n = len(pairing)
    r = [[Fraction(x) for x in row] for row in r]
    P_inv_T = [[P_inv[j][i] for j in range(n)] for i in range(n)]
    mm = lambda A, B: [[sum((A[i][k] * B[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]  # noqa: E731
    return mm(mm(P_inv_T, r), P_inv)


def check_biquasitriangular(T: TrialgebraData, R_dot, r_star, pairing) -> Report:
    report = Report(f"biquasitriangularity (dim {T.dim})")
    lifted = lift_form(r_star, pairing)
    report.extend(check_trialgebra(T), "trialgebra: ")
    dot = T.dot_bialgebra()
    report.extend(check_quasitriangular(dot, R_dot), "dot quasitriangular: ")
    report.extend(check_coquasitriangular(T.star_bialgebra(), r_star), "star coquasitriangular: ")
    R, Rh = matrix_tensor(R_dot), matrix_tensor(lifted)
    comm = dot.tmul(R, Rh)
    for k, v in dot.tmul(Rh, R).items():
        _add(comm, k, -v)
    if comm:
        key = min(comm)
        report.add("[R_dot, R_star^] = 0", FAILS, tuple(T.labels[i] for i in key), f"commutator coefficient {comm[key]}")
    else:
        report.add("[R_dot, R_star^] = 0", HOLDS)
    return report


@dataclass(frozen=True)
class QuadraalgebraData:
    labels: tuple[str, ...]
    mult1: tuple
    mult2: tuple
    unit1: tuple
    unit2: tuple
    comult1: tuple
    comult2: tuple
    counit1: tuple
    counit2: tuple

    def __post_init__(self):
        n = len(self.labels)
        object.__setattr__(self, "labels", tuple(self.labels))
        for name in ("mult1", "mult2", "comult1", "comult2"):
            object.__setattr__(self, name, _frac_tensor(getattr(self, name), (n, n, n), name))
        for name in ("unit1", "unit2", "counit1", "counit2"):
            object.__setattr__(self, name, _frac_tensor(getattr(self, name), (n,), name))

    @property
    def dim(self) -> int:
        return len(self.labels)

    def trialgebras(self) -> list[tuple[str, TrialgebraData]]:
        """The four (product pair, coproduct) trialgebras inside the quadraalgebra."""
        total = [[True] * self.dim for _ in range(self.dim)]
        out = []
        products = {1: (self.mult1, self.unit1), 2: (self.mult2, self.unit2)}
        coproducts = {1: (self.comult1, self.counit1), 2: (self.comult2, self.counit2)}
        for c in (1, 2):
            for s, d in ((1, 2), (2, 1)):
                (sm, su), (dm, du) = products[s], products[d]
                cm, cu = coproducts[c]
                name = f"star=mult{s}, dot=mult{d}, comult{c}"
                out.append((name, TrialgebraData(self.labels, sm, total, dm, cm, cu, su, du)))
        return out


def cointerchange_witness(c1, c2, n: int) -> int | None:
    """First basis index violating ``(D1 (x) D1) D2 = (id (x) tau (x) id)(D2 (x) D2) D1``."""
    for a in range(n):
        lhs: Tensor = {}
        rhs: Tensor = {}
        for i, j in itertools.product(range(n), repeat=2):
            w = c2[a][i][j]
            if w:
                for p, q, r, s in itertools.product(range(n), repeat=4):
                    v = c1[i][p][q] * c1[j][r][s]
                    if v:
                        _add(lhs, (p, q, r, s), w * v)
            w = c1[a][i][j]
            if w:
                for p, q, r, s in itertools.product(range(n), repeat=4):
                    v = c2[i][p][q] * c2[j][r][s]
                    if v:
                        _add(rhs, (p, r, q, s), w * v)
        if lhs != rhs:
            return a
    return None


def check_quadraalgebra(Q: QuadraalgebraData) -> Report:
    report = Report(f"quadraalgebra axioms (dim {Q.dim})")
    for name, T in Q.trialgebras():
        report.extend(check_trialgebra(T), f"[{name}] ")
    bad = cointerchange_witness(Q.comult1, Q.comult2, Q.dim)
    if bad is None:
        report.add("co-interchange", HOLDS)
    else:
        report.add("co-interchange", FAILS, (Q.labels[bad],))
    return report


def eckmann_hilton(p1, p2, u1, u2, labels=None) -> Report:
    """Verify the Eckmann-Hilton collapse for two unital products obeying interchange.

    Hypotheses (interchange ``(a*b).(c*d) = (a.c)*(b.d)`` with ``* = p1``,
    ``. = p2``, and two-sided units ``u1``, ``u2``) are checked first and a
    violation raises :class:`HypothesisError`.  The conclusions (equal units,
    equal products, commutativity) are then checked independently; a failing
    conclusion would be a counterexample to the argument itself.
    """
    n = len(u1)
    p1 = _frac_tensor(p1, (n, n, n), "p1")
    p2 = _frac_tensor(p2, (n, n, n), "p2")
    u1 = _frac_tensor(u1, (n,), "u1")
    u2 = _frac_tensor(u2, (n,), "u2")
    labels = tuple(labels) if labels is not None else tuple(f"e{i}" for i in range(n))
    S, D = _sparse_mult(p1), _sparse_mult(p2)
    e = lambda i: {i: Fraction(1)}  # noqa: E731
    for name, m, u in (("u1", S, u1), ("u2", D, u2)):
        uv = {k: c for k, c in enumerate(u) if c}
        for a in range(n):
            if not (_product(m, uv, e(a)) == e(a) == _product(m, e(a), uv)):
                raise HypothesisError(f"{name} is not a two-sided unit (fails on {labels[a]})")
    witness, _ = interchange_witness(p1, p2, n)
    if witness is not None:
        raise HypothesisError(f"interchange fails on {tuple(labels[i] for i in witness)}")

    report = Report(f"Eckmann-Hilton collapse (dim {n})")
    diff = [k for k in range(n) if u1[k] != u2[k]]
    report.add("units_equal", FAILS if diff else HOLDS, (labels[diff[0]],) if diff else None)
    pairs = list(itertools.product(range(n), repeat=2))
    bad = next(((a, b) for a, b in pairs if p1[a][b] != p2[a][b]), None)
    report.add("products_equal", FAILS if bad else HOLDS, tuple(labels[i] for i in bad) if bad else None)
    bad = next(((a, b) for a, b in pairs if p1[a][b] != p1[b][a]), None)
    report.add("commutative", FAILS if bad else HOLDS, tuple(labels[i] for i in bad) if bad else None)
    return report


def diagonal_trialgebra(H: HopfData) -> TrialgebraData:
    """``* = .`` = the product of ``H``, totally defined."""
    n = H.dim
    mask = [[True] * n for _ in range(n)]
    return TrialgebraData(H.labels, H.mult, mask, H.mult, H.comult, H.counit, H.unit, H.unit)


def diagonal_quadraalgebra(H: HopfData) -> QuadraalgebraData:
    return QuadraalgebraData(H.labels, H.mult, H.mult, H.unit, H.unit, H.comult, H.comult, H.counit, H.counit)

