"""Truncated Grothendieck-Teichmueller elements and their defining relations.

A GT element is a pair ``(lam, f)`` with ``f`` a group-like series in ``X, Y``
(``X = log x``, ``Y = log y``).  The relation set checked here:

* duality      ``f(X, Y) f(Y, X) = 1``;
* hexagon      ``f(x3, x1) x3^m f(x2, x3) x2^m f(x1, x2) x1^m = 1`` with
  ``x1 = e^X``, ``x2 = e^Y``, ``x3 = (x1 x2)^-1`` and ``m = (lam - 1)/2``;
* pentagon     ``f(t12, t23+t24) f(t13+t23, t34) = f(t23, t34) f(t12+t13, t24+t34) f(t12, t23)``
  in the truncated enveloping algebra of the Drinfeld-Kohno algebra ``t4``.

Evaluating ``f`` at group-like arguments ``a, b`` means substituting
``X -> log a``, ``Y -> log b``.

Composition follows the twisted substitution law
``(l1, f1)(l2, f2) = (l1 l2, f1(f2 x^l2 f2^-1, y^l2) f2)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from . import lie
from .errors import DomainError, StructureError
from .linalg import solve_affine
from .quotient import drinfeld_kohno, t_gen
from .series import XY, NCSeries, exp, inverse, is_grouplike, log, scalar, substitute

DEFAULT_MAX_DEGREE = 5


@dataclass(frozen=True)
class GTElement:
    lam: Fraction
    f: NCSeries

    def __post_init__(self):
        object.__setattr__(self, "lam", scalar(self.lam))
        if self.f.alphabet != XY:
            raise StructureError("f must be a series in X, Y")
        if not is_grouplike(self.f):
            raise DomainError("f must be group-like with constant term 1")

    @property
    def truncation(self) -> int:
        return self.f.truncation

    @classmethod
    def identity(cls, truncation: int) -> GTElement:
        return cls(Fraction(1), NCSeries.one(XY, truncation))


@dataclass(frozen=True)
class RelationReport:
    """Verdict for one relation; ``residual`` is the exact defect (zero iff the relation holds)."""

    relation: str
    truncation: int
    residual: NCSeries

    @property
    def holds(self) -> bool:
        return self.residual.is_zero()

    @property
    def first_failing_degree(self) -> int | None:
        return self.residual.min_degree()

    def failing_part(self) -> NCSeries | None:
        d = self.first_failing_degree
        return None if d is None else self.residual.degree_part(d)

    def summary(self) -> str:
        if self.holds:
            return f"{self.relation}: holds up to degree {self.truncation}"
        d = self.first_failing_degree
        lines = "; ".join(self.residual.degree_part(d).format_lines())
        return f"{self.relation}: fails at degree {d}, residual {lines}"


def evaluate(f: NCSeries, a: NCSeries, b: NCSeries) -> NCSeries:
    """``f(a, b)`` for group-like ``a, b`` (possibly over another alphabet)."""
    return substitute(f, {"X": log(a), "Y": log(b)})


def evaluate_linear(f: NCSeries, u: NCSeries, v: NCSeries) -> NCSeries:
    """``f`` with ``X -> u``, ``Y -> v`` for Lie-like arguments with zero constant term."""
    return substitute(f, {"X": u, "Y": v})


def duality_residual(f: NCSeries) -> NCSeries:
    X, Y = (NCSeries.generator(XY, f.truncation, i) for i in range(2))
    return f * evaluate_linear(f, Y, X) - 1


def hexagon_residual(lam, f: NCSeries) -> NCSeries:
    n = f.truncation
    X, Y = (NCSeries.generator(XY, n, i) for i in range(2))
    m = (scalar(lam) - 1) / 2
    x1, x2 = exp(X), exp(Y)
    x3 = inverse(x1 * x2)
    l1, l2, l3 = X, Y, log(x3)
    pw = lambda lg: exp(lg.scale(m))  # noqa: E731
    lhs = (
        evaluate_linear(f, l3, l1) * pw(l3)
        * evaluate_linear(f, l2, l3) * pw(l2)
        * evaluate_linear(f, l1, l2) * pw(l1)
    )
    return lhs - 1


def pentagon_residual(f: NCSeries) -> NCSeries:
    """Reduced defect of the pentagon in ``U(t4)``; a series over ``t12..t34``."""
    n = f.truncation
    Q = drinfeld_kohno(4, n)
    t = lambda i, j: t_gen(Q.alphabet, n, i, j)  # noqa: E731
    F = lambda u, v: evaluate_linear(f, u, v)  # noqa: E731
    lhs = F(t(1, 2), t(2, 3) + t(2, 4)) * F(t(1, 3) + t(2, 3), t(3, 4))
    rhs = F(t(2, 3), t(3, 4)) * F(t(1, 2) + t(1, 3), t(2, 4) + t(3, 4)) * F(t(1, 2), t(2, 3))
    return Q.reduce(lhs - rhs)


def check_duality(e: GTElement) -> RelationReport:
    return RelationReport("duality", e.truncation, duality_residual(e.f))


def check_hexagon(e: GTElement) -> RelationReport:
    return RelationReport("hexagon", e.truncation, hexagon_residual(e.lam, e.f))


def check_pentagon(e: GTElement) -> RelationReport:
    return RelationReport("pentagon", e.truncation, pentagon_residual(e.f))


def check_all(e: GTElement) -> list[RelationReport]:
    return [check_duality(e), check_hexagon(e), check_pentagon(e)]


def gt_compose(a: GTElement, b: GTElement) -> GTElement:
    if a.truncation != b.truncation:
        raise StructureError("GT elements with different truncations")
    n = a.truncation
    X, Y = (NCSeries.generator(XY, n, i) for i in range(2))
    fb, fb_inv = b.f, inverse(b.f)
    f = evaluate_linear(a.f, fb * X.scale(b.lam) * fb_inv, Y.scale(b.lam)) * fb
    return GTElement(a.lam * b.lam, f)


# degree-by-degree solver


@dataclass
class DegreeSolution:
    """Affine space of degree-``d`` Lyndon coordinates: ``particular + span(homogeneous)``."""

    degree: int
    basis: list[tuple[int, ...]]
    particular: list[Fraction] | None
    homogeneous: list[list[Fraction]]
    chosen: list[Fraction] | None = None

    @property
    def feasible(self) -> bool:
        return self.particular is not None

    @property
    def dimension(self) -> int | None:
        return len(self.homogeneous) if self.feasible else None


@dataclass
class RelationSolution:
    lam: Fraction
    truncation: int
    degrees: list[DegreeSolution] = field(default_factory=list)
    log_f: lie.LieElement | None = None

    @property
    def feasible(self) -> bool:
        return all(d.feasible for d in self.degrees) and len(self.degrees) == self.truncation

    def element(self) -> GTElement:
        if not self.feasible:
            raise DomainError("relation system is infeasible at some degree")
        return GTElement(self.lam, exp(lie.embed_lie(self.log_f)))


Residuals = Callable[[Fraction, NCSeries], list[NCSeries]]


def _all_residuals(lam: Fraction, f: NCSeries) -> list[NCSeries]:
    return [duality_residual(f), hexagon_residual(lam, f), pentagon_residual(f)]


def _flatten(parts: Sequence[NCSeries], d: int) -> dict[tuple[int, tuple], Fraction]:
    out = {}
    for k, part in enumerate(parts):
        for w, c in part.degree_part(d).terms().items():
            out[(k, w)] = c
    return out


def solve_relations(
    lam,
    truncation: int,
    choices: Mapping[int, Sequence] | None = None,
    max_degree: int = DEFAULT_MAX_DEGREE,
    residuals: Residuals = _all_residuals,
) -> RelationSolution:
    """Solve duality + hexagon + pentagon for ``f = exp(l)`` one degree at a time.

    Writing ``f`` as the exponential of a Lie series imposes group-likeness;
    at degree ``d`` the relations are affine in the degree-``d`` Lyndon
    coordinates once lower degrees are fixed.  ``choices[d]`` selects a point
    of the degree-``d`` affine space by coefficients on the homogeneous basis
    (default: the particular solution).  An infeasible degree ends the solve
    and is reported as an empty affine space.
    """
    lam = scalar(lam)
    if truncation > max_degree:
        raise DomainError(f"truncation {truncation} exceeds the configured maximum {max_degree}")
    choices = choices or {}
    result = RelationSolution(lam, truncation)
    log_coords: dict[tuple[int, ...], Fraction] = {}
    for d in range(1, truncation + 1):
        basis = lie.lyndon_basis(d)

        def residual_at(vec):
            coords = dict(log_coords)
            coords.update({w: c for w, c in zip(basis, vec) if c})
            f = exp(lie.embed_lie(lie.LieElement(XY, d, coords)))
            return _flatten(residuals(lam, f), d)

        base = residual_at([0] * len(basis))
        columns = []
        for i in range(len(basis)):
            unit = [0] * len(basis)
            unit[i] = 1
            col = residual_at(unit)
            columns.append({k: col.get(k, 0) - base.get(k, 0) for k in set(col) | set(base)})
        keys = sorted(set(base).union(*columns), key=repr)
        rows = [{i: columns[i].get(k, 0) for i in range(len(basis))} for k in keys]
        rhs = [-base.get(k, 0) for k in keys]
        particular, kernel = solve_affine(rows, rhs, len(basis))
        sol = DegreeSolution(d, basis, particular, kernel)
        result.degrees.append(sol)
        if particular is None:
            return result
        chosen = list(particular)
        for coef, vec in zip(choices.get(d, ()), kernel):
            coef = scalar(coef)
            chosen = [a + coef * b for a, b in zip(chosen, vec)]
        sol.chosen = chosen
        log_coords.update({w: c for w, c in zip(basis, chosen) if c})
    result.log_f = lie.LieElement(XY, truncation, log_coords)
    return result
