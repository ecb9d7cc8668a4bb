"""Pairs of group-like series subject to ``g^-1 f = f^-1 g`` and the surrounding machinery.

``chi = psi^-1 phi`` measures the mismatch of two associator-type data; the
compatibility ``psi^-1 phi = phi^-1 psi`` says exactly that ``chi`` is an
involution.  Transformed data ``phi f``, ``psi g`` stay compatible iff
``g^-1 chi f = f^-1 chi^-1 g``, which for ``chi = 1`` is the pair condition
``g^-1 f = f^-1 g``.

Second components carry a dualization flag only; their composition is the
opposite of the first-component law (see :func:`compose_second`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from . import lie
from .errors import DomainError, StructureError
from .gtrel import GTElement, gt_compose
from .linalg import solve_affine
from .series import XY, NCSeries, exp, inverse, is_grouplike, scalar


def _require_grouplike(*series: NCSeries) -> None:
    for s in series:
        if s.constant_term != 1:
            raise DomainError("expected a series with constant term 1")
    first = series[0]
    for s in series[1:]:
        first._check(s)


def chi(phi: NCSeries, psi: NCSeries) -> NCSeries:
    _require_grouplike(phi, psi)
    return inverse(psi) * phi


def check_b1(phi: NCSeries, psi: NCSeries) -> bool:
    _require_grouplike(phi, psi)
    return inverse(psi) * phi == inverse(phi) * psi


def is_involution(c: NCSeries) -> bool:
    return c * c == 1


def check_b3(f: NCSeries, g: NCSeries, c: NCSeries) -> bool:
    _require_grouplike(f, g, c)
    return inverse(g) * c * f == inverse(f) * inverse(c) * g


def b4_residual(f: NCSeries, g: NCSeries) -> NCSeries:
    return inverse(g) * f - inverse(f) * g


@dataclass(frozen=True)
class HGTPair:
    f: NCSeries
    g: NCSeries
    g_dual: bool = True

    def __post_init__(self):
        if self.f.alphabet != XY or self.g.alphabet != XY:
            raise StructureError("pair components must be series in X, Y")
        self.f._check(self.g)
        for s in (self.f, self.g):
            if not is_grouplike(s):
                raise DomainError("pair components must be group-like")

    @property
    def truncation(self) -> int:
        return self.f.truncation

    @classmethod
    def identity(cls, truncation: int) -> HGTPair:
        one = NCSeries.one(XY, truncation)
        return cls(one, one)


def check_b4(p: HGTPair) -> bool:
    return b4_residual(p.f, p.g).is_zero()


def swap(p: HGTPair) -> HGTPair:
    return HGTPair(p.g, p.f, p.g_dual)


@dataclass
class B4Solution:
    """All group-like ``g`` with ``g^-1 f = f^-1 g``, as ``exp(particular + span(kernel))`` per degree."""

    f: NCSeries
    degrees: list[tuple[int, list[Fraction] | None, list[list[Fraction]]]] = field(default_factory=list)
    g: NCSeries | None = None

    @property
    def feasible(self) -> bool:
        return all(p is not None for _, p, _ in self.degrees)

    @property
    def unique(self) -> bool:
        return self.feasible and all(not k for _, _, k in self.degrees)

    def solutions(self) -> list[NCSeries]:
        """The solution set when it is finite (empty or a single element)."""
        if not self.feasible:
            return []
        if not self.unique:
            raise DomainError("solution set is infinite; inspect the per-degree kernels")
        return [self.g]

    def summary(self) -> str:
        if not self.feasible:
            bad = next(d for d, p, _ in self.degrees if p is None)
            return f"no solution (infeasible at degree {bad})"
        if self.unique:
            return "unique solution; " + ("equals f" if self.g == self.f else "differs from f")
        dims = {d: len(k) for d, _, k in self.degrees if k}
        return f"solution family with free parameters per degree {dims}"


def solve_b4(f: NCSeries, truncation: int | None = None) -> B4Solution:
    """Solve the pair condition for ``g = exp(l)`` degree by degree in Lyndon coordinates.

    At degree ``d`` the condition is affine in the degree-``d`` coordinates of
    ``l`` given the lower ones.  Free directions are set to zero when moving on,
    so the returned ``g`` is one representative; ``unique`` says whether it is
    the only one.
    """
    n = f.truncation if truncation is None else truncation
    if n != f.truncation:
        f = f.truncate(n)
    if not is_grouplike(f):
        raise DomainError("f must be group-like")
    out = B4Solution(f)
    coords: dict[tuple[int, ...], Fraction] = {}
    for d in range(1, n + 1):
        basis = lie.lyndon_basis(d)
        fd = f.truncate(d)

        def residual(vec):
            c = dict(coords)
            c.update({w: v for w, v in zip(basis, vec) if v})
            g = exp(lie.embed_lie(lie.LieElement(XY, d, c)))
            return b4_residual(fd, g).degree_part(d).terms()

        base = residual([0] * len(basis))
        cols = []
        for i in range(len(basis)):
            unit = [0] * len(basis)
            unit[i] = 1
            r = residual(unit)
            cols.append({k: r.get(k, 0) - base.get(k, 0) for k in set(r) | set(base)})
        keys = sorted(set(base).union(*cols))
        rows = [{i: cols[i].get(k, 0) for i in range(len(basis))} for k in keys]
        particular, kernel = solve_affine(rows, [-base.get(k, 0) for k in keys], len(basis))
        out.degrees.append((d, particular, kernel))
        if particular is None:
            return out
        coords.update({w: v for w, v in zip(basis, particular) if v})
    out.g = exp(lie.embed_lie(lie.LieElement(XY, n, coords)))
    return out


# formal combinations and composition


def compose_first(f1: NCSeries, f2: NCSeries) -> NCSeries:
    """GT law on first components with the scalar part forgotten (``lam = 1``)."""
    return gt_compose(GTElement(Fraction(1), f1), GTElement(Fraction(1), f2)).f


def compose_second(g1: NCSeries, g2: NCSeries) -> NCSeries:
    """Function-algebra side: the opposite of the first-component law."""
    return compose_first(g2, g1)


def compose_pairs(p: HGTPair, q: HGTPair) -> HGTPair:
    return HGTPair(compose_first(p.f, q.f), compose_second(p.g, q.g), p.g_dual)


class HGTCombination:
    """Finite formal linear combination of pairs; zero coefficients are dropped, repeats merged."""

    def __init__(self, terms: Iterable[tuple[object, HGTPair]] = ()):
        merged: dict[HGTPair, Fraction] = {}
        for c, p in terms:
            merged[p] = merged.get(p, Fraction(0)) + scalar(c)
        self.terms = {p: c for p, c in merged.items() if c}

    @classmethod
    def single(cls, p: HGTPair, c=1) -> HGTCombination:
        return cls([(c, p)])

    def __add__(self, other: HGTCombination) -> HGTCombination:
        return HGTCombination([(c, p) for p, c in self.terms.items()] + [(c, p) for p, c in other.terms.items()])

    def __eq__(self, other) -> bool:
        return isinstance(other, HGTCombination) and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def items(self):
        return list(self.terms.items())


@dataclass
class CompositionResult:
    combination: HGTCombination
    violations: list[HGTPair]

    @property
    def closed(self) -> bool:
        return not self.violations


def compose(c1: HGTCombination, c2: HGTCombination) -> CompositionResult:
    """Bilinear extension of pair composition; composite pairs failing the pair condition are reported."""
    terms, violations = [], []
    for p, a in c1.terms.items():
        for q, b in c2.terms.items():
            r = compose_pairs(p, q)
            if not check_b4(r):
                violations.append(r)
            terms.append((a * b, r))
    return CompositionResult(HGTCombination(terms), violations)


def project_first(c: HGTCombination) -> dict[NCSeries, Fraction]:
    """Formal combination of first components (an element of the group algebra)."""
    out: dict[NCSeries, Fraction] = {}
    for p, a in c.terms.items():
        out[p.f] = out.get(p.f, Fraction(0)) + a
    return {f: a for f, a in out.items() if a}


def group_algebra_product(x: dict[NCSeries, Fraction], y: dict[NCSeries, Fraction]) -> dict[NCSeries, Fraction]:
    out: dict[NCSeries, Fraction] = {}
    for f, a in x.items():
        for h, b in y.items():
            k = compose_first(f, h)
            out[k] = out.get(k, Fraction(0)) + a * b
    return {f: a for f, a in out.items() if a}
