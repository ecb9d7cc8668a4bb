"""Ihara bracket on the free Lie algebra in ``x, y`` and Lie-Poisson brackets on ``g*``.

Ihara bracket convention: ``D_f`` is the derivation with ``D_f(x) = 0`` and
``D_f(y) = [y, f]``, and ``{f, g} = D_f(g) - D_g(f) + [f, g]``.

Evaluation on a metrized Lie algebra: a Lie word ``f`` is evaluated at
``x -> a(xi)``, ``y -> b(xi)`` (vectors in ``g`` with polynomial coefficients)
and paired with ``xi``: ``f_g(xi) = <xi, f(a(xi), b(xi))>``.  The identity
assignment raises ``xi`` to ``g`` through the metric, so ``x_g`` is the
quadratic Casimir.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

from .errors import DomainError, StructureError
from .lie import LieElement, embed_lie, lie_bracket, project_lie, standard_factorization
from .linalg import determinant_nonzero, inverse
from .series import NCSeries, scalar

Exponent = tuple[int, ...]


class PolyFunction:
    """Polynomial in the coordinate functions ``xi_0 .. xi_{m-1}`` on ``g*``."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] = ()):
        self.nvars = nvars
        clean: dict[Exponent, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e = tuple(e)
            if len(e) != nvars or any(x < 0 for x in e):
                raise StructureError(f"bad exponent {e} for {nvars} variables")
            c = scalar(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def coordinate(cls, nvars: int, i: int) -> PolyFunction:
        return cls(nvars, {tuple(int(k == i) for k in range(nvars)): 1})

    @classmethod
    def constant(cls, nvars: int, c) -> PolyFunction:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def zero(cls, nvars: int) -> PolyFunction:
        return cls(nvars)

    def items(self) -> list[tuple[Exponent, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), tuple(-x for x in kv[0])))

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def _lift(self, other) -> PolyFunction:
        if isinstance(other, PolyFunction):
            if other.nvars != self.nvars:
                raise StructureError("polynomials in different numbers of variables")
            return other
        return PolyFunction.constant(self.nvars, other)

    def __add__(self, other) -> PolyFunction:
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return PolyFunction(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> PolyFunction:
        return PolyFunction(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> PolyFunction:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> PolyFunction:
        return self._lift(other) - self

    def __mul__(self, other) -> PolyFunction:
        other = self._lift(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return PolyFunction(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> PolyFunction:
        out = PolyFunction.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def diff(self, i: int) -> PolyFunction:
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                out[tuple(d)] = c * e[i]
        return PolyFunction(self.nvars, out)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PolyFunction.constant(self.nvars, other)
        return isinstance(other, PolyFunction) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def format(self, labels: Sequence[str] | None = None) -> str:
        labels = labels or [f"xi{i}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.items():
            mono = "*".join(l if k == 1 else f"{l}^{k}" for l, k in zip(labels, e) if k)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"PolyFunction({self.format()})"


@dataclass(frozen=True)
class MetrizedLieAlgebra:
    """Structure constants ``[e_i, e_j] = sum_k c[i][j][k] e_k`` and an invariant metric.

    Antisymmetry, the Jacobi identity, symmetry, nondegeneracy and invariance
    ``<[a,b],c> = <a,[b,c]>`` are verified exhaustively on construction.
    """

    labels: tuple[str, ...]
    structure: tuple
    metric: tuple

    def __post_init__(self):
        from .hopf import _frac_tensor

        m = len(self.labels)
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "structure", _frac_tensor(self.structure, (m, m, m), "structure"))
        object.__setattr__(self, "metric", _frac_tensor(self.metric, (m, m), "metric"))
        problem = self.validation_error()
        if problem:
            raise DomainError(problem)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def bracket_vec(self, u: Sequence, v: Sequence) -> list:
        """Bracket of coordinate vectors; entries may be Fractions or PolyFunctions."""
        c = self.structure
        m = self.dim
        out = [0] * m
        for i in range(m):
            if isinstance(u[i], (int, Fraction)) and not u[i]:
                continue
            for j in range(m):
                if isinstance(v[j], (int, Fraction)) and not v[j]:
                    continue
                uv = None
                for k in range(m):
                    if c[i][j][k]:
                        if uv is None:
                            uv = u[i] * v[j]
                        out[k] = uv * c[i][j][k] + out[k]
        return out

    def validation_error(self) -> str | None:
        m = self.dim
        c, g = self.structure, self.metric
        e = lambda i: [Fraction(int(k == i)) for k in range(m)]  # noqa: E731
        for i, j in itertools.product(range(m), repeat=2):
            if any(c[i][j][k] != -c[j][i][k] for k in range(m)):
                return f"structure constants not antisymmetric at ({self.labels[i]}, {self.labels[j]})"
        for i, j, k in itertools.product(range(m), repeat=3):
            a = self.bracket_vec(e(i), self.bracket_vec(e(j), e(k)))
            b = self.bracket_vec(e(j), self.bracket_vec(e(k), e(i)))
            d = self.bracket_vec(e(k), self.bracket_vec(e(i), e(j)))
            if any(x + y + z for x, y, z in zip(a, b, d)):
                return f"Jacobi identity fails at {self.labels[i], self.labels[j], self.labels[k]}"
        if any(g[i][j] != g[j][i] for i in range(m) for j in range(m)):
            return "metric is not symmetric"
        if not determinant_nonzero(g):
            return "metric is degenerate"
        pair = lambda u, v: sum(u[p] * g[p][q] * v[q] for p in range(m) for q in range(m))  # noqa: E731
        for i, j, k in itertools.product(range(m), repeat=3):
            if pair(self.bracket_vec(e(i), e(j)), e(k)) != pair(e(i), self.bracket_vec(e(j), e(k))):
                return f"metric is not invariant at {self.labels[i], self.labels[j], self.labels[k]}"
        return None

    @cached_property
    def inverse_metric(self) -> list[list[Fraction]]:
        return inverse(self.metric)

    def coordinates(self) -> list[PolyFunction]:
        return [PolyFunction.coordinate(self.dim, i) for i in range(self.dim)]

    def casimir(self) -> PolyFunction:
        """``sum g^{ij} xi_i xi_j``; Poisson-central."""
        xi = self.coordinates()
        G = self.inverse_metric
        out = PolyFunction.zero(self.dim)
        for i, j in itertools.product(range(self.dim), repeat=2):
            if G[i][j]:
                out = out + xi[i] * xi[j] * G[i][j]
        return out


# Ihara bracket


def ihara_derivation(f: LieElement, a: NCSeries) -> NCSeries:
    """``D_f(a)`` on an associative series: ``x`` is killed, each ``y`` becomes ``[y, f]``."""
    if len(f.alphabet) != 2:
        raise StructureError("the Ihara bracket lives on two generators")
    F = embed_lie(f)
    Y = NCSeries.generator(a.alphabet, a.truncation, 1)
    yf = Y.bracket(F)
    out = NCSeries.zero(a.alphabet, a.truncation)
    for word, c in a.terms().items():
        for pos, letter in enumerate(word):
            if letter != 1:
                continue
            left = NCSeries(a.alphabet, a.truncation, {word[:pos]: 1})
            right = NCSeries(a.alphabet, a.truncation, {word[pos + 1:]: 1})
            out = out + (left * yf * right).scale(c)
    return out


def ihara_bracket(f: LieElement, g: LieElement) -> LieElement:
    f._check(g)
    F, G = embed_lie(f), embed_lie(g)
    total = ihara_derivation(f, G) - ihara_derivation(g, F) + F.bracket(G)
    return project_lie(total, check=False)


def check_b5(f: LieElement, h: LieElement, plain_bracket: bool = False) -> bool:
    bracket = lie_bracket if plain_bracket else ihara_bracket
    return bracket(f, h).is_zero()


# Lie-Poisson bracket and evaluation


def kirillov_bracket(F: PolyFunction, G: PolyFunction, g: MetrizedLieAlgebra) -> PolyFunction:
    """``{F, G}(xi) = sum c[i][j][k] xi_k dF/dxi_i dG/dxi_j``."""
    if F.nvars != g.dim or G.nvars != g.dim:
        raise StructureError("polynomials do not live on this Lie algebra's dual")
    xi = g.coordinates()
    dF = [F.diff(i) for i in range(g.dim)]
    dG = [G.diff(j) for j in range(g.dim)]
    out = PolyFunction.zero(g.dim)
    for i, j, k in itertools.product(range(g.dim), repeat=3):
        c = g.structure[i][j][k]
        if c and not dF[i].is_zero() and not dG[j].is_zero():
            out = out + xi[k] * dF[i] * dG[j] * c
    return out


def identity_assignment(g: MetrizedLieAlgebra) -> list[PolyFunction]:
    """``xi`` raised to ``g`` by the metric: coordinates ``sum_l g^{kl} xi_l``."""
    xi = g.coordinates()
    G = g.inverse_metric
    out = []
    for k in range(g.dim):
        acc = PolyFunction.zero(g.dim)
        for l in range(g.dim):
            if G[k][l]:
                acc = acc + xi[l] * G[k][l]
        out.append(acc)
    return out


def constant_assignment(g: MetrizedLieAlgebra, vector: Sequence) -> list[PolyFunction]:
    return [PolyFunction.constant(g.dim, v) for v in vector]


def _evaluate_word(w, g, images, cache):
    hit = cache.get(w)
    if hit is None:
        if len(w) == 1:
            hit = images[w[0]]
        else:
            u, v = standard_factorization(w)
            hit = g.bracket_vec(_evaluate_word(u, g, images, cache), _evaluate_word(v, g, images, cache))
        cache[w] = hit
    return hit


def evaluate_on_g(
    f: LieElement, g: MetrizedLieAlgebra, a_assign: Sequence[PolyFunction], b_assign: Sequence[PolyFunction]
) -> PolyFunction:
    if len(a_assign) != g.dim or len(b_assign) != g.dim:
        raise StructureError("assignments must have one coordinate per basis vector of g")
    images = {0: list(a_assign), 1: list(b_assign)}
    cache: dict = {}
    total = [PolyFunction.zero(g.dim) for _ in range(g.dim)]
    for w, c in f.items():
        vec = _evaluate_word(w, g, images, cache)
        for k, v in enumerate(vec):
            if isinstance(v, PolyFunction):
                total[k] = total[k] + v * c
    xi = g.coordinates()
    out = PolyFunction.zero(g.dim)
    for k in range(g.dim):
        out = out + xi[k] * total[k]
    return out


def check_b5_evaluated(f: LieElement, h: LieElement, g: MetrizedLieAlgebra, a_assign, b_assign) -> bool:
    fg = evaluate_on_g(f, g, a_assign, b_assign)
    hg = evaluate_on_g(h, g, a_assign, b_assign)
    return kirillov_bracket(fg, hg, g).is_zero()
