"""Truncated quotients of the free associative algebra by homogeneous ideals.

The degree-``d`` part of the two-sided ideal is spanned by all products
``m1 * r * m2`` of monomials with a relator, of total degree ``d``; it is
brought to reduced echelon form with columns in descending degree-lex order,
so normal forms are written in the smallest monomials.  Degrees are built on
first use and cached.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from threading import Lock
from typing import Sequence

from .errors import StructureError
from .linalg import Echelon
from .series import Alphabet, Monomial, NCSeries


class QuotientAlgebra:
    def __init__(self, alphabet: Alphabet, relators: Sequence[NCSeries], truncation: int):
        self.alphabet = alphabet
        self.truncation = truncation
        rels = []
        for r in relators:
            if r.alphabet != alphabet:
                raise StructureError("relator over a different alphabet")
            degs = {alphabet.degree(w) for w in r}
            if len(degs) > 1:
                raise StructureError(f"relator {r!r} is not homogeneous")
            if not degs:
                continue
            (d,) = degs
            if d > truncation:
                continue
            rels.append((d, r.terms()))
        self.relators = tuple(relators)
        self._rels = rels
        self._echelons: dict[int, tuple[dict[Monomial, int], list[Monomial], Echelon]] = {}
        self._lock = Lock()

    def _degree(self, d: int):
        hit = self._echelons.get(d)
        if hit is not None:
            return hit
        with self._lock:
            hit = self._echelons.get(d)
            if hit is None:
                hit = self._build(d)
                self._echelons[d] = hit
        return hit

    def _build(self, d: int):
        words = sorted(self.alphabet.words(d), reverse=True)
        col = {w: i for i, w in enumerate(words)}
        rows = []
        for rd, terms in self._rels:
            if rd > d:
                continue
            for left_deg in range(d - rd + 1):
                lefts = self.alphabet.words(left_deg)
                rights = self.alphabet.words(d - rd - left_deg)
                for m1, m2 in itertools.product(lefts, rights):
                    rows.append({col[m1 + w + m2]: c for w, c in terms.items()})
        return col, words, Echelon(rows, len(words))

    def ideal_dimension(self, d: int) -> int:
        return self._degree(d)[2].dimension

    def graded_dimension(self, d: int) -> int:
        """Dimension of the degree-``d`` component of the quotient."""
        col, _, ech = self._degree(d)
        return len(col) - ech.dimension

    def normal_monomials(self, d: int) -> list[Monomial]:
        _, words, ech = self._degree(d)
        return sorted((w for i, w in enumerate(words) if i not in ech.pivots), key=self.alphabet.sort_key)

    def reduce(self, a: NCSeries) -> NCSeries:
        """Unique normal form of ``a`` modulo the ideal; linear and idempotent."""
        if a.alphabet != self.alphabet or a.truncation != self.truncation:
            raise StructureError("series does not live in this quotient's ambient algebra")
        by_degree: dict[int, dict[Monomial, Fraction]] = {}
        for w, c in a.terms().items():
            by_degree.setdefault(self.alphabet.degree(w), {})[w] = c
        out: dict[Monomial, Fraction] = {}
        for d, part in by_degree.items():
            if d == 0 or not any(rd <= d for rd, _ in self._rels):
                out.update(part)
                continue
            col, words, ech = self._degree(d)
            reduced = ech.reduce({col[w]: c for w, c in part.items()})
            out.update({words[i]: c for i, c in reduced.items()})
        return NCSeries(self.alphabet, self.truncation, out)

    def equal(self, a: NCSeries, b: NCSeries) -> bool:
        return self.reduce(a - b).is_zero()


def build_quotient(alphabet: Alphabet, relators: Sequence[NCSeries], truncation: int) -> QuotientAlgebra:
    return QuotientAlgebra(alphabet, relators, truncation)


def reduce(a: NCSeries, quotient: QuotientAlgebra) -> NCSeries:
    return quotient.reduce(a)


def dk_alphabet(n: int) -> Alphabet:
    """Generators ``t12, t13, ..., t(n-1)n`` of the Drinfeld-Kohno algebra, in that order."""
    return Alphabet(tuple(f"t{i}{j}" for i, j in itertools.combinations(range(1, n + 1), 2)))


def t_gen(alphabet: Alphabet, truncation: int, i: int, j: int) -> NCSeries:
    i, j = min(i, j), max(i, j)
    return NCSeries.generator(alphabet, truncation, f"t{i}{j}")


def dk_relators(n: int, truncation: int) -> list[NCSeries]:
    """``[t_ij, t_ik + t_jk]`` for distinct ``i, j, k`` and ``[t_ij, t_kl]`` for disjoint pairs."""
    alpha = dk_alphabet(n)
    t = lambda i, j: t_gen(alpha, truncation, i, j)  # noqa: E731
    rels = []
    for i, j in itertools.combinations(range(1, n + 1), 2):
        for k in range(1, n + 1):
            if k not in (i, j):
                rels.append(t(i, j).bracket(t(i, k) + t(j, k)))
    for (i, j), (k, l) in itertools.combinations(itertools.combinations(range(1, n + 1), 2), 2):
        if len({i, j, k, l}) == 4:
            rels.append(t(i, j).bracket(t(k, l)))
    return rels


@lru_cache(maxsize=8)
def drinfeld_kohno(n: int, truncation: int) -> QuotientAlgebra:
    """Truncated enveloping algebra of the Drinfeld-Kohno Lie algebra ``t_n``."""
    return QuotientAlgebra(dk_alphabet(n), dk_relators(n, truncation), truncation)
