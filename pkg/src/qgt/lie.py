"""Free Lie algebra in Lyndon coordinates.

Basis elements are the standard bracketings of Lyndon words: a Lyndon word
``w = uv`` with ``v`` its longest proper Lyndon suffix is bracketed as
``[P(u), P(v)]``.  Lyndon words are ordered lexicographically with letters
compared in alphabet order.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping

from .errors import DomainError, StructureError
from .series import XY, Alphabet, Monomial, NCSeries, is_primitive, scalar


def lyndon_words(k: int, max_length: int) -> Iterator[Monomial]:
    """Lyndon words over ``k`` letters of length ``<= max_length`` (Duval's algorithm), lex order."""
    if max_length < 1 or k < 1:
        return
    w = [-1]
    while w:
        w[-1] += 1
        yield tuple(w)
        m = len(w)
        while len(w) < max_length:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()


@lru_cache(maxsize=None)
def _lyndon_by_degree(alphabet: Alphabet, degree: int) -> tuple[Monomial, ...]:
    min_deg = min(alphabet.degrees)
    words = [
        w for w in lyndon_words(len(alphabet), degree // min_deg)
        if alphabet.degree(w) == degree
    ]
    return tuple(sorted(words))


def lyndon_basis(degree: int, alphabet: Alphabet = XY) -> list[Monomial]:
    return list(_lyndon_by_degree(alphabet, degree))


def standard_factorization(w: Monomial) -> tuple[Monomial, Monomial]:
    """``w = uv`` with ``v`` the longest proper suffix that is Lyndon."""
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise DomainError(f"{w} has no standard factorization")


def is_lyndon(w: Monomial) -> bool:
    return bool(w) and all(w < w[i:] + w[:i] for i in range(1, len(w)))


@lru_cache(maxsize=None)
def _bracketing(w: Monomial) -> dict[Monomial, int]:
    if len(w) == 1:
        return {w: 1}
    u, v = standard_factorization(w)
    pu, pv = _bracketing(u), _bracketing(v)
    out: dict[Monomial, int] = {}
    for a, ca in pu.items():
        for b, cb in pv.items():
            out[a + b] = out.get(a + b, 0) + ca * cb
            out[b + a] = out.get(b + a, 0) - ca * cb
    return {k: c for k, c in out.items() if c}


def bracketing(w: Monomial, alphabet: Alphabet, truncation: int) -> NCSeries:
    """The basis element ``P(w)`` as a homogeneous series."""
    return NCSeries(alphabet, truncation, _bracketing(tuple(w)))


class LieElement:
    """Element of the free Lie algebra truncated at degree ``N``, stored by Lyndon coordinates."""

    __slots__ = ("alphabet", "truncation", "_coords")

    def __init__(self, alphabet: Alphabet, truncation: int, coords: Mapping[Monomial, object] = ()):
        self.alphabet = alphabet
        self.truncation = truncation
        clean = {}
        items = coords.items() if isinstance(coords, Mapping) else coords
        for w, c in items:
            w = tuple(w)
            if not is_lyndon(w) or any(not 0 <= i < len(alphabet) for i in w):
                raise StructureError(f"{w} is not a Lyndon word over the alphabet")
            c = scalar(c)
            if c and alphabet.degree(w) <= truncation:
                clean[w] = clean.get(w, 0) + c
        self._coords = {w: c for w, c in clean.items() if c}

    @classmethod
    def generator(cls, alphabet: Alphabet, truncation: int, name: str | int) -> LieElement:
        i = name if isinstance(name, int) else alphabet.index(name)
        return cls(alphabet, truncation, {(i,): 1})

    @classmethod
    def zero(cls, alphabet: Alphabet, truncation: int) -> LieElement:
        return cls(alphabet, truncation)

    def coords(self) -> dict[Monomial, Fraction]:
        return dict(self._coords)

    def items(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._coords.items(), key=lambda kv: self.alphabet.sort_key(kv[0]))

    def coordinate(self, w: Monomial) -> Fraction:
        return self._coords.get(tuple(w), Fraction(0))

    def is_zero(self) -> bool:
        return not self._coords

    def degree_part(self, d: int) -> LieElement:
        return LieElement(self.alphabet, self.truncation,
                          {w: c for w, c in self._coords.items() if self.alphabet.degree(w) == d})

    def _check(self, other: LieElement) -> None:
        if self.alphabet != other.alphabet or self.truncation != other.truncation:
            raise StructureError("Lie elements over different alphabets or truncations")

    def __add__(self, other: LieElement) -> LieElement:
        self._check(other)
        out = dict(self._coords)
        for w, c in other._coords.items():
            out[w] = out.get(w, 0) + c
        return LieElement(self.alphabet, self.truncation, out)

    def __neg__(self) -> LieElement:
        return self.scale(-1)

    def __sub__(self, other: LieElement) -> LieElement:
        return self + (-other)

    def scale(self, c) -> LieElement:
        c = scalar(c)
        return LieElement(self.alphabet, self.truncation, {w: c * v for w, v in self._coords.items()})

    def __mul__(self, c) -> LieElement:
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return (self.alphabet, self.truncation, self._coords) == (other.alphabet, other.truncation, other._coords)

    def __hash__(self) -> int:
        return hash((self.alphabet, self.truncation, frozenset(self._coords.items())))

    def __repr__(self) -> str:
        fw = self.alphabet.format_word
        body = " + ".join(f"{c}*P({fw(w)})" for w, c in self.items()) or "0"
        return f"LieElement[N={self.truncation}]({body})"

    def bracket(self, other: LieElement) -> LieElement:
        return lie_bracket(self, other)


def embed_lie(a: LieElement) -> NCSeries:
    out = NCSeries.zero(a.alphabet, a.truncation)
    for w, c in a._coords.items():
        out = out + bracketing(w, a.alphabet, a.truncation).scale(c)
    return out


def project_lie(a: NCSeries, *, check: bool = True) -> LieElement:
    """Lyndon coordinates of a primitive series.

    ``P(w)`` equals ``w`` plus lexicographically larger words of the same
    degree, so coordinates are peeled off in increasing Lyndon order.
    """
    if check and not is_primitive(a):
        raise DomainError("project_lie requires a primitive series")
    alphabet = a.alphabet
    remainder = dict(a.terms())
    coords: dict[Monomial, Fraction] = {}
    for d in range(1, a.truncation + 1):
        for w in _lyndon_by_degree(alphabet, d):
            c = remainder.get(w)
            if not c:
                continue
            coords[w] = c
            for word, v in _bracketing(w).items():
                nv = remainder.get(word, 0) - c * v
                if nv:
                    remainder[word] = nv
                else:
                    remainder.pop(word, None)
    if remainder:
        raise DomainError("series is not a Lie element")
    return LieElement(alphabet, a.truncation, coords)


def lie_bracket(a: LieElement, b: LieElement) -> LieElement:
    a._check(b)
    return project_lie(embed_lie(a).bracket(embed_lie(b)), check=False)


def free_lie_dimension(degree: int, k: int = 2) -> int:
    return len(lyndon_basis(degree, Alphabet(tuple(f"g{i}" for i in range(k)))))
