"""Truncated noncommutative power series over the rationals.

A series lives over an :class:`Alphabet` and carries an explicit truncation
degree ``N``; every stored monomial has degree ``<= N``.  Monomials are tuples
of generator indices.  Series with different alphabets or truncations never
mix silently: arithmetic between them raises :class:`StructureError`.

Monomial order is degree-lexicographic in the alphabet's declared order.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import DomainError, StructureError

Monomial = tuple[int, ...]


def scalar(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction; floats are refused."""
    if isinstance(x, float):
        raise TypeError("floating point scalars are not allowed")
    return Fraction(x)


@dataclass(frozen=True)
class Alphabet:
    names: tuple[str, ...]
    degrees: tuple[int, ...] = ()

    def __post_init__(self):
        names = tuple(self.names)
        if not names:
            raise StructureError("alphabet must be nonempty")
        if len(set(names)) != len(names):
            raise StructureError(f"duplicate generator names in {names}")
        degrees = tuple(self.degrees) or (1,) * len(names)
        if len(degrees) != len(names) or any(d < 1 for d in degrees):
            raise StructureError("generator degrees must be positive, one per generator")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "degrees", degrees)

    @classmethod
    def of(cls, *names: str) -> Alphabet:
        return cls(tuple(names))

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise StructureError(f"unknown generator {name!r}") from None

    def degree(self, word: Monomial) -> int:
        degs = self.degrees
        return sum(degs[i] for i in word)

    def sort_key(self, word: Monomial):
        return (self.degree(word), word)

    def words(self, degree: int) -> list[Monomial]:
        """All monomials of the given degree, in degree-lex order."""
        if all(d == 1 for d in self.degrees):
            return list(itertools.product(range(len(self.names)), repeat=degree))
        out: list[Monomial] = []

        def grow(prefix, remaining):
            if remaining == 0:
                out.append(tuple(prefix))
                return
            for i, d in enumerate(self.degrees):
                if d <= remaining:
                    grow(prefix + [i], remaining - d)

        grow([], degree)
        return sorted(out)

    def format_word(self, word: Monomial) -> str:
        return ".".join(self.names[i] for i in word) if word else "1"

    def parse_word(self, text: str) -> Monomial:
        text = text.strip()
        if text == "1":
            return ()
        return tuple(self.index(tok) for tok in text.split("."))


XY = Alphabet(("X", "Y"))


class NCSeries:
    """Immutable truncated series: a sparse map monomial -> Fraction without zeros."""

    __slots__ = ("alphabet", "truncation", "_terms", "_hash")

    def __init__(self, alphabet: Alphabet, truncation: int, terms: Mapping[Monomial, object] = ()):
        if truncation < 0:
            raise StructureError("truncation must be nonnegative")
        self.alphabet = alphabet
        self.truncation = truncation
        clean: dict[Monomial, Fraction] = {}
        n = len(alphabet)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for word, c in items:
            word = tuple(word)
            if any(not 0 <= i < n for i in word):
                raise StructureError(f"monomial {word} uses an index outside the alphabet")
            if alphabet.degree(word) > truncation:
                continue
            c = scalar(c)
            if c:
                clean[word] = clean.get(word, Fraction(0)) + c
                if not clean[word]:
                    del clean[word]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, alphabet, truncation, terms: dict) -> NCSeries:
        obj = cls.__new__(cls)
        obj.alphabet = alphabet
        obj.truncation = truncation
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def zero(cls, alphabet: Alphabet, truncation: int) -> NCSeries:
        return cls._raw(alphabet, truncation, {})

    @classmethod
    def one(cls, alphabet: Alphabet, truncation: int) -> NCSeries:
        return cls.constant(alphabet, truncation, 1)

    @classmethod
    def constant(cls, alphabet: Alphabet, truncation: int, c) -> NCSeries:
        c = scalar(c)
        return cls._raw(alphabet, truncation, {(): c} if c else {})

    @classmethod
    def generator(cls, alphabet: Alphabet, truncation: int, name: str | int) -> NCSeries:
        i = name if isinstance(name, int) else alphabet.index(name)
        return cls(alphabet, truncation, {(i,): 1})

    @classmethod
    def from_text(cls, alphabet: Alphabet, truncation: int, terms: Mapping[str, object]) -> NCSeries:
        """Build from ``{"X.Y": "1/2", "1": 1}``-style dictionaries."""
        return cls(alphabet, truncation, {alphabet.parse_word(w): c for w, c in terms.items()})

    # basic access

    def items(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in degree-lex order."""
        return sorted(self._terms.items(), key=lambda kv: self.alphabet.sort_key(kv[0]))

    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, word: Monomial | str) -> Fraction:
        if isinstance(word, str):
            word = self.alphabet.parse_word(word)
        return self._terms.get(tuple(word), Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degree_part(self, d: int) -> NCSeries:
        deg = self.alphabet.degree
        return NCSeries._raw(self.alphabet, self.truncation, {w: c for w, c in self._terms.items() if deg(w) == d})

    def min_degree(self) -> int | None:
        """Lowest degree carrying a nonzero coefficient (``None`` for zero)."""
        if not self._terms:
            return None
        return min(self.alphabet.degree(w) for w in self._terms)

    def truncate(self, n: int) -> NCSeries:
        """Explicit re-truncation to ``n <= truncation``."""
        if n > self.truncation:
            raise StructureError(f"cannot raise truncation from {self.truncation} to {n}")
        deg = self.alphabet.degree
        return NCSeries._raw(self.alphabet, n, {w: c for w, c in self._terms.items() if deg(w) <= n})

    def _check(self, other: NCSeries) -> None:
        if self.alphabet != other.alphabet:
            raise StructureError(f"alphabet mismatch: {self.alphabet.names} vs {other.alphabet.names}")
        if self.truncation != other.truncation:
            raise StructureError(f"truncation mismatch: {self.truncation} vs {other.truncation}")

    def _lift(self, other) -> NCSeries:
        if isinstance(other, NCSeries):
            self._check(other)
            return other
        return NCSeries.constant(self.alphabet, self.truncation, other)

    # ring structure

    def __add__(self, other) -> NCSeries:
        other = self._lift(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return NCSeries._raw(self.alphabet, self.truncation, out)

    __radd__ = __add__

    def __neg__(self) -> NCSeries:
        return NCSeries._raw(self.alphabet, self.truncation, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other) -> NCSeries:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> NCSeries:
        return self._lift(other) - self

    def scale(self, c) -> NCSeries:
        c = scalar(c)
        if not c:
            return NCSeries.zero(self.alphabet, self.truncation)
        return NCSeries._raw(self.alphabet, self.truncation, {w: c * v for w, v in self._terms.items()})

    def __mul__(self, other) -> NCSeries:
        if not isinstance(other, NCSeries):
            return self.scale(other)
        self._check(other)
        n = self.truncation
        deg = self.alphabet.degree
        by_degree: dict[int, list[tuple[Monomial, Fraction]]] = {}
        for w, c in other._terms.items():
            by_degree.setdefault(deg(w), []).append((w, c))
        out: dict[Monomial, Fraction] = {}
        for wa, ca in self._terms.items():
            room = n - deg(wa)
            for d, terms in by_degree.items():
                if d > room:
                    continue
                for wb, cb in terms:
                    w = wa + wb
                    v = out.get(w, 0) + ca * cb
                    if v:
                        out[w] = v
                    else:
                        out.pop(w, None)
        return NCSeries._raw(self.alphabet, n, out)

    def __rmul__(self, other) -> NCSeries:
        return self.scale(other)

    def __truediv__(self, c) -> NCSeries:
        return self.scale(1 / scalar(c))

    def __pow__(self, k: int) -> NCSeries:
        if k < 0:
            return inverse(self) ** (-k)
        result = NCSeries.one(self.alphabet, self.truncation)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def bracket(self, other: NCSeries) -> NCSeries:
        return self * other - other * self

    # equality / hashing

    def __eq__(self, other) -> bool:
        if isinstance(other, NCSeries):
            return (
                self.alphabet == other.alphabet
                and self.truncation == other.truncation
                and self._terms == other._terms
            )
        if isinstance(other, (int, Fraction)):
            return self._terms == ({(): Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.alphabet, self.truncation, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        if not self._terms:
            body = "0"
        else:
            body = " + ".join(f"{c}*{self.alphabet.format_word(w)}" for w, c in self.items()[:12])
            if len(self._terms) > 12:
                body += f" + ... ({len(self._terms)} terms)"
        return f"NCSeries[N={self.truncation}]({body})"

    def format_lines(self) -> list[str]:
        """Report form: one ``coeff * g1.g2`` line per monomial, degree-lex."""
        return [f"{c} * {self.alphabet.format_word(w)}" for w, c in self.items()]


def series(alphabet: Alphabet, truncation: int, terms: Mapping[str, object]) -> NCSeries:
    return NCSeries.from_text(alphabet, truncation, terms)


def generators(alphabet: Alphabet, truncation: int) -> list[NCSeries]:
    return [NCSeries.generator(alphabet, truncation, i) for i in range(len(alphabet))]


# exponential, logarithm, inverse


def _geometric(a: NCSeries, coeffs) -> NCSeries:
    """Sum of coeffs(k) * a**k for k = 0..N; ``a`` has zero constant term."""
    out = NCSeries.zero(a.alphabet, a.truncation)
    power = NCSeries.one(a.alphabet, a.truncation)
    k = 0
    while not power.is_zero():
        c = coeffs(k)
        if c:
            out = out + power.scale(c)
        k += 1
        power = power * a
    return out


def exp(a: NCSeries) -> NCSeries:
    if a.constant_term:
        raise DomainError("exp requires a series with zero constant term")
    return _geometric(a, lambda k: Fraction(1, math.factorial(k)))


def log(a: NCSeries) -> NCSeries:
    if a.constant_term != 1:
        raise DomainError("log requires a series with constant term 1")
    return _geometric(a - 1, lambda k: Fraction((-1) ** (k + 1), k) if k else 0)


def inverse(a: NCSeries) -> NCSeries:
    """Multiplicative inverse by the Neumann series; exact at truncation."""
    c = a.constant_term
    if not c:
        raise DomainError("series with zero constant term is not invertible")
    b = a.scale(1 / c) - 1
    return _geometric(b, lambda k: Fraction((-1) ** k)).scale(1 / c)


def power(a: NCSeries, m) -> NCSeries:
    """``a**m = exp(m log a)`` for rational ``m``; ``a`` must have constant term 1."""
    return exp(log(a).scale(m))


# substitution


def substitute(
    f: NCSeries, assignment: Mapping[str, NCSeries], *, allow_constant_terms: bool = False
) -> NCSeries:
    """Extend ``generator -> series`` to an algebra map and apply it to ``f``.

    Images must share one alphabet and truncation, which become the result's.
    By default images must have zero constant term: a group-like series is
    evaluated at group-like arguments ``a, b`` as ``substitute(f, {X: log a, Y: log b})``.
    With ``allow_constant_terms`` the truncated monomials of ``f`` are expanded
    as written, which is only meaningful when ``f`` is a polynomial.
    """
    images: list[NCSeries | None] = []
    target: NCSeries | None = None
    for name in f.alphabet.names:
        img = assignment.get(name)
        if img is not None:
            if target is not None:
                target._check(img)
            target = img
            if img.constant_term and not allow_constant_terms:
                raise DomainError(f"image of {name} has a nonzero constant term")
        images.append(img)
    extra = set(assignment) - set(f.alphabet.names)
    if extra:
        raise StructureError(f"assignment names unknown generators {sorted(extra)}")
    if target is None:
        if f.is_zero() or set(f) == {()}:
            raise StructureError("cannot infer the target alphabet from an empty assignment")
        raise StructureError("unassigned generator in substitution")
    cache: dict[Monomial, NCSeries] = {(): NCSeries.one(target.alphabet, target.truncation)}

    def image(word: Monomial) -> NCSeries:
        hit = cache.get(word)
        if hit is None:
            img = images[word[-1]]
            if img is None:
                raise StructureError(f"unassigned generator {f.alphabet.names[word[-1]]!r}")
            hit = image(word[:-1]) * img
            cache[word] = hit
        return hit

    out = NCSeries.zero(target.alphabet, target.truncation)
    for word, c in f.items():
        out = out + image(word).scale(c)
    return out


def swap_xy(f: NCSeries) -> NCSeries:
    """``f(Y, X)`` for a series over a two-letter alphabet."""
    a, b = f.alphabet.names
    return substitute(f, {a: NCSeries.generator(f.alphabet, f.truncation, 1),
                          b: NCSeries.generator(f.alphabet, f.truncation, 0)})


# coproduct


class TensorSeries:
    """Element of the completed tensor square: map (left word, right word) -> Fraction.

    Truncation applies to the combined degree of both legs.
    """

    __slots__ = ("alphabet", "truncation", "terms")

    def __init__(self, alphabet: Alphabet, truncation: int, terms: dict):
        self.alphabet = alphabet
        self.truncation = truncation
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def tensor(cls, a: NCSeries, b: NCSeries) -> TensorSeries:
        a._check(b)
        deg = a.alphabet.degree
        n = a.truncation
        out = {}
        for wa, ca in a._terms.items():
            for wb, cb in b._terms.items():
                if deg(wa) + deg(wb) <= n:
                    out[(wa, wb)] = ca * cb
        return cls(a.alphabet, n, out)

    def __add__(self, other: TensorSeries) -> TensorSeries:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return TensorSeries(self.alphabet, self.truncation, out)

    def __sub__(self, other: TensorSeries) -> TensorSeries:
        return self + TensorSeries(other.alphabet, other.truncation, {k: -v for k, v in other.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorSeries) and self.terms == other.terms and self.truncation == other.truncation

    def is_zero(self) -> bool:
        return not self.terms

    def first_term(self):
        """Lowest (combined degree, words) nonzero term, used as a witness."""
        if not self.terms:
            return None
        deg = self.alphabet.degree
        key = min(self.terms, key=lambda k: (deg(k[0]) + deg(k[1]), k))
        return key, self.terms[key]

    def __repr__(self) -> str:
        fw = self.alphabet.format_word
        body = " + ".join(f"{c}*{fw(a)}(x){fw(b)}" for (a, b), c in sorted(self.terms.items())[:8])
        return f"TensorSeries({body or '0'})"


def _unshuffle(word: Monomial) -> Iterator[tuple[Monomial, Monomial]]:
    n = len(word)
    for mask in range(1 << n):
        left = tuple(word[i] for i in range(n) if mask >> i & 1)
        right = tuple(word[i] for i in range(n) if not mask >> i & 1)
        yield left, right


def coproduct(f: NCSeries) -> TensorSeries:
    """The algebra map with every generator primitive: a word goes to the sum of its unshuffles."""
    out: dict = {}
    for word, c in f._terms.items():
        for pair in _unshuffle(word):
            out[pair] = out.get(pair, 0) + c
    return TensorSeries(f.alphabet, f.truncation, out)


def grouplike_defect(f: NCSeries) -> TensorSeries:
    return coproduct(f) - TensorSeries.tensor(f, f)


def is_grouplike(f: NCSeries) -> bool:
    return f.constant_term == 1 and grouplike_defect(f).is_zero()


def is_primitive(a: NCSeries) -> bool:
    one = NCSeries.one(a.alphabet, a.truncation)
    expected = TensorSeries.tensor(a, one) + TensorSeries.tensor(one, a)
    return coproduct(a) == expected


# free group and Magnus embedding


@dataclass(frozen=True)
class FreeWord:
    """Freely reduced word; letters are ``+k`` for generator ``k-1`` and ``-k`` for its inverse."""

    letters: tuple[int, ...] = ()
    names: tuple[str, ...] = field(default=("x", "y"), compare=False)

    def __post_init__(self):
        if any(l == 0 or abs(l) > len(self.names) for l in self.letters):
            raise StructureError(f"letters {self.letters} outside the generating set")
        object.__setattr__(self, "letters", free_reduce(self.letters))

    @classmethod
    def parse(cls, text: str, names: tuple[str, ...] = ("x", "y")) -> FreeWord:
        """Whitespace-separated tokens ``x``, ``xi`` (inverse), ``y``, ``yi``."""
        letters = []
        for tok in text.split():
            inv = tok.endswith("i") and tok[:-1] in names
            base = tok[:-1] if inv else tok
            if base not in names:
                raise StructureError(f"unknown free-group letter {tok!r}")
            k = names.index(base) + 1
            letters.append(-k if inv else k)
        return cls(tuple(letters), names)

    def __str__(self) -> str:
        return " ".join(self.names[abs(l) - 1] + ("i" if l < 0 else "") for l in self.letters)

    def __mul__(self, other: FreeWord) -> FreeWord:
        return FreeWord(self.letters + other.letters, self.names)

    def inverse(self) -> FreeWord:
        return FreeWord(tuple(-l for l in reversed(self.letters)), self.names)

    def __len__(self) -> int:
        return len(self.letters)


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for l in letters:
        if stack and stack[-1] == -l:
            stack.pop()
        else:
            stack.append(l)
    return tuple(stack)


def magnus(w: FreeWord, truncation: int, alphabet: Alphabet = XY) -> NCSeries:
    """Image of ``w`` under ``x_k -> exp(X_k)``; group-like with constant term 1."""
    if len(alphabet) < len(w.names):
        raise StructureError("alphabet too small for the free group")
    gens = [exp(NCSeries.generator(alphabet, truncation, i)) for i in range(len(w.names))]
    invs = [exp(-NCSeries.generator(alphabet, truncation, i)) for i in range(len(w.names))]
    out = NCSeries.one(alphabet, truncation)
    for l in w.letters:
        out = out * (gens[l - 1] if l > 0 else invs[-l - 1])
    return out
