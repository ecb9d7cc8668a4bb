"""Words in the three-strand braid group and the reduced Burau representation.

Equality of braids is decided by comparing reduced Burau matrices, which is
faithful on B3.  Laurent polynomials are exponent -> integer maps without
zero entries.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import StructureError
from .series import FreeWord, free_reduce

TOKENS = {"s1": 1, "s1i": -1, "s2": 2, "s2i": -2}
_NAMES = {v: k for k, v in TOKENS.items()}


@dataclass(frozen=True)
class BraidWord:
    """Freely reduced word; letters ``1, -1, 2, -2`` stand for s1, s1^-1, s2, s2^-1."""

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if any(l not in _NAMES for l in self.letters):
            raise StructureError(f"invalid braid letters {self.letters}")
        object.__setattr__(self, "letters", free_reduce(self.letters))

    @classmethod
    def parse(cls, text: str) -> BraidWord:
        try:
            return cls(tuple(TOKENS[tok] for tok in text.split()))
        except KeyError as exc:
            raise StructureError(f"unknown braid token {exc.args[0]!r}") from None

    def __str__(self) -> str:
        return " ".join(_NAMES[l] for l in self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return BraidWord(self.letters + other.letters)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.letters * k)

    def inverse(self) -> BraidWord:
        return BraidWord(tuple(-l for l in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)


def random_braid(rng: random.Random, length: int) -> BraidWord:
    return BraidWord(tuple(rng.choice((1, -1, 2, -2)) for _ in range(length)))


# Laurent polynomials in t


def _lp(*pairs) -> dict[int, int]:
    return {e: c for e, c in pairs if c}


def lp_add(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def lp_mul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[ea + eb] = out.get(ea + eb, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def lp_format(a: dict[int, int]) -> str:
    if not a:
        return "0"
    parts = []
    for e in sorted(a):
        c = a[e]
        mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
        if mono:
            coef = "" if c == 1 else "-" if c == -1 else f"{c}*"
            parts.append(coef + mono)
        else:
            parts.append(str(c))
    return " + ".join(parts).replace("+ -", "- ")


class LaurentMatrix:
    """2x2 matrix of integer Laurent polynomials; immutable."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(tuple(dict(e) for e in row) for row in entries)

    @classmethod
    def identity(cls) -> LaurentMatrix:
        return cls(((_lp((0, 1)), {}), ({}, _lp((0, 1)))))

    def __mul__(self, other: LaurentMatrix) -> LaurentMatrix:
        a, b = self.entries, other.entries
        return LaurentMatrix(
            [[lp_add(lp_mul(a[i][0], b[0][j]), lp_mul(a[i][1], b[1][j])) for j in range(2)] for i in range(2)]
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(tuple(frozenset(e.items()) for row in self.entries for e in row))

    def determinant(self) -> dict[int, int]:
        a = self.entries
        return lp_add(lp_mul(a[0][0], a[1][1]), {e: -c for e, c in lp_mul(a[0][1], a[1][0]).items()})

    def __repr__(self) -> str:
        rows = ["[" + ", ".join(lp_format(e) for e in row) + "]" for row in self.entries]
        return "LaurentMatrix(" + ", ".join(rows) + ")"


# reduced Burau images: s1 -> [[-t, 1], [0, 1]], s2 -> [[1, 0], [t, -t]]
_BURAU = {
    1: LaurentMatrix(((_lp((1, -1)), _lp((0, 1))), ({}, _lp((0, 1))))),
    -1: LaurentMatrix(((_lp((-1, -1)), _lp((-1, 1))), ({}, _lp((0, 1))))),
    2: LaurentMatrix(((_lp((0, 1)), {}), (_lp((1, 1)), _lp((1, -1))))),
    -2: LaurentMatrix(((_lp((0, 1)), {}), (_lp((0, 1)), _lp((-1, -1))))),
}


def burau(w: BraidWord) -> LaurentMatrix:
    out = LaurentMatrix.identity()
    for l in w.letters:
        out = out * _BURAU[l]
    return out


def equal_braids(u: BraidWord, v: BraidWord) -> bool:
    """Word problem in B3; relies on faithfulness of reduced Burau for three strands."""
    return burau(u) == burau(v)


def gt_automorphism_word(f: FreeWord, n: int) -> BraidWord:
    """The braid ``f(s1^2, s2^2) (s1 s2)^(3n)``, freely reduced."""
    letters: list[int] = []
    for l in f.letters:
        gen = 1 if abs(l) == 1 else 2
        if abs(l) > 2:
            raise StructureError("f must be a word in two generators")
        letters += [gen if l > 0 else -gen] * 2
    full_twist = BraidWord((1, 2)) ** (3 * n)
    return BraidWord(tuple(letters)) * full_twist
