"""Document format: UTF-8 JSON with ``"format": 1`` and a ``"kind"`` tag.

Rationals are strings ``"p/q"`` in lowest terms (``"p"`` when ``q = 1``);
tensors are nested arrays indexed ``[i][j][k]``.  Printing is canonical:
fixed field order, two-space indentation, flat arrays on one line, series
terms in degree-lex order, trailing newline.  ``dumps(loads(text)) == text``
for every canonical document.  The field layout per kind is documented in
``docs/format.md``.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from .braid import BraidWord
from .errors import ParseError, QGTError
from .gtrel import GTElement
from .hgt import HGTPair
from .hopf import HopfData
from .ihara import MetrizedLieAlgebra
from .series import Alphabet, NCSeries
from .trialgebra import QuadraalgebraData, TrialgebraData

FORMAT_VERSION = 1
KINDS = ("hopf", "trialgebra", "quadraalgebra", "lie-metrized", "series", "braid", "gt-element", "hgt-pair")

# required fields, then optional fields, in print order
_FIELDS = {
    "hopf": (["labels", "mult", "unit", "comult", "counit"], ["antipode", "r_matrix", "coquasi_form", "pairing"]),
    "trialgebra": (
        ["labels", "star_mult", "star_mask", "dot_mult", "comult", "counit"],
        ["star_unit", "dot_unit", "r_dot", "r_star", "pairing"],
    ),
    "quadraalgebra": (
        ["labels", "mult1", "mult2", "unit1", "unit2", "comult1", "comult2", "counit1", "counit2"],
        [],
    ),
    "lie-metrized": (["labels", "structure", "metric"], []),
    "series": (["alphabet", "truncation", "terms"], ["degrees"]),
    "braid": (["word"], []),
    "gt-element": (["lambda", "f"], []),
    "hgt-pair": (["f", "g"], []),
}
_EXTRAS = {"hopf": ("r_matrix", "coquasi_form", "pairing"), "trialgebra": ("r_dot", "r_star", "pairing")}

_SCALAR = re.compile(r"^-?(0|[1-9][0-9]*)(/([1-9][0-9]*))?$")


@dataclass
class AlgebraDocument:
    kind: str
    payload: Any
    extras: dict[str, list[list[Fraction]]] = field(default_factory=dict)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraDocument)
            and self.kind == other.kind
            and dumps(self) == dumps(other)
        )


# scalars


def parse_scalar(text: Any, path: str = "$") -> Fraction:
    if not isinstance(text, str):
        raise ParseError(f"scalar must be a string 'p/q', got {type(text).__name__}", path=path)
    m = _SCALAR.match(text)
    if not m or text == "-0":
        raise ParseError(f"malformed scalar {text!r}", path=path)
    if m.group(2):
        p, q = int(text.split("/")[0]), int(m.group(3))
        if q == 1:
            raise ParseError(f"scalar {text!r} not in lowest terms (denominator 1 must be omitted)", path=path)
        if math.gcd(p, q) != 1:
            raise ParseError(f"scalar {text!r} not in lowest terms", path=path)
        return Fraction(p, q)
    return Fraction(int(text))


def format_scalar(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _tensor(value: Any, shape: tuple[int, ...], path: str, leaf=parse_scalar):
    if not shape:
        return leaf(value, path)
    if not isinstance(value, list):
        raise ParseError(f"expected an array of length {shape[0]}", path=path)
    if len(value) != shape[0]:
        raise ParseError(f"wrong arity: expected {shape[0]} entries, got {len(value)}", path=path)
    return [_tensor(v, shape[1:], f"{path}[{i}]", leaf) for i, v in enumerate(value)]


def _format_tensor(t):
    if isinstance(t, (list, tuple)):
        return [_format_tensor(x) for x in t]
    return format_scalar(t)


def _bit(value: Any, path: str) -> bool:
    if value not in (0, 1) or isinstance(value, bool):
        raise ParseError("mask entries must be 0 or 1", path=path)
    return bool(value)


def _labels(value: Any, path: str) -> list[str]:
    if not isinstance(value, list) or not value or not all(isinstance(v, str) and v for v in value):
        raise ParseError("labels must be a nonempty array of nonempty strings", path=path)
    if len(set(value)) != len(value):
        raise ParseError("labels must be distinct", path=path)
    return value


def _int(value: Any, path: str, minimum: int = 0) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise ParseError(f"expected an integer >= {minimum}", path=path)
    return value


# per-kind decoding


def _series_from(obj: dict, path: str) -> NCSeries:
    _check_fields(obj, "series", path, top=False)
    names = obj["alphabet"]
    if not isinstance(names, list) or not names or not all(isinstance(n, str) and re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", n) for n in names):
        raise ParseError("alphabet must be a nonempty array of identifiers", path=f"{path}.alphabet")
    if len(set(names)) != len(names):
        raise ParseError("alphabet names must be distinct", path=f"{path}.alphabet")
    degrees = obj.get("degrees")
    if degrees is not None:
        degrees = _tensor(degrees, (len(names),), f"{path}.degrees", leaf=lambda v, p: _int(v, p, 1))
    alphabet = Alphabet(tuple(names), tuple(degrees or ()))
    n = _int(obj["truncation"], f"{path}.truncation")
    terms = obj["terms"]
    if not isinstance(terms, list):
        raise ParseError("terms must be an array of [coefficient, word] pairs", path=f"{path}.terms")
    coeffs = {}
    for i, term in enumerate(terms):
        tp = f"{path}.terms[{i}]"
        if not isinstance(term, list) or len(term) != 2 or not isinstance(term[1], str):
            raise ParseError("term must be [coefficient, word]", path=tp)
        c = parse_scalar(term[0], tp + "[0]")
        if not c:
            raise ParseError("zero coefficients are not stored", path=tp + "[0]")
        try:
            word = alphabet.parse_word(term[1])
        except QGTError as exc:
            raise ParseError(str(exc), path=tp + "[1]") from None
        if word in coeffs:
            raise ParseError(f"duplicate monomial {term[1]!r}", path=tp + "[1]")
        if alphabet.degree(word) > n:
            raise ParseError(f"monomial {term[1]!r} exceeds truncation {n}", path=tp + "[1]")
        coeffs[word] = c
    return NCSeries(alphabet, n, coeffs)


def _series_to(s: NCSeries) -> dict:
    out: dict[str, Any] = {"alphabet": list(s.alphabet.names)}
    if any(d != 1 for d in s.alphabet.degrees):
        out["degrees"] = list(s.alphabet.degrees)
    out["truncation"] = s.truncation
    out["terms"] = [[format_scalar(c), s.alphabet.format_word(w)] for w, c in s.items()]
    return out


def _check_fields(obj: Any, kind: str, path: str, top: bool = True) -> None:
    if not isinstance(obj, dict):
        raise ParseError("expected an object", path=path)
    required, optional = _FIELDS[kind]
    allowed = set(required) | set(optional) | ({"format", "kind"} if top else set())
    for key in obj:
        if key not in allowed:
            raise ParseError(f"unknown field {key!r}", path=f"{path}.{key}")
    for key in required:
        if key not in obj:
            raise ParseError(f"missing field {key!r}", path=path)


def _decode(obj: dict) -> AlgebraDocument:
    kind = obj["kind"]
    _check_fields(obj, kind, "$")
    if kind in ("hopf", "trialgebra", "quadraalgebra", "lie-metrized"):
        labels = _labels(obj["labels"], "$.labels")
        n = len(labels)
        t3 = lambda key: _tensor(obj[key], (n, n, n), f"$.{key}")  # noqa: E731
        vec = lambda key: _tensor(obj[key], (n,), f"$.{key}")  # noqa: E731
        mat = lambda key: _tensor(obj[key], (n, n), f"$.{key}")  # noqa: E731
        opt = lambda key, f: None if obj.get(key) is None else f(key)  # noqa: E731
        extras = {k: mat(k) for k in _EXTRAS.get(kind, ()) if obj.get(k) is not None}
        if kind == "hopf":
            payload = HopfData(tuple(labels), t3("mult"), vec("unit"), t3("comult"), vec("counit"), opt("antipode", mat))
        elif kind == "trialgebra":
            mask = _tensor(obj["star_mask"], (n, n), "$.star_mask", leaf=_bit)
            payload = TrialgebraData(
                tuple(labels), t3("star_mult"), mask, t3("dot_mult"), t3("comult"), vec("counit"),
                opt("star_unit", vec), opt("dot_unit", vec),
            )
        elif kind == "quadraalgebra":
            payload = QuadraalgebraData(
                tuple(labels), t3("mult1"), t3("mult2"), vec("unit1"), vec("unit2"),
                t3("comult1"), t3("comult2"), vec("counit1"), vec("counit2"),
            )
        else:
            try:
                payload = MetrizedLieAlgebra(tuple(labels), t3("structure"), mat("metric"))
            except QGTError as exc:
                raise ParseError(f"invalid metrized Lie algebra: {exc}", path="$") from None
        return AlgebraDocument(kind, payload, extras)
    if kind == "series":
        return AlgebraDocument(kind, _series_from({k: v for k, v in obj.items() if k not in ("format", "kind")}, "$"))
    if kind == "braid":
        word = obj["word"]
        if not isinstance(word, str):
            raise ParseError("word must be a string of s1 s1i s2 s2i tokens", path="$.word")
        try:
            bw = BraidWord.parse(word)
        except QGTError as exc:
            raise ParseError(str(exc), path="$.word") from None
        if str(bw) != " ".join(word.split()) or word != " ".join(word.split()):
            raise ParseError("braid word must be freely reduced and single-spaced", path="$.word")
        return AlgebraDocument(kind, bw)
    if kind == "gt-element":
        lam = parse_scalar(obj["lambda"], "$.lambda")
        f = _series_from(obj["f"], "$.f")
        try:
            return AlgebraDocument(kind, GTElement(lam, f))
        except QGTError as exc:
            raise ParseError(str(exc), path="$.f") from None
    f, g = _series_from(obj["f"], "$.f"), _series_from(obj["g"], "$.g")
    try:
        return AlgebraDocument(kind, HGTPair(f, g))
    except QGTError as exc:
        raise ParseError(str(exc), path="$") from None


def _encode(doc: AlgebraDocument) -> dict:
    out: dict[str, Any] = {"format": FORMAT_VERSION, "kind": doc.kind}
    p = doc.payload
    if doc.kind == "hopf":
        out.update(labels=list(p.labels), mult=_format_tensor(p.mult), unit=_format_tensor(p.unit),
                   comult=_format_tensor(p.comult), counit=_format_tensor(p.counit))
        if p.antipode is not None:
            out["antipode"] = _format_tensor(p.antipode)
    elif doc.kind == "trialgebra":
        out.update(labels=list(p.labels), star_mult=_format_tensor(p.star_mult),
                   star_mask=[[int(b) for b in row] for row in p.star_mask],
                   dot_mult=_format_tensor(p.dot_mult), comult=_format_tensor(p.comult),
                   counit=_format_tensor(p.counit))
        for key in ("star_unit", "dot_unit"):
            if getattr(p, key) is not None:
                out[key] = _format_tensor(getattr(p, key))
    elif doc.kind == "quadraalgebra":
        out["labels"] = list(p.labels)
        for key in _FIELDS["quadraalgebra"][0][1:]:
            out[key] = _format_tensor(getattr(p, key))
    elif doc.kind == "lie-metrized":
        out.update(labels=list(p.labels), structure=_format_tensor(p.structure), metric=_format_tensor(p.metric))
    elif doc.kind == "series":
        out.update(_series_to(p))
    elif doc.kind == "braid":
        out["word"] = str(p)
    elif doc.kind == "gt-element":
        out.update({"lambda": format_scalar(p.lam), "f": _series_to(p.f)})
    elif doc.kind == "hgt-pair":
        out.update(f=_series_to(p.f), g=_series_to(p.g))
    else:
        raise ValueError(f"unknown kind {doc.kind!r}")
    for key in _EXTRAS.get(doc.kind, ()):
        if key in doc.extras:
            out[key] = _format_tensor(doc.extras[key])
    return out


# text layer


def _emit(value: Any, depth: int) -> str:
    pad = "  " * (depth + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        body = ",\n".join(f"{pad}{json.dumps(k, ensure_ascii=False)}: {_emit(v, depth + 1)}" for k, v in value.items())
        return "{\n" + body + "\n" + "  " * depth + "}"
    if isinstance(value, list):
        if not any(isinstance(v, (list, dict)) for v in value):
            return "[" + ", ".join(json.dumps(v, ensure_ascii=False) for v in value) + "]"
        body = ",\n".join(pad + _emit(v, depth + 1) for v in value)
        return "[\n" + body + "\n" + "  " * depth + "]"
    return json.dumps(value, ensure_ascii=False)


def _no_duplicates(pairs):
    keys = [k for k, _ in pairs]
    dup = next((k for k in keys if keys.count(k) > 1), None)
    if dup is not None:
        raise ParseError(f"duplicate field {dup!r}")
    return dict(pairs)


def loads(text: str) -> AlgebraDocument:
    try:
        obj = json.loads(text, object_pairs_hook=_no_duplicates, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise ParseError(f"syntax error: {exc.msg}", line=exc.lineno, column=exc.colno) from None
    if not isinstance(obj, dict):
        raise ParseError("document must be a JSON object", path="$")
    if obj.get("format") != FORMAT_VERSION:
        raise ParseError(f"unsupported or missing format version (expected {FORMAT_VERSION})", path="$.format")
    if obj.get("kind") not in KINDS:
        raise ParseError(f"unknown kind {obj.get('kind')!r}", path="$.kind")
    return _decode(obj)


def _reject_float(text: str):
    raise ParseError(f"floating point literal {text} is not allowed; use 'p/q' strings")


def dumps(doc: AlgebraDocument) -> str:
    return _emit(_encode(doc), 0) + "\n"


def load(path: str | Path) -> AlgebraDocument:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"input is not valid UTF-8 (byte {exc.start})") from None
    return loads(text)


def dump(doc: AlgebraDocument, path: str | Path) -> None:
    Path(path).write_text(dumps(doc), encoding="utf-8")


# ``parse``/``print`` spellings
parse = loads
print_document = dumps
