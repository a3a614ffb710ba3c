"""Exact sparse multivariate polynomials with integer coefficients.

Variables come from a handful of named, indexed alphabets::

    x_0, x_1, ...    X   (index 0 only shows up in type B expansions)
    y_0, y_1, ...    Y   (second copy of X for bipartite identities)
    u_1, u_2, ...    U   (negative letters of the signed theory)
    v_0, v_1, ...    V   (nonnegative letters of the signed theory)
    u'_1, ...        UY  (Y-side copies of U and V, signed bipartite only)
    v'_0, ...        VY

A monomial is a sorted tuple of ``(Variable, exponent)`` pairs with positive
exponents.  A ``Series`` maps monomials to nonzero ints and also carries the
truncation bound used for each alphabet, so that series built over different
variable ranges are never silently compared.

Coefficients are checked against the signed 64-bit range after every
operation; leaving it raises ``OverflowError``.
"""

from __future__ import annotations

import enum
import re
from collections import Counter
from typing import Iterable, Mapping, NamedTuple

_INT64_MAX = 2**63 - 1


class Alphabet(enum.IntEnum):
    X = 0
    Y = 1
    U = 2
    V = 3
    UY = 4
    VY = 5

    @property
    def letter(self) -> str:
        return _LETTERS[self]

    @property
    def min_index(self) -> int:
        return 1 if self in (Alphabet.U, Alphabet.UY) else 0


_LETTERS = {
    Alphabet.X: "x",
    Alphabet.Y: "y",
    Alphabet.U: "u",
    Alphabet.V: "v",
    Alphabet.UY: "u'",
    Alphabet.VY: "v'",
}
_BY_LETTER = {v: k for k, v in _LETTERS.items()}
_VAR_RE = re.compile(r"^(u'|v'|x|y|u|v)(\d+)$")


class Variable(NamedTuple):
    alphabet: Alphabet
    index: int

    def __str__(self) -> str:
        return f"{self.alphabet.letter}{self.index}"

    @classmethod
    def parse(cls, text: str) -> "Variable":
        m = _VAR_RE.match(text.strip())
        if not m:
            raise ValueError(f"cannot parse variable {text!r}")
        return var(_BY_LETTER[m.group(1)], int(m.group(2)))


def var(alphabet: Alphabet | str, index: int) -> Variable:
    if isinstance(alphabet, str):
        alphabet = _BY_LETTER[alphabet]
    if index < alphabet.min_index:
        raise ValueError(f"{alphabet.letter} index must be >= {alphabet.min_index}, got {index}")
    return Variable(alphabet, index)


Monomial = tuple[tuple[Variable, int], ...]

ONE: Monomial = ()


def monomial(factors: Iterable[Variable] | Mapping[Variable, int]) -> Monomial:
    """Canonical monomial from a multiset of variables or an exponent map."""
    if isinstance(factors, Mapping):
        exps = {v: int(e) for v, e in factors.items()}
    else:
        exps = Counter(factors)
    if any(e < 0 for e in exps.values()):
        raise ValueError("negative exponent")
    return tuple(sorted((v, e) for v, e in exps.items() if e))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


class TruncationMismatch(ValueError):
    """Raised when series built over different variable ranges are combined."""


def _merge_bounds(a: Mapping[Alphabet, int], b: Mapping[Alphabet, int]) -> dict[Alphabet, int]:
    out = dict(a)
    for alph, n in b.items():
        if out.setdefault(alph, n) != n:
            raise TruncationMismatch(
                f"alphabet {alph.letter} truncated at {out[alph]} on one side and {n} on the other"
            )
    return out


def _check(coeff: int) -> int:
    if not -_INT64_MAX - 1 <= coeff <= _INT64_MAX:
        raise OverflowError(f"coefficient {coeff} does not fit in 64 bits")
    return coeff


class Series:
    """Immutable exact polynomial with truncation metadata."""

    __slots__ = ("_terms", "_bounds", "_hash")

    def __init__(
        self,
        terms: Mapping[Monomial, int] | None = None,
        bounds: Mapping[Alphabet | str, int] | None = None,
    ):
        clean: dict[Monomial, int] = {}
        for m, c in (terms or {}).items():
            c = _check(int(c))
            if c == 0:
                continue
            if any(e <= 0 for _, e in m):
                raise ValueError(f"monomial {m} stores a nonpositive exponent")
            clean[m] = c
        self._terms = clean
        self._bounds = {
            (_BY_LETTER[k] if isinstance(k, str) else Alphabet(k)): int(n) for k, n in (bounds or {}).items()
        }
        self._hash = None

    # construction helpers

    @classmethod
    def zero(cls) -> "Series":
        return cls()

    @classmethod
    def one(cls) -> "Series":
        return cls({ONE: 1})

    @classmethod
    def from_monomials(cls, monomials: Iterable[Monomial], bounds=None) -> "Series":
        """Sum of the given monomials, repeats adding up."""
        return cls(Counter(monomials), bounds)

    @classmethod
    def variable(cls, alphabet: Alphabet | str, index: int, bound: int | None = None) -> "Series":
        v = var(alphabet, index)
        bounds = {v.alphabet: bound} if bound is not None else None
        return cls({((v, 1),): 1}, bounds)

    # accessors

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    @property
    def bounds(self) -> dict[Alphabet, int]:
        return dict(self._bounds)

    def coefficient(self, m: Monomial | Mapping[Variable, int] | Iterable[Variable]) -> int:
        is_canonical = isinstance(m, tuple) and all(isinstance(t[0], Variable) for t in m)
        if not is_canonical:
            m = monomial(m)
        return self._terms.get(m, 0)

    def alphabets(self) -> set[Alphabet]:
        return {v.alphabet for m in self._terms for v, _ in m} | set(self._bounds)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    # arithmetic

    def _compatible(self, other: "Series") -> dict[Alphabet, int]:
        if not isinstance(other, Series):
            raise TypeError(f"expected Series, got {type(other).__name__}")
        return _merge_bounds(self._bounds, other._bounds)

    def __add__(self, other: "Series") -> "Series":
        bounds = self._compatible(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Series(out, bounds)

    def __neg__(self) -> "Series":
        return Series({m: -c for m, c in self._terms.items()}, self._bounds)

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def scale(self, k: int) -> "Series":
        return Series({m: c * k for m, c in self._terms.items()}, self._bounds)

    def __mul__(self, other: "Series | int") -> "Series":
        if isinstance(other, int):
            return self.scale(other)
        bounds = self._compatible(other)
        out: dict[Monomial, int] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return Series(out, bounds)

    __rmul__ = __mul__

    def equals(self, other: "Series") -> bool:
        self._compatible(other)
        return self._terms == other._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.equals(other)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # substitutions

    def rename(self, mapping: Mapping[Alphabet, Alphabet]) -> "Series":
        """Rename alphabets, merging terms that collide."""
        out: dict[Monomial, int] = {}
        for m, c in self._terms.items():
            exps: dict[Variable, int] = {}
            for v, e in m:
                nv = var(mapping.get(v.alphabet, v.alphabet), v.index)
                exps[nv] = exps.get(nv, 0) + e
            new = monomial(exps)
            out[new] = out.get(new, 0) + c
        bounds: dict[Alphabet, int] = {}
        for alph, n in self._bounds.items():
            bounds = _merge_bounds(bounds, {mapping.get(alph, alph): n})
        return Series(out, bounds)

    def substitute_u_equals_v(self) -> "Series":
        """Replace every ``u_i`` by ``v_i``."""
        stray = self.alphabets() - {Alphabet.U, Alphabet.V}
        if stray:
            names = ", ".join(sorted(a.letter for a in stray))
            raise ValueError(f"substitute_u_equals_v takes U/V series only; found {names}")
        return self.rename({Alphabet.U: Alphabet.V})

    # output

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self._terms.items())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            body = "*".join(f"{v}^{e}" if e > 1 else str(v) for v, e in m)
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if i == 0:
                pieces.append(f"-{text}" if c < 0 else text)
            else:
                pieces.append(f" - {text}" if c < 0 else f" + {text}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Series({str(self)!r})"

    def to_json(self) -> list[dict]:
        return [{"monomial": {str(v): e for v, e in m}, "coeff": c} for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, records: list[dict], bounds=None) -> "Series":
        out: dict[Monomial, int] = {}
        for rec in records:
            m = monomial({Variable.parse(k): e for k, e in rec["monomial"].items()})
            out[m] = out.get(m, 0) + int(rec["coeff"])
        return cls(out, bounds)


def add(a: Series, b: Series) -> Series:
    return a + b


def multiply(a: Series, b: Series) -> Series:
    return a * b


def equals(a: Series, b: Series) -> bool:
    return a.equals(b)


def substitute_u_equals_v(a: Series) -> Series:
    return a.substitute_u_equals_v()


def series_sum(items: Iterable[Series]) -> Series:
    total = Series.zero()
    for s in items:
        total = total + s
    return total
