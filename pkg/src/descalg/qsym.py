"""Quasisymmetric functions of degree n in three flavors.

Flavor A is ``Qsym_n`` (indexed by compositions), flavor B is ``BQsym_n``
(pseudo-compositions) and flavor S is ``SQsym_n`` (signed compositions).
Each has a monomial basis ``M`` and a fundamental basis
``F_alpha = sum_{alpha <= beta} M_beta`` over the flavor's refinement order.

``expand_monomial`` and ``expand_fundamental`` turn basis elements into
exact ``Series`` in finitely many variables (indices up to ``N``).  The
signed monomial functions allow a repeated index exactly where a negative
part is followed by a positive one: ``M_(-1,1) = sum_{1 <= i <= j} u_i v_j``.
Without that, ``F_sC(pi)`` would miss the ``u_i v_i`` terms of the signed
P-partition generating function of e.g. ``pi = (-3, 2, -1)``.
"""

from __future__ import annotations

import enum
import itertools
import json
from functools import lru_cache
from typing import Iterator, Mapping

from .combinatorics import (
    INDEX_TYPES,
    Flavor,
    IndexObject,
    PseudoComposition,
    SignedComposition,
    descents_to_pseudo,
    enumerate_indices,
    finer_indices,
    parse_index,
    signed_comp_data,
)
from .descent_algebra import compute_structure_constants
from .groups import GroupElement, Permutation, SignedPermutation, descent_index
from .series import Alphabet, Series, Variable


class Basis(str, enum.Enum):
    MONOMIAL = "monomial"
    FUNDAMENTAL = "fundamental"

    @classmethod
    def coerce(cls, value: "Basis | str") -> "Basis":
        if isinstance(value, cls):
            return value
        text = str(value).lower()
        for b in cls:
            if text in (b.value, b.value[0]):
                return b
        raise ValueError(f"unknown basis {value!r}; expected monomial or fundamental")


def flavor_of(alpha: IndexObject) -> Flavor:
    for flavor, cls in INDEX_TYPES.items():
        if isinstance(alpha, cls):
            return flavor
    raise TypeError(f"{alpha!r} is not an index object")


def _check_flavor(alpha: IndexObject, flavor: Flavor | str | None) -> Flavor:
    actual = flavor_of(alpha)
    if flavor is not None and Flavor.coerce(flavor) is not actual:
        raise TypeError(f"{alpha!r} does not index flavor {Flavor.coerce(flavor).value}")
    return actual


class QSymVector:
    """An integer combination of basis elements of one flavor and degree."""

    __slots__ = ("flavor", "degree", "basis", "_coeffs")

    def __init__(self, flavor: Flavor | str, degree: int, basis: Basis | str, coeffs: Mapping | None = None):
        self.flavor = Flavor.coerce(flavor)
        self.degree = int(degree)
        self.basis = Basis.coerce(basis)
        cls = INDEX_TYPES[self.flavor]
        clean = {}
        for alpha, c in (coeffs or {}).items():
            if not isinstance(alpha, cls):
                raise TypeError(f"{alpha!r} does not index flavor {self.flavor.value}")
            if alpha.n != self.degree:
                raise ValueError(f"{alpha} has degree {alpha.n}, expected {self.degree}")
            if c:
                clean[alpha] = int(c)
        self._coeffs = clean

    @classmethod
    def basis_element(cls, alpha: IndexObject, basis: Basis | str) -> "QSymVector":
        return cls(flavor_of(alpha), alpha.n, basis, {alpha: 1})

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def coefficient(self, alpha: IndexObject) -> int:
        return self._coeffs.get(alpha, 0)

    def items(self) -> list[tuple[IndexObject, int]]:
        return sorted(self._coeffs.items())

    def _same_space(self, other: "QSymVector") -> None:
        if (self.flavor, self.degree, self.basis) != (other.flavor, other.degree, other.basis):
            raise ValueError("vectors live in different spaces or bases")

    def __add__(self, other: "QSymVector") -> "QSymVector":
        self._same_space(other)
        out = dict(self._coeffs)
        for a, c in other._coeffs.items():
            out[a] = out.get(a, 0) + c
        return QSymVector(self.flavor, self.degree, self.basis, out)

    def scale(self, k: int) -> "QSymVector":
        return QSymVector(self.flavor, self.degree, self.basis, {a: k * c for a, c in self._coeffs.items()})

    def __sub__(self, other: "QSymVector") -> "QSymVector":
        return self + other.scale(-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSymVector):
            return NotImplemented
        return (self.flavor, self.degree, self.basis, self._coeffs) == (
            other.flavor,
            other.degree,
            other.basis,
            other._coeffs,
        )

    def __hash__(self) -> int:
        return hash((self.flavor, self.degree, self.basis, frozenset(self._coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        out = []
        for i, (a, c) in enumerate(self.items()):
            term = f"{abs(c)}*({a})"
            if i == 0:
                out.append(f"-{term}" if c < 0 else term)
            else:
                out.append(f" - {term}" if c < 0 else f" + {term}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"QSymVector({self.flavor.value}, n={self.degree}, {self.basis.value}: {self})"

    def expand(self, N: int) -> Series:
        expand = expand_monomial if self.basis is Basis.MONOMIAL else expand_fundamental
        total = Series(bounds=_bounds(self.flavor, N))
        for a, c in self.items():
            total = total + expand(a, N).scale(c)
        return total

    def to_json(self) -> dict:
        return {
            "flavor": self.flavor.value,
            "degree": self.degree,
            "basis": self.basis.value,
            "terms": [{"index": str(a), "coeff": c} for a, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "QSymVector":
        if isinstance(data, str):
            data = json.loads(data)
        flavor = Flavor.coerce(data["flavor"])
        coeffs: dict = {}
        for rec in data["terms"]:
            a = parse_index(rec["index"], flavor)
            coeffs[a] = coeffs.get(a, 0) + int(rec["coeff"])
        return cls(flavor, data["degree"], data["basis"], coeffs)


def _bounds(flavor: Flavor, N: int) -> dict:
    if flavor is Flavor.S:
        return {Alphabet.U: N, Alphabet.V: N}
    return {Alphabet.X: N}


def _signed_index_sequences(parts: tuple[int, ...], N: int) -> Iterator[tuple[int, ...]]:
    k = len(parts)
    seq = [0] * k

    def rec(r: int, low: int) -> Iterator[tuple[int, ...]]:
        if r == k:
            yield tuple(seq)
            return
        for i in range(low, N + 1):
            seq[r] = i
            if r + 1 < k:
                nxt = i if parts[r] < 0 < parts[r + 1] else i + 1
            else:
                nxt = 0
            yield from rec(r + 1, nxt)

    yield from rec(0, 1 if parts[0] < 0 else 0)


@lru_cache(maxsize=4096)
def expand_monomial(alpha: IndexObject, N: int) -> Series:
    """Monomial basis element as a polynomial with indices up to ``N``.

    * A: ``sum_{1 <= i_1 < ... < i_k <= N} x_{i_1}^{a_1} ... x_{i_k}^{a_k}``
    * B: ``x_0^{a_1}`` times ``sum_{0 < i_2 < ... < i_k <= N} x_{i_2}^{a_2} ...``
    * S: letters ``u`` for negative parts and ``v`` for positive ones, exponent
      ``|a_r|``; indices start at 1 if the first part is negative and at 0
      otherwise, and increase strictly except across a negative-to-positive
      boundary, where they may repeat.

    When ``N`` is too small for the number of parts the zero series comes back.
    """
    flavor = flavor_of(alpha)
    if N < 1:
        raise ValueError(f"truncation N must be at least 1, got {N}")
    X, U, V = Alphabet.X, Alphabet.U, Alphabet.V
    parts = alpha.parts
    terms: dict = {}
    if flavor is Flavor.A:
        for idx in itertools.combinations(range(1, N + 1), len(parts)):
            terms[tuple((Variable(X, i), e) for i, e in zip(idx, parts))] = 1
    elif flavor is Flavor.B:
        head = ((Variable(X, 0), parts[0]),) if parts[0] else ()
        for idx in itertools.combinations(range(1, N + 1), len(parts) - 1):
            terms[head + tuple((Variable(X, i), e) for i, e in zip(idx, parts[1:]))] = 1
    else:
        for idx in _signed_index_sequences(parts, N):
            exps: dict = {}
            for i, p in zip(idx, parts):
                v = Variable(U, i) if p < 0 else Variable(V, i)
                exps[v] = exps.get(v, 0) + abs(p)
            terms[tuple(sorted(exps.items()))] = 1
    return Series(terms, _bounds(flavor, N))


@lru_cache(maxsize=4096)
def expand_fundamental(alpha: IndexObject, N: int) -> Series:
    """``F_alpha`` as the sum of ``M_beta`` over all ``beta`` finer than ``alpha``."""
    flavor = flavor_of(alpha)
    total = Series(bounds=_bounds(flavor, N))
    for beta in finer_indices(alpha):
        total = total + expand_monomial(beta, N)
    return total


def fundamental_in_monomial(alpha: IndexObject) -> QSymVector:
    """``F_alpha = sum_{alpha <= beta} M_beta``."""
    return QSymVector(flavor_of(alpha), alpha.n, Basis.MONOMIAL, {b: 1 for b in finer_indices(alpha)})


def monomial_in_fundamental(alpha: IndexObject) -> QSymVector:
    """``M_alpha = sum_{alpha <= beta} (-1)^(#beta - #alpha) F_beta``."""
    return QSymVector(
        flavor_of(alpha),
        alpha.n,
        Basis.FUNDAMENTAL,
        {b: (-1) ** (b.length - alpha.length) for b in finer_indices(alpha)},
    )


def change_basis(v: QSymVector, target: Basis | str) -> QSymVector:
    target = Basis.coerce(target)
    if target is v.basis:
        return v
    convert = fundamental_in_monomial if target is Basis.MONOMIAL else monomial_in_fundamental
    out = QSymVector(v.flavor, v.degree, target)
    for a, c in v.items():
        out = out + convert(a).scale(c)
    return out


def basis_change_matrix(flavor: Flavor | str, n: int, source: Basis | str) -> list[list[int]]:
    """Rows: source basis elements; columns: target basis coefficients."""
    indices = enumerate_indices(flavor, n)
    source = Basis.coerce(source)
    convert = fundamental_in_monomial if source is Basis.FUNDAMENTAL else monomial_in_fundamental
    return [[convert(a).coefficient(b) for b in indices] for a in indices]


def gamma_series(pi: GroupElement, N: int, flavor: Flavor | str | None = None) -> Series:
    """P-partition generating function of ``pi`` (Gamma, Gamma_B or signed Gamma)."""
    from .ppartition import gamma, gamma_B, gamma_signed

    flavor = _element_flavor(pi, flavor)
    if flavor is Flavor.A:
        return gamma(pi, N)
    if flavor is Flavor.B:
        return gamma_B(pi, N)
    return gamma_signed(pi, N)


def _element_flavor(pi: GroupElement, flavor: Flavor | str | None) -> Flavor:
    if isinstance(pi, Permutation):
        if flavor is not None and Flavor.coerce(flavor) is not Flavor.A:
            raise TypeError("a Permutation only has flavor A")
        return Flavor.A
    if not isinstance(pi, SignedPermutation):
        raise TypeError(f"expected a group element, got {type(pi).__name__}")
    flavor = Flavor.B if flavor is None else Flavor.coerce(flavor)
    if flavor is Flavor.A:
        raise TypeError("a SignedPermutation has flavor B or S")
    return flavor


def gamma_equals_fundamental_check(pi: GroupElement, N: int, flavor: Flavor | str | None = None) -> bool:
    """Compare the P-partition expansion of ``pi`` with ``F`` of its descent index."""
    flavor = _element_flavor(pi, flavor)
    return gamma_series(pi, N, flavor) == expand_fundamental(descent_index(pi, flavor), N)


def inner_product(
    beta: IndexObject, alpha: IndexObject, flavor: Flavor | str | None = None, cap: int | None = None
) -> QSymVector:
    """``F_beta * F_alpha = sum_gamma c(alpha, beta; gamma) F_gamma``.

    ``c(alpha, beta; gamma)`` counts ``(sigma, tau)`` with ``sigma`` in class
    alpha, ``tau`` in class beta and ``sigma tau`` a fixed element of class
    gamma.
    """
    flavor = _check_flavor(beta, flavor)
    _check_flavor(alpha, flavor)
    if alpha.n != beta.n:
        raise ValueError(f"degree mismatch: {alpha.n} != {beta.n}")
    table = compute_structure_constants(flavor, alpha.n, cap=cap)
    return QSymVector(flavor, alpha.n, Basis.FUNDAMENTAL, table.product(alpha, beta))


def inner_coproduct(
    gamma: IndexObject, flavor: Flavor | str | None = None, cap: int | None = None
) -> list[tuple[IndexObject, IndexObject, int]]:
    """Nonzero terms ``(beta, alpha, c)`` of ``F_gamma -> sum c F_beta (x) F_alpha``."""
    flavor = _check_flavor(gamma, flavor)
    table = compute_structure_constants(flavor, gamma.n, cap=cap)
    out = []
    for alpha in table.indices:
        for beta in table.indices:
            c = table.entry(alpha, beta, gamma)
            if c:
                out.append((beta, alpha, c))
    return sorted(out, key=lambda t: (t[0], t[1]))


def specialize_fundamental(alpha: SignedComposition) -> PseudoComposition:
    """B-flavor index of ``F_alpha`` after setting ``u = v``.

    It is the pseudo-composition whose descent set is the common type B
    descent set of the signed class ``alpha``.
    """
    _, descents = signed_comp_data(alpha)
    return descents_to_pseudo(descents)


def specialize_monomial(alpha: SignedComposition) -> QSymVector:
    """``M_alpha`` (signed) with ``u = v``, written in the B monomial basis.

    Every negative-to-positive boundary may or may not merge (repeated
    index), and a positive first part may or may not sit on index 0, giving
    one ``M_B`` term per choice.
    """
    if not isinstance(alpha, SignedComposition):
        raise TypeError("specialize_monomial takes a SignedComposition")
    parts = alpha.parts
    optional = [r for r in range(len(parts) - 1) if parts[r] < 0 < parts[r + 1]]
    coeffs: dict = {}
    for mask in itertools.product((False, True), repeat=len(optional)):
        merge = {r for r, m in zip(optional, mask) if m}
        merged = [abs(parts[0])]
        for r in range(1, len(parts)):
            if r - 1 in merge:
                merged[-1] += abs(parts[r])
            else:
                merged.append(abs(parts[r]))
        targets = [(0, *merged)]
        if parts[0] > 0:
            targets.append(tuple(merged))
        for t in targets:
            key = PseudoComposition(t)
            coeffs[key] = coeffs.get(key, 0) + 1
    return QSymVector(Flavor.B, alpha.n, Basis.MONOMIAL, coeffs)

