"""Compositions, pseudo-compositions and signed compositions.

Three families of index objects:

* ``Composition`` -- positive parts summing to ``n``; indexes type A descent
  classes and the bases of ``Qsym_n``.
* ``PseudoComposition`` -- like a composition but the first part may be 0;
  the leading zero records a descent at position 0 (type B).
* ``SignedComposition`` -- nonzero parts whose absolute values sum to ``n``;
  the sign of a part is the common sign of a run, the absolute value its
  length.

All three are immutable and hashable.  Canonical text forms are comma joined
part lists ("3,2,1", "0,2,1", "-1,2,-2,-1,1"), and ``parse``/``str`` round
trip exactly.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator


class Flavor(str, enum.Enum):
    """Which of the three theories an object belongs to."""

    A = "A"  # Qsym, S_n
    B = "B"  # BQsym, B_n with descent pseudo-compositions
    S = "S"  # SQsym, B_n with signed descent compositions

    @classmethod
    def coerce(cls, value: "Flavor | str") -> "Flavor":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise ValueError(f"unknown flavor {value!r}; expected one of A, B, S") from None


def _parse_parts(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        raise ValueError("empty index string")
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse {text!r} as a comma separated integer list") from None


def _partial_sums(parts: Iterable[int]) -> list[int]:
    return list(itertools.accumulate(parts))


class _Index:
    """Shared behaviour of the three index families."""

    parts: tuple[int, ...]
    flavor: Flavor

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __lt__(self, other: "_Index") -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.parts < other.parts

    @property
    def length(self) -> int:
        """Number of parts; a leading 0 of a pseudo-composition counts."""
        return len(self.parts)

    @classmethod
    def parse(cls, text: str):
        return cls(_parse_parts(text))


@dataclass(frozen=True, eq=True, repr=False)
class Composition(_Index):
    parts: tuple[int, ...]

    flavor = Flavor.A

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if not self.parts:
            raise ValueError("a composition needs at least one part")
        if any(p < 1 for p in self.parts):
            raise ValueError(f"composition parts must be positive: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)


@dataclass(frozen=True, eq=True, repr=False)
class PseudoComposition(_Index):
    parts: tuple[int, ...]

    flavor = Flavor.B

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if not self.parts:
            raise ValueError("a pseudo-composition needs at least one part")
        if self.parts[0] < 0 or any(p < 1 for p in self.parts[1:]):
            raise ValueError(
                f"pseudo-composition needs first part >= 0 and later parts >= 1: {self.parts}"
            )
        if sum(self.parts) < 1:
            raise ValueError("pseudo-compositions of 0 are not supported")

    @property
    def n(self) -> int:
        return sum(self.parts)


@dataclass(frozen=True, eq=True, repr=False)
class SignedComposition(_Index):
    parts: tuple[int, ...]

    flavor = Flavor.S

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if not self.parts:
            raise ValueError("a signed composition needs at least one part")
        if any(p == 0 for p in self.parts):
            raise ValueError(f"signed composition parts must be nonzero: {self.parts}")

    @property
    def n(self) -> int:
        return sum(abs(p) for p in self.parts)

    @property
    def cuts(self) -> frozenset[int]:
        """Block boundaries, i.e. partial sums of absolute values below n."""
        return frozenset(_partial_sums(abs(p) for p in self.parts[:-1]))

    @property
    def signs(self) -> tuple[int, ...]:
        """Sign word in {+1, -1}^n, one entry per position."""
        return tuple(s for p in self.parts for s in [1 if p > 0 else -1] * abs(p))


IndexObject = Composition | PseudoComposition | SignedComposition

INDEX_TYPES: dict[Flavor, type] = {
    Flavor.A: Composition,
    Flavor.B: PseudoComposition,
    Flavor.S: SignedComposition,
}


def parse_index(text: str, flavor: Flavor | str) -> IndexObject:
    return INDEX_TYPES[Flavor.coerce(flavor)].parse(text)


@dataclass(frozen=True)
class DescentData:
    """A descent set together with its degree and flavor.

    Flavor A positions live in ``{1..n-1}``, flavor B positions in ``{0..n-1}``.
    """

    n: int
    flavor: Flavor
    positions: frozenset[int]

    def __post_init__(self) -> None:
        flavor = Flavor.coerce(self.flavor)
        if flavor is Flavor.S:
            raise ValueError("descent data is flavor A or B")
        object.__setattr__(self, "flavor", flavor)
        object.__setattr__(self, "positions", frozenset(self.positions))
        if self.n < 1:
            raise ValueError("degree must be at least 1")
        low = 1 if flavor is Flavor.A else 0
        bad = [p for p in self.positions if not low <= p <= self.n - 1]
        if bad:
            raise ValueError(
                f"descent positions {sorted(bad)} outside {{{low}..{self.n - 1}}} for flavor {flavor.value}"
            )

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.positions))


def comp_to_descents(alpha: Composition) -> DescentData:
    return DescentData(alpha.n, Flavor.A, frozenset(_partial_sums(alpha.parts[:-1])))


def _cuts_to_parts(cuts: Iterable[int], n: int) -> tuple[int, ...]:
    points = [0, *sorted(cuts), n]
    return tuple(b - a for a, b in zip(points, points[1:]))


def descents_to_comp(descents: DescentData | Iterable[int], n: int | None = None) -> Composition:
    if not isinstance(descents, DescentData):
        if n is None:
            raise ValueError("degree n is required for a bare position set")
        descents = DescentData(n, Flavor.A, frozenset(descents))
    elif descents.flavor is not Flavor.A:
        raise ValueError("expected type A descent data")
    elif n is not None and n != descents.n:
        raise ValueError(f"degree mismatch: {descents.n} != {n}")
    return Composition(_cuts_to_parts(descents.positions, descents.n))


def pseudo_to_descents(alpha: PseudoComposition) -> DescentData:
    return DescentData(alpha.n, Flavor.B, frozenset(_partial_sums(alpha.parts[:-1])))


def descents_to_pseudo(descents: DescentData | Iterable[int], n: int | None = None) -> PseudoComposition:
    if not isinstance(descents, DescentData):
        if n is None:
            raise ValueError("degree n is required for a bare position set")
        descents = DescentData(n, Flavor.B, frozenset(descents))
    elif descents.flavor is not Flavor.B:
        raise ValueError("expected type B descent data")
    elif n is not None and n != descents.n:
        raise ValueError(f"degree mismatch: {descents.n} != {n}")
    positions = descents.positions
    if 0 in positions:
        return PseudoComposition((0, *_cuts_to_parts(positions - {0}, descents.n)))
    return PseudoComposition(_cuts_to_parts(positions, descents.n))


def descent_set(alpha: Composition | PseudoComposition) -> frozenset[int]:
    if isinstance(alpha, Composition):
        return comp_to_descents(alpha).positions
    if isinstance(alpha, PseudoComposition):
        return pseudo_to_descents(alpha).positions
    raise TypeError(f"no descent set conversion for {type(alpha).__name__}")


def refines(beta: Composition | PseudoComposition, alpha: Composition | PseudoComposition) -> bool:
    """True iff ``alpha <= beta`` in reverse refinement, i.e. beta is finer.

    Works for compositions and for pseudo-compositions (where splitting a
    leading part ``p`` into ``(0, p)`` is a refinement).
    """
    if type(alpha) is not type(beta):
        raise TypeError("refines needs two indices of the same flavor")
    if isinstance(alpha, SignedComposition):
        return signed_refines(beta, alpha)
    if alpha.n != beta.n:
        raise ValueError(f"degree mismatch: {alpha.n} != {beta.n}")
    return descent_set(alpha) <= descent_set(beta)


def signed_refines(beta: SignedComposition, alpha: SignedComposition) -> bool:
    """True iff beta splits the constant-sign blocks of alpha.

    Equivalently: same sign word and every block boundary of alpha is one of
    beta.
    """
    if alpha.n != beta.n:
        raise ValueError(f"degree mismatch: {alpha.n} != {beta.n}")
    return alpha.signs == beta.signs and alpha.cuts <= beta.cuts


def _check_degree(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"degree must be a positive integer, got {n!r}")


def _subsets(items: list[int]) -> Iterator[tuple[int, ...]]:
    return itertools.chain.from_iterable(itertools.combinations(items, k) for k in range(len(items) + 1))


def enumerate_compositions(n: int) -> list[Composition]:
    """All compositions of ``n`` in lexicographic order of part lists."""
    _check_degree(n)
    out = [Composition(_cuts_to_parts(s, n)) for s in _subsets(list(range(1, n)))]
    return sorted(out)


def enumerate_pseudo(n: int) -> list[PseudoComposition]:
    _check_degree(n)
    out = [descents_to_pseudo(s, n) for s in _subsets(list(range(0, n)))]
    return sorted(out)


def enumerate_signed(n: int) -> list[SignedComposition]:
    _check_degree(n)
    out = []
    for comp in enumerate_compositions(n):
        for signs in itertools.product((1, -1), repeat=comp.length):
            out.append(SignedComposition(tuple(s * p for s, p in zip(signs, comp.parts))))
    return sorted(out)


def enumerate_indices(flavor: Flavor | str, n: int) -> list[IndexObject]:
    flavor = Flavor.coerce(flavor)
    if flavor is Flavor.A:
        return enumerate_compositions(n)
    if flavor is Flavor.B:
        return enumerate_pseudo(n)
    return enumerate_signed(n)


def signed_comp_data(alpha: SignedComposition) -> tuple[tuple[int, ...], DescentData]:
    """Sign word and descent set shared by every signed permutation in the class.

    A boundary between two blocks is a descent unless it goes from a
    negative block to a positive one (negative entries are smaller than
    positive ones, so that step is always an ascent).  Position 0 is a
    descent when the first block is negative.
    """
    positions = {0} if alpha.parts[0] < 0 else set()
    boundary = 0
    for left, right in zip(alpha.parts, alpha.parts[1:]):
        boundary += abs(left)
        if not (left < 0 < right):
            positions.add(boundary)
    return alpha.signs, DescentData(alpha.n, Flavor.B, frozenset(positions))


def signed_from_data(signs: tuple[int, ...], cuts: Iterable[int]) -> SignedComposition:
    """Build a signed composition from a sign word and a cut set.

    Sign changes are always cuts, whether or not they appear in ``cuts``.
    """
    n = len(signs)
    all_cuts = set(cuts) | {i for i in range(1, n) if signs[i - 1] != signs[i]}
    parts = _cuts_to_parts(all_cuts, n)
    out, pos = [], 0
    for p in parts:
        out.append(signs[pos] * p)
        pos += p
    return SignedComposition(tuple(out))


def finer_indices(alpha: IndexObject) -> list[IndexObject]:
    """Every beta with ``alpha <= beta``, in canonical order."""
    if isinstance(alpha, SignedComposition):
        free = [i for i in range(1, alpha.n) if i not in alpha.cuts]
        return sorted(signed_from_data(alpha.signs, alpha.cuts | set(extra)) for extra in _subsets(free))
    base = descent_set(alpha)
    low = 1 if isinstance(alpha, Composition) else 0
    free = [i for i in range(low, alpha.n) if i not in base]
    convert = descents_to_comp if isinstance(alpha, Composition) else descents_to_pseudo
    return sorted(convert(base | set(extra), alpha.n) for extra in _subsets(free))


def index_leq(alpha: IndexObject, beta: IndexObject) -> bool:
    """``alpha <= beta`` in the flavor's refinement order."""
    if isinstance(alpha, SignedComposition):
        return signed_refines(beta, alpha)
    return refines(beta, alpha)
