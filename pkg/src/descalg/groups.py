"""The symmetric group S_n and the hyperoctahedral group B_n.

Elements are stored by their window ``(pi_1, ..., pi_n)``.  A signed
permutation extends to ``+-[n]`` by ``pi(-i) = -pi(i)``, so the window is
enough.

Products follow ``(sigma * tau)(i) = sigma(tau(i))``.  This is the order in
which ``F_{C(pi)}(XY) = sum_{sigma tau = pi} F_{C(tau)}(X) F_{C(sigma)}(Y)``
holds; the other order breaks the identity already in S_3 (see
``tests/test_ppartition.py::test_product_convention_is_forced``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .combinatorics import (
    Composition,
    Flavor,
    IndexObject,
    PseudoComposition,
    SignedComposition,
)


def _parse_window(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.strip().split(","))
    except ValueError:
        raise ValueError(f"cannot parse window {text!r}") from None


@dataclass(frozen=True, repr=False)
class Permutation:
    window: tuple[int, ...]

    def __post_init__(self) -> None:
        w = tuple(int(v) for v in self.window)
        object.__setattr__(self, "window", w)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"{w} is not a permutation of 1..{len(w)}")

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        return self.window[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __str__(self) -> str:
        return ",".join(map(str, self.window))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"

    def __lt__(self, other: "Permutation") -> bool:
        return self.window < other.window

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        return cls(_parse_window(text))


@dataclass(frozen=True, repr=False)
class SignedPermutation:
    window: tuple[int, ...]

    def __post_init__(self) -> None:
        w = tuple(int(v) for v in self.window)
        object.__setattr__(self, "window", w)
        if sorted(abs(v) for v in w) != list(range(1, len(w) + 1)):
            raise ValueError(f"{w} is not a signed permutation of 1..{len(w)}")

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        if i == 0:
            return 0
        v = self.window[abs(i) - 1]
        return v if i > 0 else -v

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return compose(self, other)

    def __str__(self) -> str:
        return ",".join(map(str, self.window))

    def __repr__(self) -> str:
        return f"SignedPermutation({str(self)!r})"

    def __lt__(self, other: "SignedPermutation") -> bool:
        return self.window < other.window

    @classmethod
    def parse(cls, text: str) -> "SignedPermutation":
        return cls(_parse_window(text))


GroupElement = Permutation | SignedPermutation


def compose(sigma: GroupElement, tau: GroupElement) -> GroupElement:
    """Return ``sigma * tau`` with ``(sigma * tau)(i) = sigma(tau(i))``."""
    if type(sigma) is not type(tau):
        raise TypeError("cannot compose elements of different groups")
    if sigma.n != tau.n:
        raise ValueError(f"degree mismatch: {sigma.n} != {tau.n}")
    return type(sigma)(tuple(sigma(t) for t in tau.window))


def inverse(pi: GroupElement) -> GroupElement:
    out = [0] * pi.n
    for i, v in enumerate(pi.window, start=1):
        out[abs(v) - 1] = i if v > 0 else -i
    return type(pi)(tuple(out))


def _group_type(group: Flavor | str) -> type:
    g = str(group.value if isinstance(group, Flavor) else group).upper()
    if g == "A":
        return Permutation
    if g in ("B", "S"):
        return SignedPermutation
    raise ValueError(f"unknown group {group!r}; expected A (S_n) or B (B_n)")


def identity(n: int, group: Flavor | str = "A") -> GroupElement:
    return _group_type(group)(tuple(range(1, n + 1)))


@lru_cache(maxsize=None)
def _windows(n: int, signed: bool) -> tuple[tuple[int, ...], ...]:
    if not signed:
        return tuple(itertools.permutations(range(1, n + 1)))
    out = [
        tuple(s * v for s, v in zip(signs, perm))
        for perm in itertools.permutations(range(1, n + 1))
        for signs in itertools.product((1, -1), repeat=n)
    ]
    return tuple(sorted(out))


def group_windows(n: int, group: Flavor | str = "A") -> tuple[tuple[int, ...], ...]:
    """All windows of S_n (group A) or B_n (group B/S) in lexicographic order."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    return _windows(n, _group_type(group) is SignedPermutation)


def enumerate_group(n: int, group: Flavor | str = "A") -> Iterator[GroupElement]:
    """Yield the group elements in lexicographic window order."""
    cls = _group_type(group)
    for w in group_windows(n, group):
        yield cls(w)


def group_order(n: int, group: Flavor | str = "A") -> int:
    return len(group_windows(n, group))


def _run_lengths(window: tuple[int, ...], same_sign: bool = False) -> list[int]:
    runs = [1]
    for a, b in zip(window, window[1:]):
        if a < b and (not same_sign or (a > 0) == (b > 0)):
            runs[-1] += 1
        else:
            runs.append(1)
    return runs


def descent_positions(window: tuple[int, ...]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(window)) if window[i - 1] > window[i])


def descent_composition(pi: Permutation) -> Composition:
    """Lengths of the maximal increasing runs, left to right."""
    return Composition(tuple(_run_lengths(pi.window)))


def descent_pseudo(pi: SignedPermutation) -> PseudoComposition:
    """Type B descent pseudo-composition; leading 0 iff ``pi_1 < 0``."""
    runs = _run_lengths(pi.window)
    if pi.window[0] < 0:
        runs.insert(0, 0)
    return PseudoComposition(tuple(runs))


def type_b_descents(pi: SignedPermutation) -> frozenset[int]:
    extra = {0} if pi.window[0] < 0 else set()
    return descent_positions(pi.window) | extra


def signed_descent_composition(pi: SignedPermutation) -> SignedComposition:
    """Maximal increasing runs of constant sign, each signed by its sign."""
    runs = _run_lengths(pi.window, same_sign=True)
    parts, pos = [], 0
    for r in runs:
        parts.append(r if pi.window[pos] > 0 else -r)
        pos += r
    return SignedComposition(tuple(parts))


def descent_index(pi: GroupElement, flavor: Flavor | str) -> IndexObject:
    """C(pi), C_B(pi) or sC(pi) according to the flavor."""
    flavor = Flavor.coerce(flavor)
    if flavor is Flavor.A:
        if not isinstance(pi, Permutation):
            raise TypeError("flavor A needs a Permutation")
        return descent_composition(pi)
    if not isinstance(pi, SignedPermutation):
        raise TypeError(f"flavor {flavor.value} needs a SignedPermutation")
    if flavor is Flavor.B:
        return descent_pseudo(pi)
    return signed_descent_composition(pi)


def parse_element(text: str, flavor: Flavor | str) -> GroupElement:
    return _group_type(Flavor.coerce(flavor).value)(_parse_window(text))
