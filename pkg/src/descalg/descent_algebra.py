"""Descent-class sums in the group algebras of S_n and B_n.

For a flavor (A: descent compositions in S_n, B: descent pseudo-compositions
in B_n, S: signed descent compositions in B_n) the group splits into
classes indexed by ``enumerate_indices(flavor, n)``.  The structure constant

    table[alpha, beta, gamma] = #{(sigma, tau) : sigma in alpha, tau in beta, sigma * tau = pi}

is computed for one representative ``pi`` of ``gamma``.  With the group
product ``(sigma * tau)(i) = sigma(tau(i))`` this gives

    u_alpha * u_beta = sum_gamma table[alpha, beta, gamma] * u_gamma

in the group algebra.  Read through the inner product of quasisymmetric
functions the same numbers give ``F_beta * F_alpha`` (note the swap), see
``descalg.qsym.inner_product``.

Brute force is capped per flavor (``DEFAULT_CAPS``); pass ``cap=`` (or
``--cap-override`` on the command line) to go further.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

import numpy as np

from . import _kernels
from .combinatorics import INDEX_TYPES, Flavor, IndexObject, enumerate_indices, parse_index
from .groups import (
    GroupElement,
    Permutation,
    SignedPermutation,
    compose,
    descent_index,
    group_windows,
)

DEFAULT_CAPS = {Flavor.A: 6, Flavor.B: 4, Flavor.S: 4}


class DegreeCapExceeded(ValueError):
    pass


def check_cap(flavor: Flavor | str, n: int, cap: int | None = None) -> None:
    flavor = Flavor.coerce(flavor)
    limit = DEFAULT_CAPS[flavor] if cap is None else cap
    if n > limit:
        raise DegreeCapExceeded(
            f"degree {n} exceeds the brute-force cap {limit} for flavor {flavor.value}; "
            f"raise it with --cap-override (cap= in Python)"
        )


# group data


@dataclass(frozen=True, eq=False)
class GroupTables:
    n: int
    signed: bool
    windows: np.ndarray
    keys: np.ndarray
    mult: np.ndarray  # mult[s, t] = index of s * t
    inv: np.ndarray
    identity: int

    @property
    def order(self) -> int:
        return self.windows.shape[0]

    def element(self, k: int) -> GroupElement:
        cls = SignedPermutation if self.signed else Permutation
        return cls(tuple(int(v) for v in self.windows[k]))

    def index(self, pi: GroupElement) -> int:
        key = _kernels.window_keys(np.asarray([pi.window], dtype=np.int64))[0]
        k = int(np.searchsorted(self.keys, key))
        if k >= len(self.keys) or self.keys[k] != key:
            raise KeyError(f"{pi} is not in this group")
        return k


@lru_cache(maxsize=None)
def group_tables(n: int, signed: bool) -> GroupTables:
    windows = np.asarray(group_windows(n, "B" if signed else "A"), dtype=np.int64)
    keys = _kernels.window_keys(windows)
    mult = _kernels.compose_table(windows, keys)
    ident = int(np.searchsorted(keys, _kernels.window_keys(np.arange(1, n + 1)[None, :])[0]))
    inv = np.argmax(mult == ident, axis=1).astype(np.int64)
    return GroupTables(n, signed, windows, keys, mult, inv, ident)


@dataclass(frozen=True, eq=False)
class ClassData:
    flavor: Flavor
    n: int
    indices: list
    class_of: np.ndarray  # class number of every group element
    members: list  # list of index arrays, one per class
    positions: dict = field(repr=False)

    def position(self, alpha: IndexObject) -> int:
        try:
            return self.positions[alpha]
        except KeyError:
            raise KeyError(f"unknown index {alpha!r} for flavor {self.flavor.value}, n={self.n}") from None

    @property
    def sizes(self) -> np.ndarray:
        return np.array([len(m) for m in self.members], dtype=np.int64)


@lru_cache(maxsize=None)
def class_data(flavor: Flavor | str, n: int) -> ClassData:
    flavor = Flavor.coerce(flavor)
    tables = group_tables(n, flavor is not Flavor.A)
    indices = enumerate_indices(flavor, n)
    pos = {a: k for k, a in enumerate(indices)}
    class_of = np.array(
        [pos[descent_index(tables.element(k), flavor)] for k in range(tables.order)], dtype=np.int64
    )
    members = [np.flatnonzero(class_of == k) for k in range(len(indices))]
    return ClassData(flavor, n, indices, class_of, members, pos)


# group algebra


class GroupAlgebraElement:
    """Integer combination of elements of S_n or B_n."""

    __slots__ = ("group", "n", "_coeffs")

    def __init__(self, group: str, n: int, coeffs: Mapping[GroupElement, int] | None = None):
        self.group = "B" if str(group).upper() in ("B", "S") else "A"
        self.n = n
        cls = SignedPermutation if self.group == "B" else Permutation
        clean = {}
        for g, c in (coeffs or {}).items():
            if type(g) is not cls or g.n != n:
                raise TypeError(f"{g!r} is not an element of the group {self.group}_{n}")
            if c:
                clean[g] = int(c)
        self._coeffs = clean

    @classmethod
    def of(cls, pi: GroupElement) -> "GroupAlgebraElement":
        return cls("B" if isinstance(pi, SignedPermutation) else "A", pi.n, {pi: 1})

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def coefficient(self, pi: GroupElement) -> int:
        return self._coeffs.get(pi, 0)

    def augmentation(self) -> int:
        return sum(self._coeffs.values())

    def _same_group(self, other: "GroupAlgebraElement") -> None:
        if (self.group, self.n) != (other.group, other.n):
            raise ValueError(f"group mismatch: {self.group}_{self.n} vs {other.group}_{other.n}")

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._same_group(other)
        out = dict(self._coeffs)
        for g, c in other._coeffs.items():
            out[g] = out.get(g, 0) + c
        return GroupAlgebraElement(self.group, self.n, out)

    def scale(self, k: int) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.group, self.n, {g: k * c for g, c in self._coeffs.items()})

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + other.scale(-1)

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return multiply(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return (self.group, self.n, self._coeffs) == (other.group, other.n, other._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*[{g}]" for g, c in sorted(self._coeffs.items()))
        return f"GroupAlgebraElement({self.group}_{self.n}: {body or '0'})"


def multiply(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """Bilinear extension of ``compose``."""
    a._same_group(b)
    out: dict = {}
    for g, cg in a._coeffs.items():
        for h, ch in b._coeffs.items():
            gh = compose(g, h)
            out[gh] = out.get(gh, 0) + cg * ch
    return GroupAlgebraElement(a.group, a.n, out)


def class_sum(alpha: IndexObject, flavor: Flavor | str | None = None, cap: int | None = None) -> GroupAlgebraElement:
    """Sum of the group elements whose descent index is ``alpha``."""
    flavor = Flavor.coerce(flavor) if flavor is not None else alpha.flavor
    if not isinstance(alpha, INDEX_TYPES[flavor]):
        raise TypeError(f"{alpha!r} does not index flavor {flavor.value}")
    check_cap(flavor, alpha.n, cap)
    data = class_data(flavor, alpha.n)
    tables = group_tables(alpha.n, flavor is not Flavor.A)
    members = data.members[data.position(alpha)]
    return GroupAlgebraElement(
        "A" if flavor is Flavor.A else "B", alpha.n, {tables.element(int(k)): 1 for k in members}
    )


# structure constants


@dataclass(frozen=True, eq=False)
class StructureConstantTable:
    flavor: Flavor
    n: int
    indices: list
    counts: np.ndarray  # counts[alpha, beta, gamma]

    def __post_init__(self) -> None:
        object.__setattr__(self, "_positions", {a: k for k, a in enumerate(self.indices)})

    def _pos(self, alpha: IndexObject) -> int:
        try:
            return self._positions[alpha]
        except KeyError:
            raise KeyError(f"{alpha!r} is not an index of this table") from None

    def entry(self, alpha: IndexObject, beta: IndexObject, gamma: IndexObject) -> int:
        return int(self.counts[self._pos(alpha), self._pos(beta), self._pos(gamma)])

    def __getitem__(self, key: tuple) -> int:
        return self.entry(*key)

    @property
    def dimension(self) -> int:
        return len(self.indices)

    def rows(self, include_zero: bool = False) -> list[tuple[IndexObject, IndexObject, IndexObject, int]]:
        """(alpha, beta, gamma, count) in canonical index order."""
        K = len(self.indices)
        out = []
        for a in range(K):
            for b in range(K):
                for g in range(K):
                    c = int(self.counts[a, b, g])
                    if c or include_zero:
                        out.append((self.indices[a], self.indices[b], self.indices[g], c))
        return out

    def product(self, alpha: IndexObject, beta: IndexObject) -> dict:
        """``u_alpha * u_beta`` as ``{gamma: count}`` (nonzero entries only)."""
        row = self.counts[self._pos(alpha), self._pos(beta)]
        return {self.indices[g]: int(c) for g, c in enumerate(row) if c}


def _targets_for(data: ClassData) -> np.ndarray:
    # members are sorted, and group indices follow lexicographic window order,
    # so the first member is the lexicographically smallest window
    return np.array([m[0] for m in data.members], dtype=np.int64)


@lru_cache(maxsize=None)
def _table(flavor: Flavor, n: int) -> StructureConstantTable:
    tables = group_tables(n, flavor is not Flavor.A)
    data = class_data(flavor, n)
    K = len(data.indices)
    per_gamma = _kernels.count_factorizations(tables.mult, tables.inv, data.class_of, _targets_for(data), K)
    counts = np.ascontiguousarray(per_gamma.transpose(1, 2, 0))
    counts.setflags(write=False)
    return StructureConstantTable(flavor, n, list(data.indices), counts)


class RepresentativeMismatch(AssertionError):
    pass


def representative_mismatches(flavor: Flavor | str, n: int, cap: int | None = None) -> list[tuple]:
    """Elements whose factorization counts differ from their class representative.

    Empty when the structure constants do not depend on the representative.
    Each entry is ``(gamma, representative, element)``.
    """
    flavor = Flavor.coerce(flavor)
    check_cap(flavor, n, cap)
    tables = group_tables(n, flavor is not Flavor.A)
    data = class_data(flavor, n)
    K = len(data.indices)
    all_counts = _kernels.count_factorizations(
        tables.mult, tables.inv, data.class_of, np.arange(tables.order), K
    )
    bad = []
    for g, members in enumerate(data.members):
        rep = members[0]
        for k in members[1:]:
            if not np.array_equal(all_counts[k], all_counts[rep]):
                bad.append((data.indices[g], tables.element(int(rep)), tables.element(int(k))))
    return bad


def compute_structure_constants(
    flavor: Flavor | str, n: int, cap: int | None = None, check_representatives: bool = False
) -> StructureConstantTable:
    flavor = Flavor.coerce(flavor)
    check_cap(flavor, n, cap)
    table = _table(flavor, n)
    if check_representatives:
        bad = representative_mismatches(flavor, n, cap)
        if bad:
            gamma, rep, other = bad[0]
            raise RepresentativeMismatch(
                f"class {gamma}: counts from {rep} and {other} differ ({len(bad)} mismatches)"
            )
    return table


def multiply_classes(table: StructureConstantTable, left: Mapping, right: Mapping) -> dict:
    """Product of two class-basis combinations via the structure constants."""
    out: dict = {}
    for a, ca in left.items():
        for b, cb in right.items():
            for g, c in table.product(a, b).items():
                out[g] = out.get(g, 0) + ca * cb * c
    return {g: c for g, c in out.items() if c}


# closure


@dataclass
class ClosureReport:
    flavor: Flavor
    n: int
    dimension: int
    pairs_checked: int
    residues: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.residues

    def summary(self) -> str:
        status = "closed" if self.ok else f"{len(self.residues)} residue entries"
        return (
            f"flavor {self.flavor.value} n={self.n}: dimension {self.dimension}, "
            f"{self.pairs_checked} products checked, {status}"
        )


def verify_closure(
    flavor: Flavor | str, n: int, cap: int | None = None, use_group_algebra: bool = False
) -> ClosureReport:
    """Multiply every ordered pair of class sums and decompose the result.

    A product that is not constant on some class, or whose constant differs
    from the table entry, lands in ``residues`` as
    ``(alpha, beta, element, got, expected)``.  ``use_group_algebra`` runs
    the products through ``GroupAlgebraElement`` instead of the kernels.
    """
    flavor = Flavor.coerce(flavor)
    check_cap(flavor, n, cap)
    table = _table(flavor, n)
    tables = group_tables(n, flavor is not Flavor.A)
    data = class_data(flavor, n)
    K = len(data.indices)
    report = ClosureReport(flavor, n, K, K * K)
    if use_group_algebra:
        sums = [class_sum(a, flavor, cap=n) for a in data.indices]
        for a in range(K):
            for b in range(K):
                prod = multiply(sums[a], sums[b])
                for k in range(tables.order):
                    el = tables.element(k)
                    got, want = prod.coefficient(el), int(table.counts[a, b, data.class_of[k]])
                    if got != want:
                        report.residues.append((data.indices[a], data.indices[b], el, got, want))
        return report
    for a in range(K):
        prod = _kernels.class_products(tables.mult, data.class_of, data.members[a], K)
        expected = table.counts[a][:, data.class_of]
        for b, k in zip(*np.nonzero(prod != expected)):
            report.residues.append(
                (data.indices[a], data.indices[b], tables.element(int(k)), int(prod[b, k]), int(expected[b, k]))
            )
    return report


# export


_COLUMNS = ("flavor", "n", "alpha", "beta", "gamma", "count")


def export_table(table: StructureConstantTable, fmt: str = "csv", include_zero: bool = False) -> str:
    """Deterministic CSV or JSON rendering of the table rows."""
    records = [
        {"flavor": table.flavor.value, "n": table.n, "alpha": str(a), "beta": str(b), "gamma": str(g), "count": c}
        for a, b, g, c in table.rows(include_zero)
    ]
    if fmt == "json":
        return json.dumps(records, indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(records)
        return buf.getvalue()
    raise ValueError(f"unknown table format {fmt!r}; expected csv or json")


def import_table(text: str, fmt: str = "csv") -> StructureConstantTable:
    """Inverse of ``export_table``; absent rows are zero."""
    if fmt == "csv":
        records = list(csv.DictReader(io.StringIO(text)))
    elif fmt == "json":
        records = json.loads(text)
    else:
        raise ValueError(f"unknown table format {fmt!r}; expected csv or json")
    if not records:
        raise ValueError("no rows to import")
    flavor = Flavor.coerce(records[0]["flavor"])
    n = int(records[0]["n"])
    indices = enumerate_indices(flavor, n)
    pos = {a: k for k, a in enumerate(indices)}
    counts = np.zeros((len(indices),) * 3, dtype=np.int64)
    for rec in records:
        if Flavor.coerce(rec["flavor"]) is not flavor or int(rec["n"]) != n:
            raise ValueError("mixed flavors or degrees in one table")
        a, b, g = (pos[parse_index(rec[c], flavor)] for c in ("alpha", "beta", "gamma"))
        counts[a, b, g] = int(rec["count"])
    return StructureConstantTable(flavor, n, indices, counts)


def class_sizes(flavor: Flavor | str, n: int) -> dict:
    data = class_data(Flavor.coerce(flavor), n)
    return {a: len(m) for a, m in zip(data.indices, data.members)}
