"""P-partitions of labeled posets and type B posets, and their generating functions.

A P-partition is a map ``f`` from the poset into a totally ordered chain with

1. ``f(i) <= f(j)`` whenever ``i <_P j``, and
2. ``f(i) < f(j)`` whenever ``i <_P j`` and ``i > j`` as labels.

Type B posets live on ``{-n..n}`` and their P-partitions also satisfy
``f(-i) = -f(i)`` (so ``f(0) = 0``).  Everything here enumerates maps into
finite chains, so every generating function comes out as an exact
``Series`` truncated at the chain size.

Maps are enumerated by depth first search along one fixed linear extension,
which makes the output order deterministic.
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .combinatorics import Flavor
from .groups import Permutation, SignedPermutation, compose, enumerate_group, inverse
from .series import Alphabet, Series, Variable

Relation = tuple[int, int]


def _transitive_closure(relations: Iterable[Relation]) -> frozenset[Relation]:
    rel = set(relations)
    succ: dict[int, set[int]] = {}
    for i, j in rel:
        succ.setdefault(i, set()).add(j)
    changed = True
    while changed:
        changed = False
        for i in list(succ):
            reach = set(succ[i])
            for j in list(succ[i]):
                reach |= succ.get(j, set())
            if reach != succ[i]:
                succ[i] = reach
                changed = True
    closed = frozenset((i, j) for i, js in succ.items() for j in js)
    if any(i == j for i, j in closed):
        raise ValueError("relations contain a cycle; not a partial order")
    return closed


def _linear_extension(elements: Sequence[int], relations: frozenset[Relation]) -> list[int]:
    preds = {e: {i for i, j in relations if j == e} for e in elements}
    out: list[int] = []
    placed: set[int] = set()
    while len(out) < len(elements):
        ready = [e for e in elements if e not in placed and preds[e] <= placed]
        e = min(ready)
        out.append(e)
        placed.add(e)
    return out


@dataclass(frozen=True)
class LabeledPoset:
    """A strict partial order on the labels ``1..n``.

    ``relations`` holds every pair ``(i, j)`` with ``i <_P j`` (transitively
    closed).
    """

    n: int
    relations: frozenset[Relation]

    def __post_init__(self) -> None:
        labels = set(range(1, self.n + 1))
        if any(i not in labels or j not in labels for i, j in self.relations):
            raise ValueError(f"relation label outside 1..{self.n}")
        object.__setattr__(self, "relations", _transitive_closure(self.relations))

    @classmethod
    def from_covers(cls, n: int, covers: Iterable[Relation]) -> "LabeledPoset":
        return cls(n, frozenset(covers))

    @classmethod
    def antichain(cls, n: int) -> "LabeledPoset":
        return cls(n, frozenset())

    @classmethod
    def from_permutation(cls, pi: Permutation) -> "LabeledPoset":
        """Total order ``pi_1 < pi_2 < ... < pi_n``."""
        w = pi.window
        return cls(pi.n, frozenset((w[a], w[b]) for a in range(pi.n) for b in range(a + 1, pi.n)))

    @property
    def elements(self) -> list[int]:
        return list(range(1, self.n + 1))

    def less(self, i: int, j: int) -> bool:
        return (i, j) in self.relations

    def linear_extensions(self) -> list[Permutation]:
        """Every linear extension, read as a permutation window."""
        out = []
        for w in itertools.permutations(self.elements):
            pos = {e: k for k, e in enumerate(w)}
            if all(pos[i] < pos[j] for i, j in self.relations):
                out.append(Permutation(w))
        return out


@dataclass(frozen=True)
class TypeBPoset:
    """A strict partial order on ``{-n..n}`` closed under ``i < j => -j < -i``."""

    n: int
    relations: frozenset[Relation]

    def __post_init__(self) -> None:
        elements = set(range(-self.n, self.n + 1))
        if any(i not in elements or j not in elements for i, j in self.relations):
            raise ValueError(f"relation label outside -{self.n}..{self.n}")
        closed = _transitive_closure(self.relations)
        missing = [(i, j) for i, j in closed if (-j, -i) not in closed]
        if missing:
            i, j = min(missing)
            raise ValueError(f"not a type B poset: {i} < {j} holds but {-j} < {-i} does not")
        object.__setattr__(self, "relations", closed)

    @classmethod
    def from_covers(cls, n: int, covers: Iterable[Relation], symmetrize: bool = False) -> "TypeBPoset":
        covers = set(covers)
        if symmetrize:
            covers |= {(-j, -i) for i, j in covers}
        return cls(n, frozenset(covers))

    @classmethod
    def from_signed_permutation(cls, pi: SignedPermutation) -> "TypeBPoset":
        """Total order ``-pi_n < ... < -pi_1 < 0 < pi_1 < ... < pi_n``."""
        chain = [-v for v in reversed(pi.window)] + [0] + list(pi.window)
        m = len(chain)
        return cls(pi.n, frozenset((chain[a], chain[b]) for a in range(m) for b in range(a + 1, m)))

    @property
    def elements(self) -> list[int]:
        return list(range(-self.n, self.n + 1))

    def less(self, i: int, j: int) -> bool:
        return (i, j) in self.relations


def _neg(v):
    if isinstance(v, tuple):
        return tuple(-c for c in v)
    return -v


def _search(
    order: list[int],
    preds: dict[int, list[tuple[int, bool]]],
    values: list,
    forced: Callable[[dict], object] | None = None,
) -> Iterator[dict]:
    """Depth first search over order-compatible assignments.

    ``forced(e, f)`` may return a value that element ``e`` must take given the
    partial assignment ``f`` (used for ``f(-i) = -f(i)`` and ``f(0) = 0``).
    """
    f: dict = {}
    depth = len(order)

    def lower_index(e) -> int:
        lo = 0
        for p, strict in preds[e]:
            v = f[p]
            k = bisect.bisect_right(values, v) if strict else bisect.bisect_left(values, v)
            lo = max(lo, k)
        return lo

    def ok(e, val) -> bool:
        for p, strict in preds[e]:
            if f[p] > val or (strict and f[p] == val):
                return False
        return True

    def rec(k: int) -> Iterator[dict]:
        if k == depth:
            yield dict(f)
            return
        e = order[k]
        fixed = forced(e, f) if forced else None
        if fixed is not None:
            if ok(e, fixed):
                f[e] = fixed
                yield from rec(k + 1)
                del f[e]
            return
        for idx in range(lower_index(e), len(values)):
            f[e] = values[idx]
            yield from rec(k + 1)
        f.pop(e, None)

    yield from rec(0)


def _preds(elements: Sequence[int], relations: frozenset[Relation]) -> dict[int, list[tuple[int, bool]]]:
    preds: dict[int, list[tuple[int, bool]]] = {e: [] for e in elements}
    for i, j in sorted(relations):
        preds[j].append((i, i > j))
    return preds


def _ppartitions_on(P: LabeledPoset, values: list) -> Iterator[tuple]:
    order = _linear_extension(P.elements, P.relations)
    preds = _preds(P.elements, P.relations)
    for f in _search(order, preds, values):
        yield tuple(f[j] for j in range(1, P.n + 1))


def _b_ppartitions_on(P: TypeBPoset, values: list, zero) -> Iterator[tuple]:
    order = _linear_extension(P.elements, P.relations)
    preds = _preds(P.elements, P.relations)

    def forced(e, f):
        if e == 0:
            return zero
        if -e in f:
            return _neg(f[-e])
        return None

    for f in _search(order, preds, values, forced):
        yield tuple(f[j] for j in range(1, P.n + 1))


def _as_poset(P) -> LabeledPoset:
    return LabeledPoset.from_permutation(P) if isinstance(P, Permutation) else P


def _as_b_poset(P) -> TypeBPoset:
    return TypeBPoset.from_signed_permutation(P) if isinstance(P, SignedPermutation) else P


def _check_chain(N: int) -> None:
    if N < 1:
        raise ValueError(f"chain size must be at least 1, got {N}")


def enumerate_ppartitions(P: LabeledPoset | Permutation, N: int) -> list[tuple[int, ...]]:
    """All P-partitions into the chain ``1..N``; entry ``j-1`` is ``f(j)``."""
    _check_chain(N)
    return list(_ppartitions_on(_as_poset(P), list(range(1, N + 1))))


def enumerate_B_ppartitions(P: TypeBPoset | SignedPermutation, N: int) -> list[tuple[int, ...]]:
    """All type B P-partitions into ``-N..N``; entry ``j-1`` is ``f(j)`` for ``j >= 1``."""
    _check_chain(N)
    return list(_b_ppartitions_on(_as_b_poset(P), list(range(-N, N + 1)), 0))


def gamma(P: LabeledPoset | Permutation, N: int) -> Series:
    _check_chain(N)
    X = Alphabet.X
    monos = (
        tuple(sorted(_count((Variable(X, v) for v in f)).items()))
        for f in _ppartitions_on(_as_poset(P), list(range(1, N + 1)))
    )
    return Series.from_monomials(monos, {X: N})


def gamma_B(P: TypeBPoset | SignedPermutation, N: int) -> Series:
    _check_chain(N)
    X = Alphabet.X
    monos = (
        tuple(sorted(_count((Variable(X, abs(v)) for v in f)).items()))
        for f in _b_ppartitions_on(_as_b_poset(P), list(range(-N, N + 1)), 0)
    )
    return Series.from_monomials(monos, {X: N})


def _signed_letter(v: int, neg: Alphabet, pos: Alphabet) -> Variable:
    return Variable(neg, -v) if v < 0 else Variable(pos, v)


def gamma_signed(P: TypeBPoset | SignedPermutation, N: int) -> Series:
    """Signed generating function: ``u_|f(j)|`` for negative values, ``v_f(j)`` otherwise."""
    _check_chain(N)
    U, V = Alphabet.U, Alphabet.V
    monos = (
        tuple(sorted(_count(_signed_letter(v, U, V) for v in f).items()))
        for f in _b_ppartitions_on(_as_b_poset(P), list(range(-N, N + 1)), 0)
    )
    return Series.from_monomials(monos, {U: N, V: N})


def gamma_flavor(pi, N: int, flavor: Flavor | str) -> Series:
    flavor = Flavor.coerce(flavor)
    if flavor is Flavor.A:
        return gamma(pi, N)
    if flavor is Flavor.B:
        return gamma_B(pi, N)
    return gamma_signed(pi, N)


def _count(items) -> dict:
    out: dict = {}
    for it in items:
        out[it] = out.get(it, 0) + 1
    return out


def _bipartite_monomial(f: tuple, flavor: Flavor):
    X, Y = Alphabet.X, Alphabet.Y
    letters = []
    for a, b in f:
        if flavor is Flavor.A:
            letters += [Variable(X, a), Variable(Y, b)]
        elif flavor is Flavor.B:
            letters += [Variable(X, abs(a)), Variable(Y, abs(b))]
        else:
            # Y side keeps the sign of its own coordinate; the X side takes the
            # sign of the whole value relative to it (a zero second
            # coordinate counts as positive).
            x_sign = (1 if a > 0 else -1) * (-1 if b < 0 else 1)
            letters.append(Variable(Alphabet.U, abs(a)) if a != 0 and x_sign < 0 else Variable(Alphabet.V, abs(a)))
            letters.append(_signed_letter(b, Alphabet.UY, Alphabet.VY))
    return tuple(sorted(_count(letters).items()))


def bipartite_gamma(pi: Permutation | SignedPermutation, N_x: int, N_y: int, flavor: Flavor | str) -> Series:
    """Generating function of P-partitions of ``pi`` into a lexicographic product chain.

    Flavor A maps into ``[1..N_x] x [1..N_y]``.  Flavors B and S map into
    ``[-N_x..N_x] x [-N_y..N_y]`` ordered lexicographically, with negation
    acting on both coordinates and ``(0, 0)`` as the fixed point.
    """
    flavor = Flavor.coerce(flavor)
    _check_chain(N_x)
    _check_chain(N_y)
    if flavor is Flavor.A:
        if not isinstance(pi, Permutation):
            raise TypeError("flavor A needs a Permutation")
        values = [(i, j) for i in range(1, N_x + 1) for j in range(1, N_y + 1)]
        maps = _ppartitions_on(LabeledPoset.from_permutation(pi), values)
        bounds = {Alphabet.X: N_x, Alphabet.Y: N_y}
    else:
        if not isinstance(pi, SignedPermutation):
            raise TypeError(f"flavor {flavor.value} needs a SignedPermutation")
        values = [(i, j) for i in range(-N_x, N_x + 1) for j in range(-N_y, N_y + 1)]
        maps = _b_ppartitions_on(TypeBPoset.from_signed_permutation(pi), values, (0, 0))
        if flavor is Flavor.B:
            bounds = {Alphabet.X: N_x, Alphabet.Y: N_y}
        else:
            bounds = {Alphabet.U: N_x, Alphabet.V: N_x, Alphabet.UY: N_y, Alphabet.VY: N_y}
    return Series.from_monomials((_bipartite_monomial(f, flavor) for f in maps), bounds)


def to_y_side(s: Series) -> Series:
    """Move a one-sided series onto the Y alphabets (x -> y, u -> u', v -> v')."""
    return s.rename({Alphabet.X: Alphabet.Y, Alphabet.U: Alphabet.UY, Alphabet.V: Alphabet.VY})


def factorization_sum(pi: Permutation | SignedPermutation, N_x: int, N_y: int, flavor: Flavor | str) -> Series:
    """``sum_{sigma tau = pi} Gamma(tau)(X) * Gamma(sigma)(Y)`` by brute force over the group."""
    flavor = Flavor.coerce(flavor)
    group = "A" if flavor is Flavor.A else "B"
    total = Series.zero()
    cache: dict = {}
    for sigma in enumerate_group(pi.n, group):
        tau = compose(inverse(sigma), pi)
        if tau not in cache:
            cache[tau] = gamma_flavor(tau, N_x, flavor)
        total = total + cache[tau] * to_y_side(gamma_flavor(sigma, N_y, flavor))
    return total


def parse_poset(text: str, type_b: bool = False) -> LabeledPoset | TypeBPoset:
    """Read the poset text format.

    First line ``n``; then one ``i < j`` relation per line.  Blank lines and
    ``#`` comments are ignored.  Type B labels are signed, element 0 is
    implicit, and the relation set must already be closed under
    ``i < j => -j < -i``.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty poset description")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the element count, got {lines[0]!r}") from None
    covers = []
    for ln in lines[1:]:
        left, sep, right = ln.partition("<")
        if not sep:
            raise ValueError(f"expected 'i < j', got {ln!r}")
        try:
            covers.append((int(left), int(right)))
        except ValueError:
            raise ValueError(f"expected integer labels in {ln!r}") from None
    if type_b:
        return TypeBPoset.from_covers(n, covers)
    return LabeledPoset.from_covers(n, covers)
