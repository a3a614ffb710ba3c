"""Brute-force checks of the identities the library is built around.

Each ``check_*`` function returns a ``CheckResult``; ``run_suite`` runs all of
them at their default sizes.  The command ``descalg verify`` prints one line
per result and exits nonzero if any fails.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterator

from .combinatorics import (
    Composition,
    Flavor,
    enumerate_compositions,
    enumerate_indices,
    enumerate_pseudo,
    enumerate_signed,
)
from .descent_algebra import (
    class_data,
    representative_mismatches,
    verify_closure,
)
from .groups import SignedPermutation, compose, descent_index, enumerate_group, group_order, inverse
from .ppartition import bipartite_gamma, factorization_sum, gamma_B, gamma_signed
from .qsym import (
    Basis,
    QSymVector,
    change_basis,
    expand_fundamental,
    gamma_equals_fundamental_check,
    inner_product,
    specialize_fundamental,
)
from .series import Alphabet, Series, Variable, monomial


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.detail} [{self.seconds:.2f}s]"


def _timed(name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed check, reported not raised
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(name, ok, detail, time.perf_counter() - t0)


def _group(flavor: Flavor) -> str:
    return "A" if flavor is Flavor.A else "B"


def worked_example_series(kind: str, N: int) -> Series:
    """``sum_{0 < i <= j < k <= N}`` of ``x_i x_j x_k`` (kind B) or ``u_i v_j u_k`` (kind S)."""
    monos = []
    for i in range(1, N + 1):
        for j in range(i, N + 1):
            for k in range(j + 1, N + 1):
                if kind == "B":
                    monos.append(monomial([Variable(Alphabet.X, i), Variable(Alphabet.X, j), Variable(Alphabet.X, k)]))
                else:
                    monos.append(monomial([Variable(Alphabet.U, i), Variable(Alphabet.V, j), Variable(Alphabet.U, k)]))
    bounds = {Alphabet.X: N} if kind == "B" else {Alphabet.U: N, Alphabet.V: N}
    return Series.from_monomials(monos, bounds)


def check_gamma_fundamental(flavor: Flavor | str, n_max: int, N: int) -> CheckResult:
    flavor = Flavor.coerce(flavor)

    def run():
        count = 0
        for n in range(1, n_max + 1):
            for pi in enumerate_group(n, _group(flavor)):
                if not gamma_equals_fundamental_check(pi, N, flavor):
                    return False, f"mismatch at {pi}"
                count += 1
        if flavor is not Flavor.A:
            pi = SignedPermutation((-3, 2, -1))
            got = gamma_B(pi, N) if flavor is Flavor.B else gamma_signed(pi, N)
            if got != worked_example_series(flavor.value, N):
                return False, "worked example (-3,2,-1) differs"
        return True, f"{count} elements, n <= {n_max}, N = {N}"

    return _timed(f"gamma=F[{flavor.value}]", run)


def check_inner_coproduct(flavor: Flavor | str, n_max: int, N: int) -> CheckResult:
    flavor = Flavor.coerce(flavor)

    def run():
        count = 0
        for n in range(1, n_max + 1):
            for pi in enumerate_group(n, _group(flavor)):
                if bipartite_gamma(pi, N, N, flavor) != factorization_sum(pi, N, N, flavor):
                    return False, f"mismatch at {pi}"
                count += 1
        return True, f"{count} elements, n <= {n_max}, N_x = N_y = {N}"

    return _timed(f"inner-coproduct[{flavor.value}]", run)


def _dimension(flavor: Flavor, n: int) -> int:
    return {Flavor.A: 2 ** (n - 1), Flavor.B: 2**n, Flavor.S: 2 * 3 ** (n - 1)}[flavor]


def check_closure(flavor: Flavor | str, n_max: int) -> CheckResult:
    flavor = Flavor.coerce(flavor)

    def run():
        dims = []
        for n in range(1, n_max + 1):
            report = verify_closure(flavor, n, cap=max(n_max, n))
            if not report.ok:
                return False, report.summary()
            if report.dimension != _dimension(flavor, n):
                return False, f"dimension {report.dimension} at n={n}"
            dims.append(report.dimension)
        return True, f"dimensions {dims}"

    return _timed(f"closure[{flavor.value}]", run)


def check_representatives(flavor: Flavor | str, n_max: int) -> CheckResult:
    flavor = Flavor.coerce(flavor)

    def run():
        for n in range(1, n_max + 1):
            bad = representative_mismatches(flavor, n, cap=max(n_max, n))
            if bad:
                return False, f"n={n}: {bad[0]}"
        return True, f"n <= {n_max}, every element of every class"

    return _timed(f"representatives[{flavor.value}]", run)


def check_basis_roundtrip(n_max: int = 6) -> CheckResult:
    def run():
        example = change_basis(QSymVector.basis_element(Composition((2, 1)), Basis.FUNDAMENTAL), Basis.MONOMIAL)
        if example.coeffs != {Composition((2, 1)): 1, Composition((1, 1, 1)): 1}:
            return False, f"F_(2,1) = {example}"
        count = 0
        for flavor in Flavor:
            for n in range(1, n_max + 1):
                for a in enumerate_indices(flavor, n):
                    for basis, other in ((Basis.FUNDAMENTAL, Basis.MONOMIAL), (Basis.MONOMIAL, Basis.FUNDAMENTAL)):
                        v = QSymVector.basis_element(a, basis)
                        if change_basis(change_basis(v, other), basis) != v:
                            return False, f"{flavor.value} {a} {basis.value}"
                    count += 1
        return True, f"{count} basis elements, n <= {n_max}"

    return _timed("basis-roundtrip", run)


def check_counts(n_max: int = 10) -> CheckResult:
    def run():
        for n in range(1, n_max + 1):
            got = (len(enumerate_compositions(n)), len(enumerate_pseudo(n)), len(enumerate_signed(n)))
            if got != (2 ** (n - 1), 2**n, 2 * 3 ** (n - 1)):
                return False, f"n={n}: {got}"
        for flavor, top in ((Flavor.A, 6), (Flavor.B, 4), (Flavor.S, 4)):
            for n in range(1, top + 1):
                data = class_data(flavor, n)
                if int(data.sizes.sum()) != group_order(n, _group(flavor)) or min(data.sizes) < 1:
                    return False, f"classes of {flavor.value}, n={n} do not partition the group"
        return True, f"n <= {n_max}; class partitions A<=6, B/S<=4"

    return _timed("counting", run)


def check_duality(flavor: Flavor | str, n_max: int) -> CheckResult:
    """inner_product against an independent pure-Python pair count."""
    flavor = Flavor.coerce(flavor)

    def run():
        entries = 0
        for n in range(1, n_max + 1):
            indices = enumerate_indices(flavor, n)
            reps = {}
            by_class: dict = {}
            for sigma in enumerate_group(n, _group(flavor)):
                reps.setdefault(descent_index(sigma, flavor), sigma)
            for g, rep in reps.items():
                counts: dict = {}
                for sigma in enumerate_group(n, _group(flavor)):
                    tau = compose(inverse(sigma), rep)
                    key = (descent_index(sigma, flavor), descent_index(tau, flavor))
                    counts[key] = counts.get(key, 0) + 1
                by_class[g] = counts
            for a in indices:
                for b in indices:
                    prod = inner_product(b, a, flavor, cap=n_max)
                    for g in indices:
                        if prod.coefficient(g) != by_class[g].get((a, b), 0):
                            return False, f"n={n} alpha={a} beta={b} gamma={g}"
                        entries += 1
        return True, f"{entries} entries, n <= {n_max}"

    return _timed(f"duality[{flavor.value}]", run)


def check_specialization(n_max: int = 4, N: int = 4) -> CheckResult:
    def run():
        count = 0
        for n in range(1, n_max + 1):
            for a in enumerate_signed(n):
                lhs = expand_fundamental(a, N).substitute_u_equals_v().rename({Alphabet.V: Alphabet.X})
                if lhs != expand_fundamental(specialize_fundamental(a), N):
                    return False, f"{a}"
                count += 1
        return True, f"{count} signed compositions, n <= {n_max}, N = {N}"

    return _timed("u=v specialization", run)


DEFAULT_DUALITY = {Flavor.A: 6, Flavor.B: 4, Flavor.S: 4}


def run_suite(flavors: Iterator[Flavor] | None = None, slow: bool = False) -> Iterator[CheckResult]:
    flavors = list(flavors) if flavors else list(Flavor)
    sizes = {
        Flavor.A: dict(gamma=(5, 6), coprod=(4, 3), closure=5, reps=4, duality=DEFAULT_DUALITY[Flavor.A]),
        Flavor.B: dict(gamma=(3, 4), coprod=(3 if slow else 2, 2), closure=4, reps=3, duality=DEFAULT_DUALITY[Flavor.B]),
        Flavor.S: dict(gamma=(3, 4), coprod=(3 if slow else 2, 2), closure=4, reps=3, duality=DEFAULT_DUALITY[Flavor.S]),
    }
    for f in flavors:
        s = sizes[f]
        yield check_gamma_fundamental(f, *s["gamma"])
        yield check_inner_coproduct(f, *s["coprod"])
        yield check_closure(f, s["closure"])
        yield check_representatives(f, s["reps"])
        yield check_duality(f, s["duality"])
    yield check_basis_roundtrip()
    yield check_counts()
    if Flavor.S in flavors:
        yield check_specialization()

