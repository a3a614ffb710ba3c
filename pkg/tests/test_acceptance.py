"""Acceptance criteria, one test each.

Every test prints a ``PASS``/``FAIL`` line; the lines are repeated in the
pytest terminal summary.  Run ``python3 tests/test_acceptance.py`` to get
just the ten lines.
"""

import itertools
import time

import numpy as np
import pytest

from descalg.combinatorics import (
    Composition,
    Flavor,
    enumerate_compositions,
    enumerate_indices,
    enumerate_pseudo,
    enumerate_signed,
)
from descalg.descent_algebra import class_data, compute_structure_constants, representative_mismatches, verify_closure
from descalg.groups import SignedPermutation, compose, descent_index, enumerate_group, group_order, inverse
from descalg.ppartition import bipartite_gamma, factorization_sum, gamma, gamma_B, gamma_signed
from descalg.qsym import (
    Basis,
    QSymVector,
    change_basis,
    expand_fundamental,
    inner_product,
    specialize_fundamental,
)
from descalg.series import Alphabet
from descalg.verification import worked_example_series

RESULTS: list[str] = []
GROUP = {Flavor.A: "A", Flavor.B: "B", Flavor.S: "B"}


def report(number: int, title: str, fn) -> None:
    t0 = time.perf_counter()
    ok, detail = fn()
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {title}: {detail} [{time.perf_counter() - t0:.2f}s]"
    RESULTS.append(line)
    print(line)
    assert ok, line


def crit_gamma_type_a():
    n_checked = 0
    for n in range(1, 6):
        for pi in enumerate_group(n, "A"):
            if gamma(pi, 6) != expand_fundamental(descent_index(pi, "A"), 6):
                return False, f"mismatch at {pi}"
            n_checked += 1
    return True, f"{n_checked} permutations, n <= 5, N = 6"


def crit_gamma_type_b():
    pi = SignedPermutation((-3, 2, -1))
    if gamma_B(pi, 4) != worked_example_series("B", 4):
        return False, "type B worked example differs"
    if gamma_signed(pi, 4) != worked_example_series("S", 4):
        return False, "signed worked example differs"
    n_checked = 0
    for n in range(1, 4):
        for pi in enumerate_group(n, "B"):
            if gamma_B(pi, 4) != expand_fundamental(descent_index(pi, "B"), 4):
                return False, f"type B mismatch at {pi}"
            if gamma_signed(pi, 4) != expand_fundamental(descent_index(pi, "S"), 4):
                return False, f"signed mismatch at {pi}"
            n_checked += 1
    return True, f"{n_checked} signed permutations in both flavors plus both worked examples, N = 4"


def _coproduct(flavor, n_max, N):
    n_checked = 0
    for n in range(1, n_max + 1):
        for pi in enumerate_group(n, GROUP[flavor]):
            if bipartite_gamma(pi, N, N, flavor) != factorization_sum(pi, N, N, flavor):
                return False, f"mismatch at {pi}"
            n_checked += 1
    return True, f"{n_checked} elements, n <= {n_max}, N_x = N_y = {N}"


def crit_coproduct_type_a():
    return _coproduct(Flavor.A, 4, 3)


def crit_coproduct_type_b():
    for flavor in (Flavor.B, Flavor.S):
        ok, detail = _coproduct(flavor, 2, 2)
        if not ok:
            return False, f"{flavor.value}: {detail}"
    return True, "flavors B and S, " + detail


def crit_closure():
    dims = {Flavor.A: (5, lambda n: 2 ** (n - 1)), Flavor.B: (4, lambda n: 2**n), Flavor.S: (4, lambda n: 2 * 3 ** (n - 1))}
    seen = []
    for flavor, (top, dim) in dims.items():
        for n in range(1, top + 1):
            report_ = verify_closure(flavor, n)
            if not report_.ok:
                return False, report_.summary()
            if report_.dimension != dim(n):
                return False, f"{flavor.value} n={n} has dimension {report_.dimension}"
        seen.append(f"{flavor.value}<={top}")
    return True, "zero residue, dimensions match, " + ", ".join(seen)


def crit_representatives():
    for flavor, top in ((Flavor.A, 4), (Flavor.B, 3), (Flavor.S, 3)):
        for n in range(1, top + 1):
            bad = representative_mismatches(flavor, n)
            if bad:
                return False, f"{flavor.value} n={n}: {bad[0]}"
    return True, "every representative of every class, A n <= 4, B/S n <= 3"


def crit_basis_round_trip():
    f21 = change_basis(QSymVector.basis_element(Composition((2, 1)), Basis.FUNDAMENTAL), Basis.MONOMIAL)
    if f21.coeffs != {Composition((2, 1)): 1, Composition((1, 1, 1)): 1}:
        return False, f"F_(2,1) = {f21}"
    count = 0
    for flavor in Flavor:
        for n in range(1, 7):
            for a in enumerate_indices(flavor, n):
                for src, dst in ((Basis.FUNDAMENTAL, Basis.MONOMIAL), (Basis.MONOMIAL, Basis.FUNDAMENTAL)):
                    v = QSymVector.basis_element(a, src)
                    if change_basis(change_basis(v, dst), src) != v:
                        return False, f"{flavor.value} {a} from {src.value}"
                count += 1
    return True, f"{count} basis vectors in both directions, n <= 6"


def crit_counting():
    for n in range(1, 11):
        got = (len(enumerate_compositions(n)), len(enumerate_pseudo(n)), len(enumerate_signed(n)))
        if got != (2 ** (n - 1), 2**n, 2 * 3 ** (n - 1)):
            return False, f"n={n}: {got}"
    for flavor, top in ((Flavor.A, 6), (Flavor.B, 4), (Flavor.S, 4)):
        for n in range(1, top + 1):
            data = class_data(flavor, n)
            covered = np.sort(np.concatenate(data.members))
            if not np.array_equal(covered, np.arange(group_order(n, GROUP[flavor]))):
                return False, f"{flavor.value} classes of degree {n} do not partition the group"
    return True, "index counts n <= 10, classes partition S_n (n <= 6) and B_n (n <= 4)"


def crit_duality():
    entries = 0
    for flavor, n in ((Flavor.A, 6), (Flavor.B, 4), (Flavor.S, 4)):
        # independent pair count with the pure-Python group product
        elements = list(enumerate_group(n, GROUP[flavor]))
        index_of = {pi: descent_index(pi, flavor) for pi in elements}
        inverses = {pi: inverse(pi) for pi in elements}
        reps = {}
        for pi in elements:
            reps.setdefault(index_of[pi], pi)
        counts = {}
        for g, rep in reps.items():
            for sigma in elements:
                key = (index_of[sigma], index_of[compose(inverses[sigma], rep)], g)
                counts[key] = counts.get(key, 0) + 1
        table = compute_structure_constants(flavor, n)
        indices = enumerate_indices(flavor, n)
        for a, b in itertools.product(indices, repeat=2):
            prod = inner_product(b, a)
            for g in indices:
                expected = counts.get((a, b, g), 0)
                if prod.coefficient(g) != expected or table.entry(a, b, g) != expected:
                    return False, f"{flavor.value} n={n}: alpha={a} beta={b} gamma={g}"
                entries += 1
    return True, f"{entries} entries at A n=6, B n=4, S n=4"


def crit_specialization():
    count = 0
    for n in range(1, 5):
        for a in enumerate_signed(n):
            lhs = expand_fundamental(a, 4).substitute_u_equals_v().rename({Alphabet.V: Alphabet.X})
            if lhs != expand_fundamental(specialize_fundamental(a), 4):
                return False, f"{a}"
            count += 1
    return True, f"{count} signed compositions, n <= 4, N = 4"


CRITERIA = [
    (1, "Gamma equals F, type A", crit_gamma_type_a),
    (2, "Gamma equals F, type B and signed", crit_gamma_type_b),
    (3, "inner coproduct, type A", crit_coproduct_type_a),
    (4, "inner coproduct, type B and signed", crit_coproduct_type_b),
    (5, "closure and dimensions", crit_closure),
    (6, "representative independence", crit_representatives),
    (7, "basis change round trip", crit_basis_round_trip),
    (8, "counting", crit_counting),
    (9, "duality with the brute-force table", crit_duality),
    (10, "u = v specialization", crit_specialization),
]


@pytest.mark.parametrize("number,title,fn", CRITERIA, ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(number, title, fn):
    report(number, title, fn)


if __name__ == "__main__":
    failed = 0
    for number, title, fn in CRITERIA:
        try:
            report(number, title, fn)
        except AssertionError:
            failed += 1
    raise SystemExit(1 if failed else 0)
