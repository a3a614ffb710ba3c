import itertools

import pytest

from descalg.groups import SignedPermutation, compose, descent_composition, enumerate_group, identity, inverse
from descalg.ppartition import (
    LabeledPoset,
    TypeBPoset,
    bipartite_gamma,
    enumerate_B_ppartitions,
    enumerate_ppartitions,
    factorization_sum,
    gamma,
    gamma_B,
    gamma_flavor,
    gamma_signed,
    parse_poset,
    to_y_side,
)
from descalg.qsym import expand_fundamental
from descalg.series import Alphabet, Series, monomial, var
from descalg.verification import worked_example_series

X, Y, U, V = Alphabet.X, Alphabet.Y, Alphabet.U, Alphabet.V


def all_posets(n):
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    for mask in itertools.product((False, True), repeat=len(pairs)):
        rel = {p for p, m in zip(pairs, mask) if m}
        if any((j, i) in rel for i, j in rel):
            continue
        if any((i, k) not in rel for i, j in rel for j2, k in rel if j == j2):
            continue
        yield LabeledPoset(n, frozenset(rel))


def xsum(N, alphabet=X, start=1):
    return Series({monomial([var(alphabet, i)]): 1 for i in range(start, N + 1)}, {alphabet: N})


class TestEnumeration:
    def test_antichain(self):
        assert len(enumerate_ppartitions(LabeledPoset.antichain(3), 3)) == 27

    def test_small_example(self):
        # 3 >_P 2 <_P 1: f(3) >= f(2) < f(1)
        P = LabeledPoset.from_covers(3, [(2, 3), (2, 1)])
        assert sorted(enumerate_ppartitions(P, 2)) == [(2, 1, 1), (2, 1, 2)]
        expected = Series.from_monomials(
            [monomial([var(X, 1), var(X, 2), var(X, 2)]), monomial([var(X, 1), var(X, 1), var(X, 2)])], {X: 2}
        )
        assert gamma(P, 2) == expected

    def test_natural_chain_at_one(self):
        assert enumerate_ppartitions(identity(5, "A"), 1) == [(1,) * 5]

    def test_single_element(self):
        assert gamma(LabeledPoset.antichain(1), 4) == xsum(4)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_against_direct_filter(self, n):
        for P in all_posets(n):
            direct = [
                f for f in itertools.product(range(1, 4), repeat=n)
                if all(f[i - 1] <= f[j - 1] and (i < j or f[i - 1] < f[j - 1]) for i, j in P.relations)
            ]
            assert sorted(enumerate_ppartitions(P, 3)) == direct

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_decomposes_over_linear_extensions(self, n):
        for P in all_posets(n):
            for N in (1, 2, 3):
                whole = enumerate_ppartitions(P, N)
                pieces = [f for pi in P.linear_extensions() for f in enumerate_ppartitions(pi, N)]
                assert len(pieces) == len(set(pieces))
                assert set(pieces) == set(whole)

    @pytest.mark.parametrize("n", [2, 3])
    def test_truncation_is_monotone(self, n):
        for P in all_posets(n):
            for N in (1, 2):
                assert set(enumerate_ppartitions(P, N)) <= set(enumerate_ppartitions(P, N + 1))
        for pi in enumerate_group(n, "B"):
            assert set(enumerate_B_ppartitions(pi, 1)) <= set(enumerate_B_ppartitions(pi, 2))

    def test_chain_size_must_be_positive(self):
        with pytest.raises(ValueError):
            enumerate_ppartitions(LabeledPoset.antichain(1), 0)


class TestTypeB:
    def test_worked_examples(self):
        pi = SignedPermutation((-3, 2, -1))
        assert gamma_B(pi, 4) == worked_example_series("B", 4)
        assert gamma_signed(pi, 4) == worked_example_series("S", 4)

    def test_identity_of_b1(self):
        assert gamma_B(identity(1, "B"), 3) == xsum(3, start=0)

    def test_identity_signed_is_all_v(self):
        got = gamma_signed(identity(2, "B"), 2)
        monos = [monomial([var(V, i), var(V, j)]) for i in range(3) for j in range(i, 3)]
        assert got == Series.from_monomials(monos, {U: 2, V: 2})

    def test_maps_are_odd_and_order_preserving(self):
        for pi in enumerate_group(2, "B"):
            P = TypeBPoset.from_signed_permutation(pi)
            for f in enumerate_B_ppartitions(P, 2):
                ext = {0: 0, **{j: f[j - 1] for j in range(1, 3)}, **{-j: -f[j - 1] for j in range(1, 3)}}
                for i, j in P.relations:
                    assert ext[i] <= ext[j] and (i < j or ext[i] < ext[j])

    @pytest.mark.parametrize("pi", list(enumerate_group(2, "B")))
    def test_count_is_coefficient_sum(self, pi):
        assert len(enumerate_B_ppartitions(pi, 1)) == gamma_B(pi, 1).coefficient_sum()

    def test_u_equals_v_recovers_type_b(self):
        for pi in enumerate_group(3, "B"):
            assert gamma_signed(pi, 3).substitute_u_equals_v().rename({V: X}) == gamma_B(pi, 3)

    def test_unsymmetric_relations_rejected(self):
        with pytest.raises(ValueError):
            TypeBPoset.from_covers(2, [(1, 2)])
        assert TypeBPoset.from_covers(2, [(1, 2)], symmetrize=True).less(-2, -1)


def reversed_factorization_sum(pi, N):
    # the same sum with products read right to left: tau sigma = pi
    total = Series.zero()
    for sigma in enumerate_group(pi.n, "A"):
        tau = compose(pi, inverse(sigma))
        total = total + gamma(tau, N) * to_y_side(gamma(sigma, N))
    return total


def test_product_convention_is_forced():
    perms = list(enumerate_group(3, "A"))
    assert all(bipartite_gamma(pi, 2, 2, "A") == factorization_sum(pi, 2, 2, "A") for pi in perms)
    assert any(bipartite_gamma(pi, 2, 2, "A") != reversed_factorization_sum(pi, 2) for pi in perms)


class TestBipartite:
    def test_n1_type_a(self):
        got = bipartite_gamma(identity(1, "A"), 3, 2, "A")
        assert got == xsum(3) * xsum(2, Y)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_type_a_identity(self, n):
        for pi in enumerate_group(n, "A"):
            assert bipartite_gamma(pi, 3, 3, "A") == factorization_sum(pi, 3, 3, "A")

    @pytest.mark.parametrize("flavor", ["B", "S"])
    def test_type_b_identity_n2_N3(self, flavor):
        for pi in enumerate_group(2, "B"):
            assert bipartite_gamma(pi, 3, 3, flavor) == factorization_sum(pi, 3, 3, flavor)

    def test_unequal_truncations(self):
        for pi in enumerate_group(2, "B"):
            assert bipartite_gamma(pi, 1, 2, "S") == factorization_sum(pi, 1, 2, "S")
        for pi in enumerate_group(3, "A"):
            assert bipartite_gamma(pi, 2, 3, "A") == factorization_sum(pi, 2, 3, "A")

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_cardinality_type_a(self, n):
        # the product chain has N_x * N_y elements
        for pi in enumerate_group(n, "A"):
            assert bipartite_gamma(pi, 2, 3, "A").coefficient_sum() == len(enumerate_ppartitions(pi, 6))

    @pytest.mark.parametrize("n", [1, 2])
    def test_cardinality_type_b(self, n):
        # [-2..2]^2 is a signed chain with 2*2^2 + 2*2 positive elements
        for pi in enumerate_group(n, "B"):
            count = len(enumerate_B_ppartitions(pi, 12))
            assert bipartite_gamma(pi, 2, 2, "B").coefficient_sum() == count
            assert factorization_sum(pi, 2, 2, "B").coefficient_sum() == count

    def test_all_ones_evaluation_matches_product_chain(self):
        # setting every variable to 1 counts maps into a chain of N_x * N_y elements
        for pi in enumerate_group(3, "A"):
            total = bipartite_gamma(pi, 2, 2, "A").coefficient_sum()
            assert total == expand_fundamental(descent_composition(pi), 4).coefficient_sum()

    @pytest.mark.slow
    @pytest.mark.parametrize("flavor", ["B", "S"])
    def test_type_b_identity_n3(self, flavor):
        for pi in enumerate_group(3, "B"):
            assert bipartite_gamma(pi, 2, 2, flavor) == factorization_sum(pi, 2, 2, flavor)

    def test_wrong_group_rejected(self):
        with pytest.raises(TypeError):
            bipartite_gamma(identity(2, "B"), 2, 2, "A")


class TestPosetFiles:
    def test_parse(self):
        P = parse_poset("# comment\n3\n2 < 3\n2 < 1  # strict edge\n")
        assert P == LabeledPoset.from_covers(3, [(2, 3), (2, 1)])

    def test_parse_type_b(self):
        P = parse_poset("2\n1 < 2\n-2 < -1\n", type_b=True)
        assert P == TypeBPoset.from_covers(2, [(1, 2)], symmetrize=True)
        maps = enumerate_B_ppartitions(P, 2)
        assert all(a <= b for a, b in maps)
        assert gamma_flavor(P, 2, "S").coefficient_sum() == len(maps) == 15

    @pytest.mark.parametrize("text", ["", "x", "2\n1 2", "2\n1 < a", "2\n1 < 5"])
    def test_bad_input(self, text):
        with pytest.raises(ValueError):
            parse_poset(text)
