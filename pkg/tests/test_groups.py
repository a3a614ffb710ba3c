import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from descalg.combinatorics import Composition, PseudoComposition, SignedComposition
from descalg.groups import (
    Permutation,
    SignedPermutation,
    compose,
    descent_composition,
    descent_index,
    descent_pseudo,
    enumerate_group,
    group_order,
    identity,
    inverse,
    parse_element,
    signed_descent_composition,
)


def signed_perms(n):
    return st.permutations(range(1, n + 1)).flatmap(
        lambda p: st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n).map(
            lambda s: SignedPermutation(tuple(a * b for a, b in zip(p, s)))
        )
    )


class TestProducts:
    def test_identity_law(self):
        for pi in enumerate_group(3, "A"):
            assert compose(identity(3, "A"), pi) == pi == compose(pi, identity(3, "A"))

    def test_involutions(self):
        assert compose(Permutation((2, 1)), Permutation((2, 1))) == Permutation((1, 2))
        assert compose(SignedPermutation((-1,)), SignedPermutation((-1,))) == SignedPermutation((1,))

    def test_convention_is_sigma_after_tau(self):
        sigma, tau = Permutation((2, 3, 1)), Permutation((2, 1, 3))
        assert compose(sigma, tau).window == (sigma(2), sigma(1), sigma(3))

    def test_signed_sign_rule(self):
        sigma, tau = SignedPermutation((2, -1)), SignedPermutation((-2, 1))
        # (sigma tau)(1) = -sigma(2) = 1, (sigma tau)(2) = sigma(1) = 2
        assert compose(sigma, tau) == SignedPermutation((1, 2))

    def test_inverse_examples(self):
        assert inverse(Permutation((3, 1, 2))) == Permutation((2, 3, 1))
        assert inverse(identity(4, "A")) == identity(4, "A")

    @given(st.permutations(range(1, 6)).map(Permutation), st.permutations(range(1, 6)).map(Permutation),
           st.permutations(range(1, 6)).map(Permutation))
    def test_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(signed_perms(4), signed_perms(4), signed_perms(4))
    def test_signed_group_axioms(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * inverse(a) == identity(4, "B") == inverse(a) * a

    def test_signed_extension_is_odd(self):
        for pi in enumerate_group(3, "B"):
            for i in range(-3, 4):
                assert pi(-i) == -pi(i)

    def test_mixed_groups_rejected(self):
        with pytest.raises(TypeError):
            compose(Permutation((1, 2)), SignedPermutation((1, 2)))
        with pytest.raises(ValueError):
            compose(Permutation((1, 2)), Permutation((1, 2, 3)))


class TestEnumeration:
    def test_orders(self):
        assert group_order(4, "A") == 24 == len(list(enumerate_group(4, "A")))
        assert group_order(3, "B") == 48 == len(list(enumerate_group(3, "B")))

    def test_distinct_and_lexicographic(self):
        for g in ("A", "B"):
            items = list(enumerate_group(4, g))
            assert len(set(items)) == len(items)
            assert [p.window for p in items] == sorted(p.window for p in items)

    @pytest.mark.parametrize("bad", [(1, 1), (0, 1), (1, 3)])
    def test_invalid_windows(self, bad):
        with pytest.raises(ValueError):
            Permutation(bad)

    def test_invalid_signed_window(self):
        with pytest.raises(ValueError):
            SignedPermutation((1, -1))


class TestDescents:
    def test_type_a_examples(self):
        assert descent_composition(Permutation((3, 4, 5, 2, 6, 1))) == Composition((3, 2, 1))
        assert descent_composition(identity(5, "A")) == Composition((5,))
        assert descent_composition(Permutation((5, 4, 3, 2, 1))) == Composition((1,) * 5)

    def test_type_b_examples(self):
        assert descent_pseudo(SignedPermutation((-3, 2, -1))) == PseudoComposition((0, 2, 1))
        assert descent_pseudo(identity(4, "B")) == PseudoComposition((4,))
        assert descent_pseudo(SignedPermutation((-1, -2, -3))) == PseudoComposition((0, 1, 1, 1))

    def test_signed_examples(self):
        pi = SignedPermutation((-3, 4, 5, -6, -2, -7, 1))
        assert signed_descent_composition(pi) == SignedComposition((-1, 2, -2, -1, 1))
        assert signed_descent_composition(identity(3, "B")) == SignedComposition((3,))
        assert signed_descent_composition(SignedPermutation((-3, 2, -1))) == SignedComposition((-1, 1, -1))

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_descent_composition_oracle(self, n):
        for pi in enumerate_group(n, "A"):
            w = pi.window
            des = {i for i in range(1, n) if w[i - 1] > w[i]}
            assert set(itertools.accumulate(descent_composition(pi).parts[:-1])) == des

    def test_flavor_type_checks(self):
        with pytest.raises(TypeError):
            descent_index(Permutation((1, 2)), "B")
        with pytest.raises(TypeError):
            descent_index(SignedPermutation((1, 2)), "A")

    def test_parse_element(self):
        assert parse_element("-3,2,-1", "S") == SignedPermutation((-3, 2, -1))
        assert parse_element(" 2, 1", "A") == Permutation((2, 1))
        with pytest.raises(ValueError):
            parse_element("1,x", "A")
