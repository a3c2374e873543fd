import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mrwitness.arith import euler_phi
from mrwitness.characters import character_group
from mrwitness.errors import DomainError


class TestGroupStructure:
    def test_mod_9(self):
        g = character_group(9)
        assert g.total_order == 6
        assert g.components[0].generators == (2,)
        assert g.orders == (6,)
        assert len(list(g.characters())) == 6

    def test_mod_8(self):
        g = character_group(8)
        comp = g.components[0]
        assert comp.generators == (7, 5)  # -1 then 5
        assert comp.orders == (2, 2)
        assert g.total_order == 4

    def test_mod_15(self):
        g = character_group(15)
        assert [c.modulus for c in g.components] == [3, 5]
        assert g.orders == (2, 4)
        assert g.total_order == 8

    def test_small_moduli_rejected(self):
        with pytest.raises(DomainError):
            character_group(1)
        with pytest.raises(DomainError):
            character_group(0)

    @pytest.mark.parametrize("n", range(2, 200))
    def test_character_count_is_phi(self, n):
        assert character_group(n).total_order == euler_phi(n)

    @pytest.mark.parametrize("n", range(2, 101))
    def test_characters_distinct_by_value_table(self, n):
        g = character_group(n)
        tables = {tuple(np.round(chi.value_table(), 9)) for chi in g.characters()}
        assert len(tables) == g.total_order


class TestEvaluation:
    def test_trivial_character(self):
        g = character_group(12)
        for w in range(12):
            expected = 1.0 if math.gcd(w, 12) == 1 else 0.0
            assert g.trivial(w) == pytest.approx(expected)

    def test_nonunit_is_zero(self):
        g = character_group(9)
        for chi in g.characters():
            assert chi(0) == 0 and chi(3) == 0 and chi(6) == 0

    def test_order_two_character_mod_9(self):
        chi = character_group(9).character((3,))
        assert chi(2) == pytest.approx(-1)  # e(3/6)

    @given(st.integers(min_value=2, max_value=400), st.data())
    @settings(max_examples=150, deadline=None)
    def test_complete_multiplicativity(self, n, data):
        g = character_group(n)
        exps = tuple(data.draw(st.integers(0, m - 1)) for m in g.orders)
        chi = g.character(exps)
        units = [w for w in range(1, n) if math.gcd(w, n) == 1]
        u = data.draw(st.sampled_from(units))
        v = data.draw(st.sampled_from(units))
        assert chi(u * v % n) == pytest.approx(chi(u) * chi(v), abs=1e-12)

    @given(st.integers(min_value=2, max_value=300))
    @settings(max_examples=80, deadline=None)
    def test_orthogonality(self, n):
        g = character_group(n)
        totals = g.value_matrix().sum(axis=0)
        for w in range(n):
            expect = g.total_order if w == 1 else 0.0
            assert abs(totals[w] - expect) < 1e-9

    def test_value_table_matches_scalar(self):
        for n in (2, 3, 4, 8, 9, 16, 24, 45):
            g = character_group(n)
            for chi in g.characters():
                table = chi.value_table()
                for w in range(n):
                    assert table[w] == pytest.approx(chi(w), abs=1e-12)


class TestPower:
    def test_zero_power_is_trivial(self):
        g = character_group(9)
        chi = g.character((1,))
        assert (chi**0).is_trivial

    def test_order_power_is_trivial(self):
        g = character_group(40)
        for chi in g.characters():
            assert (chi ** chi.order).is_trivial

    def test_power_exponents_mod_9(self):
        g = character_group(9)
        assert (g.character((1,)) ** 3).exponents == (3,)

    @given(st.integers(min_value=2, max_value=200), st.integers(min_value=0, max_value=12), st.data())
    @settings(max_examples=120, deadline=None)
    def test_power_is_pointwise_power(self, n, alpha, data):
        g = character_group(n)
        exps = tuple(data.draw(st.integers(0, m - 1)) for m in g.orders)
        chi = g.character(exps)
        units = [w for w in range(1, n) if math.gcd(w, n) == 1]
        w = data.draw(st.sampled_from(units))
        assert (chi**alpha)(w) == pytest.approx(chi(w) ** alpha, abs=1e-10)


class TestConductor:
    def test_trivial_has_conductor_one(self):
        q, chi1 = character_group(9).trivial.conductor()
        assert q == 1
        assert chi1(5) == 1  # the trivial-group character is identically 1

    def test_order_two_mod_9_comes_from_mod_3(self):
        chi = character_group(9).character((3,))
        q, chi1 = chi.conductor()
        assert q == 3
        # chi agrees with chi1 on every unit mod 9
        for w in (1, 2, 4, 5, 7, 8):
            assert chi(w) == pytest.approx(chi1(w), abs=1e-12)

    def test_faithful_characters_mod_9_are_primitive(self):
        g = character_group(9)
        for t in (1, 2, 4, 5):
            assert g.character((t,)).conductor()[0] == 9

    @pytest.mark.parametrize("n", [12, 16, 24, 36, 40, 45, 60])
    def test_conductor_divides_and_induces(self, n):
        g = character_group(n)
        for chi in g.characters():
            q, chi1 = chi.conductor()
            assert n % q == 0
            assert chi.is_primitive == (q == n)
            for w in range(n):
                if math.gcd(w, n) == 1:
                    assert chi(w) == pytest.approx(chi1(w), abs=1e-12)
            # the inducing character is itself primitive
            assert chi1.conductor()[0] == q


class TestIndexing:
    def test_round_trip(self):
        g = character_group(120)
        for i in range(g.total_order):
            assert g.character_by_index(i).index == i

    def test_enumeration_matches_indices(self):
        g = character_group(45)
        for i, chi in enumerate(g.characters()):
            assert chi.index == i

    def test_bad_index(self):
        with pytest.raises(DomainError):
            character_group(9).character_by_index(6)
