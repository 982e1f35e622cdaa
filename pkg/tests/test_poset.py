"""Tests for finite posets, the weak order and the Taskin order."""

from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest

from plactic_hopf.combinat import (
    Permutation,
    Tableau,
    enumerate_tableaux,
    insertion_tableau,
    leq_weak,
    permutations_of,
)
from plactic_hopf.errors import InvalidInputError, PosetConstructionError
from plactic_hopf.poset import FinitePoset, poset_for, taskin_poset, weak_order_poset, write_edge_list


def perm(text: str) -> Permutation:
    return Permutation(tuple(int(ch) for ch in text))


class TestFinitePoset:
    """Tests for building posets from covers."""

    def test_chain(self):
        """Test a three-element chain."""
        P = FinitePoset.from_covers(["a", "b", "c"], [("a", "b"), ("b", "c")])
        assert int(P.reach.sum()) == 6
        assert P.leq("a", "c")
        assert not P.leq("c", "a")
        assert P.minimal() == ["a"]
        assert P.maximal() == ["c"]

    def test_antichain(self):
        """Test that an antichain has identity reachability."""
        P = FinitePoset.from_covers(["a", "b", "c"], [])
        assert np.array_equal(P.reach, np.eye(3, dtype=bool))

    def test_cycle_rejected(self):
        """Test that a two-element cycle is reported with a witness."""
        with pytest.raises(PosetConstructionError) as exc_info:
            FinitePoset.from_covers(["a", "b"], [("a", "b"), ("b", "a")])
        assert set(exc_info.value.witness) == {"a", "b"}

    def test_self_loop_rejected(self):
        """Test that x < x is rejected."""
        with pytest.raises(PosetConstructionError):
            FinitePoset.from_covers(["a"], [("a", "a")])

    def test_unknown_element(self):
        """Test that relations must stay inside the ground set."""
        with pytest.raises(InvalidInputError):
            FinitePoset.from_covers(["a"], [("a", "b")])
        P = FinitePoset.from_covers(["a"], [])
        with pytest.raises(InvalidInputError):
            P.leq("a", "z")

    def test_intervals(self):
        """Test intervals, including empty ones."""
        P = FinitePoset.from_covers(["a", "b", "c"], [("a", "b"), ("b", "c")])
        assert P.interval("a", "a") == ["a"]
        assert P.interval("a", "c") == ["a", "b", "c"]
        assert P.interval("c", "a") == []
        assert P.upset("b") == ["b", "c"]
        assert P.downset("b") == ["a", "b"]

    def test_mobius_chain(self):
        """Test Möbius values on a chain."""
        P = FinitePoset.from_covers(["a", "b", "c"], [("a", "b"), ("b", "c")])
        assert P.mobius("a", "a") == 1
        assert P.mobius("a", "b") == -1
        assert P.mobius("a", "c") == 0
        assert P.mobius("c", "a") == 0

    def test_mobius_boolean_lattice(self):
        """Test mu = -1, 1 on the subsets of a two-element set."""
        P = FinitePoset.from_covers(
            ["0", "x", "y", "xy"], [("0", "x"), ("0", "y"), ("x", "xy"), ("y", "xy")]
        )
        assert P.mobius("0", "xy") == 1
        assert P.mobius_upset("0") == [("0", 1), ("x", -1), ("y", -1), ("xy", 1)]

    def test_hasse_edges_skip_implied_relations(self):
        """Test that generating pairs which are not covers are left out."""
        P = FinitePoset.from_covers(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])
        assert P.hasse_edges == [("a", "b"), ("b", "c")]


class TestWeakOrderPoset:
    """Tests for the weak order on S_n."""

    def test_s3(self):
        """Test the hexagon S_3."""
        P = weak_order_poset(3)
        assert len(P) == 6
        assert P.minimal() == [perm("123")]
        assert P.maximal() == [perm("321")]
        assert len(P.hasse_edges) == 6
        assert P.interval(perm("123"), perm("321")) == permutations_of(3)

    def test_reach_matches_inversions(self):
        """Test that the closure of the covers is inversion set containment on S_4."""
        P = weak_order_poset(4)
        for u in P:
            for v in P:
                assert P.leq(u, v) == leq_weak(u, v)

    def test_mobius_top(self):
        """Test mu(e, w0) on S_3."""
        P = weak_order_poset(3)
        assert P.mobius(perm("123"), perm("321")) == 1
        assert P.mobius(perm("123"), perm("231")) == 0

    def test_export(self, tmp_path):
        """Test the cover edge list of S_3."""
        path = tmp_path / "s3.txt"
        count = write_edge_list(weak_order_poset(3), path)
        assert count == 6
        assert path.read_text(encoding="utf-8").splitlines() == [
            "123 < 132",
            "123 < 213",
            "132 < 312",
            "213 < 231",
            "231 < 321",
            "312 < 321",
        ]


class TestTaskinPoset:
    """Tests for the Taskin order on T_n."""

    def test_t3(self):
        """Test that T_3 has four elements and a row as minimum."""
        P = taskin_poset(3)
        assert len(P) == 4
        assert P.minimal() == [Tableau(((1, 2, 3),))]
        assert P.maximal() == [Tableau(((1,), (2,), (3,)))]

    def test_t1(self):
        """Test the single element of T_1."""
        assert taskin_poset(1).elements == [Tableau(((1,),))]

    def test_p_is_increasing(self):
        """Test that u <= v in the weak order implies P(u) <= P(v) on S_4."""
        weak, taskin = weak_order_poset(4), taskin_poset(4)
        for u in weak:
            for v in weak.upset(u):
                assert taskin.leq(insertion_tableau(u), insertion_tableau(v))

    def test_mobius_identity(self):
        """Test that mu sums to [x = y] over every interval of T_5."""
        P = taskin_poset(5)
        for x in P:
            for y in P.upset(x):
                total = sum(P.mobius(x, z) for z in P.interval(x, y))
                assert total == (1 if x == y else 0)

    def test_concurrent_mobius(self):
        """Test that concurrent readers see the same Möbius rows."""
        P = taskin_poset(5)
        elements = enumerate_tableaux(5)
        with ThreadPoolExecutor(max_workers=4) as pool:
            rows = list(pool.map(P.mobius_upset, elements * 2))
        assert rows[: len(elements)] == rows[len(elements):]


class TestPosetFor:
    """Tests for choosing the order from a key."""

    def test_dispatch(self):
        """Test that the key type selects the order."""
        assert poset_for(perm("21")) is weak_order_poset(2)
        assert poset_for(Tableau(((1, 2),))) is taskin_poset(2)

    def test_unknown(self):
        """Test that other keys are rejected."""
        with pytest.raises(InvalidInputError):
            poset_for("12")
