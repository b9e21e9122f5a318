import random

import pytest

from breakpark import multigraph as mg
from breakpark.errors import (
    BudgetExceededError,
    GraphFormatError,
    PreconditionError,
)
from breakpark.verify import random_connected_multigraph


def triangle():
    return mg.complete_multigraph(1, 3)


def k32():
    return mg.complete_multigraph(2, 3)


def path4():
    return mg.Multigraph(
        [[0, 1, 0, 0], [1, 0, 1, 0], [0, 1, 0, 1], [0, 0, 1, 0]]
    )


class TestConstruction:
    def test_rejects_asymmetric(self):
        with pytest.raises(GraphFormatError):
            mg.Multigraph([[0, 1], [2, 0]])

    def test_rejects_self_loop(self):
        with pytest.raises(GraphFormatError):
            mg.Multigraph([[1, 1], [1, 0]])

    def test_rejects_negative(self):
        with pytest.raises(GraphFormatError):
            mg.Multigraph([[0, -1], [-1, 0]])

    def test_connectivity(self):
        assert triangle().is_connected()
        assert not mg.Multigraph(
            [[0, 1, 0], [1, 0, 0], [0, 0, 0]]
        ).is_connected()


class TestGenus:
    def test_triangle(self):
        assert mg.genus(triangle()) == 1

    def test_k32(self):
        # m*C(n,2) - n + 1 at m=2, n=3
        assert mg.genus(k32()) == 4

    def test_tree(self):
        assert mg.genus(path4()) == 0

    def test_disconnected_rejected(self):
        with pytest.raises(PreconditionError):
            mg.genus(mg.Multigraph([[0, 0], [0, 0]]))


class TestEulerCharSubset:
    def test_whole_triangle(self):
        assert mg.euler_char_subset(triangle(), [0, 1, 2]) == 0

    def test_single_vertex(self):
        assert mg.euler_char_subset(triangle(), [0]) == 1

    def test_parallel_pair(self):
        assert mg.euler_char_subset(k32(), [0, 1]) == 0

    def test_empty_rejected(self):
        with pytest.raises(PreconditionError):
            mg.euler_char_subset(triangle(), [])


class TestOrientable:
    def test_cyclic_orientation(self):
        assert mg.is_orientable(triangle(), (0, 0, 0))

    def test_negative_entry_allowed(self):
        assert mg.is_orientable(triangle(), (1, -1, 0))

    def test_degree_mismatch(self):
        single = mg.Multigraph([[0, 1], [1, 0]])
        assert not mg.is_orientable(single, (0, 0))

    def test_agrees_with_orientation_oracle(self):
        rng = random.Random(7)
        for _ in range(20):
            g = random_connected_multigraph(rng, max_vertices=4, max_extra_edges=3)
            if g.edge_count() > 9:
                continue
            target = g.edge_count() - g.n
            for _ in range(10):
                d = [rng.randint(-1, 2) for _ in range(g.n)]
                d[0] += target - sum(d)
                assert mg.is_orientable(g, d) == mg.orientable_bruteforce(g, d)


class TestBreakDivisor:
    def test_paper_member(self):
        assert mg.is_break_divisor(k32(), (2, 2, 0))

    def test_concentrated_fails(self):
        # S = {2, 3} has degree 0 < genus 1 of the induced K_2^2
        assert not mg.is_break_divisor(k32(), (4, 0, 0))

    def test_tree_zero(self):
        assert mg.is_break_divisor(path4(), (0, 0, 0, 0))

    def test_orientability_route_agrees(self):
        for d in mg._compositions(4, 3, 4):
            assert mg.is_break_divisor(k32(), d) == mg.break_via_orientability(
                k32(), d
            )


class TestGParking:
    def test_classical(self):
        assert mg.is_g_parking(triangle(), 2, (0, 1))

    def test_all_maximal_fails(self):
        assert not mg.is_g_parking(triangle(), 2, (1, 1))

    def test_zero_always_parks(self):
        rng = random.Random(3)
        for _ in range(10):
            g = random_connected_multigraph(rng)
            assert mg.is_g_parking(g, 0, (0,) * (g.n - 1))

    def test_increment_breaks_maximal(self):
        # bump every coordinate of a maximal parking function by one
        import itertools

        g = k32()
        best = max(
            (
                a
                for a in itertools.product(range(5), repeat=2)
                if mg.is_g_parking(g, 2, a)
            ),
            key=sum,
        )
        bumped = tuple(x + 1 for x in best)
        assert not mg.is_g_parking(g, 2, bumped)


class TestEnumeration:
    def test_k32_twelve(self):
        divs = mg.enumerate_break_divisors(k32())
        assert len(divs) == 12
        expected = {
            (3, 1, 0), (3, 0, 1), (1, 3, 0), (1, 0, 3), (0, 3, 1), (0, 1, 3),
            (2, 2, 0), (2, 0, 2), (0, 2, 2),
            (2, 1, 1), (1, 2, 1), (1, 1, 2),
        }
        assert set(divs) == expected

    def test_sorted_output(self):
        divs = mg.enumerate_break_divisors(k32())
        assert divs == sorted(divs)

    def test_tree_single(self):
        assert mg.enumerate_break_divisors(path4()) == [(0, 0, 0, 0)]

    def test_cycle4(self):
        c4 = mg.Multigraph(
            [[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]]
        )
        assert len(mg.enumerate_break_divisors(c4)) == 4

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            mg.enumerate_break_divisors(mg.complete_multigraph(3, 6), budget=10)


class TestSpanningTrees:
    def test_triangle(self):
        assert mg.spanning_tree_count(triangle()) == 3

    def test_tree(self):
        assert mg.spanning_tree_count(path4()) == 1

    @pytest.mark.parametrize("m,n", [(1, 4), (2, 3), (3, 4), (2, 5), (3, 5)])
    def test_complete_multigraph_formula(self, m, n):
        assert mg.spanning_tree_count(mg.complete_multigraph(m, n)) == (
            m ** (n - 1) * n ** (n - 2)
        )

    def test_matches_break_count(self):
        rng = random.Random(11)
        for _ in range(15):
            g = random_connected_multigraph(rng, max_extra_edges=3)
            assert len(mg.enumerate_break_divisors(g)) == mg.spanning_tree_count(g)


class TestGraphFile:
    def test_roundtrip(self):
        text = "3\n1 2 2\n1 3 2\n2 3 2\n"
        assert mg.parse_graph_file(text) == k32()

    def test_comments_and_blanks(self):
        text = "# triangle\n3\n\n1 2 1  # edge\n1 3 1\n2 3 1\n"
        assert mg.parse_graph_file(text) == triangle()

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "x",
            "2\n1 1 1",
            "2\n2 1 1",
            "2\n1 2 1\n1 2 2",
            "2\n1 3 1",
            "2\n1 2",
        ],
    )
    def test_rejects_malformed(self, text):
        with pytest.raises(GraphFormatError):
            mg.parse_graph_file(text)
