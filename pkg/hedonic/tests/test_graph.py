from django.test import SimpleTestCase

from hedonic.exceptions import DisconnectedGraph, EmptySet, InvalidEdge, InvalidPlayer, NotAStar, SelfLoop, TooLarge
from hedonic.graph import (
    Topology, build_graph, classify_topology, cycle_graph, enumerate_feasible_coalitions, is_connected_subset,
    maximal_connected_components, path_graph, star_center, star_graph,
)


class BuildGraphTests(SimpleTestCase):

    def test_triangle(self):
        g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
        self.assertEqual(g.n, 3)
        self.assertEqual(g.edges, frozenset({(0, 1), (1, 2), (0, 2)}))

    def test_single_edge_is_smallest_graph(self):
        g = build_graph(2, [(1, 0)])
        self.assertEqual(g.edges, frozenset({(0, 1)}))

    def test_disconnected_rejected(self):
        with self.assertRaises(DisconnectedGraph):
            build_graph(4, [(0, 1), (2, 3)])

    def test_self_loop_rejected(self):
        with self.assertRaises(SelfLoop):
            build_graph(2, [(0, 1), (1, 1)])

    def test_bad_edges_rejected(self):
        with self.assertRaises(InvalidEdge):
            build_graph(2, [(0, 2)])
        with self.assertRaises(InvalidEdge):
            build_graph(2, [(0, 1), (1, 0)])

    def test_too_few_players(self):
        with self.assertRaises(InvalidPlayer):
            build_graph(1, [])

    def test_labels(self):
        g = path_graph(3, labels='abc')
        self.assertEqual(g.resolve('b'), 1)
        self.assertEqual(g.label(2), 'c')
        self.assertEqual(g.format_coalition({2, 0}), '{a,c}')
        with self.assertRaises(InvalidPlayer):
            g.resolve('z')
        with self.assertRaises(InvalidPlayer):
            build_graph(2, [(0, 1)], labels=['a', 'a'])

    def test_unlabeled_players_resolve_from_digits(self):
        g = path_graph(3)
        self.assertEqual(g.resolve('2'), 2)
        self.assertEqual(g.resolve(0), 0)
        with self.assertRaises(InvalidPlayer):
            g.resolve(3)


class ConnectivityTests(SimpleTestCase):

    def setUp(self):
        self.path = path_graph(4)

    def test_is_connected_subset(self):
        self.assertTrue(is_connected_subset(self.path, {0, 1}))
        self.assertTrue(is_connected_subset(self.path, {2}))
        self.assertFalse(is_connected_subset(self.path, {0, 2}))

    def test_empty_set(self):
        with self.assertRaises(EmptySet):
            is_connected_subset(self.path, set())

    def test_player_out_of_range(self):
        with self.assertRaises(InvalidPlayer):
            is_connected_subset(self.path, {0, 7})

    def test_maximal_components(self):
        self.assertEqual(
            maximal_connected_components(self.path, {0, 2, 3}),
            [frozenset({0}), frozenset({2, 3})],
        )
        self.assertEqual(maximal_connected_components(self.path, set()), [])

    def test_middle_removal_splits(self):
        self.assertEqual(
            maximal_connected_components(path_graph(3), {0, 2}),
            [frozenset({0}), frozenset({2})],
        )


class TopologyTests(SimpleTestCase):

    def test_classification(self):
        self.assertIs(classify_topology(path_graph(5)), Topology.PATH)
        self.assertIs(classify_topology(star_graph(5)), Topology.STAR)
        self.assertIs(classify_topology(cycle_graph(5)), Topology.CYCLE)
        spider = build_graph(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])
        self.assertIs(classify_topology(spider), Topology.TREE)
        complete = build_graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
        self.assertIs(classify_topology(complete), Topology.GENERAL)

    def test_most_specific_label(self):
        self.assertIs(classify_topology(build_graph(2, [(0, 1)])), Topology.PATH)
        # A three-player star is also a path.
        self.assertIs(classify_topology(star_graph(3)), Topology.PATH)

    def test_trees(self):
        self.assertTrue(Topology.PATH.is_tree)
        self.assertTrue(Topology.STAR.is_tree)
        self.assertFalse(Topology.CYCLE.is_tree)

    def test_star_center(self):
        self.assertEqual(star_center(star_graph(5)), 0)
        self.assertEqual(star_center(build_graph(4, [(0, 3), (1, 3), (2, 3)])), 3)
        with self.assertRaises(NotAStar):
            star_center(path_graph(4))
        with self.assertRaises(NotAStar):
            star_center(cycle_graph(4))


class FeasibleCoalitionTests(SimpleTestCase):

    def test_path_listing_order(self):
        g = path_graph(3)
        self.assertEqual(
            enumerate_feasible_coalitions(g, 0),
            [frozenset({0}), frozenset({0, 1}), frozenset({0, 1, 2})],
        )
        self.assertEqual(
            enumerate_feasible_coalitions(g, 1),
            [frozenset({1}), frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 1, 2})],
        )

    def test_star_counts(self):
        g = star_graph(4)
        self.assertEqual(len(enumerate_feasible_coalitions(g, 0)), 8)
        self.assertEqual(len(enumerate_feasible_coalitions(g, 1)), 5)

    def test_every_coalition_is_connected_and_contains_player(self):
        g = cycle_graph(5)
        for s in enumerate_feasible_coalitions(g, 2):
            self.assertIn(2, s)
            self.assertTrue(is_connected_subset(g, s))

    def test_cap(self):
        with self.assertRaises(TooLarge):
            enumerate_feasible_coalitions(path_graph(4), 0, cap=3)
