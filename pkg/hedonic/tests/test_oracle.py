import random

from django.test import SimpleTestCase, override_settings

from hedonic.catalog import cycle3, path_ir8, path_quadratic, star_general
from hedonic.dynamics import Partition, is_genuine_cycle, verify_is
from hedonic.exceptions import GraphHasCycle, TooLarge
from hedonic.graph import build_graph, classify_topology, path_graph, star_graph
from hedonic.oracle import (
    all_states, build_state_graph, certify_convergence, certify_convergence_from, enumerate_feasible_partitions,
    exists_is_partition, ir_states, longest_trajectory, max_coalitions, random_feasible_partition,
    random_ir_profile, random_las_profile, random_monotone_profile, random_tree, state_graph_dot,
    state_graph_summary,
)
from hedonic.prefs import is_individually_rational, is_las, is_monotone


class EnumerationTests(SimpleTestCase):

    def test_counts(self):
        self.assertEqual(len(enumerate_feasible_partitions(path_graph(4))), 8)
        self.assertEqual(len(enumerate_feasible_partitions(star_graph(4))), 8)
        triangle = build_graph(3, [(0, 1), (1, 2), (0, 2)])
        self.assertEqual(len(enumerate_feasible_partitions(triangle)), 5)

    def test_partitions_are_feasible_and_distinct(self):
        g = star_graph(5)
        partitions = enumerate_feasible_partitions(g)
        self.assertEqual(len(set(partitions)), len(partitions))
        for partition in partitions:
            partition.validate(g)

    def test_cap(self):
        with self.assertRaises(TooLarge):
            enumerate_feasible_partitions(path_graph(4), cap=3)

    @override_settings(HEDONIC_MAX_ENUM=4, HEDONIC_PATH_MAX_ENUM=4)
    def test_cap_from_settings(self):
        with self.assertRaises(TooLarge):
            enumerate_feasible_partitions(star_graph(5))
        self.assertEqual(len(enumerate_feasible_partitions(path_graph(4))), 8)

    def test_exists_is_partition(self):
        example = cycle3()
        found = exists_is_partition(example.graph, example.profile)
        self.assertTrue(verify_is(example.graph, example.profile, found))


class StateGraphTests(SimpleTestCase):

    def test_cycle3(self):
        example = cycle3()
        sg = build_state_graph(example.graph, example.profile)
        self.assertEqual(len(sg.nodes), 5)
        self.assertEqual(sg.sinks, [Partition.grand(3)])
        certificate = certify_convergence(sg)
        self.assertFalse(certificate.certified)
        self.assertTrue(is_genuine_cycle(example.graph, example.profile, certificate.cycle))
        with self.assertRaises(GraphHasCycle):
            longest_trajectory(sg)

    def test_path_ir8_filters(self):
        example = path_ir8()
        sg = build_state_graph(example.graph, example.profile)
        self.assertTrue(certify_convergence_from(sg, max_coalitions(3)).certified)
        self.assertTrue(certify_convergence_from(sg, max_coalitions(2)).certified)
        certificate = certify_convergence_from(sg, all_states)
        self.assertFalse(certificate.certified)
        self.assertTrue(is_genuine_cycle(example.graph, example.profile, certificate.cycle))
        self.assertEqual(certificate.cycle_length, 8)
        self.assertEqual(certify_convergence(sg).cycle_length, 8)

    def test_star_general_from_ir_states(self):
        example = star_general()
        sg = build_state_graph(example.graph, example.profile)
        certificate = certify_convergence(sg)
        self.assertFalse(certificate.certified)
        self.assertEqual(certificate.cycle_length, 6)
        self.assertTrue(is_genuine_cycle(example.graph, example.profile, certificate.cycle))
        self.assertTrue(certify_convergence_from(sg, ir_states(example.profile)).certified)

    def test_longest_trajectory(self):
        example = path_quadratic(4)
        sg = build_state_graph(example.graph, example.profile)
        self.assertTrue(certify_convergence(sg).certified)
        length, path = longest_trajectory(sg)
        self.assertGreaterEqual(length, 6)
        self.assertLessEqual(length, 2 * 4 ** 2)
        self.assertEqual(len(path), length + 1)

    def test_sinks_are_stable(self):
        example = path_ir8()
        sg = build_state_graph(example.graph, example.profile)
        self.assertTrue(sg.sinks)
        for sink in sg.sinks:
            self.assertTrue(verify_is(example.graph, example.profile, sink))

    def test_exports(self):
        example = cycle3()
        sg = build_state_graph(example.graph, example.profile)
        summary = state_graph_summary(sg)
        self.assertEqual(summary['schema'], 'hedonic.state-graph/1')
        self.assertEqual(summary['nodes'], 5)
        self.assertEqual(summary['sinks'], ['{{a,b,c}}'])
        self.assertFalse(summary['certified'])
        self.assertEqual(summary['cycle'][0], summary['cycle'][-1])
        dot = state_graph_dot(sg)
        self.assertTrue(dot.startswith('digraph states {'))
        self.assertIn('"{{a,c},{b}}" -> "{{a,b},{c}}" [label="a"];', dot)


class GeneratorTests(SimpleTestCase):

    def test_random_tree_is_reproducible(self):
        first = random_tree(7, random.Random(11))
        second = random_tree(7, random.Random(11))
        self.assertEqual(first, second)
        self.assertTrue(classify_topology(first).is_tree)

    def test_profiles_have_their_class(self):
        rng = random.Random(5)
        g = random_tree(6, rng)
        self.assertTrue(is_las(random_las_profile(g, rng)))
        self.assertTrue(is_monotone(random_monotone_profile(g, rng)))
        self.assertTrue(is_individually_rational(random_ir_profile(g, rng)))

    def test_random_partition_is_feasible(self):
        rng = random.Random(2)
        g = random_tree(8, rng)
        for _ in range(10):
            random_feasible_partition(g, rng).validate(g)
