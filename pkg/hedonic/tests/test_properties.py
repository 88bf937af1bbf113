"""Property-based suites: graph and preference invariants, convergence classes, per-step monitors and oracle consistency."""

import itertools
import random

import networkx as nx
from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from hedonic.bounds import tree_deviation_bounds
from hedonic.dynamics import (
    CoalitionCountMonitor, RunStatus, StarMonitor, find_is_deviations, find_nash_deviations, is_genuine_cycle,
    make_scheduler, run_dynamics, run_tree_dynamics_labeled, verify_is,
)
from hedonic.graph import (
    Topology, classify_topology, enumerate_feasible_coalitions, is_connected_subset, maximal_connected_components,
    path_graph, star_graph,
)
from hedonic.oracle import (
    build_state_graph, certify_convergence, certify_convergence_from, ir_states, longest_trajectory,
    max_coalitions, random_connected_graph, random_feasible_partition, random_general_profile, random_ir_profile,
    random_las_profile, random_monotone_profile, random_tree,
)
from hedonic.prefs import (
    Ordering, additive_profile, compare, is_individually_rational, is_las, is_monotone, weakly_prefers,
)

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


class ConvergenceClassTests(SimpleTestCase):

    @settings(max_examples=200, deadline=None)
    @given(seed=seeds, n=st.integers(min_value=2, max_value=7))
    def test_monotone_paths_converge(self, seed, n):
        rng = random.Random(seed)
        g = path_graph(n)
        sg = build_state_graph(g, random_monotone_profile(g, rng))
        self.assertTrue(certify_convergence(sg).certified)

    @settings(max_examples=200, deadline=None)
    @given(seed=seeds, n=st.integers(min_value=2, max_value=8))
    def test_las_trees_converge(self, seed, n):
        rng = random.Random(seed)
        g = random_tree(n, rng)
        sg = build_state_graph(g, random_las_profile(g, rng))
        self.assertTrue(certify_convergence(sg).certified)
        if classify_topology(g) is Topology.PATH:
            length, _ = longest_trajectory(sg)
            self.assertLessEqual(length, 2 * n * n)

    @settings(max_examples=200, deadline=None)
    @given(seed=seeds, n=st.integers(min_value=2, max_value=7))
    def test_ir_stars_converge(self, seed, n):
        rng = random.Random(seed)
        g = star_graph(n)
        sg = build_state_graph(g, random_ir_profile(g, rng))
        self.assertTrue(certify_convergence(sg).certified)

    @settings(max_examples=200, deadline=None)
    @given(seed=seeds, n=st.integers(min_value=2, max_value=6))
    def test_general_stars_converge_from_ir_states(self, seed, n):
        rng = random.Random(seed)
        g = star_graph(n)
        p = random_general_profile(g, rng)
        sg = build_state_graph(g, p)
        self.assertTrue(certify_convergence_from(sg, ir_states(p)).certified)

    @settings(max_examples=200, deadline=None)
    @given(seed=seeds, n=st.integers(min_value=2, max_value=7))
    def test_ir_paths_converge_from_few_coalitions(self, seed, n):
        rng = random.Random(seed)
        g = path_graph(n)
        sg = build_state_graph(g, random_ir_profile(g, rng))
        self.assertTrue(certify_convergence_from(sg, max_coalitions(3)).certified)
        self.assertTrue(certify_convergence_from(sg, max_coalitions(2)).certified)


class InvariantTests(SimpleTestCase):

    @settings(max_examples=200, deadline=None)
    @given(seed=seeds, n=st.integers(min_value=2, max_value=6))
    def test_monotone_is_deviations_are_nash_deviations(self, seed, n):
        rng = random.Random(seed)
        g = random_connected_graph(n, rng)
        p = random_monotone_profile(g, rng)
        for _ in range(5):
            state = random_feasible_partition(g, rng)
            self.assertEqual(find_is_deviations(g, p, state), find_nash_deviations(g, p, state))

    @settings(max_examples=200, deadline=None)
    @given(seed=seeds, n=st.integers(min_value=2, max_value=8))
    def test_ir_paths_never_add_coalitions(self, seed, n):
        rng = random.Random(seed)
        g = path_graph(n)
        p = random_ir_profile(g, rng)
        run_dynamics(
            g, p, random_feasible_partition(g, rng), make_scheduler('random', seed=seed),
            monitors=[CoalitionCountMonitor()],
        )

    @settings(max_examples=200, deadline=None)
    @given(seed=seeds, n=st.integers(min_value=3, max_value=7))
    def test_star_runs_keep_ir_states(self, seed, n):
        rng = random.Random(seed)
        g = star_graph(n)
        p = random_general_profile(g, rng)
        run_dynamics(g, p, random_feasible_partition(g, rng), make_scheduler('random', seed=seed),
                     monitors=[StarMonitor()])

    @settings(max_examples=1000, deadline=None)
    @given(seed=seeds, n=st.integers(min_value=2, max_value=8))
    def test_labeled_tree_runs(self, seed, n):
        rng = random.Random(seed)
        g = random_tree(n, rng)
        p = random_las_profile(g, rng)
        # Every player r deviates at most bound(r) times, so this limit is never reached.
        limit = sum(tree_deviation_bounds(g).values()) + 1
        outcome, history = run_tree_dynamics_labeled(
            g, p, random_feasible_partition(g, rng), make_scheduler('random', seed=seed), max_steps=limit)
        self.assertIs(outcome.status, RunStatus.CONVERGED)
        self.assertEqual(len(history), outcome.steps + 1)


class OracleConsistencyTests(SimpleTestCase):

    @settings(max_examples=100, deadline=None)
    @given(seed=seeds, n=st.integers(min_value=2, max_value=7))
    def test_random_runs_finish_within_longest_trajectory(self, seed, n):
        rng = random.Random(seed)
        g = random_tree(n, rng)
        p = random_las_profile(g, rng)
        sg = build_state_graph(g, p)
        self.assertTrue(certify_convergence(sg).certified)
        longest, _ = longest_trajectory(sg)
        for sink in sg.sinks:
            self.assertTrue(verify_is(g, p, sink))
        for k in range(10):
            outcome = run_dynamics(g, p, random_feasible_partition(g, rng),
                                   make_scheduler('random', seed=seed + k), max_steps=longest)
            self.assertIs(outcome.status, RunStatus.CONVERGED)

    @settings(max_examples=100, deadline=None)
    @given(seed=seeds, n=st.integers(min_value=2, max_value=5))
    def test_counter_cycles_are_genuine(self, seed, n):
        rng = random.Random(seed)
        g = random_connected_graph(n, rng)
        p = random_general_profile(g, rng)
        sg = build_state_graph(g, p)
        certificate = certify_convergence(sg)
        if not certificate.certified:
            self.assertTrue(is_genuine_cycle(g, p, certificate.cycle))
        for sink in sg.sinks:
            self.assertTrue(verify_is(g, p, sink))

    @settings(max_examples=100, deadline=None)
    @given(seed=seeds, n=st.integers(min_value=2, max_value=6))
    def test_run_outcomes_are_consistent(self, seed, n):
        rng = random.Random(seed)
        g = random_connected_graph(n, rng)
        p = random_general_profile(g, rng)
        outcome = run_dynamics(g, p, random_feasible_partition(g, rng), make_scheduler('first'))
        if outcome.status is RunStatus.CONVERGED:
            self.assertTrue(verify_is(g, p, outcome.final))
        elif outcome.status is RunStatus.CYCLE_DETECTED:
            self.assertTrue(is_genuine_cycle(g, p, outcome.cycle))

    @settings(max_examples=50, deadline=None)
    @given(seed=seeds)
    def test_random_scheduler_is_deterministic(self, seed):
        rng = random.Random(seed)
        g = random_connected_graph(6, rng)
        p = random_general_profile(g, rng)
        start = random_feasible_partition(g, rng)
        first = run_dynamics(g, p, start, make_scheduler('random', seed=seed))
        second = run_dynamics(g, p, start, make_scheduler('random', seed=seed))
        self.assertEqual(first.trace, second.trace)
        self.assertIs(first.status, second.status)


def random_additive_values(g, rng):
    """LAS, nonnegative or signed values, so every level of the class hierarchy shows up"""
    mode = rng.choice(['las', 'nonnegative', 'signed'])
    values = [[0] * g.n for _ in g.players]
    for i, j in itertools.permutations(g.players, 2):
        if mode == 'las':
            values[i][j] = rng.randint(0, 3) if g.has_edge(i, j) else 0
        elif mode == 'nonnegative':
            values[i][j] = rng.randint(0, 3)
        else:
            values[i][j] = rng.randint(-3, 3)
    return additive_profile(g, values)


class GraphPropertyTests(SimpleTestCase):

    @settings(max_examples=200, deadline=None)
    @given(seed=seeds, n=st.integers(min_value=2, max_value=8), data=st.data())
    def test_maximal_components(self, seed, n, data):
        g = random_connected_graph(n, random.Random(seed))
        s = data.draw(st.frozensets(st.integers(min_value=0, max_value=n - 1), min_size=1))
        parts = maximal_connected_components(g, s)
        self.assertEqual(frozenset().union(*parts), s)
        self.assertEqual(sum(len(part) for part in parts), len(s))
        for part in parts:
            self.assertTrue(is_connected_subset(g, part))
        for a, b in itertools.combinations(parts, 2):
            self.assertFalse(a & b)
            self.assertFalse(is_connected_subset(g, a | b))

    @settings(max_examples=30, deadline=None)
    @given(n=st.integers(min_value=2, max_value=10))
    def test_path_coalitions_are_intervals(self, n):
        g = path_graph(n)
        for i in g.players:
            for coalition in enumerate_feasible_coalitions(g, i):
                self.assertEqual(max(coalition) - min(coalition) + 1, len(coalition))

    @settings(max_examples=100, deadline=None)
    @given(seed=seeds, n=st.integers(min_value=2, max_value=10))
    def test_feasible_coalitions_are_exactly_the_connected_ones(self, seed, n):
        g = random_connected_graph(n, random.Random(seed), extra=0.2)
        for i in g.players:
            listed = enumerate_feasible_coalitions(g, i)
            self.assertEqual(len(listed), len(set(listed)))
            others = [j for j in g.players if j != i]
            expected = set()
            for size in range(len(others) + 1):
                for rest in itertools.combinations(others, size):
                    s = frozenset((i, *rest))
                    if nx.is_connected(g.nx_graph.subgraph(s)):
                        expected.add(s)
            self.assertEqual(set(listed), expected)


class PreferencePropertyTests(SimpleTestCase):

    @settings(max_examples=200, deadline=None)
    @given(seed=seeds, n=st.integers(min_value=2, max_value=8))
    def test_class_hierarchy(self, seed, n):
        rng = random.Random(seed)
        g = random_connected_graph(n, rng)
        p = random_additive_values(g, rng)
        if is_las(p):
            self.assertTrue(is_monotone(p))
        if is_monotone(p):
            self.assertTrue(is_individually_rational(p))

    @settings(max_examples=200, deadline=None)
    @given(seed=seeds, n=st.integers(min_value=2, max_value=8))
    def test_generated_las_profiles_sit_in_every_class(self, seed, n):
        rng = random.Random(seed)
        p = random_las_profile(random_tree(n, rng), rng)
        self.assertTrue(is_las(p))
        self.assertTrue(is_monotone(p))
        self.assertTrue(is_individually_rational(p))

    @settings(max_examples=25, deadline=None)
    @given(seed=seeds, n=st.integers(min_value=2, max_value=7), additive=st.booleans())
    def test_compare_is_a_total_preorder(self, seed, n, additive):
        rng = random.Random(seed)
        g = random_tree(n, rng)
        p = random_additive_values(g, rng) if additive else random_general_profile(g, rng)
        flipped = {Ordering.PREFER: Ordering.DISPREFER, Ordering.DISPREFER: Ordering.PREFER,
                   Ordering.INDIFFERENT: Ordering.INDIFFERENT}
        for i in g.players:
            coalitions = enumerate_feasible_coalitions(g, i)
            order = {(s, t): compare(p, i, s, t) for s, t in itertools.product(coalitions, repeat=2)}
            for (s, t), ordering in order.items():
                self.assertIs(order[t, s], flipped[ordering])
                self.assertEqual(weakly_prefers(p, i, s, t), ordering is not Ordering.DISPREFER)
            weak = {pair for pair, ordering in order.items() if ordering is not Ordering.DISPREFER}
            for s, t, u in itertools.product(coalitions, repeat=3):
                if (s, t) in weak and (t, u) in weak:
                    self.assertIn((s, u), weak)
