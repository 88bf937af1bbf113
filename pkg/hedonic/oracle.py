# File: oracle.py
# Description: Brute-force ground truth for small instances. Enumerates all
# feasible partitions, builds the state graph of IS deviations over them and
# certifies convergence (acyclicity) or returns a cycle witness. Also hosts the
# seeded generators of random graphs, partitions and preference profiles used
# by the property suites.

import json
import logging
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from . import conf
from .dynamics import Partition, apply_deviation, find_is_deviations, verify_is
from .exceptions import GraphHasCycle, TooLarge
from .graph import Topology, build_graph, classify_topology, coalition_key, connected_supersets, enumerate_feasible_coalitions
from .prefs import additive_profile, is_individually_rational_state, ranked_profile

logger = logging.getLogger(__name__)


def partition_key(partition):
    return tuple(tuple(sorted(c)) for c in partition.coalitions)


def enumerate_feasible_partitions(g, cap=None):
    """Every partition of the players into connected coalitions, in canonical order"""
    if cap is None:
        cap = conf.partition_cap(classify_topology(g) is Topology.PATH)
    if g.n > cap:
        raise TooLarge(g.n, cap)

    partitions = []

    def extend(remaining, chosen):
        if not remaining:
            partitions.append(Partition(tuple(chosen)))
            return
        # The smallest unassigned player anchors the next coalition.
        anchor = min(remaining)
        for coalition in connected_supersets(g, anchor, within=remaining):
            extend(remaining - coalition, chosen + [coalition])

    extend(frozenset(g.players), [])
    partitions.sort(key=partition_key)
    logger.debug("%d feasible partitions on %s", len(partitions), g)
    return partitions


def exists_is_partition(g, p, cap=None):
    for partition in enumerate_feasible_partitions(g, cap):
        if verify_is(g, p, partition):
            return partition
    return None


@dataclass(frozen=True)
class StateGraph:
    """Every feasible partition with its outgoing IS deviations"""
    graph: object
    profile: object
    nodes: tuple
    arcs: dict

    @cached_property
    def digraph(self):
        # Parallel deviations between the same two states collapse into one edge.
        digraph = nx.DiGraph()
        digraph.add_nodes_from(self.nodes)
        for source, outgoing in self.arcs.items():
            for deviation, target in outgoing:
                if digraph.has_edge(source, target):
                    digraph[source][target]['deviations'].append(deviation)
                else:
                    digraph.add_edge(source, target, deviations=[deviation])
        return digraph

    @property
    def sinks(self):
        return [state for state in self.nodes if not self.arcs[state]]

    @property
    def arc_count(self):
        return sum(len(outgoing) for outgoing in self.arcs.values())


def build_state_graph(g, p, cap=None):
    nodes = enumerate_feasible_partitions(g, cap)
    arcs = {
        state: tuple((deviation, apply_deviation(g, state, deviation)) for deviation in find_is_deviations(g, p, state))
        for state in nodes
    }
    sg = StateGraph(graph=g, profile=p, nodes=tuple(nodes), arcs=arcs)
    logger.info("state graph: %d states, %d arcs, %d sinks", len(nodes), sg.arc_count, len(sg.sinks))
    return sg


@dataclass(frozen=True)
class Certificate:
    """Certified, or a cycle of states whose first and last entries coincide"""
    certified: bool
    cycle: tuple = None

    @property
    def cycle_length(self):
        return len(self.cycle) - 1 if self.cycle else None


def _certify(digraph):
    try:
        edges = nx.find_cycle(digraph)
    except nx.NetworkXNoCycle:
        return Certificate(certified=True)
    states = [u for u, _ in edges]
    states.append(edges[0][0])
    return Certificate(certified=False, cycle=tuple(states))


def certify_convergence(sg):
    """Certified iff no cyclic sequence of IS deviations exists from any state"""
    return _certify(sg.digraph)


def certify_convergence_from(sg, initial_filter):
    """Acyclicity of the part of the state graph reachable from the states passing the filter"""
    reachable = set()
    for state in sg.nodes:
        if state not in reachable and initial_filter(state):
            reachable.add(state)
            reachable |= nx.descendants(sg.digraph, state)
    if not reachable:
        return Certificate(certified=True)
    return _certify(sg.digraph.subgraph(reachable))


def all_states(partition):
    return True


def max_coalitions(k):
    def accept(partition):
        return len(partition) <= k
    return accept


def ir_states(p):
    def accept(partition):
        return is_individually_rational_state(p, partition)
    return accept


def longest_trajectory(sg):
    """Length and states of the longest deviation sequence of an acyclic state graph"""
    if not nx.is_directed_acyclic_graph(sg.digraph):
        raise GraphHasCycle("the state graph has a cycle; trajectories are unbounded")
    path = nx.dag_longest_path(sg.digraph)
    return len(path) - 1, path


def state_graph_summary(sg, certificate=None):
    g = sg.graph
    certificate = certificate or certify_convergence(sg)
    data = {
        'schema': 'hedonic.state-graph/1',
        'nodes': len(sg.nodes),
        'arcs': sg.arc_count,
        'sinks': [state.format(g) for state in sg.sinks],
        'certified': certificate.certified,
    }
    if certificate.cycle:
        data['cycle'] = [state.format(g) for state in certificate.cycle]
    return data


def state_graph_dot(sg):
    g = sg.graph
    lines = ['digraph states {', '  node [shape=box];']
    for state in sg.nodes:
        style = ' [peripheries=2]' if not sg.arcs[state] else ''
        lines.append(f"  {json.dumps(state.format(g))}{style};")
    for source, outgoing in sg.arcs.items():
        for deviation, target in outgoing:
            lines.append(f"  {json.dumps(source.format(g))} -> {json.dumps(target.format(g))} "
                         f"[label={json.dumps(g.label(deviation.player))}];")
    lines.append('}')
    return '\n'.join(lines) + '\n'


# Seeded generators

def random_tree(n, rng):
    if n == 2:
        return build_graph(2, [(0, 1)])
    tree = nx.from_prufer_sequence([rng.randrange(n) for _ in range(n - 2)])
    return build_graph(n, sorted(tuple(sorted(edge)) for edge in tree.edges()))


def random_connected_graph(n, rng, extra=0.3):
    """Random tree plus each remaining pair with probability `extra`"""
    tree = random_tree(n, rng)
    edges = set(tree.edges)
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) not in edges and rng.random() < extra:
                edges.add((i, j))
    return build_graph(n, sorted(edges))


def random_feasible_partition(g, rng):
    kept = nx.Graph()
    kept.add_nodes_from(g.players)
    kept.add_edges_from(edge for edge in sorted(g.edges) if rng.random() < 0.5)
    return Partition(tuple(frozenset(c) for c in nx.connected_components(kept)))


def _tiers_from_levels(levels):
    tiers = {}
    for coalition, level in levels.items():
        tiers.setdefault(level, []).append(coalition)
    return [sorted(tiers[level], key=coalition_key) for level in sorted(tiers)]


def _random_ranking(rng, coalitions, worst=None):
    depth = rng.randint(1, len(coalitions))
    levels = {coalition: rng.randrange(depth) for coalition in coalitions}
    if worst is not None:
        levels[worst] = depth - 1
    tiers = _tiers_from_levels(levels)
    return tiers, len(tiers)


def random_ir_profile(g, rng, cap=None):
    """Random tiers with the singleton pinned to the worst tier"""
    players = [
        _random_ranking(rng, enumerate_feasible_coalitions(g, i, cap), worst=frozenset([i]))
        for i in g.players
    ]
    return ranked_profile(g, players)


def random_general_profile(g, rng, cap=None):
    players = [_random_ranking(rng, enumerate_feasible_coalitions(g, i, cap)) for i in g.players]
    return ranked_profile(g, players)


def _random_linear_extension(rng, coalitions):
    """Random order of the coalitions in which every superset precedes its subsets"""
    subsets = {t: [s for s in coalitions if s < t] for t in coalitions}
    pending = {s: 0 for s in coalitions}
    for t in coalitions:
        for s in subsets[t]:
            pending[s] += 1
    available = [s for s in coalitions if pending[s] == 0]
    order = []
    while available:
        chosen = available.pop(rng.randrange(len(available)))
        order.append(chosen)
        for s in subsets[chosen]:
            pending[s] -= 1
            if pending[s] == 0:
                available.append(s)
    return order


def random_monotone_profile(g, rng, cap=None):
    """Random linear extension of the subset order, cut into contiguous tiers"""
    players = []
    for i in g.players:
        order = _random_linear_extension(rng, enumerate_feasible_coalitions(g, i, cap))
        tiers = [[order[0]]]
        for coalition in order[1:]:
            if rng.random() < 0.5:
                tiers.append([])
            tiers[-1].append(coalition)
        players.append((tiers, len(tiers)))
    return ranked_profile(g, players)


def random_las_profile(g, rng, high=5):
    """Uniform integer values in [0, high] on both directions of every edge"""
    values = [[0] * g.n for _ in g.players]
    for i, j in sorted(g.edges):
        values[i][j] = rng.randint(0, high)
        values[j][i] = rng.randint(0, high)
    return additive_profile(g, values)
