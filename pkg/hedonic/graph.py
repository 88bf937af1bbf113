# File: graph.py
# Description: Undirected player graphs for graph hedonic games. Provides the
# validated Graph value, connectivity queries, topology classification and the
# enumeration of feasible (connected) coalitions.

import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache

import networkx as nx

from . import conf
from .exceptions import (
    DisconnectedGraph, EmptySet, InvalidEdge, InvalidPlayer, NotAStar, SelfLoop, TooLarge,
)

logger = logging.getLogger(__name__)


class Topology(Enum):
    PATH = 'path'
    STAR = 'star'
    CYCLE = 'cycle'
    TREE = 'tree'
    GENERAL = 'general'

    @property
    def is_tree(self):
        """Paths and stars are trees as far as the bound machinery is concerned"""
        return self in (Topology.PATH, Topology.STAR, Topology.TREE)


def coalition_key(s):
    """Size-then-lexicographic order used for every listing of coalitions"""
    return (len(s), tuple(sorted(s)))


@dataclass(frozen=True)
class Graph:
    """
    Connected undirected graph over players 0..n-1.
    Build it with build_graph(), which validates the invariants.
    """
    n: int
    edges: frozenset
    labels: tuple = None

    @cached_property
    def nx_graph(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    @cached_property
    def adjacency(self):
        adjacency = {i: set() for i in range(self.n)}
        for i, j in self.edges:
            adjacency[i].add(j)
            adjacency[j].add(i)
        return {i: frozenset(neighbors) for i, neighbors in adjacency.items()}

    @property
    def players(self):
        return range(self.n)

    def neighbors(self, i):
        return self.adjacency[i]

    def has_edge(self, i, j):
        return (min(i, j), max(i, j)) in self.edges

    def label(self, i):
        return self.labels[i] if self.labels else str(i)

    def resolve(self, token):
        """Map a player label (or index) to its index"""
        if isinstance(token, bool):
            raise InvalidPlayer(f"not a player: {token!r}")
        if isinstance(token, int):
            if 0 <= token < self.n:
                return token
            raise InvalidPlayer(f"player {token} out of range 0..{self.n - 1}")
        if isinstance(token, str):
            if self.labels and token in self.labels:
                return self.labels.index(token)
            if not self.labels and token.isdigit():
                return self.resolve(int(token))
        raise InvalidPlayer(f"unknown player {token!r}")

    def format_coalition(self, s):
        return '{' + ','.join(self.label(i) for i in sorted(s)) + '}'

    def __str__(self):
        return f"Graph(n={self.n}, edges={len(self.edges)})"


def build_graph(n, edges, labels=None):
    """Validate and build a Graph; raises on self-loops, bad or duplicate edges, disconnection"""
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise InvalidPlayer(f"a graph needs at least two players, got {n!r}")

    normalized = set()
    for edge in edges:
        pair = tuple(edge)
        if len(pair) != 2 or not all(isinstance(v, int) and not isinstance(v, bool) for v in pair):
            raise InvalidEdge(f"edge {edge!r} is not a pair of player indices")
        i, j = pair
        if i == j:
            raise SelfLoop(f"self-loop on player {i}")
        if not (0 <= i < n and 0 <= j < n):
            raise InvalidEdge(f"edge ({i}, {j}) has an endpoint outside 0..{n - 1}")
        key = (min(i, j), max(i, j))
        if key in normalized:
            raise InvalidEdge(f"duplicate edge ({i}, {j})")
        normalized.add(key)

    if labels is not None:
        labels = tuple(labels)
        if len(labels) != n:
            raise InvalidPlayer(f"expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n or not all(isinstance(label, str) and label for label in labels):
            raise InvalidPlayer("labels must be distinct non-empty strings")

    graph = Graph(n=n, edges=frozenset(normalized), labels=labels)
    if not nx.is_connected(graph.nx_graph):
        raise DisconnectedGraph(f"graph on {n} players has {nx.number_connected_components(graph.nx_graph)} components")
    return graph


def path_graph(n, labels=None):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)], labels)


def star_graph(n, labels=None):
    """Star with center 0 and leaves 1..n-1"""
    return build_graph(n, [(0, i) for i in range(1, n)], labels)


def cycle_graph(n, labels=None):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)], labels)


def _check_players(g, s):
    for i in s:
        if not (isinstance(i, int) and 0 <= i < g.n):
            raise InvalidPlayer(f"player {i!r} out of range 0..{g.n - 1}")


def is_connected_subset(g, s):
    s = frozenset(s)
    if not s:
        raise EmptySet("connectivity of the empty set is undefined")
    _check_players(g, s)
    return nx.is_connected(g.nx_graph.subgraph(s))


def maximal_connected_components(g, s):
    """Split s into its maximal connected parts, ordered by minimum element"""
    if not s:
        return []
    components = (frozenset(c) for c in nx.connected_components(g.nx_graph.subgraph(s)))
    return sorted(components, key=min)


@lru_cache(maxsize=256)
def classify_topology(g):
    m = len(g.edges)
    degrees = [degree for _, degree in g.nx_graph.degree()]
    if m == g.n - 1:
        if max(degrees) <= 2:
            return Topology.PATH
        if max(degrees) == g.n - 1:
            return Topology.STAR
        return Topology.TREE
    if m == g.n and all(degree == 2 for degree in degrees):
        return Topology.CYCLE
    return Topology.GENERAL


def star_center(g):
    """Center of a star; a two-player graph is a star centered at 0"""
    if len(g.edges) != g.n - 1:
        raise NotAStar(f"{g} is not a tree")
    centers = [i for i in g.players if len(g.neighbors(i)) == g.n - 1]
    if not centers:
        raise NotAStar(f"{g} has no vertex adjacent to every other player")
    return centers[0]


def connected_supersets(g, seed, within=None):
    """
    All connected vertex sets that contain seed, optionally restricted to the
    players in `within`. Sets are grown one boundary vertex at a time.
    """
    start = frozenset([seed])
    found = {start}
    frontier = [start]
    while frontier:
        grown = []
        for s in frontier:
            boundary = set()
            for v in s:
                boundary |= g.neighbors(v)
            boundary -= s
            if within is not None:
                boundary &= within
            for v in boundary:
                t = s | {v}
                if t not in found:
                    found.add(t)
                    grown.append(t)
        frontier = grown
    return found


@lru_cache(maxsize=4096)
def _feasible_coalitions(g, i):
    return tuple(sorted(connected_supersets(g, i), key=coalition_key))


def enumerate_feasible_coalitions(g, i, cap=None):
    """F(i): every connected coalition containing i, in size-then-lex order"""
    _check_players(g, [i])
    cap = conf.coalition_cap() if cap is None else cap
    if g.n > cap:
        raise TooLarge(g.n, cap)
    coalitions = _feasible_coalitions(g, i)
    logger.debug("player %s has %d feasible coalitions", i, len(coalitions))
    return list(coalitions)
