# File: bounds.py
# Description: Closed-form deviation bounds for IS dynamics on trees with LAS
# preferences. A tree rooted at r gives every node a set of children C_i and a
# subtree D_i; the coefficient m^i_j multiplies the child counts along the path
# from j up to its ancestor i, and the sum of m^r_j over all players bounds how
# often r can deviate.

import logging
from dataclasses import dataclass

import networkx as nx

from .exceptions import InvalidPlayer, InvariantViolation, NotATree, NotAnAncestor
from .graph import classify_topology

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RootedTree:
    graph: object
    root: int
    parent: dict
    children: dict
    subtree: dict
    depth: dict

    def is_leaf(self, i):
        return not self.children[i]


def root_tree(g, r):
    if not classify_topology(g).is_tree:
        raise NotATree(f"{g} is not a tree")
    if not (isinstance(r, int) and 0 <= r < g.n):
        raise InvalidPlayer(f"root {r!r} is not a player")

    bfs = nx.bfs_tree(g.nx_graph, r)
    parent = {child: par for par, child in bfs.edges()}
    children = {i: tuple(sorted(bfs.successors(i))) for i in g.players}
    subtree, depth = {}, {}
    for i in nx.dfs_postorder_nodes(bfs, r):
        kids = children[i]
        subtree[i] = frozenset([i]).union(*(subtree[c] for c in kids))
        depth[i] = 1 + max(depth[c] for c in kids) if kids else 0
    return RootedTree(graph=g, root=r, parent=parent, children=children, subtree=subtree, depth=depth)


def m_coefficient(rt, j, i):
    """Product of |C_q| over the path j = q_0, ..., q_k = i; i must be j or an ancestor of j"""
    product = 1
    q = j
    while True:
        product *= len(rt.children[q])
        if q == i:
            return product
        if q == rt.root:
            raise NotAnAncestor(f"{rt.graph.label(i)} is not an ancestor of {rt.graph.label(j)}")
        q = rt.parent[q]


def tree_deviation_bound(rt):
    """Upper bound on the number of deviations of the root"""
    return sum(m_coefficient(rt, j, rt.root) for j in rt.graph.players)


def subtree_break_bound(rt, i):
    # Bounds how often i leaves its parent while that edge carries the parent's label.
    return sum(m_coefficient(rt, j, i) for j in rt.subtree[i])


def tree_deviation_bounds(g):
    """tree_deviation_bound for every choice of root"""
    return {r: tree_deviation_bound(root_tree(g, r)) for r in g.players}


def check_tree_bounds(g, counts, breaks):
    """
    Compare observed deviation counts with the bounds of every rooting:
    counts[r] against the root bound, and breaks[(i, parent)] against the
    subtree bound of i.
    """
    for r in g.players:
        rt = root_tree(g, r)
        bound = tree_deviation_bound(rt)
        if counts.get(r, 0) > bound:
            raise InvariantViolation(None, f"{g.label(r)} deviated {counts[r]} times, bound {bound}")
        for i, par in rt.parent.items():
            limit = subtree_break_bound(rt, i)
            if breaks.get((i, par), 0) > limit:
                raise InvariantViolation(
                    None, f"{g.label(i)} broke its labeled edge to {g.label(par)} "
                          f"{breaks[(i, par)]} times, bound {limit}")
    logger.debug("deviation counts within the tree bounds for all %d roots", g.n)
