# File: catalog.py
# Description: Builders for the named instances (counterexamples to convergence
# and lower-bound constructions), each with its initial partition, a scripted
# schedule and the outcome the schedule must reproduce.
# Names with a size parameter are written name:param, e.g. star_lb:3.

import logging
from dataclasses import dataclass

from .bounds import root_tree, tree_deviation_bound
from .dynamics import Partition, RunStatus, ScriptStep, ScriptedScheduler, run_dynamics
from .exceptions import UnknownExample
from .graph import build_graph, coalition_key, enumerate_feasible_coalitions, path_graph, star_graph
from .prefs import additive_from_edges, is_individually_rational, is_las, is_monotone, ranked_profile

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Expected:
    status: RunStatus
    steps: int = None
    cycle_length: int = None
    cycle_states: tuple = None
    bound: int = None


@dataclass(frozen=True)
class Example:
    name: str
    graph: object
    profile: object
    initial: Partition
    schedule: tuple = None
    expected: Expected = None
    advertised: str = None


def _members(g, group):
    # Single-character labels may be written run together: "bcde".
    names = list(group) if isinstance(group, str) else group
    return frozenset(g.resolve(name) for name in names)


def _partition(g, *groups):
    return Partition(tuple(_members(g, group) for group in groups))


def _strict(g, *coalitions):
    """Strict ranking, best first; unlisted coalitions tie with the singleton"""
    tiers = [[_members(g, c)] for c in coalitions]
    singleton_tier = next(k for k, (c,) in enumerate(tiers) if len(c) == 1)
    return tiers, singleton_tier


def _steps(g, *moves):
    """Script from (player, toward) pairs; toward None means going alone"""
    return tuple(
        ScriptStep(g.resolve(player), alone=True) if toward is None
        else ScriptStep(g.resolve(player), toward=g.resolve(toward))
        for player, toward in moves
    )


def _states(g, *partitions):
    return tuple(_partition(g, *groups) for groups in partitions)


def cycle3():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)], labels='abc')
    p = additive_from_edges(g, {(0, 1): 1, (1, 2): 1, (2, 0): 1})
    cycle = _states(g, ('ac', 'b'), ('ab', 'c'), ('a', 'bc'), ('ac', 'b'))
    return Example(
        name='cycle3', graph=g, profile=p, initial=cycle[0],
        schedule=_steps(g, ('a', 'b'), ('b', 'c'), ('c', 'a')),
        expected=Expected(RunStatus.CYCLE_DETECTED, steps=3, cycle_length=3, cycle_states=cycle),
        advertised='las',
    )


def cycle_n(n):
    """
    Players 1..n on a cycle, each valuing its successor. From
    {1..n-2},{n-1},{n} a three-move pattern rotates the partition by one
    position, so the initial state recurs after 3n moves.
    """
    if n < 4:
        raise UnknownExample("cycle_n needs n >= 4")
    g = build_graph(n, [(i, (i + 1) % n) for i in range(n)], labels=[str(i + 1) for i in range(n)])
    p = additive_from_edges(g, {(i, (i + 1) % n): 1 for i in range(n)})

    def block(k):
        return frozenset((j - k) % n for j in range(n - 2))

    steps, states = [], []
    for k in range(n):
        last, middle, tail = (n - 3 - k) % n, (n - 2 - k) % n, (n - 1 - k) % n
        rest = block(k) - {last}
        states += [
            Partition((block(k), {middle}, {tail})),
            Partition((rest, {last, middle}, {tail})),
            Partition((rest, {last}, {middle, tail})),
        ]
        steps += [
            ScriptStep(last, toward=middle),
            ScriptStep(middle, toward=tail),
            ScriptStep(tail, toward=(-k) % n),
        ]
    states.append(states[0])
    return Example(
        name=f'cycle_n:{n}', graph=g, profile=p, initial=states[0], schedule=tuple(steps),
        expected=Expected(RunStatus.CYCLE_DETECTED, steps=3 * n, cycle_length=3 * n, cycle_states=tuple(states)),
        advertised='las',
    )


def _path_ir8_rankings(g):
    return {
        'a': _strict(g, 'ab', 'a'),
        'b': _strict(g, 'bcde', 'ab', 'bc', 'b'),
        'c': _strict(g, 'bcde', 'cde', 'cd', 'c'),
        'd': _strict(g, 'bcde', 'cde', 'cd', 'defg', 'def', 'bcd', 'd'),
        'e': _strict(g, 'defg', 'def', 'ef', 'bcde', 'cde', 'efg', 'e'),
        'f': _strict(g, 'defg', 'def', 'ef', 'f'),
        'g': _strict(g, 'defg', 'gh', 'fg', 'g'),
        'h': _strict(g, 'gh', 'h'),
    }


PATH_IR8_WHEEL = (
    ('a', 'bcde', 'f', 'gh'),
    ('a', 'bcd', 'ef', 'gh'),
    ('a', 'bc', 'def', 'gh'),
    ('a', 'bc', 'defg', 'h'),
    ('ab', 'c', 'defg', 'h'),
    ('ab', 'cd', 'efg', 'h'),
    ('ab', 'cde', 'fg', 'h'),
    ('a', 'bcde', 'fg', 'h'),
    ('a', 'bcde', 'f', 'gh'),
)

PATH_IR8_MOVES = (('e', 'f'), ('d', 'e'), ('g', 'f'), ('b', 'a'), ('d', 'c'), ('e', 'c'), ('b', 'c'), ('g', 'h'))


def path_ir8():
    g = path_graph(8, labels='abcdefgh')
    rankings = _path_ir8_rankings(g)
    p = ranked_profile(g, [rankings[g.label(i)] for i in g.players])
    wheel = _states(g, *PATH_IR8_WHEEL)
    return Example(
        name='path_ir8', graph=g, profile=p, initial=wheel[0],
        schedule=_steps(g, *PATH_IR8_MOVES),
        expected=Expected(RunStatus.CYCLE_DETECTED, steps=8, cycle_length=8, cycle_states=wheel),
        advertised='ir',
    )


def path_2coalitions():
    """
    path_ir8 extended by alpha and alpha' to the right of h. Starting from two
    coalitions, three moves reach the path_ir8 wheel. The grand coalition
    without the extra players is ranked below the singleton by f, and
    {a,b,c,d,e} below the singleton by a; every other ranking is inherited.
    """
    labels = list('abcdefgh') + ['alpha', "alpha'"]
    g = path_graph(10, labels=labels)
    rankings = _path_ir8_rankings(g)
    rankings['a'] = _strict(g, 'ab', 'a', 'abcde')
    rankings['f'] = _strict(g, 'defg', 'def', 'ef', 'f', 'abcdefgh')
    rankings['alpha'] = _strict(g, ['alpha', "alpha'"], ['alpha'])
    rankings["alpha'"] = ([], 0)
    p = ranked_profile(g, [rankings[g.label(i)] for i in g.players])

    pair = ['alpha', "alpha'"]
    wheel = tuple(_partition(g, *groups, pair) for groups in PATH_IR8_WHEEL)
    moves = (('alpha', "alpha'"), ('f', None), ('a', None)) + PATH_IR8_MOVES
    return Example(
        name='path_2coalitions', graph=g, profile=p,
        initial=_partition(g, list('abcdefgh') + ['alpha'], ["alpha'"]),
        schedule=_steps(g, *moves),
        expected=Expected(RunStatus.CYCLE_DETECTED, steps=11, cycle_length=8, cycle_states=wheel),
        advertised='not-ir',
    )


def star_general():
    g = build_graph(4, [(0, 3), (1, 3), (2, 3)], labels='abcd')
    p = ranked_profile(g, [
        _strict(g, 'abd', 'a', 'acd', 'ad', 'abcd'),
        _strict(g, 'bcd', 'b', 'abd', 'bd', 'abcd'),
        _strict(g, 'acd', 'c', 'bcd', 'cd', 'abcd'),
        ([], 0),
    ])
    cycle = _states(
        g,
        ('a', 'bcd'), ('a', 'bd', 'c'), ('abd', 'c'), ('ad', 'b', 'c'),
        ('acd', 'b'), ('a', 'b', 'cd'), ('a', 'bcd'),
    )
    return Example(
        name='star_general', graph=g, profile=p, initial=cycle[0],
        schedule=_steps(g, ('c', None), ('a', 'b'), ('b', None), ('c', 'a'), ('a', None), ('b', 'c')),
        expected=Expected(RunStatus.CYCLE_DETECTED, steps=6, cycle_length=6, cycle_states=cycle),
        advertised='not-ir',
    )


def almost_star():
    g = build_graph(5, [(0, 1), (1, 2), (0, 3), (0, 4)], labels='abcde')
    p = ranked_profile(g, [
        _strict(g, 'ab', 'ae', 'abd', 'ad', 'a'),
        _strict(g, 'abd', 'bc', 'ab', 'b'),
        _strict(g, 'bc', 'c'),
        _strict(g, 'abd', 'ad', 'd'),
        _strict(g, 'ae', 'e'),
    ])
    cycle = _states(
        g,
        ('ab', 'c', 'd', 'e'), ('a', 'bc', 'd', 'e'), ('ad', 'bc', 'e'),
        ('abd', 'c', 'e'), ('ae', 'b', 'c', 'd'), ('ab', 'c', 'd', 'e'),
    )
    return Example(
        name='almost_star', graph=g, profile=p, initial=cycle[0],
        schedule=_steps(g, ('b', 'c'), ('a', 'd'), ('b', 'a'), ('a', 'e'), ('a', 'b')),
        expected=Expected(RunStatus.CYCLE_DETECTED, steps=5, cycle_length=5, cycle_states=cycle),
        advertised='ir',
    )


def tree_monotone():
    """Spider with center T; a_i values x_i at 1 and a_(i+1 mod 3) at 2"""
    labels = ['T', 'a0', 'a1', 'a2', 'x0', 'x1', 'x2']
    g = build_graph(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)], labels=labels)
    weights = {}
    for i in range(3):
        weights[(1 + i, 4 + i)] = 1
        weights[(1 + i, 1 + (i + 1) % 3)] = 2
    p = additive_from_edges(g, weights)
    cycle = _states(
        g,
        (['x0', 'a0'], ['T', 'a1'], ['x1'], ['a2', 'x2']),
        (['x0'], ['T', 'a0', 'a1'], ['x1'], ['a2', 'x2']),
        (['x0'], ['T', 'a0'], ['a1', 'x1'], ['a2', 'x2']),
        (['x0'], ['T', 'a0', 'a2'], ['a1', 'x1'], ['x2']),
        (['x0', 'a0'], ['T', 'a2'], ['a1', 'x1'], ['x2']),
        (['x0', 'a0'], ['T', 'a1', 'a2'], ['x1'], ['x2']),
        (['x0', 'a0'], ['T', 'a1'], ['x1'], ['a2', 'x2']),
    )
    return Example(
        name='tree_monotone', graph=g, profile=p, initial=cycle[0],
        schedule=_steps(g, ('a0', 'T'), ('a1', 'x1'), ('a2', 'T'), ('a0', 'x0'), ('a1', 'T'), ('a2', 'x2')),
        expected=Expected(RunStatus.CYCLE_DETECTED, steps=6, cycle_length=6, cycle_states=cycle),
        advertised='monotone',
    )


def tree_monotone_01():
    """tree_monotone with b_i inserted between a_i and x_i; every value is 0 or 1"""
    labels = ['T', 'a0', 'a1', 'a2', 'b0', 'b1', 'b2', 'x0', 'x1', 'x2']
    edges = [(0, 1 + i) for i in range(3)] + [(1 + i, 4 + i) for i in range(3)] + [(4 + i, 7 + i) for i in range(3)]
    g = build_graph(10, edges, labels=labels)
    weights = {}
    for i in range(3):
        nxt = (i + 1) % 3
        for player in (1 + i, 4 + i):
            weights[(player, 7 + i)] = 1
            weights[(player, 1 + nxt)] = 1
            weights[(player, 4 + nxt)] = 1
    p = additive_from_edges(g, weights)
    cycle = _states(
        g,
        (['x0', 'b0', 'a0'], ['T', 'a1', 'b1'], ['x1'], ['a2', 'b2', 'x2']),
        (['x0', 'b0'], ['T', 'a0', 'a1', 'b1'], ['x1'], ['a2', 'b2', 'x2']),
        (['x0'], ['T', 'a0', 'b0', 'a1', 'b1'], ['x1'], ['a2', 'b2', 'x2']),
        (['x0'], ['T', 'a0', 'b0', 'a1'], ['x1', 'b1'], ['a2', 'b2', 'x2']),
        (['x0'], ['T', 'a0', 'b0'], ['a1', 'x1', 'b1'], ['a2', 'b2', 'x2']),
        (['x0'], ['T', 'a0', 'b0', 'a2'], ['a1', 'x1', 'b1'], ['b2', 'x2']),
        (['x0'], ['T', 'a0', 'b0', 'a2', 'b2'], ['a1', 'x1', 'b1'], ['x2']),
        (['x0', 'b0'], ['T', 'a0', 'a2', 'b2'], ['a1', 'x1', 'b1'], ['x2']),
        (['x0', 'b0', 'a0'], ['T', 'a2', 'b2'], ['a1', 'x1', 'b1'], ['x2']),
        (['x0', 'b0', 'a0'], ['T', 'a1', 'a2', 'b2'], ['x1', 'b1'], ['x2']),
        (['x0', 'b0', 'a0'], ['T', 'a1', 'b1', 'a2', 'b2'], ['x1'], ['x2']),
        (['x0', 'b0', 'a0'], ['T', 'a1', 'b1', 'a2'], ['x1'], ['b2', 'x2']),
        (['x0', 'b0', 'a0'], ['T', 'a1', 'b1'], ['x1'], ['a2', 'b2', 'x2']),
    )
    moves = (
        ('a0', 'T'), ('b0', 'a0'), ('b1', 'x1'), ('a1', 'b1'), ('a2', 'T'), ('b2', 'a2'),
        ('b0', 'x0'), ('a0', 'b0'), ('a1', 'T'), ('b1', 'a1'), ('b2', 'x2'), ('a2', 'b2'),
    )
    return Example(
        name='tree_monotone_01', graph=g, profile=p, initial=cycle[0],
        schedule=_steps(g, *moves),
        expected=Expected(RunStatus.CYCLE_DETECTED, steps=12, cycle_length=12, cycle_states=cycle),
        advertised='monotone',
    )


def star_lb(t):
    """
    Star with center c and leaves x_1..x_t, y_1..y_t. The center wants exactly
    one x, prefers a larger index and then more y's; leaves only want company.
    The script takes t(t+1) deviations before the dynamics stop.
    """
    if t < 1:
        raise UnknownExample("star_lb needs t >= 1")
    labels = ['c'] + [f'x{i}' for i in range(1, t + 1)] + [f'y{i}' for i in range(1, t + 1)]
    g = star_graph(2 * t + 1, labels=labels)
    xs = frozenset(range(1, t + 1))
    ys = frozenset(range(t + 1, 2 * t + 1))

    def center_key(coalition):
        if len(coalition) == 1:
            return (0,)
        chosen = coalition & xs
        if len(chosen) != 1:
            return (1,)
        return (2, min(chosen), len(coalition & ys))

    by_key = {}
    for coalition in enumerate_feasible_coalitions(g, 0):
        by_key.setdefault(center_key(coalition), []).append(coalition)
    center = ([by_key[key] for key in sorted(by_key, reverse=True)], len(by_key))

    players = [center]
    for leaf in range(1, 2 * t + 1):
        together = [c for c in enumerate_feasible_coalitions(g, leaf) if len(c) > 1]
        players.append(([together, [frozenset([leaf])]], 1))
    p = ranked_profile(g, players)

    steps = []
    for i in range(1, t + 1):
        steps.append(ScriptStep(0, toward=i))
        steps += [ScriptStep(y, toward=0) for y in sorted(ys)]
    return Example(
        name=f'star_lb:{t}', graph=g, profile=p, initial=Partition.singletons(g.n), schedule=tuple(steps),
        expected=Expected(RunStatus.CONVERGED, steps=t * (t + 1)),
        advertised='ir',
    )


def path_quadratic(n):
    """Path 1..n where i values i-1 at 1 and i+1 at 2; rounds of joins to the right"""
    if n < 2:
        raise UnknownExample("path_quadratic needs n >= 2")
    g = path_graph(n, labels=[str(i + 1) for i in range(n)])
    weights = {}
    for i in range(n - 1):
        weights[(i, i + 1)] = 2
        weights[(i + 1, i)] = 1
    p = additive_from_edges(g, weights)
    steps = tuple(ScriptStep(i, toward=i + 1) for r in range(1, n) for i in range(n - r))
    return Example(
        name=f'path_quadratic:{n}', graph=g, profile=p, initial=Partition.singletons(n), schedule=steps,
        expected=Expected(RunStatus.CONVERGED, steps=n * (n - 1) // 2),
        advertised='las',
    )


def exponential_schedule(t):
    """
    Script for tree_exponential(t). x_t joins y_t and then x_(t+1); the script
    for x_i repeats "join y_i, then join x_(i+1)" after every move of x_(i+1),
    so x_i moves 2^(t+1-i) times and the script has 2^(t+1) - 2 steps.
    """
    def x(i):
        return i - 1

    def y(i):
        return t + i

    steps = [ScriptStep(x(t), toward=y(t)), ScriptStep(x(t), toward=x(t + 1))]
    for i in range(t - 1, 0, -1):
        expanded = []
        for step in steps:
            expanded.append(step)
            if step.player == x(i + 1):
                expanded += [ScriptStep(x(i), toward=y(i)), ScriptStep(x(i), toward=x(i + 1))]
        steps = expanded
    return tuple(steps)


def tree_exponential(t):
    """Path x_1..x_(t+1) with a pendant y_i at every x_i, i <= t"""
    if t < 1:
        raise UnknownExample("tree_exponential needs t >= 1")
    labels = [f'x{i}' for i in range(1, t + 2)] + [f'y{i}' for i in range(1, t + 1)]
    edges = [(i, i + 1) for i in range(t)] + [(i, t + 1 + i) for i in range(t)]
    g = build_graph(2 * t + 1, edges, labels=labels)
    weights = {}
    for i in range(t):
        weights[(i, i + 1)] = 2
        weights[(i, t + 1 + i)] = 1
    p = additive_from_edges(g, weights)
    total = 2 ** (t + 1) - 2
    return Example(
        name=f'tree_exponential:{t}', graph=g, profile=p, initial=Partition.singletons(g.n),
        schedule=exponential_schedule(t),
        expected=Expected(RunStatus.CONVERGED, steps=total, bound=total),
        advertised='las',
    )


CATALOG = {
    'cycle3': (cycle3, None),
    'cycle_n': (cycle_n, 5),
    'path_ir8': (path_ir8, None),
    'path_2coalitions': (path_2coalitions, None),
    'star_general': (star_general, None),
    'almost_star': (almost_star, None),
    'tree_monotone': (tree_monotone, None),
    'tree_monotone_01': (tree_monotone_01, None),
    'star_lb': (star_lb, 3),
    'path_quadratic': (path_quadratic, 4),
    'tree_exponential': (tree_exponential, 3),
}

REPRODUCTION_SUITE = (
    ['cycle3']
    + [f'cycle_n:{n}' for n in range(5, 9)]
    + ['path_ir8', 'path_2coalitions', 'star_general', 'almost_star', 'tree_monotone', 'tree_monotone_01']
    + [f'star_lb:{t}' for t in range(2, 7)]
    + [f'path_quadratic:{n}' for n in range(3, 11)]
    + [f'tree_exponential:{t}' for t in range(1, 7)]
)


def build_example(name, param=None):
    """Build a catalog instance from "name" or "name:param" """
    if param is None and ':' in name:
        name, _, raw = name.partition(':')
        try:
            param = int(raw)
        except ValueError:
            raise UnknownExample(f"parameter {raw!r} of {name} is not an integer")
    if name not in CATALOG:
        raise UnknownExample(f"unknown example {name!r}; known: {', '.join(sorted(CATALOG))}")
    builder, default = CATALOG[name]
    if default is None:
        if param is not None:
            raise UnknownExample(f"{name} takes no parameter")
        return builder()
    return builder(default if param is None else param)


def advertised_class_holds(example):
    p = example.profile
    checks = {
        'las': lambda: is_las(p),
        'monotone': lambda: is_monotone(p),
        'ir': lambda: is_individually_rational(p),
        'not-ir': lambda: not is_individually_rational(p),
    }
    return checks[example.advertised]()


def reproduce(example):
    """Replay the example's script and list every difference from the expected outcome"""
    expected = example.expected
    g = example.graph
    outcome = run_dynamics(
        g, example.profile, example.initial,
        scheduler=ScriptedScheduler(example.schedule),
        max_steps=len(example.schedule) + 1,
    )
    problems = []
    if outcome.status is not expected.status:
        problems.append(f"status: expected {expected.status.value}, got {outcome.status.value}")
    if expected.steps is not None and outcome.steps != expected.steps:
        problems.append(f"steps: expected {expected.steps}, got {outcome.steps}")
    if expected.cycle_length is not None and outcome.cycle_length != expected.cycle_length:
        problems.append(f"cycle length: expected {expected.cycle_length}, got {outcome.cycle_length}")
    if expected.cycle_states is not None and outcome.cycle != expected.cycle_states:
        got = [s.format(g) for s in outcome.cycle or ()]
        want = [s.format(g) for s in expected.cycle_states]
        for k in range(max(len(got), len(want))):
            left = want[k] if k < len(want) else '-'
            right = got[k] if k < len(got) else '-'
            if left != right:
                problems.append(f"state {k}: expected {left}, got {right}")
    if expected.bound is not None:
        bound = tree_deviation_bound(root_tree(g, 0))
        if bound != expected.bound:
            problems.append(f"bound at {g.label(0)}: expected {expected.bound}, got {bound}")
    if not advertised_class_holds(example):
        problems.append(f"profile is not {example.advertised}")
    logger.info("reproduced %s: %s", example.name, 'ok' if not problems else f"{len(problems)} problems")
    return outcome, problems
