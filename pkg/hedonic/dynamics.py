# File: dynamics.py
# Description: IS dynamics on feasible partitions. Defines partitions and
# deviations, enumerates IS (and Nash) deviations, applies them with the
# split-on-departure rule, and runs the dynamics loop under a scheduler policy
# with cycle detection. Per-step monitors check the invariants of specific
# topologies and preference classes; EdgeLabeler implements the edge labeling
# used for trees with LAS preferences.

import json
import logging
import random
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

from . import conf
from .bounds import check_tree_bounds
from .exceptions import (
    HedonicError, InvalidDeviation, InvalidPartition, InvariantViolation, NotATree, NotLAS,
    ScriptedDeviationInvalid,
)
from .graph import classify_topology, is_connected_subset, maximal_connected_components, star_center
from .prefs import PreferenceKind, is_individually_rational_state, is_las

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Partition:
    """
    A partition of the players into coalitions, kept in canonical form
    (coalitions ordered by their minimum element). Use validate() to check it
    against a graph.
    """
    coalitions: tuple

    def __post_init__(self):
        coalitions = [frozenset(c) for c in self.coalitions]
        if any(not c for c in coalitions):
            raise InvalidPartition("a partition cannot contain an empty coalition")
        object.__setattr__(self, 'coalitions', tuple(sorted(coalitions, key=min)))

    @classmethod
    def of(cls, *coalitions):
        return cls(tuple(coalitions))

    @classmethod
    def singletons(cls, n):
        return cls(tuple(frozenset([i]) for i in range(n)))

    @classmethod
    def grand(cls, n):
        return cls((frozenset(range(n)),))

    @cached_property
    def membership(self):
        return {i: c for c in self.coalitions for i in c}

    def coalition_of(self, i):
        return self.membership[i]

    def __len__(self):
        return len(self.coalitions)

    def __iter__(self):
        return iter(self.coalitions)

    def as_lists(self):
        return [sorted(c) for c in self.coalitions]

    def format(self, g):
        return '{' + ','.join(g.format_coalition(c) for c in self.coalitions) + '}'

    def validate(self, g):
        """Check disjointness, cover of 0..n-1 and connectivity of every coalition"""
        covered = [i for c in self.coalitions for i in c]
        if len(covered) != len(set(covered)):
            raise InvalidPartition("coalitions overlap")
        if set(covered) != set(g.players):
            missing = sorted(set(g.players) - set(covered))
            extra = sorted(set(covered) - set(g.players))
            raise InvalidPartition(f"partition does not cover the players (missing {missing}, unknown {extra})")
        for c in self.coalitions:
            if not is_connected_subset(g, c):
                raise InvalidPartition(f"coalition {g.format_coalition(c)} is not connected")
        return self


@dataclass(frozen=True)
class Deviation:
    """Player leaves its coalition `source` to join `target`; target None means going alone"""
    player: int
    source: frozenset
    target: frozenset = None

    @property
    def goes_alone(self):
        return self.target is None

    @property
    def joined(self):
        if self.target is None:
            return frozenset([self.player])
        return self.target | {self.player}

    def describe(self, g):
        to = 'alone' if self.target is None else g.format_coalition(self.target)
        return f"{g.label(self.player)}: {g.format_coalition(self.source)} -> {to}"


def _deviations(g, p, partition, require_acceptance):
    found = []
    for i in g.players:
        source = partition.coalition_of(i)
        current = p.score(i, source)
        neighbors = g.neighbors(i)
        for target in partition.coalitions:
            if i in target or not neighbors & target:
                continue
            joined = target | {i}
            if p.score(i, joined) <= current:
                continue
            if require_acceptance and any(p.score(j, joined) < p.score(j, target) for j in target):
                continue
            found.append(Deviation(i, source, target))
        if len(source) > 1 and p.score(i, frozenset([i])) > current:
            found.append(Deviation(i, source, None))
    return found


def find_is_deviations(g, p, partition):
    """
    Every IS deviation in the partition: player ascending, targets by minimum
    element, going alone last.
    """
    return _deviations(g, p, partition, require_acceptance=True)


def find_nash_deviations(g, p, partition):
    """Deviations the mover wants, ignoring whether the target coalition accepts"""
    return _deviations(g, p, partition, require_acceptance=False)


def verify_is(g, p, partition):
    return not find_is_deviations(g, p, partition)


def apply_deviation(g, partition, deviation):
    i = deviation.player
    source = partition.coalition_of(i)
    if deviation.source != source:
        raise InvalidDeviation(f"player {g.label(i)} is not in {g.format_coalition(deviation.source)}")
    if deviation.target is None:
        if len(source) == 1:
            raise InvalidDeviation(f"player {g.label(i)} is already alone")
    else:
        if deviation.target not in partition.coalitions or i in deviation.target:
            raise InvalidDeviation(f"{g.format_coalition(deviation.target)} is not another coalition of the partition")
        if not g.neighbors(i) & deviation.target:
            raise InvalidDeviation(
                f"{g.format_coalition(deviation.joined)} is not connected")

    rest = [c for c in partition.coalitions if c != source and c != deviation.target]
    rest.append(deviation.joined)
    rest.extend(maximal_connected_components(g, source - {i}))
    return Partition(tuple(rest))


# Schedulers

class Scheduler:
    """Picks one of the valid deviations; returning None stops the run"""
    name = None

    def choose(self, g, p, partition, deviations):
        raise NotImplementedError


class FirstScheduler(Scheduler):
    name = 'first'

    def choose(self, g, p, partition, deviations):
        return deviations[0]


class RandomScheduler(Scheduler):
    name = 'random'

    def __init__(self, seed):
        self.seed = seed
        self.rng = random.Random(seed)

    def choose(self, g, p, partition, deviations):
        return self.rng.choice(deviations)


class BestResponseScheduler(Scheduler):
    """First deviating player, moved to its most preferred acceptable target"""
    name = 'best-response'

    def choose(self, g, p, partition, deviations):
        player = deviations[0].player
        options = [d for d in deviations if d.player == player]
        return max(options, key=lambda d: p.score(player, d.joined))


@dataclass(frozen=True)
class ScriptStep:
    """
    One scripted move. `toward` names any member of the target coalition;
    `alone` asks for the go-alone deviation; with neither, the mover's first
    deviation in canonical order is taken.
    """
    player: int
    toward: int = None
    alone: bool = False

    def matches(self, deviation):
        if deviation.player != self.player:
            return False
        if self.alone:
            return deviation.target is None
        if self.toward is not None:
            return deviation.target is not None and self.toward in deviation.target
        return True

    def describe(self, g):
        if self.alone:
            return f"{g.label(self.player)} -> alone"
        if self.toward is not None:
            return f"{g.label(self.player)} -> coalition of {g.label(self.toward)}"
        return f"{g.label(self.player)} -> first option"


class ScriptedScheduler(Scheduler):
    name = 'scripted'

    def __init__(self, steps):
        self.steps = tuple(steps)
        self.position = 0

    def choose(self, g, p, partition, deviations):
        if self.position >= len(self.steps):
            return None
        step = self.steps[self.position]
        self.position += 1
        for deviation in deviations:
            if step.matches(deviation):
                return deviation
        raise ScriptedDeviationInvalid(
            self.position, f"{step.describe(g)} is not an IS deviation in {partition.format(g)}")


SCHEDULERS = ('first', 'random', 'best-response', 'scripted')


def make_scheduler(name, seed=None, script=None):
    if name == 'first':
        return FirstScheduler()
    if name == 'random':
        if seed is None:
            raise HedonicError("the random scheduler needs an explicit seed")
        return RandomScheduler(seed)
    if name == 'best-response':
        return BestResponseScheduler()
    if name == 'scripted':
        if script is None:
            raise HedonicError("the scripted scheduler needs a schedule")
        return ScriptedScheduler(script)
    raise HedonicError(f"unknown scheduler {name!r}; choose one of {', '.join(SCHEDULERS)}")


# Runs

class RunStatus(Enum):
    CONVERGED = 'converged'
    CYCLE_DETECTED = 'cycle-detected'
    TRUNCATED = 'truncated'


@dataclass
class RunOutcome:
    status: RunStatus
    steps: int
    trace: tuple
    states: tuple
    cycle: tuple = None
    per_player_counts: dict = field(default_factory=dict)
    per_player_breaks: dict = field(default_factory=dict)

    @property
    def initial(self):
        return self.states[0]

    @property
    def final(self):
        return self.states[-1]

    @property
    def cycle_length(self):
        return len(self.cycle) - 1 if self.cycle else None

    def summary(self, g):
        data = {
            'schema': 'hedonic.run/1',
            'status': self.status.value,
            'steps': self.steps,
            'final': [[g.label(i) for i in c] for c in self.final.as_lists()],
            'per_player_counts': {g.label(i): self.per_player_counts.get(i, 0) for i in g.players},
        }
        if self.cycle:
            data['cycle_length'] = self.cycle_length
            data['cycle'] = [state.format(g) for state in self.cycle]
        if self.per_player_breaks:
            data['per_player_breaks'] = {
                f"{g.label(i)}->{g.label(j)}": count for (i, j), count in sorted(self.per_player_breaks.items())
            }
        return data


class Monitor:
    """Observer hooked into run_dynamics; hard monitors raise InvariantViolation"""

    def start(self, g, p, partition):
        pass

    def step(self, t, before, deviation, after):
        pass

    def finish(self, outcome):
        pass


def run_dynamics(g, p, initial, scheduler=None, max_steps=None, monitors=()):
    """
    Apply IS deviations chosen by the scheduler until none is left
    (converged), a canonical state recurs (cycle detected) or max_steps
    deviations have been applied (truncated).
    """
    initial.validate(g)
    scheduler = scheduler or FirstScheduler()
    max_steps = conf.default_max_steps(g.n) if max_steps is None else max_steps
    for monitor in monitors:
        monitor.start(g, p, initial)

    state = initial
    states = [state]
    seen = {state: 0}
    trace = []
    counts = Counter()
    cycle = None

    while True:
        deviations = find_is_deviations(g, p, state)
        if not deviations:
            status = RunStatus.CONVERGED
            break
        if len(trace) >= max_steps:
            status = RunStatus.TRUNCATED
            break
        deviation = scheduler.choose(g, p, state, deviations)
        if deviation is None:
            status = RunStatus.TRUNCATED
            break
        after = apply_deviation(g, state, deviation)
        trace.append(deviation)
        counts[deviation.player] += 1
        logger.debug("step %d: %s", len(trace), deviation.describe(g))
        for monitor in monitors:
            monitor.step(len(trace), state, deviation, after)
        state = after
        states.append(state)
        if state in seen:
            cycle = tuple(states[seen[state]:])
            status = RunStatus.CYCLE_DETECTED
            break
        seen[state] = len(states) - 1

    outcome = RunOutcome(
        status=status,
        steps=len(trace),
        trace=tuple(trace),
        states=tuple(states),
        cycle=cycle,
        per_player_counts=dict(counts),
    )
    for monitor in monitors:
        monitor.finish(outcome)
    logger.info("run finished: %s after %d steps", status.value, outcome.steps)
    return outcome


def replay(g, p, initial, script):
    """Replay a script strictly; every step must be an IS deviation. Returns the visited states."""
    scheduler = ScriptedScheduler(script)
    state = initial.validate(g)
    states = [state]
    for _ in script:
        deviation = scheduler.choose(g, p, state, find_is_deviations(g, p, state))
        state = apply_deviation(g, state, deviation)
        states.append(state)
    return states


def linking_deviation(g, p, before, after):
    """The IS deviation taking `before` to `after`, or None"""
    for deviation in find_is_deviations(g, p, before):
        if apply_deviation(g, before, deviation) == after:
            return deviation
    return None


def is_genuine_cycle(g, p, states):
    """First state equals last and each consecutive pair is linked by an IS deviation"""
    if len(states) < 2 or states[0] != states[-1]:
        return False
    return all(linking_deviation(g, p, a, b) is not None for a, b in zip(states, states[1:]))


# Trace output

class TraceWriter(Monitor):
    """Streams one JSON object per applied deviation"""

    def __init__(self, stream):
        self.stream = stream

    def step(self, t, before, deviation, after):
        record = {
            'step': t,
            'player': deviation.player,
            'from': sorted(deviation.source),
            'to': None if deviation.target is None else sorted(deviation.target),
            'partition': after.as_lists(),
        }
        self.stream.write(json.dumps(record) + '\n')
        self.stream.flush()


# Invariant monitors

class CoalitionCountMonitor(Monitor):
    """On a path with IR preferences the number of coalitions never increases"""

    def step(self, t, before, deviation, after):
        if len(after) > len(before):
            raise InvariantViolation(t, f"coalition count grew from {len(before)} to {len(after)}")


class StarDeviation(Enum):
    CENTER_TO_LEAF = 'center-to-leaf'
    LEAF_TO_CENTRAL = 'leaf-to-central'
    GO_ALONE = 'go-alone'


def classify_star_deviation(g, partition, deviation):
    center = star_center(g)
    if deviation.target is None:
        return StarDeviation.GO_ALONE
    if deviation.player == center:
        return StarDeviation.CENTER_TO_LEAF
    if center not in deviation.target:
        raise InvalidDeviation(f"leaf {g.label(deviation.player)} can only join the central coalition")
    return StarDeviation.LEAF_TO_CENTRAL


class StarMonitor(Monitor):
    """
    Individual rationality of the state is preserved on stars (hard check),
    and converging runs make at most c*n^2 deviations that are not go-alone
    moves (soft check, logged).
    """

    def __init__(self, constant=None):
        self.constant = conf.star_constant() if constant is None else constant
        self.kinds = Counter()

    def start(self, g, p, partition):
        star_center(g)
        self.g = g
        self.p = p
        self.ir_state = is_individually_rational_state(p, partition)

    def step(self, t, before, deviation, after):
        self.kinds[classify_star_deviation(self.g, before, deviation)] += 1
        ir_after = is_individually_rational_state(self.p, after)
        if self.ir_state and not ir_after:
            raise InvariantViolation(t, f"IR state lost: {after.format(self.g)}")
        self.ir_state = ir_after

    @property
    def joining_moves(self):
        return self.kinds[StarDeviation.CENTER_TO_LEAF] + self.kinds[StarDeviation.LEAF_TO_CENTRAL]

    def finish(self, outcome):
        limit = self.constant * self.g.n ** 2
        if outcome.status is RunStatus.CONVERGED and self.joining_moves > limit:
            logger.warning("star run made %d joining moves, above %d*n^2 = %d",
                           self.joining_moves, self.constant, limit)


def _edge(i, j):
    return (i, j) if i < j else (j, i)


class EdgeLabeler(Monitor):
    """
    Edge labeling for trees with LAS preferences. When a player deviates it
    writes its own label on every edge it breaks and on the edge it builds.
    Checked at every step: at most one built edge at each player carries that
    player's label, and the utility changes of the mover and of its neighbours
    have the expected signs.
    """

    def __init__(self, g, p):
        self.g = g
        self.p = p
        self.labels = {edge: None for edge in sorted(g.edges)}
        self.history = [dict(self.labels)]
        self.breaks = Counter()

    def _utilities(self, partition):
        return [self.p.utility(i, partition.coalition_of(i)) for i in self.g.players]

    def step(self, t, before, deviation, after):
        g = self.g
        alpha = deviation.player
        if deviation.target is None:
            raise InvariantViolation(t, f"{g.label(alpha)} went alone under LAS preferences")
        in_target = g.neighbors(alpha) & deviation.target
        if len(in_target) != 1:
            raise InvariantViolation(t, f"{g.label(alpha)} has {len(in_target)} neighbours in its target")
        beta = next(iter(in_target))

        broken = [j for j in g.neighbors(alpha) if j in deviation.source]
        previous = {j: self.labels[_edge(alpha, j)] for j in g.neighbors(alpha)}
        for j in broken:
            if previous[j] == j:
                self.breaks[(alpha, j)] += 1
            self.labels[_edge(alpha, j)] = alpha
        self.labels[_edge(alpha, beta)] = alpha

        self._check_labels(t, after)
        self._check_utilities(t, before, after, alpha, beta, broken, previous)
        self.history.append(dict(self.labels))

    def _check_labels(self, t, partition):
        for i in self.g.players:
            own = [
                j for j in self.g.neighbors(i)
                if partition.coalition_of(i) is partition.coalition_of(j) and self.labels[_edge(i, j)] == i
            ]
            if len(own) > 1:
                raise InvariantViolation(t, f"{self.g.label(i)} labels {len(own)} built edges")

    def _check_utilities(self, t, before, after, alpha, beta, broken, previous):
        g = self.g
        u_before = self._utilities(before)
        u_after = self._utilities(after)
        if not (u_after[alpha] > u_before[alpha] and u_after[alpha] == self.p.utility(alpha, {alpha, beta})):
            raise InvariantViolation(t, f"mover {g.label(alpha)} did not gain exactly v(beta)")
        for i in g.players:
            if i == alpha:
                continue
            gained, lost = u_after[i] > u_before[i], u_after[i] < u_before[i]
            if i in broken:
                ok = lost if previous[i] == i else not gained
            elif i == beta:
                ok = not lost
            else:
                ok = not gained and not lost
            if not ok:
                raise InvariantViolation(
                    t, f"utility of {g.label(i)} moved from {u_before[i]} to {u_after[i]}")

    def finish(self, outcome):
        outcome.per_player_breaks = dict(self.breaks)


def run_tree_dynamics_labeled(g, p, initial, scheduler=None, max_steps=None, monitors=()):
    """
    run_dynamics on a tree with LAS preferences, with edge labels maintained
    alongside. Checks the deviation-count bounds of every rooting at the end.
    Returns the outcome and the label history (one mapping per state).
    """
    if not classify_topology(g).is_tree:
        raise NotATree(f"{g} is not a tree")
    if p.kind is not PreferenceKind.ADDITIVE or not is_las(p, g):
        raise NotLAS("labeled runs need LAS preferences")

    labeler = EdgeLabeler(g, p)
    outcome = run_dynamics(g, p, initial, scheduler, max_steps, monitors=(labeler, *monitors))
    check_tree_bounds(g, outcome.per_player_counts, outcome.per_player_breaks)
    return outcome, labeler.history
