# File: prefs.py
# Description: Preference models over feasible coalitions (ranked tiers and
# additive valuations with exact rational values) and the predicates of the
# preference hierarchy: individually rational, monotone, LAS.

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property

from .exceptions import (
    InfeasibleCoalition, InvalidPreference, PlayerNotMember, WrongKind,
)
from .graph import enumerate_feasible_coalitions, is_connected_subset

logger = logging.getLogger(__name__)


class Ordering(Enum):
    PREFER = 'prefer'
    INDIFFERENT = 'indifferent'
    DISPREFER = 'disprefer'


class PreferenceKind(Enum):
    RANKED = 'ranked'
    ADDITIVE = 'additive'


@dataclass(frozen=True)
class RankedPreference:
    """
    Weak order of one player given as tiers, best first.
    Coalitions not listed in any tier sit at default_tier; a default_tier equal
    to len(tiers) puts them strictly below every listed tier.
    """
    tiers: tuple
    default_tier: int

    @cached_property
    def ranks(self):
        return {coalition: k for k, tier in enumerate(self.tiers) for coalition in tier}

    def rank(self, s):
        return self.ranks.get(s, self.default_tier)


@dataclass(frozen=True)
class AdditiveValuation:
    """n x n matrix of exact values; utility of i in S is the sum of v[i][j] over S"""
    values: tuple

    def value(self, i, j):
        return self.values[i][j]

    def utility(self, i, s):
        row = self.values[i]
        return sum((row[j] for j in s if j != i), Fraction(0))


@dataclass(frozen=True)
class PreferenceProfile:
    graph: object
    kind: PreferenceKind
    ranked: tuple = None
    additive: AdditiveValuation = None

    def score(self, i, s):
        """
        Comparable score of coalition s for player i, higher is better.
        No membership or feasibility checks: callers on hot paths only pass
        coalitions they already know to be feasible and to contain i.
        """
        if not isinstance(s, frozenset):
            s = frozenset(s)
        if self.kind is PreferenceKind.RANKED:
            return -self.ranked[i].rank(s)
        return self.additive.utility(i, s)

    def utility(self, i, s):
        if self.kind is not PreferenceKind.ADDITIVE:
            raise WrongKind("utilities are defined for additive profiles only")
        return self.additive.utility(i, s)


def _as_coalition(g, i, coalition):
    s = frozenset(coalition)
    if i not in s:
        raise PlayerNotMember(f"player {g.label(i)} is not in {g.format_coalition(s)}")
    if not is_connected_subset(g, s):
        raise InfeasibleCoalition(f"{g.format_coalition(s)} is not connected")
    return s


def compare(p, i, S, T):
    """Prefer iff S is strictly better than T for i"""
    g = p.graph
    S = _as_coalition(g, i, S)
    T = _as_coalition(g, i, T)
    left, right = p.score(i, S), p.score(i, T)
    if left > right:
        return Ordering.PREFER
    if left < right:
        return Ordering.DISPREFER
    return Ordering.INDIFFERENT


def weakly_prefers(p, i, S, T):
    return compare(p, i, S, T) is not Ordering.DISPREFER


def ranked_profile(g, players):
    """
    Build a ranked profile from one (tiers, default_tier) pair per player.
    Each tier is an iterable of coalitions, each coalition an iterable of player indices.
    """
    players = list(players)
    if len(players) != g.n:
        raise InvalidPreference(f"expected preferences for {g.n} players, got {len(players)}")

    ranked = []
    for i, (tiers, default_tier) in enumerate(players):
        seen = set()
        built = []
        for k, tier in enumerate(tiers):
            coalitions = set()
            for coalition in tier:
                s = frozenset(coalition)
                if i not in s:
                    raise InvalidPreference(
                        f"player {g.label(i)}, tier {k}: {g.format_coalition(s)} does not contain the player")
                if not is_connected_subset(g, s):
                    raise InvalidPreference(
                        f"player {g.label(i)}, tier {k}: {g.format_coalition(s)} is not connected")
                if s in seen:
                    raise InvalidPreference(
                        f"player {g.label(i)}: {g.format_coalition(s)} is listed twice")
                seen.add(s)
                coalitions.add(s)
            if not coalitions:
                raise InvalidPreference(f"player {g.label(i)}: tier {k} is empty")
            built.append(frozenset(coalitions))
        if not isinstance(default_tier, int) or isinstance(default_tier, bool) \
                or not 0 <= default_tier <= len(built):
            raise InvalidPreference(
                f"player {g.label(i)}: default_tier must be in 0..{len(built)}, got {default_tier!r}")
        ranked.append(RankedPreference(tiers=tuple(built), default_tier=default_tier))

    return PreferenceProfile(graph=g, kind=PreferenceKind.RANKED, ranked=tuple(ranked))


def as_fraction(value):
    """Exact value from an int, a Fraction or a "p/q" string; floats are refused"""
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidPreference(f"value {value!r} is not exact; use an integer or a 'p/q' string")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InvalidPreference(f"cannot read {value!r} as a rational number")
    raise InvalidPreference(f"cannot read {value!r} as a rational number")


def additive_profile(g, values):
    rows = [list(row) for row in values]
    if len(rows) != g.n or any(len(row) != g.n for row in rows):
        raise InvalidPreference(f"values must be a {g.n}x{g.n} matrix")
    matrix = tuple(tuple(as_fraction(v) for v in row) for row in rows)
    for i in g.players:
        if matrix[i][i] != 0:
            raise InvalidPreference(f"v[{g.label(i)}][{g.label(i)}] must be 0")
    return PreferenceProfile(graph=g, kind=PreferenceKind.ADDITIVE, additive=AdditiveValuation(matrix))


def additive_from_edges(g, weights):
    """Additive profile from a {(i, j): v_i(j)} mapping, zero elsewhere"""
    matrix = [[0] * g.n for _ in g.players]
    for (i, j), value in weights.items():
        matrix[i][j] = value
    return additive_profile(g, matrix)


def is_ir_coalition(p, i, s):
    return p.score(i, s) >= p.score(i, frozenset([i]))


def is_individually_rational_state(p, partition):
    """IR state: every member weakly prefers its coalition to being alone"""
    return all(is_ir_coalition(p, i, s) for s in partition.coalitions for i in s)


def is_individually_rational(p, cap=None):
    g = p.graph
    for i in g.players:
        alone = p.score(i, frozenset([i]))
        for s in enumerate_feasible_coalitions(g, i, cap):
            if p.score(i, s) < alone:
                logger.debug("not IR: player %s ranks %s below the singleton", g.label(i), g.format_coalition(s))
                return False
    return True


def is_monotone(p, cap=None):
    """
    Supersets are weakly preferred to subsets. Between two nested feasible
    coalitions there is always a chain of feasible one-player extensions, so
    only those extensions are compared.
    """
    g = p.graph
    for i in g.players:
        for t in enumerate_feasible_coalitions(g, i, cap):
            base = p.score(i, t)
            boundary = set()
            for v in t:
                boundary |= g.neighbors(v)
            for v in boundary - t:
                if p.score(i, t | {v}) < base:
                    logger.debug("not monotone: player %s, %s", g.label(i), g.format_coalition(t | {v}))
                    return False
    return True


def is_las(p, g=None):
    g = g or p.graph
    if p.kind is not PreferenceKind.ADDITIVE:
        raise WrongKind("LAS is a property of additive profiles")
    for i in g.players:
        for j in g.players:
            value = p.additive.value(i, j)
            if value < 0:
                return False
            if value > 0 and not g.has_edge(i, j):
                return False
    return True
