# File: cli.py
# Description: Helpers shared by the management commands: exit codes, resolving
# an instance argument (file path or catalog name), parsing partitions and
# certification filters, and JSON output.

import json
from pathlib import Path

from django.core.management.base import CommandError

from .catalog import CATALOG, build_example
from .dynamics import Partition
from .exceptions import HedonicError, InstanceError, TooLarge
from .instances import example_instance, load_instance
from .oracle import all_states, ir_states, max_coalitions

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CYCLE = 2
EXIT_TRUNCATED = 3
EXIT_TOO_LARGE = 4
EXIT_MISMATCH = 5


def fail(error):
    """CommandError carrying the exit code for a domain error"""
    code = EXIT_TOO_LARGE if isinstance(error, TooLarge) else EXIT_USAGE
    return CommandError(str(error), returncode=code)


def resolve_instance(token):
    """A catalog name such as cycle3 or star_lb:3, otherwise a path to an instance file"""
    if token.partition(':')[0] in CATALOG and not Path(token).exists():
        return example_instance(build_example(token))
    return load_instance(token)


def parse_partition(g, text):
    """'singletons', 'grand' or a JSON list of coalitions of labels or indices"""
    if text == 'singletons':
        return Partition.singletons(g.n)
    if text == 'grand':
        return Partition.grand(g.n)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceError(f"--initial: column {e.colno}: {e.msg}")
    if not isinstance(data, list) or not all(isinstance(c, list) for c in data):
        raise InstanceError("--initial must be a JSON list of coalitions")
    return Partition(tuple(frozenset(g.resolve(i) for i in c) for c in data)).validate(g)


def parse_filter(text, profile):
    if text == 'all':
        return all_states
    if text == 'ir-state':
        return ir_states(profile)
    name, _, value = text.partition('=')
    if name == 'max-coalitions' and value.isdigit() and int(value) >= 1:
        return max_coalitions(int(value))
    raise HedonicError(f"unknown filter {text!r}; use all, ir-state or max-coalitions=k")


def dumps(data):
    return json.dumps(data, indent=2, sort_keys=False)
