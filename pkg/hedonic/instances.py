# File: instances.py
# Description: Instance files. Loads JSON documents through InstanceForm and
# writes instances back out in the same format, with labels for players and
# rationals as integers or "p/q" strings.

import json
import logging
from dataclasses import dataclass
from pathlib import Path

from .exceptions import InstanceError
from .forms import InstanceForm
from .graph import coalition_key
from .prefs import PreferenceKind

logger = logging.getLogger(__name__)

FIELDS = ('name', 'graph', 'preferences', 'initial', 'schedule')


@dataclass(frozen=True)
class Instance:
    graph: object
    profile: object
    initial: object = None
    schedule: tuple = None
    name: str = ''


def parse_instance(text, source='<string>'):
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceError(f"{source}: line {e.lineno}, column {e.colno}: {e.msg}")
    if not isinstance(document, dict):
        raise InstanceError(f"{source}: an instance must be a JSON object")
    unknown = sorted(set(document) - set(FIELDS))
    if unknown:
        raise InstanceError(f"{source}: unknown fields {', '.join(unknown)}")

    form = InstanceForm(data={key: document[key] for key in FIELDS if key in document})
    if not form.is_valid():
        errors = {field: [str(m) for m in messages] for field, messages in form.errors.items()}
        detail = '; '.join(f"{field}: {' '.join(messages)}" for field, messages in errors.items())
        raise InstanceError(f"{source}: {detail}", errors)

    data = form.cleaned_data
    instance = Instance(
        graph=data['graph'],
        profile=data['preferences'],
        initial=data['initial'],
        schedule=data['schedule'],
        name=data['name'] or '',
    )
    logger.debug("loaded %s: %s", source, instance.graph)
    return instance


def load_instance(path):
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise InstanceError(f"{path}: {e.strerror or e}")
    return parse_instance(text, source=str(path))


def _rational(value):
    return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _player(g, i):
    return g.labels[i] if g.labels else i


def _coalition(g, s):
    return [_player(g, i) for i in sorted(s)]


def instance_document(instance):
    g, p = instance.graph, instance.profile
    graph = {'n': g.n, 'edges': [[_player(g, i), _player(g, j)] for i, j in sorted(g.edges)]}
    if g.labels:
        graph['labels'] = list(g.labels)

    if p.kind is PreferenceKind.ADDITIVE:
        values = [[_rational(v) for v in row] for row in p.additive.values]
        preferences = {'kind': 'additive', 'values': values}
    else:
        preferences = {'kind': 'ranked', 'players': [
            {
                'tiers': [[_coalition(g, s) for s in sorted(tier, key=coalition_key)] for tier in pref.tiers],
                'default_tier': pref.default_tier,
            }
            for pref in p.ranked
        ]}

    document = {'name': instance.name, 'graph': graph, 'preferences': preferences}
    if instance.initial is not None:
        document['initial'] = [_coalition(g, c) for c in instance.initial.coalitions]
    if instance.schedule:
        steps = []
        for step in instance.schedule:
            entry = {'player': _player(g, step.player)}
            if step.alone:
                entry['alone'] = True
            elif step.toward is not None:
                entry['toward'] = _player(g, step.toward)
            steps.append(entry)
        document['schedule'] = steps
    return document


def dump_instance(instance, indent=None):
    return json.dumps(instance_document(instance), indent=indent) + '\n'


def example_instance(example):
    return Instance(
        graph=example.graph, profile=example.profile, initial=example.initial,
        schedule=example.schedule, name=example.name,
    )
