# File: forms.py
# Description: Validation of instance documents. InstanceForm takes the parsed
# JSON of an instance file and turns each section into engine objects, so a
# bad file is reported field by field.

from django import forms

from .dynamics import Partition, ScriptStep
from .exceptions import HedonicError
from .graph import build_graph
from .prefs import additive_profile, ranked_profile


def _coalition(g, members):
    if not isinstance(members, list):
        raise forms.ValidationError(f"coalition {members!r} must be a list of players")
    try:
        return frozenset(g.resolve(m) for m in members)
    except HedonicError as e:
        raise forms.ValidationError(str(e))


class InstanceForm(forms.Form):
    """Form for loading an instance: graph, preferences, optional initial partition and schedule"""
    name = forms.CharField(required=False, max_length=200)
    graph = forms.JSONField()
    preferences = forms.JSONField()
    initial = forms.JSONField(required=False)
    schedule = forms.JSONField(required=False)

    def clean_graph(self):
        data = self.cleaned_data['graph']
        if not isinstance(data, dict):
            raise forms.ValidationError('graph must be an object with "n" and "edges".')
        n = data.get('n')
        labels = data.get('labels')
        edges = data.get('edges')
        if not isinstance(edges, list):
            raise forms.ValidationError('graph.edges must be a list of pairs.')
        try:
            if labels is not None:
                if not isinstance(labels, list):
                    raise forms.ValidationError('graph.labels must be a list of strings.')
                index = {label: k for k, label in enumerate(labels)}
                edges = [[index.get(v, v) if isinstance(v, str) else v for v in edge] for edge in edges]
            return build_graph(n, edges, labels)
        except (HedonicError, TypeError) as e:
            raise forms.ValidationError(str(e))

    def clean_preferences(self):
        data = self.cleaned_data['preferences']
        g = self.cleaned_data.get('graph')
        if g is None:
            return None
        if not isinstance(data, dict):
            raise forms.ValidationError('preferences must be an object with a "kind".')
        kind = data.get('kind')
        try:
            if kind == 'additive':
                return self._additive(g, data.get('values', []))
            if kind == 'ranked':
                return self._ranked(g, data.get('players', []))
        except HedonicError as e:
            raise forms.ValidationError(str(e))
        raise forms.ValidationError(f'preferences.kind must be "ranked" or "additive", got {kind!r}.')

    def _additive(self, g, values):
        # An n x n matrix, or a sparse {player: {player: value}} object.
        if isinstance(values, list):
            if len(values) != g.n or not all(isinstance(row, list) and len(row) == g.n for row in values):
                raise forms.ValidationError(f'preferences.values must be a {g.n}x{g.n} matrix.')
            return additive_profile(g, values)
        if not isinstance(values, dict):
            raise forms.ValidationError('preferences.values must be a matrix or an object of rows.')
        matrix = [[0] * g.n for _ in g.players]
        for i, row in values.items():
            if not isinstance(row, dict):
                raise forms.ValidationError(f'values of player {i} must be an object.')
            for j, value in row.items():
                matrix[g.resolve(i)][g.resolve(j)] = value
        return additive_profile(g, matrix)

    def _entry(self, g, i, entry):
        if not isinstance(entry, dict) or not isinstance(entry.get('tiers', []), list):
            raise forms.ValidationError(f'player {i}: expected {{"tiers": [...], "default_tier": k}}.')
        tiers = []
        for tier in entry.get('tiers', []):
            if not isinstance(tier, list):
                raise forms.ValidationError(f'player {i}: each tier must be a list of coalitions.')
            tiers.append([_coalition(g, c) for c in tier])
        return tiers, entry.get('default_tier', 0)

    def _ranked(self, g, players):
        # One entry per player in player order, or an object keyed by player.
        if isinstance(players, list):
            if len(players) != g.n:
                raise forms.ValidationError(
                    f'preferences.players must have one entry per player ({g.n}), got {len(players)}.')
            return ranked_profile(g, [self._entry(g, g.label(i), e) for i, e in zip(g.players, players)])
        if not isinstance(players, dict):
            raise forms.ValidationError('preferences.players must be a list with one entry per player.')
        entries = [([], 0)] * g.n
        given = set()
        for i, entry in players.items():
            k = g.resolve(i)
            entries[k] = self._entry(g, i, entry)
            given.add(k)
        missing = [g.label(i) for i in g.players if i not in given]
        if missing:
            raise forms.ValidationError(f"no preferences for players {', '.join(missing)}.")
        return ranked_profile(g, entries)

    def clean_initial(self):
        data = self.cleaned_data.get('initial')
        g = self.cleaned_data.get('graph')
        if data is None or g is None:
            return None
        if not isinstance(data, list):
            raise forms.ValidationError('initial must be a list of coalitions.')
        try:
            return Partition(tuple(_coalition(g, c) for c in data)).validate(g)
        except HedonicError as e:
            raise forms.ValidationError(str(e))

    def clean_schedule(self):
        data = self.cleaned_data.get('schedule')
        g = self.cleaned_data.get('graph')
        if data is None or g is None:
            return None
        if not isinstance(data, list):
            raise forms.ValidationError('schedule must be a list of steps.')
        steps = []
        for k, step in enumerate(data, start=1):
            if not isinstance(step, dict) or 'player' not in step:
                raise forms.ValidationError(f'schedule step {k} must be an object with a "player".')
            try:
                player = g.resolve(step['player'])
                toward = step.get('toward')
                toward = None if toward is None else g.resolve(toward)
            except HedonicError as e:
                raise forms.ValidationError(f'schedule step {k}: {e}')
            alone = bool(step.get('alone', False))
            if alone and toward is not None:
                raise forms.ValidationError(f'schedule step {k} cannot both go alone and join a coalition.')
            steps.append(ScriptStep(player, toward=toward, alone=alone))
        return tuple(steps)

    def clean(self):
        cleaned_data = super().clean()
        schedule = cleaned_data.get('schedule')
        if schedule and cleaned_data.get('initial') is None and 'initial' not in self.errors:
            raise forms.ValidationError('a schedule needs an initial partition to start from.')
        return cleaned_data
