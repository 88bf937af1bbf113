# File: validate.py
# Description: Management command that loads instances and reports their
# topology and the preference classes they belong to.

from django.core.management.base import BaseCommand

from hedonic.cli import dumps, fail, resolve_instance
from hedonic.dynamics import verify_is
from hedonic.exceptions import HedonicError
from hedonic.graph import classify_topology
from hedonic.prefs import PreferenceKind, is_individually_rational, is_las, is_monotone


class Command(BaseCommand):
    help = 'Validate instance files and report topology and preference classes'

    def add_arguments(self, parser):
        parser.add_argument('instances', nargs='+', help='Instance files or catalog names')

    def handle(self, *args, **options):
        for token in options['instances']:
            try:
                instance = resolve_instance(token)
                g, p = instance.graph, instance.profile
                report = {
                    'instance': token,
                    'players': g.n,
                    'edges': len(g.edges),
                    'topology': classify_topology(g).value,
                    'kind': p.kind.value,
                    'individually_rational': is_individually_rational(p),
                    'monotone': is_monotone(p),
                }
                if p.kind is PreferenceKind.ADDITIVE:
                    report['las'] = is_las(p)
                if instance.initial is not None:
                    report['initial_is_stable'] = verify_is(g, p, instance.initial)
                if instance.schedule:
                    report['schedule_steps'] = len(instance.schedule)
            except HedonicError as e:
                raise fail(e)
            self.stdout.write(dumps(report))
