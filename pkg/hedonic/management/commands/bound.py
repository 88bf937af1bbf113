# File: bound.py
# Description: Management command that prints the closed-form bound on the
# number of deviations of a root player in a tree with LAS preferences.

from django.core.management.base import BaseCommand

from hedonic.bounds import root_tree, tree_deviation_bound, tree_deviation_bounds
from hedonic.cli import fail, resolve_instance
from hedonic.exceptions import HedonicError


class Command(BaseCommand):
    help = 'Print the deviation bound of a root (or the maximum over all roots) of a tree instance'

    def add_arguments(self, parser):
        parser.add_argument('instance', help='Instance file or catalog name')
        parser.add_argument('--root', default='all', help="Player label or index, or 'all'")

    def handle(self, *args, **options):
        try:
            g = resolve_instance(options['instance']).graph
            if options['root'] == 'all':
                bounds = tree_deviation_bounds(g)
                if options['verbosity'] > 1:
                    for r, value in bounds.items():
                        self.stderr.write(f'{g.label(r)}: {value}')
                value = max(bounds.values())
            else:
                value = tree_deviation_bound(root_tree(g, g.resolve(options['root'])))
        except HedonicError as e:
            raise fail(e)
        self.stdout.write(str(value))
