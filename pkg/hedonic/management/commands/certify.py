# File: certify.py
# Description: Management command that builds the full state graph of a small
# instance and certifies that no cyclic sequence of IS deviations exists from
# the states passing the filter. Exit status 0 certified, 2 counter-cycle,
# 4 beyond the enumeration cap.

from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from hedonic.cli import EXIT_CYCLE, dumps, fail, parse_filter, resolve_instance
from hedonic.exceptions import HedonicError
from hedonic.oracle import (
    build_state_graph, certify_convergence_from, longest_trajectory, state_graph_dot, state_graph_summary,
)


class Command(BaseCommand):
    help = 'Certify convergence of IS dynamics by exhaustive search of the state graph'

    def add_arguments(self, parser):
        parser.add_argument('instance', help='Instance file or catalog name')
        parser.add_argument('--filter', default='all',
                            help="Initial states to certify from: all, ir-state or max-coalitions=k")
        parser.add_argument('--cap', type=int, help='Override the enumeration cap (players)')
        parser.add_argument('--dot', help='Write the state graph in DOT format to this file')

    def handle(self, *args, **options):
        try:
            instance = resolve_instance(options['instance'])
            g, p = instance.graph, instance.profile
            accept = parse_filter(options['filter'], p)
            sg = build_state_graph(g, p, options['cap'])
        except HedonicError as e:
            raise fail(e)

        certificate = certify_convergence_from(sg, accept)
        summary = state_graph_summary(sg, certificate)
        summary['filter'] = options['filter']
        if certificate.certified and options['filter'] == 'all':
            length, _ = longest_trajectory(sg)
            summary['longest_trajectory'] = length
        self.stdout.write(dumps(summary))

        if options['dot']:
            Path(options['dot']).write_text(state_graph_dot(sg))
            if options['verbosity'] > 1:
                self.stderr.write(f"Wrote {options['dot']}")

        if not certificate.certified:
            raise CommandError(
                f'counter-cycle of length {certificate.cycle_length} found', returncode=EXIT_CYCLE)
        self.stderr.write(self.style.SUCCESS(f'Certified from {options["filter"]} initial states'))
