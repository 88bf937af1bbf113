# File: run.py
# Description: Management command that runs IS dynamics on an instance and
# prints the run summary. Exit status 0 converged, 2 cycle detected,
# 3 truncated.

from django.core.management.base import BaseCommand, CommandError

from hedonic import conf
from hedonic.cli import EXIT_CYCLE, EXIT_TRUNCATED, EXIT_USAGE, dumps, fail, parse_partition, resolve_instance
from hedonic.dynamics import (
    SCHEDULERS, CoalitionCountMonitor, Partition, RunStatus, StarMonitor, TraceWriter, make_scheduler,
    run_dynamics, run_tree_dynamics_labeled,
)
from hedonic.exceptions import HedonicError
from hedonic.graph import Topology, classify_topology
from hedonic.models import RunRecord
from hedonic.prefs import is_individually_rational


class Command(BaseCommand):
    help = 'Run IS dynamics on an instance (file path or catalog name) and print the summary as JSON'

    def add_arguments(self, parser):
        parser.add_argument('instance', help='Instance file or catalog name, e.g. path_ir8 or star_lb:3')
        parser.add_argument('--initial', help="'singletons', 'grand' or a JSON list of coalitions")
        parser.add_argument('--scheduler', choices=SCHEDULERS, default='first')
        parser.add_argument('--seed', type=int, help='Seed of the random scheduler (required with --scheduler random)')
        parser.add_argument('--max-steps', type=int, help='Truncation limit (default HEDONIC_STEP_FACTOR * n^2)')
        parser.add_argument('--trace', help="Write one JSON line per deviation to this file ('-' for stdout)")
        parser.add_argument('--labeled', action='store_true',
                            help='Maintain edge labels and check the tree bounds (trees with LAS preferences)')
        parser.add_argument('--check', action='store_true',
                            help='Attach the invariant monitors that apply to the instance topology')
        parser.add_argument('--record', action='store_true', help='Store the outcome as a RunRecord')

    def handle(self, *args, **options):
        try:
            instance = resolve_instance(options['instance'])
            g, p = instance.graph, instance.profile
            if options['initial']:
                initial = parse_partition(g, options['initial'])
            else:
                initial = instance.initial or Partition.singletons(g.n)
            scheduler = make_scheduler(options['scheduler'], options['seed'], instance.schedule)
        except HedonicError as e:
            raise fail(e)

        max_steps = options['max_steps']
        if max_steps is None:
            if options['scheduler'] == 'scripted':
                max_steps = len(instance.schedule) + 1
            else:
                max_steps = conf.default_max_steps(g.n)

        trace_file = None
        monitors = []
        if options['trace'] == '-':
            monitors.append(TraceWriter(self.stdout))
        elif options['trace']:
            try:
                trace_file = open(options['trace'], 'w')
            except OSError as e:
                raise CommandError(
                    f"cannot write trace to {options['trace']}: {e.strerror or e}", returncode=EXIT_USAGE)
            monitors.append(TraceWriter(trace_file))
        if options['check']:
            monitors.extend(self.invariant_monitors(g, p, options['verbosity']))

        try:
            if options['labeled']:
                outcome, _ = run_tree_dynamics_labeled(g, p, initial, scheduler, max_steps, monitors)
            else:
                outcome = run_dynamics(g, p, initial, scheduler, max_steps, monitors)
        except HedonicError as e:
            raise fail(e)
        finally:
            if trace_file:
                trace_file.close()

        self.stdout.write(dumps(outcome.summary(g)))

        if options['record']:
            record = RunRecord.from_outcome(
                options['instance'], g, outcome, options['scheduler'], options['seed'],
                max_steps,
            )
            record.save()
            self.stderr.write(self.style.SUCCESS(f'Saved run record {record.pk}'))

        if outcome.status is RunStatus.CYCLE_DETECTED:
            raise CommandError(f'cycle of length {outcome.cycle_length} detected', returncode=EXIT_CYCLE)
        if outcome.status is RunStatus.TRUNCATED:
            raise CommandError(f'truncated after {outcome.steps} steps', returncode=EXIT_TRUNCATED)

    def invariant_monitors(self, g, p, verbosity):
        topology = classify_topology(g)
        monitors = []
        if topology is Topology.PATH and is_individually_rational(p):
            monitors.append(CoalitionCountMonitor())
        if topology is Topology.STAR:
            monitors.append(StarMonitor())
        if not monitors and verbosity > 1:
            self.stderr.write(f"no invariant monitor applies to this {topology.value} graph")
        return monitors
