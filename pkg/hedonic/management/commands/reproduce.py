# File: reproduce.py
# Description: Management command that replays catalog instances with their
# scripted schedules and compares the outcome with the expected one.
# Exit status 0 when everything matches, 5 on any mismatch.

from django.core.management.base import BaseCommand, CommandError

from hedonic.catalog import REPRODUCTION_SUITE, build_example, reproduce
from hedonic.cli import EXIT_MISMATCH, fail
from hedonic.exceptions import HedonicError, UnknownExample


class Command(BaseCommand):
    help = 'Reproduce the outcomes of catalog instances (cycles, step counts, bounds)'

    def add_arguments(self, parser):
        parser.add_argument('names', nargs='*', help='Catalog names, e.g. cycle3 or tree_exponential:3')
        parser.add_argument('--all', action='store_true', help='Reproduce the whole regression suite')

    def handle(self, *args, **options):
        names = list(REPRODUCTION_SUITE) if options['all'] else options['names']
        if not names:
            raise CommandError('Name at least one example or pass --all.')

        failed = []
        for name in names:
            try:
                example = build_example(name)
            except UnknownExample as e:
                raise fail(e)
            try:
                outcome, problems = reproduce(example)
            except HedonicError as e:
                # The script itself broke: a mismatch, not a usage error.
                failed.append(name)
                self.stderr.write(self.style.ERROR(f'{name}: {e}'))
                continue

            if problems:
                failed.append(name)
                self.stderr.write(self.style.ERROR(f'{name}: mismatch'))
                for problem in problems:
                    self.stderr.write(f'  {problem}')
                continue

            detail = f'{outcome.status.value}, {outcome.steps} steps'
            if outcome.cycle_length:
                detail += f', cycle length {outcome.cycle_length}'
            self.stdout.write(f'{example.name}: ok ({detail})')

        if failed:
            raise CommandError(f"{len(failed)} of {len(names)} examples did not reproduce: {', '.join(failed)}",
                               returncode=EXIT_MISMATCH)
        self.stdout.write(self.style.SUCCESS(f'Reproduced {len(names)} examples'))
