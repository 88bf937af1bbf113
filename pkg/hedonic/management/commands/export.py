# File: export.py
# Description: Management command that writes catalog instances in the JSON
# instance format, to stdout, a file, or one file per instance in a directory.

from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from hedonic.catalog import CATALOG, build_example
from hedonic.cli import fail
from hedonic.exceptions import HedonicError
from hedonic.instances import dump_instance, example_instance


class Command(BaseCommand):
    help = 'Export catalog instances as JSON instance files'

    def add_arguments(self, parser):
        parser.add_argument('names', nargs='*', help='Catalog names, e.g. path_ir8 or cycle_n:6')
        parser.add_argument('--all', action='store_true', help='Export every catalog entry with its default parameter')
        parser.add_argument('--output', help='File to write a single instance to')
        parser.add_argument('--directory', help='Directory to write one <name>.json per instance to')

    def handle(self, *args, **options):
        names = sorted(CATALOG) if options['all'] else options['names']
        if not names:
            raise CommandError('Name at least one example or pass --all.')
        if options['output'] and len(names) > 1:
            raise CommandError('--output takes a single instance; use --directory for several.')

        try:
            documents = [(name, dump_instance(example_instance(build_example(name)), indent=2)) for name in names]
        except HedonicError as e:
            raise fail(e)

        if options['directory']:
            directory = Path(options['directory'])
            directory.mkdir(parents=True, exist_ok=True)
            for name, text in documents:
                path = directory / f"{name.replace(':', '_')}.json"
                path.write_text(text)
                self.stdout.write(f'Wrote {path}')
        elif options['output']:
            Path(options['output']).write_text(documents[0][1])
        else:
            for _, text in documents:
                self.stdout.write(text, ending='')
