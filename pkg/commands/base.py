"""
Command groups for the hookcalc CLI
A group collects subcommands the way a blueprint collects routes
"""


def arg(*flags, **kwargs):
    """One add_argument call, deferred until the parser exists"""
    return flags, kwargs


class Outcome:
    """What a handler produced: the JSON result plus optional CSV rows and a text rendering"""

    def __init__(self, result, rows=None, header=None, text=None):
        self.result = result
        self.rows = rows
        self.header = header
        self.text = text


class CommandGroup:
    """
    A named set of subcommands

    Args:
        name: Subcommand group ('vhc', 'tree', ...) or None for top-level commands
        help: One line shown in --help
    """

    def __init__(self, name, help=''):
        self.name = name
        self.help = help
        self.commands = []

    def command(self, name, help='', args=()):
        def decorator(fn):
            self.commands.append({'name': name, 'help': help or (fn.__doc__ or '').strip(), 'args': args, 'fn': fn})
            return fn
        return decorator

    def _build(self, parser, entry, path):
        for flags, kwargs in entry['args']:
            parser.add_argument(*flags, **kwargs)
        parser.set_defaults(handler=entry['fn'], command_path=path)

    def attach(self, subparsers):
        if self.name is None:
            for entry in self.commands:
                parser = subparsers.add_parser(entry['name'], help=entry['help'])
                self._build(parser, entry, entry['name'])
            return
        group = subparsers.add_parser(self.name, help=self.help)
        nested = group.add_subparsers(dest=f'{self.name}_command', metavar='COMMAND')
        nested.required = True
        for entry in self.commands:
            parser = nested.add_parser(entry['name'], help=entry['help'])
            self._build(parser, entry, f"{self.name} {entry['name']}")
