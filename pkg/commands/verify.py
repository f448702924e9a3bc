"""
Verification command
"""
from config import Config
from errors import InvalidArgumentError, VerificationFailure
import verification
from .base import CommandGroup, Outcome, arg

verify_cmds = CommandGroup(None)


@verify_cmds.command('verify', 'run oracle-equivalence suites (all, or one by name)', args=[
    arg('suite', nargs='?', default='all'),
    arg('--list', dest='listing', action='store_true'),
])
def verify_command(args):
    registry = verification.default_registry()
    if args.listing:
        names = registry.names()
        return Outcome(names, rows=list(enumerate(names, start=1)), text='\n'.join(names))
    if args.suite == 'all':
        names = Config.VERIFY_SUITES or registry.names()
    else:
        names = [args.suite]
    unknown = [n for n in names if n not in registry.suites]
    if unknown:
        raise InvalidArgumentError(f"unknown suite(s) {unknown}; choose from {registry.names()}")
    registry.run_all(names)
    status = registry.get_status()
    if not status['success']:
        failed = [s['name'] for s in status['suites'] if s['status'] != 'registered' and not s['success']]
        raise VerificationFailure(f"verification failed: {', '.join(failed)}", status)
    return Outcome(status, text=f"{status['passed']}/{status['ran']} suites passed")
