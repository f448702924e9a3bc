"""
Valid hook configuration commands
"""
from config import Config
from errors import InvalidArgumentError
import perm as perms
import sortstat
import vhc
from .base import CommandGroup, Outcome, arg

vhc_cmds = CommandGroup('vhc', 'valid hook configurations')


@vhc_cmds.command('enumerate', 'list the configurations of a permutation, or of all of S_(n-1)', args=[
    arg('perm', nargs='?'),
    arg('--n', type=int, help='enumerate over S_(n-1) instead'),
    arg('--restrict', choices=['none', 'avoid231'], default='none'),
])
def enumerate_command(args):
    if args.n is not None:
        configs = vhc.enumerate_vhc_all(args.n, args.restrict)
    elif args.perm is not None:
        configs = vhc.enumerate_vhc(perms.parse_perm(args.perm))
    else:
        raise InvalidArgumentError("give a permutation or --n")
    literals = [str(c) for c in configs]
    return Outcome(
        {'count': len(configs), 'configurations': [c.to_dict() for c in configs]},
        rows=list(enumerate(literals, start=1)),
        text='\n'.join(literals),
    )


@vhc_cmds.command('count', 'count configurations of a permutation, or |VHC(S_(n-1))| for n = 1..upto', args=[
    arg('perm', nargs='?'),
    arg('--upto', type=int),
    arg('--route', choices=['enumerate', 'cumulant'], default='enumerate'),
])
def count_command(args):
    if args.upto is not None:
        if args.route == 'cumulant':
            counts = sortstat.vhc_counts(args.upto)
        else:
            Config.check_cap('VHC_N', args.upto - 1)
            counts = [vhc.count_vhc_all(n) for n in range(1, args.upto + 1)]
        return Outcome(counts, rows=list(enumerate(counts, start=1)), text=','.join(str(c) for c in counts))
    if args.perm is None:
        raise InvalidArgumentError("give a permutation or --upto")
    count = vhc.count_vhc(perms.parse_perm(args.perm))
    return Outcome({'base': args.perm, 'count': count}, text=str(count))


@vhc_cmds.command('phi', 'connected partition and acyclic orientation of a configuration', args=[
    arg('config', help="e.g. '3,1,4,2,5,6,7 [(1,3),(3,5)]'"),
])
def phi_command(args):
    config = vhc.ValidHookConfiguration.parse(args.config)
    rho, orientation = vhc.phi(config)
    result = {'partition': str(rho), 'arcs': [list(a) for a in orientation.arcs()]}
    return Outcome(result, text=f'{rho} {orientation.arcs()}')


@vhc_cmds.command('psi', 'noncrossing partition and linear extension of a configuration', args=[
    arg('config'),
])
def psi_command(args):
    config = vhc.ValidHookConfiguration.parse(args.config)
    eta, sigma = vhc.psi(config)
    result = {
        'partition': str(eta),
        'extension': perms.format_perm(sigma),
        'tree_hook_count': vhc.tree_hook_count(config),
    }
    return Outcome(result, text=f'{eta} {perms.format_perm(sigma)}')
