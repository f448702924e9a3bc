"""
Moment and cumulant commands
"""
import cumulant
from cumulant import CumulantSequence
import tree
from .base import CommandGroup, Outcome, arg

cumulant_cmds = CommandGroup('cumulant', 'moment and cumulant conversions')


@cumulant_cmds.command('convert', 'convert a sequence between moments, classical and free cumulants', args=[
    arg('--from', dest='source', choices=cumulant.KINDS, required=True),
    arg('--to', dest='target', choices=cumulant.KINDS, required=True),
    arg('--values', required=True, help='JSON list, e.g. \'[-1, "-x1", "x1^2"]\''),
    arg('--method', choices=cumulant.METHODS, default='recursion'),
    arg('--length', type=int),
    arg('--all-routes', action='store_true', help='run every route and report agreement'),
])
def convert_command(args):
    seq = CumulantSequence.parse(args.source, args.values)
    if args.all_routes:
        routes = cumulant.route_agreement(seq, args.target, args.length)
        values = list(routes.values())
        agree = all(v == values[0] for v in values)
        return Outcome({'agree': agree, 'routes': routes}, text='agree' if agree else 'disagree')
    out = cumulant.convert(seq, args.target, args.method, args.length)
    return Outcome(
        out,
        rows=list(enumerate(out.values, start=1)),
        text=','.join(str(v) for v in out.values),
    )


@cumulant_cmds.command('check-troupe', 'free troupe cumulants against decreasing-tree sums', args=[
    arg('--troupe', type=tree.parse_troupe, default='BPT'),
    arg('--stats', default=''),
    arg('--n', type=int, default=6),
    arg('--method', choices=['vhc', 'josuat', 'nc_linext', 'avoid231', 'recursion'], default='vhc'),
    arg('--counterexample', action='store_true', help='report the non-troupe example instead'),
])
def check_troupe_command(args):
    if args.counterexample:
        report = cumulant.non_troupe_counterexample_check()
    else:
        stats = [s for s in args.stats.split(',') if s.strip()]
        report = cumulant.troupe_correspondence_check(args.troupe, stats, args.n, args.method)
    return Outcome(report, text='ok' if report['success'] else 'mismatch')
