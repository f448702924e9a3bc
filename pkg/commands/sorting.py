"""
Top-level stack-sorting commands: sort, fertility, preimages
"""
import perm as perms
import sortstat
from .base import CommandGroup, Outcome, arg

sorting_cmds = CommandGroup(None)


@sorting_cmds.command('sort', 'apply the stack-sorting map', args=[
    arg('perm', help="permutation literal, e.g. 4,1,6,2"),
    arg('--engine', choices=perms.ENGINES, default='stack'),
    arg('--passes', type=int, default=1, help='apply s this many times'),
])
def sort_command(args):
    current = perms.parse_perm(args.perm)
    for _ in range(max(1, args.passes)):
        current = perms.stack_sort(current, args.engine)
    literal = perms.format_perm(current)
    result = {'input': args.perm, 'output': literal, 'classify': perms.classify(current)}
    return Outcome(result, text=literal)


@sorting_cmds.command('fertility', 'number of preimages under s', args=[
    arg('perm'),
    arg('--method', choices=sortstat.FERTILITY_METHODS, default='vhc_formula'),
    arg('--report', action='store_true', help='include configuration count and class values'),
])
def fertility_command(args):
    base = perms.parse_perm(args.perm)
    if args.report:
        report = sortstat.fertility_report(base)
        return Outcome(report)
    value = sortstat.fertility(base, args.method)
    return Outcome({'base': perms.format_perm(base), 'method': args.method, 'fertility': value}, text=str(value))


@sorting_cmds.command('preimages', 'list preimages, or count them within a class', args=[
    arg('perm'),
    arg('--class', dest='cls', choices=sorted(sortstat.PREIMAGE_CLASSES)),
    arg('--weighted', action='store_true', help='weight class preimages by x^(des+1)'),
    arg('--method', choices=['formula', 'brute'], default='formula'),
])
def preimages_command(args):
    base = perms.parse_perm(args.perm)
    if args.cls:
        value = sortstat.class_preimage(base, args.cls, args.weighted, args.method)
        return Outcome({'base': perms.format_perm(base), 'class': args.cls, 'weighted': args.weighted,
                        'value': value}, text=str(value))
    found = [perms.format_perm(p) for p in perms.brute_preimages(base)]
    return Outcome(
        {'base': perms.format_perm(base), 'count': len(found), 'preimages': found},
        rows=[(i, p) for i, p in enumerate(found, start=1)],
        header=['n', 'value'],
        text='\n'.join(found),
    )
