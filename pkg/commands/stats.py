"""
Statistics commands: descents, moments, sorted counts, degree, stack tables
"""
from errors import InvalidArgumentError
import perm as perms
from series import is_real_rooted
import sortstat
import stacks
import tree
from .base import CommandGroup, Outcome, arg

stat_cmds = CommandGroup('stat', 'descent statistics, sorted counts and stack-sortable enumeration')


def _stats(text):
    return [s for s in (text or '').split(',') if s.strip()]


def _series_rows(values, start=1):
    return list(enumerate(values, start=start))


@stat_cmds.command('descents', 'descent polynomial of s(S_(n-1)) or of postorder readings in a troupe', args=[
    arg('--n', type=int, required=True),
    arg('--route', choices=sortstat.DESCENT_ROUTES, default='cumulant'),
    arg('--troupe', type=tree.parse_troupe),
    arg('--real-rooted', action='store_true', help='also report a Sturm real-root check'),
])
def descents_command(args):
    if args.troupe is not None:
        poly = sortstat.troupe_descent_polynomial(args.troupe, args.n, args.route)
    else:
        poly = sortstat.sorted_descent_polynomial(args.n, args.route)
    result = {'n': args.n, 'polynomial': poly}
    if args.real_rooted:
        result['real_rooted'] = is_real_rooted(poly)
    return Outcome(result, text=str(poly))


@stat_cmds.command('expected', 'expected descents plus one', args=[
    arg('--n', type=int, required=True),
    arg('--troupe', type=tree.parse_troupe),
    arg('--upto', action='store_true', help='report n = 1..N'),
])
def expected_command(args):
    sizes = range(1, args.n + 1) if args.upto else [args.n]
    values = []
    for n in sizes:
        if args.troupe is not None:
            values.append(sortstat.troupe_expected_descent(args.troupe, n))
        else:
            values.append(sortstat.expected_descent(n))
    result = values if args.upto else values[0]
    return Outcome(result, rows=_series_rows(values, sizes[0]), text=','.join(str(v) for v in values))


@stat_cmds.command('moments', 'E(D_n^m), or the first descent probability', args=[
    arg('--n', type=int, required=True),
    arg('--m', type=int, default=1),
    arg('--first-descent', action='store_true'),
    arg('--positions', action='store_true', help='brute probabilities that 1 and 2 are descents'),
])
def moments_command(args):
    if args.first_descent:
        value = sortstat.first_descent_probability(args.n)
    elif args.positions:
        value = sortstat.descent_position_probabilities(args.n)
        return Outcome(value, rows=sorted(value.items()), header=['i', 'value'])
    else:
        value = sortstat.descent_moment(args.n, args.m)
    return Outcome(value, text=str(value))


@stat_cmds.command('sorted-count', '|s(S_m)|', args=[
    arg('--m', type=int, required=True),
    arg('--method', choices=['recurrence', 'brute'], default='recurrence'),
    arg('--upto', action='store_true'),
])
def sorted_count_command(args):
    if args.upto:
        values = [sortstat.sorted_count(m, args.method) for m in range(args.m + 1)]
        return Outcome(values, rows=_series_rows(values, 0), text=','.join(str(v) for v in values))
    value = sortstat.sorted_count(args.m, args.method)
    return Outcome(value, text=str(value))


@stat_cmds.command('degree', 'degree of noninvertibility, or its lower-bound ingredients', args=[
    arg('--n', type=int),
    arg('--method', choices=['formula', 'brute'], default='formula'),
    arg('--lower-bound', type=int, metavar='N'),
    arg('--digits', type=int, default=12),
])
def degree_command(args):
    if args.lower_bound is not None:
        report = sortstat.degree_lower_bound(args.lower_bound, args.digits)
        return Outcome(report, text=report['root'])
    if args.n is None:
        raise InvalidArgumentError("give --n or --lower-bound")
    value = sortstat.degree_noninvertibility(args.n, args.method)
    return Outcome(value, text=str(value))


@stat_cmds.command('two-stack', 'table of weighted fertility sums over 231-avoiders by tail length', args=[
    arg('--troupe', type=tree.parse_troupe, default='BPT'),
    arg('--stats', default=''),
    arg('--n', type=int, required=True),
    arg('--check', action='store_true', help='verify the functional equation and, for FBPT/MOT, the quintic'),
])
def two_stack_command(args):
    table = stacks.two_stack(args.troupe, _stats(args.stats), args.n)
    result = table.to_dict()
    if args.check:
        result['functional_equation'] = stacks.functional_equation_check(table)
        if args.troupe.name in stacks.WITNESSES and not table.stats:
            result['witness'] = stacks.algebraic_witness_check(args.troupe.name, table)
    text = ','.join(str(c) for c in table.diagonal())
    return Outcome(result, rows=list(table.rows()), header=['n', 'l', 'poly'], text=text)


@stat_cmds.command('three-stack', 'postorder preimages of two-stack-sortable permutations', args=[
    arg('--troupe', type=tree.parse_troupe, default='BPT'),
    arg('--stats', default=''),
    arg('--n', type=int, required=True),
    arg('--upto', action='store_true'),
    arg('--brute', action='store_true'),
])
def three_stack_command(args):
    stats = _stats(args.stats)
    compute = stacks.three_stack_brute if args.brute else stacks.three_stack
    sizes = list(range(1, args.n + 1)) if args.upto else [args.n]
    values = [compute(args.troupe, stats, n) for n in sizes]
    result = values if args.upto else values[0]
    return Outcome(result, rows=_series_rows(values, sizes[0]), text=','.join(str(v) for v in values))


@stat_cmds.command('uniquely-sorted', 'count uniquely sorted permutations, or test one', args=[
    arg('--n', type=int),
    arg('--perm'),
    arg('--method', choices=['cumulant', 'enumerate'], default='cumulant'),
])
def uniquely_sorted_command(args):
    if args.perm is not None:
        value = sortstat.uniquely_sorted(perms.parse_perm(args.perm))
        return Outcome({'perm': args.perm, 'uniquely_sorted': value}, text=str(value).lower())
    if args.n is None:
        raise InvalidArgumentError("give --n or --perm")
    value = sortstat.count_uniquely_sorted(args.n, args.method)
    return Outcome(value, text=str(value))
