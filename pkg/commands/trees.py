"""
Colored binary plane tree commands
"""
from errors import InvalidArgumentError
import perm as perms
import tree
from .base import CommandGroup, Outcome, arg

tree_cmds = CommandGroup('tree', 'colored binary plane trees and troupes')


def _stats(text):
    return [s for s in (text or '').split(',') if s.strip()]


@tree_cmds.command('insert', 'insert T2 into T1 at a vertex path', args=[
    arg('t1'),
    arg('path', help="L/R string from the root; '' for the root"),
    arg('t2'),
])
def insert_command(args):
    result = tree.serialize(tree.insert(tree.parse_tree(args.t1), args.path, tree.parse_tree(args.t2)))
    return Outcome(result, text=result)


@tree_cmds.command('decompose', 'split a tree at a black vertex with two children', args=[
    arg('tree_literal', metavar='tree'),
    arg('path'),
])
def decompose_command(args):
    left, right = tree.decompose(tree.parse_tree(args.tree_literal), args.path)
    result = [tree.serialize(left), tree.serialize(right)]
    return Outcome(result, text='\n'.join(result))


@tree_cmds.command('traverse', 'in-order or postorder reading of a decreasing tree', args=[
    arg('tree_literal', metavar='tree'),
    arg('--order', choices=['inorder', 'postorder'], default='postorder'),
])
def traverse_command(args):
    reading = perms.format_perm(tree.traverse(tree.parse_decreasing(args.tree_literal), args.order))
    return Outcome({'order': args.order, 'reading': reading}, text=reading)


@tree_cmds.command('enumerate', 'trees of a given size in a troupe', args=[
    arg('--troupe', type=tree.parse_troupe, default='BPT'),
    arg('--n', type=int, required=True),
    arg('--decreasing', action='store_true'),
    arg('--stats', default='', help='comma-separated statistics for the G-polynomial'),
])
def enumerate_command(args):
    spec = args.troupe if isinstance(args.troupe, tree.TroupeSpec) else tree.parse_troupe(args.troupe)
    if args.decreasing:
        found = tree.enumerate_decreasing(spec, args.n)
    else:
        found = tree.enumerate_troupe(spec, args.n)
    literals = [tree.serialize(t) for t in found]
    result = {'troupe': spec.label, 'n': args.n, 'count': len(found), 'trees': literals}
    stats = _stats(args.stats)
    if stats:
        result['g_polynomial'] = tree.g_polynomial(spec, args.n, stats)
    return Outcome(result, rows=list(enumerate(literals, start=1)), text='\n'.join(literals))


@tree_cmds.command('transform', 'troupe transform of a generator sequence', args=[
    arg('--omega', required=True, help='omega_0..omega_N, omega_0 the empty-tree flag'),
    arg('--n', type=int, required=True),
    arg('--realization', choices=['color', 'shape'], default='color'),
])
def transform_command(args):
    try:
        omega = [int(w) for w in args.omega.split(',') if w.strip()]
    except ValueError:
        raise InvalidArgumentError(f"omega must be comma-separated integers, got {args.omega!r}")
    counts = tree.troupe_transform(omega, args.n, args.realization)
    return Outcome(counts, rows=list(enumerate(counts)), text=','.join(str(c) for c in counts))
