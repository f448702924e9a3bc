"""
Set partition commands
"""
from errors import InvalidArgumentError
import partition
from partition import SetPartition
from .base import CommandGroup, Outcome, arg

partition_cmds = CommandGroup('partition', 'set partitions, Kreweras complements and arch graphs')


@partition_cmds.command('enumerate', 'partitions of [n] of a given kind', args=[
    arg('--n', type=int, required=True),
    arg('--kind', choices=partition.PARTITION_KINDS, default='noncrossing'),
])
def enumerate_command(args):
    found = [str(p) for p in partition.enumerate_partitions(args.n, args.kind)]
    return Outcome(
        {'n': args.n, 'kind': args.kind, 'count': len(found), 'partitions': found},
        rows=list(enumerate(found, start=1)),
        text='\n'.join(found),
    )


@partition_cmds.command('kreweras', 'Kreweras complement of a noncrossing partition', args=[
    arg('partition_literal', metavar='partition'),
])
def kreweras_command(args):
    result = str(partition.kreweras(SetPartition.parse(args.partition_literal)))
    return Outcome(result, text=result)


@partition_cmds.command('tutte', 'T(1,0) of the crossing graph, rooted at the block of a vertex', args=[
    arg('partition_literal', metavar='partition'),
    arg('--vertex', type=int, help='ground element whose block is the source; default the largest'),
])
def tutte_command(args):
    rho = SetPartition.parse(args.partition_literal)
    if not rho.ground:
        raise InvalidArgumentError("the partition is empty")
    element = args.vertex if args.vertex is not None else max(rho.ground)
    graph = partition.crossing_graph(rho)
    value = partition.tutte_point(graph, rho.block_index(element))
    return Outcome({'partition': str(rho), 'connected': partition.is_connected(rho), 'value': value},
                   text=str(value))


@partition_cmds.command('linext', 'linear extensions of the arch graph of a partition', args=[
    arg('partition_literal', metavar='partition'),
    arg('--list', dest='listing', action='store_true'),
])
def linext_command(args):
    rho = SetPartition.parse(args.partition_literal)
    count = partition.linear_extension_count(rho)
    result = {'partition': str(rho), 'count': count}
    if args.listing:
        result['extensions'] = [','.join(str(e) for e in order) for order in partition.linear_extensions(rho)]
    return Outcome(result, text=str(count))
