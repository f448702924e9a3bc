"""
Set partitions

Partitions of ordered finite sets, the noncrossing and connected families,
crossing graphs, the Kreweras complement, arch graphs and the counts of
acyclic orientations and linear extensions that the cumulant formulas weigh
partitions by.
"""
import logging
import re
from functools import lru_cache
from itertools import combinations

import networkx as nx

from config import Config
from errors import InvalidArgumentError

logger = logging.getLogger(__name__)

PARTITION_KINDS = ['all', 'noncrossing', 'connected', 'noncrossing-matching']


class SetPartition:
    """Canonical partition: blocks ordered by minimum, each block ascending"""

    __slots__ = ('ground', 'blocks', '_index')

    def __init__(self, blocks, ground=None):
        blocks = [tuple(sorted(int(e) for e in block)) for block in blocks]
        if any(not block for block in blocks):
            raise InvalidArgumentError("partition blocks must be nonempty")
        elements = [e for block in blocks for e in block]
        if len(set(elements)) != len(elements):
            raise InvalidArgumentError(f"repeated element in partition blocks {blocks}")
        if any(e < 1 for e in elements):
            raise InvalidArgumentError("partition elements must be positive integers")
        if ground is None:
            ground = sorted(elements)
        ground = tuple(sorted(int(g) for g in ground))
        if set(ground) != set(elements):
            missing = sorted(set(ground) - set(elements))
            extra = sorted(set(elements) - set(ground))
            raise InvalidArgumentError(
                f"partition does not cover its ground set (missing {missing}, outside {extra})"
            )
        self.ground = ground
        self.blocks = tuple(sorted(blocks))
        self._index = None

    @classmethod
    def from_rgs(cls, word):
        """Build from a restricted growth string over [len(word)]."""
        blocks = {}
        for element, label in enumerate(word, start=1):
            blocks.setdefault(label, []).append(element)
        return cls(blocks.values(), range(1, len(word) + 1))

    @classmethod
    def parse(cls, text, n=None):
        """Parse '{1,4,5|2,3|6|7,8}'; with n given the ground set must be exactly [n]."""
        source = re.sub(r'\s+', '', str(text))
        if not (source.startswith('{') and source.endswith('}')):
            raise InvalidArgumentError(f"partition literal must be braced: {text!r}")
        body = source[1:-1]
        if not body:
            blocks = []
        else:
            blocks = []
            for chunk in body.split('|'):
                if not chunk:
                    raise InvalidArgumentError(f"empty block in {text!r}")
                try:
                    blocks.append([int(item) for item in chunk.split(',')])
                except ValueError:
                    raise InvalidArgumentError(f"bad element in {text!r}")
        ground = None if n is None else range(1, n + 1)
        return cls(blocks, ground)

    def __str__(self):
        return '{' + '|'.join(','.join(str(e) for e in block) for block in self.blocks) + '}'

    def __repr__(self):
        return f'SetPartition({str(self)!r})'

    def __eq__(self, other):
        return isinstance(other, SetPartition) and self.blocks == other.blocks and self.ground == other.ground

    def __hash__(self):
        return hash(self.blocks)

    def __len__(self):
        return len(self.blocks)

    @property
    def size(self):
        return len(self.ground)

    def to_list(self):
        return [list(block) for block in self.blocks]

    def block_index(self, element):
        if self._index is None:
            self._index = {e: i for i, block in enumerate(self.blocks) for e in block}
        try:
            return self._index[element]
        except KeyError:
            raise InvalidArgumentError(f"{element} is not in the ground set of {self}")

    def block_of(self, element):
        return self.blocks[self.block_index(element)]

    def block_type(self):
        """Block sizes, sorted descending."""
        return tuple(sorted((len(b) for b in self.blocks), reverse=True))

    def successor(self, element):
        """Next larger element of the same block, or None."""
        block = self.block_of(element)
        position = block.index(element)
        return block[position + 1] if position + 1 < len(block) else None

    def is_block_max(self, element):
        return self.block_of(element)[-1] == element

    def rgs(self):
        return tuple(self.block_index(e) for e in self.ground)


def _blocks_cross(first, second):
    # which gap of `first` each element of `second` falls in; the two outer gaps are one region
    outer = len(first)
    regions = set()
    for element in second:
        gap = sum(1 for e in first if e < element)
        regions.add(0 if gap == outer else gap)
        if len(regions) > 1:
            return True
    return False


def crossing_graph(partition):
    """Vertex i is the i-th block in canonical order; edges join crossing blocks."""
    graph = nx.Graph()
    graph.add_nodes_from(range(len(partition.blocks)))
    for i, j in combinations(range(len(partition.blocks)), 2):
        if _blocks_cross(partition.blocks[i], partition.blocks[j]):
            graph.add_edge(i, j)
    return graph


def is_noncrossing(partition):
    return crossing_graph(partition).number_of_edges() == 0


def is_connected(partition):
    graph = crossing_graph(partition)
    return graph.number_of_nodes() <= 1 or nx.is_connected(graph)


# --- enumeration -----------------------------------------------------------

def _rgs_words(n):
    word = [0] * n

    def extend(position, top):
        if position == n:
            yield tuple(word)
            return
        for label in range(top + 2):
            word[position] = label
            yield from extend(position + 1, max(top, label))

    if n == 0:
        yield ()
        return
    yield from extend(1, 0)


@lru_cache(maxsize=None)
def _noncrossing_blocks(elements):
    """All noncrossing partitions of a sorted element tuple, as tuples of blocks."""
    if not elements:
        return ((),)
    return tuple(_close_or_extend((elements[0],), elements[1:]))


def _close_or_extend(block, remaining):
    for tail in _noncrossing_blocks(remaining):
        yield (block,) + tail
    for j in range(len(remaining)):
        for inner in _noncrossing_blocks(remaining[:j]):
            for rest in _close_or_extend(block + (remaining[j],), remaining[j + 1:]):
                yield inner + rest


@lru_cache(maxsize=None)
def _enumerate(n, kind):
    if kind == 'all':
        found = [SetPartition.from_rgs(w) for w in _rgs_words(n)]
    elif kind == 'connected':
        found = [p for p in _enumerate(n, 'all') if is_connected(p)]
    elif kind == 'noncrossing':
        ground = tuple(range(1, n + 1))
        found = [SetPartition(blocks, ground) for blocks in _noncrossing_blocks(ground)]
        found.sort(key=SetPartition.rgs)
    elif kind == 'noncrossing-matching':
        found = [] if n % 2 else [p for p in _enumerate(n, 'noncrossing') if all(len(b) == 2 for b in p.blocks)]
    else:
        raise InvalidArgumentError(f"unknown partition kind {kind!r}; expected one of {PARTITION_KINDS}")
    logger.debug("enumerated %d %s partitions of [%d]", len(found), kind, n)
    return tuple(found)


def enumerate_partitions(n, kind='all'):
    """Partitions of [n] of the given kind, in restricted-growth-string order."""
    if n < 1:
        raise InvalidArgumentError(f"n must be positive, got {n}")
    if kind not in PARTITION_KINDS:
        raise InvalidArgumentError(f"unknown partition kind {kind!r}; expected one of {PARTITION_KINDS}")
    if kind in ('all', 'connected'):
        Config.check_cap('PARTITION_ALL_N', n)
    else:
        Config.check_cap('PARTITION_N', n)
    return list(_enumerate(n, kind))


# --- orientations ----------------------------------------------------------

class Orientation:
    """Direction for every edge of an undirected graph"""

    def __init__(self, graph, direction):
        self.graph = graph
        self.direction = {}
        for edge, arc in direction.items():
            key = frozenset(edge)
            if set(arc) != key or not graph.has_edge(*arc):
                raise InvalidArgumentError(f"arc {arc} does not orient an edge of the graph")
            self.direction[key] = tuple(arc)
        if len(self.direction) != graph.number_of_edges():
            raise InvalidArgumentError("orientation must direct every edge exactly once")

    def digraph(self):
        result = nx.DiGraph()
        result.add_nodes_from(self.graph.nodes)
        result.add_edges_from(self.direction.values())
        return result

    def is_acyclic(self):
        return nx.is_directed_acyclic_graph(self.digraph())

    def sources(self):
        directed = self.digraph()
        return sorted(v for v in directed.nodes if directed.in_degree(v) == 0)

    def arcs(self):
        return sorted(self.direction.values())

    def __eq__(self, other):
        return isinstance(other, Orientation) and self.arcs() == other.arcs()

    def __hash__(self):
        return hash(tuple(self.arcs()))


def orientations_with_unique_source(graph, source):
    """Yield every acyclic orientation of graph whose only source is `source`."""
    edges = sorted(tuple(sorted(e)) for e in graph.edges)
    others = [v for v in graph.nodes if v != source]
    for mask in range(1 << len(edges)):
        arcs = [(u, v) if (mask >> i) & 1 == 0 else (v, u) for i, (u, v) in enumerate(edges)]
        targets = {head for _, head in arcs}
        if source in targets or any(v not in targets for v in others):
            continue
        directed = nx.DiGraph()
        directed.add_nodes_from(graph.nodes)
        directed.add_edges_from(arcs)
        if nx.is_directed_acyclic_graph(directed):
            yield Orientation(graph, {frozenset(a): a for a in arcs})


def tutte_point(graph, source):
    """Acyclic orientations with unique source `source` (equals T_G(1,0))."""
    if source not in graph:
        raise InvalidArgumentError(f"vertex {source} is not in the graph")
    Config.check_cap('TUTTE_EDGES', graph.number_of_edges())
    return sum(1 for _ in orientations_with_unique_source(graph, source))


# --- Kreweras complement and arch graphs -------------------------------------

def _is_union_of_blocks(partition, low, high):
    # is {low+1, ..., high} a union of blocks?
    for block in partition.blocks:
        inside = [low < e <= high for e in block]
        if any(inside) and not all(inside):
            return False
    return True


def kreweras(partition):
    """Kreweras complement of a noncrossing partition of [n]."""
    n = partition.size
    if partition.ground != tuple(range(1, n + 1)):
        raise InvalidArgumentError(f"kreweras needs a partition of [n], got ground {partition.ground}")
    if not is_noncrossing(partition):
        raise InvalidArgumentError(f"{partition} is not noncrossing")
    merge = nx.Graph()
    merge.add_nodes_from(range(1, n + 1))
    for i, j in combinations(range(1, n + 1), 2):
        if _is_union_of_blocks(partition, i, j):
            merge.add_edge(i, j)
    return SetPartition(list(nx.connected_components(merge)), range(1, n + 1))


def arch_graph(partition):
    """Directed graph on [n]: i->i+1 when i is maximal in its block (else i+1->i), plus i->successor(i)."""
    n = partition.size
    if partition.ground != tuple(range(1, n + 1)):
        raise InvalidArgumentError("arch graphs are defined for partitions of [n]")
    graph = nx.DiGraph()
    graph.add_nodes_from(range(1, n + 1))
    for i in range(1, n):
        if partition.is_block_max(i):
            graph.add_edge(i, i + 1)
        else:
            graph.add_edge(i + 1, i)
    for i in range(1, n + 1):
        nxt = partition.successor(i)
        if nxt is not None:
            graph.add_edge(i, nxt)
    return graph


def linear_extension_count(partition):
    """Number of topological orders of the arch graph (0 when it has a cycle)."""
    n = partition.size
    Config.check_cap('LINEXT_N', n)
    graph = arch_graph(partition)
    if not nx.is_directed_acyclic_graph(graph):
        return 0
    need = [0] * n
    for u, v in graph.edges:
        need[v - 1] |= 1 << (u - 1)
    ways = [0] * (1 << n)
    ways[0] = 1
    for mask in range(1 << n):
        count = ways[mask]
        if not count:
            continue
        for v in range(n):
            bit = 1 << v
            if not mask & bit and need[v] & mask == need[v]:
                ways[mask | bit] += count
    return ways[(1 << n) - 1]


def linear_extensions(partition):
    """All topological orders of the arch graph, lexicographically sorted."""
    Config.check_cap('LINEXT_N', partition.size)
    graph = arch_graph(partition)
    if not nx.is_directed_acyclic_graph(graph):
        return []
    return sorted(tuple(order) for order in nx.all_topological_sorts(graph))


def is_linear_extension(partition, order):
    order = tuple(order)
    if sorted(order) != list(range(1, partition.size + 1)):
        return False
    position = {v: i for i, v in enumerate(order)}
    return all(position[u] < position[v] for u, v in arch_graph(partition).edges)


def kreweras_extension_count(eta):
    """|L(K(eta))| for a noncrossing eta whose first and last elements share a block, else 0.

    When 1 and n share a block of eta, n is a singleton of K(eta) and the
    extensions pair up with hook configurations of S_{n-1}.
    """
    n = eta.size
    if n > 1 and eta.block_index(1) != eta.block_index(n):
        return 0
    return linear_extension_count(kreweras(eta))


def hooked_pairs(n):
    """(eta, sigma) with eta noncrossing on [n] and sigma counted by kreweras_extension_count."""
    for eta in enumerate_partitions(n, 'noncrossing'):
        if n > 1 and eta.block_index(1) != eta.block_index(n):
            continue
        for sigma in linear_extensions(kreweras(eta)):
            yield eta, sigma
