"""
Valid hook configurations

A hook joins a descent top (its southwest endpoint) to a later, larger entry
(its northeast endpoint). Positions are 1-based indices into the base
permutation; heights are always read back from the base.
"""
import logging
import math
import re
from collections import namedtuple
from itertools import permutations, product

from config import Config
from errors import InvalidArgumentError
import partition
import perm as perms
import series
import tree
import worker_pool

logger = logging.getLogger(__name__)

Hook = namedtuple('Hook', ['sw', 'ne'])

SKY = 0


def sw_hooks(base, i):
    """Hooks of base whose southwest endpoint is position i."""
    height = base[i - 1]
    return [Hook(i, j) for j in range(i + 1, len(base) + 1) if base[j - 1] > height]


def unsheltered(base, hook):
    return tuple(base[:hook.sw]) + tuple(base[hook.ne:])


def sheltered(base, hook):
    return tuple(base[hook.sw:hook.ne - 1])


class ValidHookConfiguration:
    """A permutation with one hook per descent"""

    __slots__ = ('base', 'hooks', '_coloring')

    def __init__(self, base, hooks):
        self.base = perms.validate(base)
        self.hooks = tuple(Hook(int(sw), int(ne)) for sw, ne in sorted(hooks))
        self._coloring = None

    @classmethod
    def parse(cls, text, validate=True):
        """'3,1,4,2,5,6,7 [(1,3),(3,5)]'."""
        match = re.fullmatch(r'\s*([\d,\s]*?)\s*\[(.*)\]\s*', str(text))
        if not match:
            raise InvalidArgumentError(f"bad configuration literal {text!r}")
        base = perms.parse_perm(match.group(1).replace(' ', ''))
        pairs = re.findall(r'\(\s*(\d+)\s*,\s*(\d+)\s*\)', match.group(2))
        config = cls(base, [(int(a), int(b)) for a, b in pairs])
        if validate and not is_valid_configuration(config.base, config.hooks):
            raise InvalidArgumentError(f"{text!r} is not a valid hook configuration")
        return config

    def __str__(self):
        hooks = ','.join(f'({h.sw},{h.ne})' for h in self.hooks)
        return f'{perms.format_perm(self.base)} [{hooks}]'

    def __repr__(self):
        return f'ValidHookConfiguration({str(self)!r})'

    def __eq__(self, other):
        return isinstance(other, ValidHookConfiguration) and (self.base, self.hooks) == (other.base, other.hooks)

    def __hash__(self):
        return hash((self.base, self.hooks))

    @property
    def size(self):
        return len(self.base)

    def q(self):
        return coloring(self)['q']

    def to_dict(self):
        colors = coloring(self)
        data = {
            'base': perms.format_perm(self.base),
            'hooks': [list(h) for h in self.hooks],
            'q': list(colors['q']),
        }
        if colors['vertical'] is not None:
            data['vertical'] = str(colors['vertical'])
            data['horizontal'] = str(colors['horizontal'])
        return data


# --- enumeration -----------------------------------------------------------------

def _choices(base, descent_list, index, kept):
    """Yield hook tuples for descents[:index] given the kept positions of the current permutation."""
    if index == 0:
        yield ()
        return
    d = descent_list[index - 1]
    height = base[d - 1]
    after = [p for p in kept if p > d]
    for ne in after:
        if base[ne - 1] <= height:
            continue
        remaining = [p for p in kept if p <= d or p > ne]
        for earlier in _choices(base, descent_list, index - 1, remaining):
            yield earlier + (Hook(d, ne),)


def iter_configurations(base):
    """Uncapped generator behind enumerate_vhc; callers enforce their own cap."""
    base = tuple(base)
    descent_list = perms.descents(base)
    kept = list(range(1, len(base) + 1))
    for hooks in _choices(base, descent_list, len(descent_list), kept):
        yield ValidHookConfiguration(base, hooks)


def enumerate_vhc(base):
    """Every valid hook configuration of base, largest descent decided first."""
    base = perms.validate(base)
    Config.check_cap('VHC_N', len(base))
    return list(iter_configurations(base))


def count_vhc(base):
    descent_list = perms.descents(base)
    return sum(1 for _ in _choices(base, descent_list, len(descent_list), list(range(1, len(base) + 1))))


def _segments_meet(vertical, horizontal, base):
    # vertical part of one hook against the horizontal part of another
    x = vertical.sw
    low, high = base[vertical.sw - 1], base[vertical.ne - 1]
    level = base[horizontal.ne - 1]
    if vertical.sw == horizontal.ne:
        return False
    return horizontal.sw <= x <= horizontal.ne and low <= level <= high


def is_valid_configuration(base, hooks):
    """Standalone check of the three validity conditions; shared northeast endpoints are rejected."""
    base = tuple(base)
    hooks = sorted(Hook(*h) for h in hooks)
    descent_list = perms.descents(base)
    if [h.sw for h in hooks] != descent_list:
        return False
    for h in hooks:
        if not (1 <= h.sw < h.ne <= len(base)) or base[h.ne - 1] <= base[h.sw - 1]:
            return False
        top = base[h.ne - 1]
        if any(base[p - 1] > top for p in range(h.sw + 1, h.ne)):
            return False
    if len({h.ne for h in hooks}) != len(hooks):
        return False
    for a in hooks:
        for b in hooks:
            if a != b and _segments_meet(a, b, base):
                return False
    return True


def brute_configurations(base):
    """Validator-side enumeration: every hook tuple that passes is_valid_configuration."""
    descent_list = perms.descents(base)
    options = [sw_hooks(base, d) for d in descent_list]
    found = []
    for hooks in product(*options):
        if is_valid_configuration(base, hooks):
            found.append(ValidHookConfiguration(base, hooks))
    return sorted(found, key=lambda c: c.hooks)


# --- coloring ------------------------------------------------------------------------

def coloring(config):
    """Induced coloring, composition q and the vertical/horizontal partitions.

    Color 0 is the sky (blue); color t is hook t in ascending-descent order.
    """
    if config._coloring is not None:
        return config._coloring
    base = config.base
    m = len(base)
    hooks = config.hooks
    ne_owner = {h.ne: t for t, h in enumerate(hooks, start=1)}

    basic = []
    modified = []
    for p in range(1, m + 1):
        if p in ne_owner:
            basic.append(None)
            modified.append(ne_owner[p])
            continue
        seen = SKY
        lowest = None
        for t, h in enumerate(hooks, start=1):
            if h.sw < p < h.ne:
                level = base[h.ne - 1]
                if lowest is None or level < lowest:
                    lowest, seen = level, t
        basic.append(seen)
        modified.append(seen)

    q = tuple(sum(1 for c in basic if c == t) for t in range(len(hooks) + 1))

    vertical = horizontal = None
    if sorted(base) == list(range(1, m + 1)):
        heights = {}
        places = {}
        for p, color in enumerate(modified, start=1):
            heights.setdefault(color, []).append(base[p - 1])
            places.setdefault(color, []).append(p)
        heights.setdefault(SKY, []).append(m + 1)
        places.setdefault(SKY, []).append(m + 1)
        ground = range(1, m + 2)
        vertical = partition.SetPartition(heights.values(), ground)
        horizontal = partition.SetPartition(places.values(), ground)

    config._coloring = {
        'point_colors': modified,
        'basic_colors': basic,
        'q': q,
        'vertical': vertical,
        'horizontal': horizontal,
    }
    return config._coloring


def _require_standard(config):
    if sorted(config.base) != list(range(1, config.size + 1)):
        raise InvalidArgumentError(f"{config} needs a standardized base permutation")


def vertical_partition(config):
    _require_standard(config)
    return coloring(config)['vertical']


def horizontal_partition(config):
    _require_standard(config)
    return coloring(config)['horizontal']


# --- the two bijections ------------------------------------------------------------

def phi(config):
    """(vertical partition, orientation of its crossing graph by horizontal minima)."""
    _require_standard(config)
    colors = coloring(config)
    vertical = colors['vertical']
    m = config.size
    color_of_height = {m + 1: SKY}
    for p, color in enumerate(colors['point_colors'], start=1):
        color_of_height[config.base[p - 1]] = color
    horizontal_min = {}
    for p, color in enumerate(colors['point_colors'], start=1):
        horizontal_min.setdefault(color, p)
    horizontal_min[SKY] = min(horizontal_min.get(SKY, m + 1), m + 1)

    graph = partition.crossing_graph(vertical)
    block_min = {}
    for index, block in enumerate(vertical.blocks):
        block_min[index] = horizontal_min[color_of_height[block[0]]]
    direction = {}
    for u, v in graph.edges:
        arc = (u, v) if block_min[u] < block_min[v] else (v, u)
        direction[frozenset((u, v))] = arc
    return vertical, partition.Orientation(graph, direction)


def psi(config):
    """(horizontal partition, inverse of the base followed by n)."""
    _require_standard(config)
    colors = coloring(config)
    return colors['horizontal'], perms.inverse(config.base) + (config.size + 1,)


def psi_inverse(eta, sigma):
    """Rebuild the configuration from a noncrossing partition and a linear extension of its complement."""
    sigma = perms.validate(sigma)
    n = eta.size
    if n > 1 and eta.block_index(1) != eta.block_index(n):
        raise InvalidArgumentError(f"1 and {n} must share a block of {eta}")
    complement = partition.kreweras(eta)
    if not partition.is_linear_extension(complement, sigma):
        raise InvalidArgumentError(f"{perms.format_perm(sigma)} is not a linear extension of K({eta})")
    if sigma[-1] != n:
        raise InvalidArgumentError(f"{perms.format_perm(sigma)} must end with {n}")
    base = perms.inverse(sigma[:-1])
    hooks = []
    for d in perms.descents(base):
        successor = complement.successor(d)
        if successor is None:
            raise InvalidArgumentError(f"descent {d} has no successor in K({eta})")
        hooks.append(Hook(d, successor))
    if not is_valid_configuration(base, hooks):
        raise InvalidArgumentError(f"({eta}, {perms.format_perm(sigma)}) does not give a valid configuration")
    return ValidHookConfiguration(base, hooks)


def tree_hook_count(config):
    """Decreasing labelings of the in-order tree skeleton of the base."""
    _require_standard(config)
    return tree.hook_length_count(tree.skeleton(perms.inorder_tree(config.base)))


# --- all configurations of S_{n-1} ----------------------------------------------------

def _vhc_for_first(args):
    m, first, restrict = args
    rest = [e for e in range(1, m + 1) if e != first]
    found = []
    for tail in permutations(rest):
        base = (first,) + tail
        if restrict == 'avoid231' and not perms.avoids_231(base):
            continue
        found.extend(enumerate_vhc(base))
    return found


def _count_for_first(args):
    m, first, restrict = args
    rest = [e for e in range(1, m + 1) if e != first]
    total = 0
    for tail in permutations(rest):
        base = (first,) + tail
        if restrict == 'avoid231' and not perms.avoids_231(base):
            continue
        total += count_vhc(base)
    return total


def _jobs(n, restrict):
    if restrict not in ('none', 'avoid231'):
        raise InvalidArgumentError(f"unknown restriction {restrict!r}")
    if n < 1:
        raise InvalidArgumentError(f"n must be positive, got {n}")
    Config.check_cap('VHC_N', n - 1)
    return [(n - 1, first, restrict) for first in range(1, n)]


def enumerate_vhc_all(n, restrict='none'):
    """Configurations of every base in S_{n-1}, base-lexicographic."""
    jobs = _jobs(n, restrict)
    if not jobs:
        return enumerate_vhc(())
    found = []
    for chunk in worker_pool.ordered_map(_vhc_for_first, jobs):
        found.extend(chunk)
    logger.debug("VHC(S_%d) with restriction %s: %d", n - 1, restrict, len(found))
    return found


def count_vhc_all(n, restrict='none'):
    jobs = _jobs(n, restrict)
    if not jobs:
        return 1
    return sum(worker_pool.ordered_map(_count_for_first, jobs))


# --- fertility sums ------------------------------------------------------------------

def weighted_fertility(base, weights):
    """Sum over configurations of the product of weights[q_t]; uncapped."""
    total = series.ZERO
    for config in iter_configurations(base):
        term = series.ONE
        for part in coloring(config)['q']:
            term = term * weights[part]
        total = total + term
    return total


def fertility_formula(base):
    """|s^-1(base)| as a sum of Catalan products over the configurations."""
    Config.check_cap('VHC_N', len(base))
    weights = [series.catalan(j) for j in range(len(base) + 1)]
    total = 0
    for config in iter_configurations(base):
        total += math.prod(weights[part] for part in coloring(config)['q'])
    return total
