"""
Colored binary plane trees

A colored tree is None (the empty tree) or a tuple (color, left, right).
A decreasing tree is None or (label, color, left, right) with every child
labelled below its parent. Vertices are addressed by root-to-vertex paths of
'L'/'R' steps ('' is the root).
"""
import logging
import math
import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from config import Config
from errors import InvalidArgumentError, UnsupportedError
from series import (
    MultiPoly, ZERO, aerated_catalan, catalan, motzkin, motzkin_poly,
    narayana_poly, schroeder,
)

logger = logging.getLogger(__name__)

BLACK = 'b'
WHITE = 'w'
NAMED_TROUPES = ['BPT', 'FBPT', 'MOT', 'SCH']

_COLOR = re.compile(r'^(b|w|c[1-9]\d*)$')


def synthetic(k):
    if k < 1:
        raise InvalidArgumentError(f"synthetic colors are numbered from 1, got {k}")
    return f'c{k}'


def parse_color(text):
    if not _COLOR.match(text):
        raise InvalidArgumentError(f"unknown color {text!r}; expected b, w or c<k>")
    return text


def node(color, left=None, right=None):
    return (color, left, right)


def dnode(label, color, left=None, right=None):
    return (label, color, left, right)


def _parts(t):
    """(color, left, right) of a colored or decreasing node."""
    if len(t) == 4:
        return t[1], t[2], t[3]
    return t


# --- literals ---------------------------------------------------------------

_TOKEN = re.compile(r'\(|\)|[^\s()]+')


def _tokens(text):
    return _TOKEN.findall(str(text))


def _parse_tokens(tokens, position, decreasing):
    if position >= len(tokens) or tokens[position] != '(':
        raise InvalidArgumentError("tree literal: expected '('")
    position += 1
    if position < len(tokens) and tokens[position] == ')':
        return None, position + 1
    if position >= len(tokens):
        raise InvalidArgumentError("tree literal: unexpected end")
    atom = tokens[position]
    position += 1
    left, position = _parse_tokens(tokens, position, decreasing)
    right, position = _parse_tokens(tokens, position, decreasing)
    if position >= len(tokens) or tokens[position] != ')':
        raise InvalidArgumentError("tree literal: expected ')'")
    position += 1
    if decreasing:
        if ':' not in atom:
            raise InvalidArgumentError(f"decreasing node needs label:color, got {atom!r}")
        label, color = atom.split(':', 1)
        try:
            label = int(label)
        except ValueError:
            raise InvalidArgumentError(f"bad label in {atom!r}")
        return dnode(label, parse_color(color), left, right), position
    return node(parse_color(atom), left, right), position


def parse_tree(text):
    """Parse '(b (w () ()) ())' style literals."""
    tokens = _tokens(text)
    result, position = _parse_tokens(tokens, 0, decreasing=False)
    if position != len(tokens):
        raise InvalidArgumentError("tree literal: trailing input")
    return result


def parse_decreasing(text):
    """Parse '(3:b (1:b () ()) (2:w () ()))'; rejects repeated labels and order violations."""
    tokens = _tokens(text)
    result, position = _parse_tokens(tokens, 0, decreasing=True)
    if position != len(tokens):
        raise InvalidArgumentError("tree literal: trailing input")
    labels = traverse(result, 'inorder')
    if len(set(labels)) != len(labels):
        raise InvalidArgumentError("decreasing tree labels must be distinct")
    if any(label < 1 for label in labels):
        raise InvalidArgumentError("decreasing tree labels must be positive")
    if not _is_decreasing(result):
        raise InvalidArgumentError("labels must decrease from parent to child")
    return result


def _is_decreasing(t):
    if t is None:
        return True
    label, _, left, right = t
    for child in (left, right):
        if child is not None and child[0] >= label:
            return False
    return _is_decreasing(left) and _is_decreasing(right)


def serialize(t):
    if t is None:
        return '()'
    if len(t) == 4:
        label, color, left, right = t
        return f'({label}:{color} {serialize(left)} {serialize(right)})'
    color, left, right = t
    return f'({color} {serialize(left)} {serialize(right)})'


# --- shape queries ------------------------------------------------------------

def size(t):
    if t is None:
        return 0
    _, left, right = _parts(t)
    return 1 + size(left) + size(right)


def skeleton(t):
    """Forget the labels of a decreasing tree."""
    if t is None:
        return None
    color, left, right = _parts(t)
    return (color, skeleton(left), skeleton(right))


def node_at(t, path):
    current = t
    for step in path:
        if current is None:
            break
        color, left, right = _parts(current)
        if step == 'L':
            current = left
        elif step == 'R':
            current = right
        else:
            raise InvalidArgumentError(f"paths use L and R only, got {path!r}")
    if current is None:
        raise InvalidArgumentError(f"path {path!r} does not address a vertex")
    return current


def replace_at(t, path, subtree):
    if not path:
        return subtree
    if t is None:
        raise InvalidArgumentError(f"path {path!r} does not address a vertex")
    if len(t) == 4:
        label, color, left, right = t
        if path[0] == 'L':
            return (label, color, replace_at(left, path[1:], subtree), right)
        return (label, color, left, replace_at(right, path[1:], subtree))
    color, left, right = t
    if path[0] == 'L':
        return (color, replace_at(left, path[1:], subtree), right)
    if path[0] == 'R':
        return (color, left, replace_at(right, path[1:], subtree))
    raise InvalidArgumentError(f"paths use L and R only, got {path!r}")


def vertex_paths(t, prefix=''):
    """Paths of every vertex in postorder."""
    if t is None:
        return []
    _, left, right = _parts(t)
    return vertex_paths(left, prefix + 'L') + vertex_paths(right, prefix + 'R') + [prefix]


def is_branch(t):
    if t is None:
        return True
    _, left, right = _parts(t)
    if left is not None and right is not None:
        return False
    return is_branch(left) and is_branch(right)


def colors_in(t):
    if t is None:
        return set()
    color, left, right = _parts(t)
    return {color} | colors_in(left) | colors_in(right)


# --- insertion and decomposition ------------------------------------------------

def insert(t1, path, t2):
    """Insert t2 into t1 at the vertex addressed by path."""
    if t1 is None or t2 is None:
        raise InvalidArgumentError("insertion needs two nonempty trees")
    v = node_at(t1, path)
    return replace_at(t1, path, (BLACK, v, t2))


def decompose(t, path):
    """Split at a black vertex with two children; inverse of insert."""
    if t is None:
        raise InvalidArgumentError("cannot decompose the empty tree")
    vstar = node_at(t, path)
    color, left, right = vstar
    if color != BLACK:
        raise InvalidArgumentError(f"vertex {path!r} is {color}, not black")
    if left is None or right is None:
        raise InvalidArgumentError(f"vertex {path!r} does not have two children")
    return replace_at(t, path, left), right


# --- traversals and statistics ------------------------------------------------

def traverse(t, order='inorder'):
    """In-order or postorder label reading of a decreasing tree."""
    if order not in ('inorder', 'postorder'):
        raise InvalidArgumentError(f"unknown traversal {order!r}")
    out = []

    def walk(current):
        if current is None:
            return
        label, _, left, right = current
        walk(left)
        if order == 'inorder':
            out.append(label)
            walk(right)
        else:
            walk(right)
            out.append(label)

    walk(t)
    return tuple(out)


def statistics(t):
    """Right edges, 2-child vertices, black vertices and size (des=0, peak=-1 for the empty tree)."""
    des = peak = black = count = 0
    stack = [t] if t is not None else []
    while stack:
        color, left, right = _parts(stack.pop())
        count += 1
        if color == BLACK:
            black += 1
        if right is not None:
            des += 1
            stack.append(right)
        if left is not None:
            stack.append(left)
        if left is not None and right is not None:
            peak += 1
    return {'des': des, 'peak': peak if t is not None else -1, 'black': black, 'size': count}


STATISTICS = ['size_plus_one', 'des_plus_one', 'peak_plus_one', 'black_plus_one']
_ALIASES = {'size': 'size_plus_one', 'des': 'des_plus_one', 'peak': 'peak_plus_one', 'black': 'black_plus_one'}


def parse_statistic(tag):
    tag = _ALIASES.get(tag.strip(), tag.strip())
    if tag in STATISTICS:
        return tag
    if tag.startswith('color_count:'):
        color = parse_color(tag.split(':', 1)[1])
        if color == BLACK:
            return 'black_plus_one'
        return f'color_count:{color}'
    raise InvalidArgumentError(f"unknown tree statistic {tag!r}")


def normalize_stats(stats):
    return tuple(parse_statistic(s) for s in (stats or ()))


def _color_count(t, color):
    if t is None:
        return 0
    c, left, right = _parts(t)
    return (c == color) + _color_count(left, color) + _color_count(right, color)


def stat_value(tag, t):
    """Value of an insertion-additive statistic on a (skeleton of a) tree."""
    tag = parse_statistic(tag)
    if tag.startswith('color_count:'):
        return _color_count(t, tag.split(':', 1)[1])
    values = statistics(t)
    return values[tag[:-len('_plus_one')]] + 1


def monomial(t, stats):
    return MultiPoly.monomial([stat_value(tag, t) for tag in stats])


# --- troupes ---------------------------------------------------------------------

def _bpt_rule(has_left, has_right):
    return (BLACK,)


def _fbpt_rule(has_left, has_right):
    return (BLACK,) if has_left == has_right else ()


def _mot_rule(has_left, has_right):
    return () if has_right and not has_left else (BLACK,)


def _sch_rule(has_left, has_right):
    return (BLACK,) if has_left else (BLACK, WHITE)


_RULES = {'BPT': _bpt_rule, 'FBPT': _fbpt_rule, 'MOT': _mot_rule, 'SCH': _sch_rule}
_HAS_EMPTY = {'BPT': True, 'FBPT': False, 'MOT': False, 'SCH': True}


class TroupeSpec:
    """A named troupe or the insertion closure of a finite set of branches"""

    def __init__(self, name=None, branches=None, include_empty=False, label=None):
        if name is not None:
            name = name.upper()
            if name not in NAMED_TROUPES:
                raise InvalidArgumentError(f"unknown troupe {name!r}; expected one of {NAMED_TROUPES}")
            self.name = name
            self.branches = ()
            self.include_empty = _HAS_EMPTY[name]
        else:
            cleaned = []
            for branch in branches or ():
                if branch is None:
                    include_empty = True
                    continue
                if not is_branch(branch):
                    raise InvalidArgumentError(f"{serialize(branch)} is not a branch")
                cleaned.append(branch)
            self.name = None
            self.branches = tuple(sorted(set(cleaned), key=serialize))
            self.include_empty = bool(include_empty)
        self.label = label or self.name or f'generated[{len(self.branches)}]'
        self._levels = None

    @classmethod
    def named(cls, name):
        return cls(name=name)

    @classmethod
    def generated(cls, branches, include_empty=False, label=None):
        return cls(branches=branches, include_empty=include_empty, label=label)

    @classmethod
    def from_counts(cls, omega, realization='color'):
        """Realize omega_n generators of each size n >= 1; omega_0 flags the empty tree."""
        omega = [int(w) for w in omega]
        if not omega or omega[0] not in (0, 1):
            raise InvalidArgumentError("omega_0 must be 0 or 1 (empty-tree flag)")
        if any(w < 0 for w in omega):
            raise InvalidArgumentError("omega entries must be nonnegative")
        branches = []
        next_color = 1
        for n, count in enumerate(omega[1:], start=1):
            shapes = 1 << (n - 1)
            for j in range(count):
                if realization == 'color':
                    branches.append(_left_path(n, synthetic(next_color)))
                    next_color += 1
                elif realization == 'shape':
                    if j < shapes:
                        branches.append(_path_shape(n, j, BLACK))
                    else:
                        branches.append(_path_shape(n, j % shapes, synthetic(next_color)))
                        next_color += 1
                else:
                    raise InvalidArgumentError(f"unknown realization {realization!r}")
        return cls.generated(branches, include_empty=omega[0] == 1, label=f'omega:{realization}')

    @property
    def is_named(self):
        return self.name is not None

    @property
    def key(self):
        if self.name:
            return ('named', self.name)
        return ('generated', self.include_empty, tuple(serialize(b) for b in self.branches))

    def __eq__(self, other):
        return isinstance(other, TroupeSpec) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f'TroupeSpec({self.label})'

    def palette(self):
        if self.name == 'SCH':
            return (BLACK, WHITE)
        if self.name:
            return (BLACK,)
        colors = {BLACK}
        for branch in self.branches:
            colors |= colors_in(branch)
        return tuple(sorted(colors))


def parse_troupe(text):
    return TroupeSpec.named(text)


def _left_path(n, color):
    t = None
    for _ in range(n):
        t = (color, t, None)
    return t


def _path_shape(n, index, color):
    # bit i of index set: the vertex at depth i+1 is a right child
    t = (color, None, None)
    for i in range(n - 2, -1, -1):
        t = (color, None, t) if (index >> i) & 1 else (color, t, None)
    return t


def all_branches(n, colors=(BLACK,)):
    """Every branch on n vertices with vertices colored from `colors`."""
    if n == 0:
        return [None]
    found = []
    for shape in range(1 << (n - 1)):
        base = _path_shape(n, shape, BLACK)
        for coloring in _colorings(n, colors):
            found.append(_recolor(base, iter(coloring)))
    return found


def _colorings(n, colors):
    if n == 0:
        yield ()
        return
    for first in colors:
        for rest in _colorings(n - 1, colors):
            yield (first,) + rest


def _recolor(t, stream):
    if t is None:
        return None
    _, left, right = t
    return (next(stream), _recolor(left, stream), _recolor(right, stream))


def in_troupe(t, spec):
    """Membership test; generated specs recurse through decomposition."""
    if t is None:
        return spec.include_empty
    if spec.is_named:
        rule = _RULES[spec.name]
        stack = [t]
        while stack:
            color, left, right = _parts(stack.pop())
            if color not in rule(left is not None, right is not None):
                return False
            stack.extend(child for child in (left, right) if child is not None)
        return True
    return _in_generated(skeleton(t), spec)


def _in_generated(t, spec):
    for path in vertex_paths(t):
        color, left, right = node_at(t, path)
        if left is not None and right is not None:
            if color != BLACK:
                return False
    if is_branch(t):
        return t in spec.branches
    for path in vertex_paths(t):
        color, left, right = node_at(t, path)
        if left is not None and right is not None:
            first, second = decompose(t, path)
            return _in_generated(first, spec) and _in_generated(second, spec)
    return False


@lru_cache(maxsize=None)
def _grow(name, n):
    if n == 0:
        return (None,)
    rule = _RULES[name]
    found = []
    for i in range(n):
        for left in _grow(name, i):
            for right in _grow(name, n - 1 - i):
                for color in rule(left is not None, right is not None):
                    found.append((color, left, right))
    return tuple(found)


def _closure_levels(spec, top):
    levels = spec._levels or [[None] if spec.include_empty else []]
    by_size = {}
    for branch in spec.branches:
        by_size.setdefault(size(branch), []).append(branch)
    while len(levels) <= top:
        n = len(levels)
        found = set(by_size.get(n, []))
        for n1 in range(1, n - 1):
            n2 = n - 1 - n1
            if n2 < 1:
                continue
            for t1 in levels[n1]:
                paths = vertex_paths(t1)
                for t2 in levels[n2]:
                    for path in paths:
                        found.add(insert(t1, path, t2))
        levels.append(sorted(found, key=serialize))
        logger.debug("closure level %d: %d trees", n, len(levels[-1]))
    spec._levels = levels
    return levels


def enumerate_troupe(spec, n):
    """All trees of size n in the troupe, sorted by serialization."""
    Config.check_cap('TREE_N', n)
    if n < 0:
        raise InvalidArgumentError(f"size must be nonnegative, got {n}")
    if spec.is_named:
        if n == 0:
            return [None] if spec.include_empty else []
        return sorted(_grow(spec.name, n), key=serialize)
    return list(_closure_levels(spec, n)[n])


def troupe_count(spec, n):
    """|T_n|, from closed formulas for named troupes."""
    if n < 0:
        return 0
    if spec.name == 'BPT':
        return catalan(n)
    if spec.name == 'FBPT':
        return aerated_catalan(n)
    if spec.name == 'MOT':
        return motzkin(n - 1) if n >= 1 else 0
    if spec.name == 'SCH':
        return schroeder(n)
    Config.check_cap('TRANSFORM_N', n)
    return len(_closure_levels(spec, n)[n])


def _labelings(t, labels):
    """Decreasing labelings of skeleton t using the sorted label tuple."""
    if t is None:
        yield None
        return
    color, left, right = t
    top = labels[-1]
    rest = labels[:-1]
    left_size = size(left)
    for chosen in combinations(range(len(rest)), left_size):
        picked = set(chosen)
        left_labels = tuple(rest[i] for i in chosen)
        right_labels = tuple(rest[i] for i in range(len(rest)) if i not in picked)
        for left_tree in _labelings(left, left_labels):
            for right_tree in _labelings(right, right_labels):
                yield (top, color, left_tree, right_tree)


def decreasing_labelings(t, labels=None):
    if labels is None:
        labels = tuple(range(1, size(t) + 1))
    return list(_labelings(t, tuple(sorted(labels))))


def enumerate_decreasing(spec, n):
    """Standardized decreasing trees whose skeletons lie in the troupe."""
    found = []
    for t in enumerate_troupe(spec, n):
        labelled = decreasing_labelings(t)
        labelled.sort(key=lambda d: traverse(d, 'inorder'))
        found.extend(labelled)
    return found


def hook_length_count(t):
    """Number of decreasing labelings of skeleton t: n!/prod of subtree sizes."""
    sizes = []

    def walk(current):
        if current is None:
            return 0
        _, left, right = _parts(current)
        total = 1 + walk(left) + walk(right)
        sizes.append(total)
        return total

    n = walk(t)
    return math.factorial(n) // math.prod(sizes)


# --- G polynomials ---------------------------------------------------------------------

def _binom(a, b):
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def _bpt_des_peak(n):
    x1 = MultiPoly.var(1)
    if n == 0:
        return x1
    terms = {}
    for j in range(1, n + 1):
        for i in range(j, n + 1):
            denom = n + 1 - j
            if denom <= 0:
                continue
            value = (_binom(n - 1, n - j) * _binom(n + 1 - j, j) * _binom(n + 1 - 2 * j, i - j))
            if value:
                terms[(i, j)] = Fraction(value, denom)
    return MultiPoly(terms)


def closed_g_polynomial(spec, n, stats):
    """Closed forms for named troupes; UnsupportedError when none is known."""
    stats = normalize_stats(stats)
    x1 = MultiPoly.var(1)
    name = spec.name
    if name == 'BPT':
        if stats == ():
            return MultiPoly.const(catalan(n))
        if stats == ('des_plus_one',):
            return x1 if n == 0 else narayana_poly(n)
        if stats == ('des_plus_one', 'peak_plus_one'):
            return _bpt_des_peak(n)
    if name == 'FBPT':
        if stats == ():
            return MultiPoly.const(aerated_catalan(n))
        if stats == ('des_plus_one',):
            if n % 2 == 0:
                return ZERO
            k = (n - 1) // 2
            return MultiPoly.monomial([k + 1], catalan(k))
    if name == 'MOT':
        if stats == ():
            return MultiPoly.const(motzkin(n - 1) if n >= 1 else 0)
        if stats == ('des_plus_one',):
            return motzkin_poly(n - 1) if n >= 1 else ZERO
    if name == 'SCH':
        if stats == ():
            return MultiPoly.const(schroeder(n))
        if stats == ('des_plus_one',):
            return x1 if n == 0 else narayana_poly(n, scale=2)
        if stats == ('black_plus_one',):
            return MultiPoly({(j + 1,): _binom(n + j, n - j) * catalan(j) for j in range(n + 1)})
    raise UnsupportedError(f"no closed form for {spec.label} with statistics {list(stats)}")


def g_polynomial(spec, n, stats=(), method='enumerate'):
    """Sum over T in the troupe of size n of x1^f1(T)...xr^fr(T)."""
    stats = normalize_stats(stats)
    if method == 'closed':
        return closed_g_polynomial(spec, n, stats)
    if method != 'enumerate':
        raise InvalidArgumentError(f"unknown method {method!r}")
    total = ZERO
    for t in enumerate_troupe(spec, n):
        total = total + monomial(t, stats)
    return total


def g_table(spec, top, stats=()):
    """[G_0, ..., G_top], using closed forms where available."""
    stats = normalize_stats(stats)
    table = []
    for n in range(top + 1):
        try:
            table.append(closed_g_polynomial(spec, n, stats))
        except UnsupportedError:
            table.append(g_polynomial(spec, n, stats))
    return table


# --- postorder preimages ---------------------------------------------------------------

def _color_choices(spec):
    if spec.is_named:
        return _RULES[spec.name]
    palette = spec.palette()

    def choices(has_left, has_right):
        return (BLACK,) if has_left and has_right else palette

    return choices


def _postorder_trees(segment, choices, memo):
    if segment in memo:
        return memo[segment]
    if not segment:
        memo[segment] = [None]
        return memo[segment]
    top = segment[-1]
    if top != max(segment):
        memo[segment] = []
        return memo[segment]
    rest = segment[:-1]
    found = []
    for k in range(len(rest) + 1):
        lefts = _postorder_trees(rest[:k], choices, memo)
        if not lefts:
            continue
        rights = _postorder_trees(rest[k:], choices, memo)
        for left in lefts:
            for right in rights:
                for color in choices(left is not None, right is not None):
                    found.append((top, color, left, right))
    memo[segment] = found
    return found


def postorder_preimages(perm, spec):
    """Decreasing trees with postorder reading perm whose skeletons lie in the troupe."""
    perm = tuple(perm)
    Config.check_cap('TREE_N', len(perm))
    if not perm:
        return [None] if spec.include_empty else []
    found = _postorder_trees(perm, _color_choices(spec), {})
    if not spec.is_named:
        found = [t for t in found if in_troupe(t, spec)]
    return found


def preimage_polynomial(perm, spec, stats=()):
    """Sum of statistic monomials over postorder_preimages(perm, spec)."""
    stats = normalize_stats(stats)
    total = ZERO
    for t in postorder_preimages(perm, spec):
        total = total + monomial(skeleton(t), stats)
    return total


# --- troupe transform --------------------------------------------------------------------

def troupe_transform(omega, N, realization='color'):
    """|InsCl(B)_n| for n = 0..N where B realizes omega."""
    Config.check_cap('TRANSFORM_N', N)
    omega = [int(w) for w in omega]
    if len(omega) < N + 1:
        raise InvalidArgumentError(f"omega needs {N + 1} entries for N = {N}, got {len(omega)}")
    spec = TroupeSpec.from_counts(omega[:N + 1], realization=realization)
    levels = _closure_levels(spec, N)
    return [len(levels[n]) for n in range(N + 1)]
