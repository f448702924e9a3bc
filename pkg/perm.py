"""
Permutations and the stack-sorting map

Permutations are tuples of distinct positive integers over any ground set.
"""
import logging
from itertools import permutations

from config import Config
from errors import InvalidArgumentError
import tree
import worker_pool

logger = logging.getLogger(__name__)

ENGINES = ['stack', 'recursive']


def validate(entries):
    perm = tuple(int(e) for e in entries)
    if len(set(perm)) != len(perm):
        raise InvalidArgumentError(f"permutation entries must be distinct: {perm}")
    if any(e < 1 for e in perm):
        raise InvalidArgumentError(f"permutation entries must be positive: {perm}")
    return perm


def parse_perm(text):
    """'4,1,6,2' -> (4, 1, 6, 2); the empty string is the empty permutation."""
    text = str(text).strip()
    if not text:
        return ()
    try:
        return validate(item for item in text.split(','))
    except ValueError as e:
        if isinstance(e, InvalidArgumentError):
            raise
        raise InvalidArgumentError(f"bad permutation literal {text!r}")


def format_perm(perm):
    return ','.join(str(e) for e in perm)


# --- stack-sorting --------------------------------------------------------

def _stack_engine(perm):
    stack = []
    out = []
    for entry in perm:
        while stack and stack[-1] < entry:
            out.append(stack.pop())
        stack.append(entry)
    while stack:
        out.append(stack.pop())
    return tuple(out)


def _recursive_engine(perm):
    if not perm:
        return ()
    k = perm.index(max(perm))
    return _recursive_engine(perm[:k]) + _recursive_engine(perm[k + 1:]) + (perm[k],)


def stack_sort(perm, engine='stack'):
    """Apply the stack-sorting map s once."""
    perm = tuple(perm)
    if engine == 'stack':
        return _stack_engine(perm)
    if engine == 'recursive':
        return _recursive_engine(perm)
    raise InvalidArgumentError(f"unknown engine {engine!r}; expected one of {ENGINES}")


def is_t_stack_sortable(perm, t):
    if t < 1:
        raise InvalidArgumentError(f"t must be positive, got {t}")
    current = tuple(perm)
    for _ in range(t):
        current = _stack_engine(current)
    return is_increasing(current)


# --- statistics and classes -------------------------------------------------

def is_increasing(perm):
    return all(a < b for a, b in zip(perm, perm[1:]))


def descents(perm):
    """1-based indices i with perm[i] > perm[i+1]."""
    return [i for i in range(1, len(perm)) if perm[i - 1] > perm[i]]


def peaks(perm):
    return [i for i in range(2, len(perm)) if perm[i - 2] < perm[i - 1] > perm[i]]


def tail_length(perm):
    """Length of the longest suffix fixed by the standardization."""
    std = standardize(perm)
    n = len(std)
    length = 0
    while length < n and std[n - 1 - length] == n - length:
        length += 1
    return length


def is_alternating(perm):
    return descents(perm) == list(range(2, len(perm), 2))


def is_edp(perm):
    """Every descent is a peak."""
    return len(descents(perm)) == len(peaks(perm))


def avoids_231(perm):
    for i, pivot in enumerate(perm):
        seen_bigger = False
        for later in perm[i + 1:]:
            if later > pivot:
                seen_bigger = True
            elif seen_bigger:
                return False
    return True


def classify(perm):
    """Descent data and class memberships; classes use relative order only."""
    perm = tuple(perm)
    return {
        'descents': descents(perm),
        'peaks': peaks(perm),
        'tail_length': tail_length(perm),
        'alternating': is_alternating(perm),
        'edp': is_edp(perm),
        'avoids_231': avoids_231(perm),
        'increasing': is_increasing(perm),
    }


def right_bound_descents(perm):
    """Descents d whose larger entries to the right all sit in the rightmost ascending run."""
    found = descents(perm)
    if not found:
        return []
    last = found[-1]
    result = []
    for d in found:
        pivot = perm[d - 1]
        if all(j > last for j in range(d + 1, len(perm) + 1) if perm[j - 1] > pivot):
            result.append(d)
    return result


# --- standardization and inverses -------------------------------------------

def standardize(perm):
    order = {value: rank for rank, value in enumerate(sorted(perm), start=1)}
    return tuple(order[e] for e in perm)


def inverse(perm):
    """Inverse of a permutation of [n]."""
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise InvalidArgumentError(f"inverse needs a permutation of [n], got {perm}")
    result = [0] * n
    for position, value in enumerate(perm, start=1):
        result[value - 1] = position
    return tuple(result)


def all_permutations(n):
    """S_n in lexicographic order."""
    return list(permutations(range(1, n + 1)))


# --- preimages --------------------------------------------------------------

def _preimages_with_first(args):
    target, first, rest = args
    found = []
    for tail in permutations(rest):
        candidate = (first,) + tail
        if _stack_engine(candidate) == target:
            found.append(candidate)
    return found


def brute_preimages(perm):
    """Every ordering of the ground set that stack-sorts to perm."""
    perm = validate(perm)
    Config.check_cap('BRUTE_PERM_N', len(perm))
    if not perm:
        return [()]
    if perm[-1] != max(perm):
        return []
    ground = sorted(perm)
    jobs = [(perm, first, tuple(e for e in ground if e != first)) for first in ground]
    found = []
    for chunk in worker_pool.ordered_map(_preimages_with_first, jobs):
        found.extend(chunk)
    return found


def fertility_brute(perm):
    return len(brute_preimages(perm))


# --- trees -------------------------------------------------------------------

def inorder_tree(perm):
    """The decreasing binary plane tree (all black) whose in-order reading is perm."""
    perm = tuple(perm)
    if not perm:
        return None
    k = perm.index(max(perm))
    return tree.dnode(perm[k], tree.BLACK, inorder_tree(perm[:k]), inorder_tree(perm[k + 1:]))
