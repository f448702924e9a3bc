"""
Moment and cumulant conversions

Moments, classical cumulants and free cumulants are 1-indexed sequences of
polynomials. Every conversion has a combinatorial route (a sum over set
partitions or hook configurations grouped by block type) and a recursion
route; all routes for the same conversion must agree.
"""
import json
import logging
import math
from functools import lru_cache

from config import Config
from errors import InvalidArgumentError
import partition
import series
from series import MultiPoly, ONE, ZERO, TruncatedSeries
import tree
import vhc

logger = logging.getLogger(__name__)

KINDS = ['moments', 'classical', 'free']
METHODS = ['lattice', 'recursion', 'lehner', 'josuat', 'vhc', 'nc_linext', 'avoid231', 'series_log']


class CumulantSequence:
    """Sequence u_1..u_N of a given kind"""

    def __init__(self, kind, values):
        if kind not in KINDS:
            raise InvalidArgumentError(f"unknown sequence kind {kind!r}; expected one of {KINDS}")
        self.kind = kind
        self.values = [MultiPoly.coerce(v) for v in values]

    def __len__(self):
        return len(self.values)

    def __call__(self, n):
        """u_n (1-based)."""
        if n < 1 or n > len(self.values):
            raise InvalidArgumentError(f"{self.kind} sequence has no term {n}")
        return self.values[n - 1]

    def __eq__(self, other):
        return isinstance(other, CumulantSequence) and self.kind == other.kind and self.values == other.values

    def __repr__(self):
        return f'CumulantSequence({self.kind!r}, [{", ".join(str(v) for v in self.values)}])'

    def truncate(self, length):
        if length > len(self.values):
            raise InvalidArgumentError(f"need {length} terms, the sequence has {len(self.values)}")
        return CumulantSequence(self.kind, self.values[:length])

    def to_dict(self):
        return {'kind': self.kind, 'values': [str(v) for v in self.values]}

    @classmethod
    def parse(cls, kind, text):
        """Parse a JSON list of numbers or polynomial strings."""
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise InvalidArgumentError(f"sequence is not valid JSON: {e}")
        if isinstance(data, dict):
            data = data.get('values', [])
        if not isinstance(data, list) or not data:
            raise InvalidArgumentError("sequence JSON must be a nonempty list")
        values = []
        for item in data:
            if isinstance(item, dict):
                item = item.get('poly', '')
            values.append(MultiPoly.parse(str(item)))
        return cls(kind, values)


# --- block-type weights ------------------------------------------------------------

def _add(table, key, amount):
    table[key] = table.get(key, 0) + amount


_FAMILY_CAPS = {
    'all': 'PARTITION_ALL_N',
    'connected': 'PARTITION_ALL_N',
    'josuat': 'PARTITION_ALL_N',
    'noncrossing': 'PARTITION_N',
    'nc_linext': 'PARTITION_N',
}


def _type_weights(n, family):
    """{block type: total weight} over the objects of a family of size n.

    The weights are cached per process; caps are checked on every call.
    """
    if family in ('vhc', 'avoid231'):
        Config.check_cap('VHC_N', n - 1)
    elif family in _FAMILY_CAPS:
        Config.check_cap(_FAMILY_CAPS[family], n)
    return _cached_weights(n, family)


@lru_cache(maxsize=None)
def _cached_weights(n, family):
    weights = {}
    if family in ('all', 'noncrossing', 'connected'):
        for rho in partition.enumerate_partitions(n, family):
            _add(weights, rho.block_type(), 1)
    elif family == 'josuat':
        for rho in partition.enumerate_partitions(n, 'connected'):
            graph = partition.crossing_graph(rho)
            _add(weights, rho.block_type(), partition.tutte_point(graph, rho.block_index(n)))
    elif family == 'nc_linext':
        for eta in partition.enumerate_partitions(n, 'noncrossing'):
            count = partition.kreweras_extension_count(eta)
            if count:
                _add(weights, eta.block_type(), count)
    elif family == 'vhc':
        for config in vhc.enumerate_vhc_all(n):
            _add(weights, vhc.vertical_partition(config).block_type(), 1)
    elif family == 'avoid231':
        for config in vhc.enumerate_vhc_all(n, 'avoid231'):
            _add(weights, vhc.horizontal_partition(config).block_type(), vhc.tree_hook_count(config))
    else:
        raise InvalidArgumentError(f"unknown partition family {family!r}")
    logger.debug("block-type weights for %s at n=%d: %d types", family, n, len(weights))
    return tuple(sorted(weights.items()))


def _product(values, block_type, negate=False):
    term = ONE
    for part in block_type:
        value = values[part - 1]
        term = term * (-value if negate else value)
    return term


def _weighted_sum(values, n, family, negate=False, skip_single=False):
    total = ZERO
    for block_type, weight in _type_weights(n, family):
        if skip_single and len(block_type) == 1:
            continue
        total = total + _product(values, block_type, negate) * weight
    return total


# --- routes ------------------------------------------------------------------------

def _lattice_forward(family):
    def route(values, N):
        return [_weighted_sum(values, n, family) for n in range(1, N + 1)]
    return route


def _lattice_inverse(family):
    # u_n = v_n - sum over non-trivial partitions of products of earlier u
    def route(values, N):
        out = []
        for n in range(1, N + 1):
            padded = out + [ZERO]
            out.append(values[n - 1] - _weighted_sum(padded, n, family, skip_single=True))
        return out
    return route


def _free_to_classical(family):
    def route(values, N):
        return [-_weighted_sum(values, n, family, negate=True) for n in range(1, N + 1)]
    return route


def _classical_to_moments_recursion(values, N):
    moments = [ONE]
    for n in range(1, N + 1):
        total = ZERO
        for k in range(1, n + 1):
            total = total + values[k - 1] * moments[n - k] * math.comb(n - 1, k - 1)
        moments.append(total)
    return moments[1:]


def _moments_to_classical_recursion(values, N):
    moments = [ONE] + list(values[:N])
    out = []
    for n in range(1, N + 1):
        total = moments[n]
        for k in range(1, n):
            total = total - out[k - 1] * moments[n - k] * math.comb(n - 1, k - 1)
        out.append(total)
    return out


def _power_coefficients(moments, N):
    """powers[s][j] = [z^j] (1 + m_1 z + m_2 z^2 + ...)^s."""
    base = TruncatedSeries([ONE] + list(moments), N)
    powers = [TruncatedSeries.one(N)]
    for _ in range(N):
        powers.append(powers[-1] * base)
    return powers


def _free_to_moments_recursion(values, N):
    moments = []
    for n in range(1, N + 1):
        base = TruncatedSeries([ONE] + moments, n)
        power = TruncatedSeries.one(n)
        total = ZERO
        for s in range(1, n + 1):
            power = power * base
            total = total + values[s - 1] * power[n - s]
        moments.append(total)
    return moments


def _moments_to_free_recursion(values, N):
    powers = _power_coefficients(values[:N], N)
    out = []
    for n in range(1, N + 1):
        total = values[n - 1]
        for s in range(1, n):
            total = total - out[s - 1] * powers[s][n - s]
        out.append(total)
    return out


def _moments_to_classical_series(values, N):
    ogf = TruncatedSeries([ZERO] + list(values[:N]), N)
    logged = ogf.to_egf().log1p().to_ogf()
    return [logged[n] for n in range(1, N + 1)]


def _classical_to_moments_series(values, N):
    ogf = TruncatedSeries([ZERO] + list(values[:N]), N)
    grown = ogf.to_egf().exp().to_ogf()
    return [grown[n] for n in range(1, N + 1)]


def _chain(*steps):
    def route(values, N):
        for step in steps:
            values = step(values, N)
        return values
    return route


ROUTES = {
    ('moments', 'classical'): {
        'lattice': _lattice_inverse('all'),
        'recursion': _moments_to_classical_recursion,
        'series_log': _moments_to_classical_series,
    },
    ('classical', 'moments'): {
        'lattice': _lattice_forward('all'),
        'recursion': _classical_to_moments_recursion,
        'series_log': _classical_to_moments_series,
    },
    ('moments', 'free'): {
        'lattice': _lattice_inverse('noncrossing'),
        'recursion': _moments_to_free_recursion,
    },
    ('free', 'moments'): {
        'lattice': _lattice_forward('noncrossing'),
        'recursion': _free_to_moments_recursion,
    },
    ('classical', 'free'): {
        'lehner': _lattice_forward('connected'),
        'recursion': _chain(_classical_to_moments_recursion, _moments_to_free_recursion),
    },
    ('free', 'classical'): {
        'josuat': _free_to_classical('josuat'),
        'vhc': _free_to_classical('vhc'),
        'nc_linext': _free_to_classical('nc_linext'),
        'avoid231': _free_to_classical('avoid231'),
        'recursion': _chain(_free_to_moments_recursion, _moments_to_classical_recursion),
    },
}

_ROUTE_CAPS = {
    'lattice': 'PARTITION_ALL_N',
    'lehner': 'PARTITION_ALL_N',
    'josuat': 'PARTITION_ALL_N',
    'nc_linext': 'PARTITION_N',
    'recursion': 'SERIES_ORDER',
    'series_log': 'SERIES_ORDER',
}


def methods_for(source, target):
    return sorted(ROUTES.get((source, target), {}))


def convert(seq, target, method='recursion', length=None):
    """Convert seq to the target kind by the named route."""
    if target not in KINDS:
        raise InvalidArgumentError(f"unknown target kind {target!r}; expected one of {KINDS}")
    if target == seq.kind:
        return CumulantSequence(target, seq.values[:length or len(seq)])
    routes = ROUTES.get((seq.kind, target), {})
    if method not in routes:
        raise InvalidArgumentError(
            f"method {method!r} does not convert {seq.kind} to {target}; available: {sorted(routes)}"
        )
    N = len(seq) if length is None else length
    if N > len(seq):
        raise InvalidArgumentError(f"requested {N} terms from a sequence of length {len(seq)}")
    if method in ('vhc', 'avoid231'):
        Config.check_cap('VHC_N', N - 1)
    elif method == 'lattice' and 'free' in (seq.kind, target):
        Config.check_cap('PARTITION_N', N)
    else:
        Config.check_cap(_ROUTE_CAPS[method], N)
    logger.debug("convert %s -> %s by %s to length %d", seq.kind, target, method, N)
    return CumulantSequence(target, routes[method](list(seq.values[:N]), N))


def route_agreement(seq, target, length=None):
    """Convert by every applicable route; returns {method: values}."""
    return {
        method: convert(seq, target, method, length).values
        for method in methods_for(seq.kind, target)
    }


# --- troupe reports -------------------------------------------------------------------

def troupe_free_cumulants(spec, stats, N):
    """kappa_n = -G_{n-1} for n = 1..N."""
    table = tree.g_table(spec, N - 1, stats)
    return CumulantSequence('free', [-table[n - 1] for n in range(1, N + 1)])


def troupe_correspondence_check(spec, stats, N, method='vhc'):
    """Compare -c_n from the free side with decreasing-tree sums, n = 1..N."""
    stats = tree.normalize_stats(stats)
    kappa = troupe_free_cumulants(spec, stats, N)
    try:
        classical = convert(kappa, 'classical', method)
    except Exception as e:
        return {'success': False, 'error': str(e), 'troupe': spec.label}
    report = {
        'success': True,
        'troupe': spec.label,
        'stats': list(stats),
        'method': method,
        'checked': N,
        'first_failure': None,
        'values': [],
    }
    for n in range(1, N + 1):
        expected = ZERO
        for t in tree.enumerate_decreasing(spec, n - 1):
            expected = expected + tree.monomial(tree.skeleton(t), stats)
        got = -classical(n)
        report['values'].append(str(got))
        if got != expected:
            report.update({
                'success': False,
                'first_failure': n,
                'expected': str(expected),
                'got': str(got),
            })
            logger.warning("troupe correspondence fails for %s at n=%d", spec.label, n)
            break
    return report


def non_troupe_counterexample_check():
    """The all-branches set is not a troupe, and the cumulant identity fails for it at n = 4."""
    kappa = CumulantSequence('free', [-1] + [-(2 ** (n - 2)) for n in range(2, 5)])
    minus_c4 = (-convert(kappa, 'classical', 'vhc')(4)).to_int()

    symbolic = CumulantSequence('free', [series.x(i) for i in range(1, 5)])
    symbolic_minus_c4 = -convert(symbolic, 'classical', 'vhc')(4)

    branch_count = sum(len(tree.decreasing_labelings(b)) for b in tree.all_branches(3))
    return {
        'success': True,
        'minus_c4': minus_c4,
        'symbolic_minus_c4': str(symbolic_minus_c4),
        'decreasing_branch_count': branch_count,
        'mismatch': minus_c4 != branch_count,
    }
