"""
Two- and three-stack-sortable counts for troupes

Builds the table of weighted fertility sums over 231-avoiding permutations
with a prescribed tail length, checks it against its functional equation and
the known algebraic equations, and evaluates the recurrence for postorder
preimages of two-stack-sortable permutations.
"""
import logging
import math

from config import Config
from errors import InvalidArgumentError, UnsupportedError
import perm as perms
from series import MultiPoly, ZERO, TruncatedSeries
import tree
import vhc
import worker_pool

logger = logging.getLogger(__name__)


def avoiders_231(L):
    """Av_L(231) in lexicographic order, built as alpha L beta with alpha below beta."""
    return [tuple(p) for p in _avoiders(1, L)]


def _avoiders(low, length):
    if length == 0:
        return [()]
    top = low + length - 1
    found = []
    for k in range(length):
        for alpha in _avoiders(low, k):
            for beta in _avoiders(low + k, length - 1 - k):
                found.append(alpha + (top,) + beta)
    found.sort()
    return found


def west_count(n):
    """|W_2(n)| = 2 (3n)! / ((n+1)! (2n+1)!)."""
    return 2 * math.comb(3 * n, n) // ((n + 1) * (2 * n + 1))


class TwoStackTable:
    """Entries (n, l) -> sum over D_{>=l}(n) of the weighted fertility, for n + l <= N"""

    def __init__(self, spec, stats, N, g, entries):
        self.spec = spec
        self.stats = stats
        self.N = N
        self.g = g
        self.entries = entries

    def __getitem__(self, key):
        return self.entries.get(key, ZERO)

    def diagonal(self):
        """I(z, 0): the l = 0 column."""
        return [self[(n, 0)] for n in range(self.N + 1)]

    def rows(self):
        for (n, ell) in sorted(self.entries):
            yield n, ell, self.entries[(n, ell)]

    def to_dict(self):
        return {
            'troupe': self.spec.label,
            'stats': list(self.stats),
            'N': self.N,
            'entries': [{'n': n, 'l': ell, 'poly': str(poly)} for n, ell, poly in self.rows()],
        }


def _two_stack_length(args):
    L, weights = args
    column = {}
    for p in avoiders_231(L):
        value = vhc.weighted_fertility(p, weights)
        if value.is_zero():
            continue
        for ell in range(perms.tail_length(p) + 1):
            column[ell] = column.get(ell, ZERO) + value
    return L, column


def two_stack(spec, stats=(), N=6):
    stats = tree.normalize_stats(stats)
    Config.check_cap('TWO_STACK_N', N)
    g = tree.g_table(spec, N, stats)
    entries = {}
    jobs = [(L, g[:L + 1]) for L in range(N + 1)]
    for L, column in worker_pool.ordered_map(_two_stack_length, jobs):
        for ell, value in column.items():
            entries[(L - ell, ell)] = value
    logger.info("two-stack table for %s up to N=%d: %d entries", spec.label, N, len(entries))
    return TwoStackTable(spec, stats, N, g, entries)


# --- bivariate checks ------------------------------------------------------------------

def _bi_mul(a, b, top):
    out = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            if i1 + i2 + j1 + j2 > top:
                continue
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, ZERO) + c1 * c2
    return out


def _bi_add(a, b, sign=1):
    out = dict(a)
    for key, value in b.items():
        out[key] = out.get(key, ZERO) + value * sign
    return out


def _bi_shift(a, dz, dy):
    return {(i + dz, j + dy): c for (i, j), c in a.items()}


def functional_equation_check(table):
    """zy(I - I0)(I - G) = y(I - G) - z(I - I0) on every coefficient z^a y^b with a + b <= N."""
    N = table.N
    full = dict(table.entries)
    base = {(n, 0): value for (n, ell), value in full.items() if ell == 0}
    gees = {(0, ell): table.g[ell] for ell in range(N + 1)}
    minus_base = _bi_add(full, base, -1)
    minus_g = _bi_add(full, gees, -1)

    left = _bi_shift(_bi_mul(minus_base, minus_g, N - 2), 1, 1)
    right = _bi_add(_bi_shift(minus_g, 0, 1), _bi_shift(minus_base, 1, 0), -1)
    failures = []
    for a in range(N + 1):
        for b in range(N + 1 - a):
            if left.get((a, b), ZERO) != right.get((a, b), ZERO):
                failures.append([a, b])
    if failures:
        logger.warning("functional equation fails at %s", failures[:5])
    return {'success': not failures, 'N': N, 'troupe': table.spec.label, 'failures': failures}


# coefficient lists of P_k(z) in sum P_k(z) v^k
WITNESSES = {
    'FBPT': [
        [0, -1, 0, 27],
        [1, 0, -33],
        [0, 4, 0, 33],
        [0, 0, 6, 0, 1],
        [0, 0, 0, 4],
        [0, 0, 0, 0, 1],
    ],
    'MOT': [
        [0, -1, 3, 24, 1],
        [1, -4, -27, 26, 4],
        [0, 4, -4, 29, 7],
        [0, 0, 6, 4, 7],
        [0, 0, 0, 4, 4],
        [0, 0, 0, 0, 1],
    ],
}


def algebraic_witness_check(which, table):
    """Substitute the unweighted I(z, 0) into its quintic and expect zero up to z^N."""
    name = str(which).upper()
    if name not in WITNESSES:
        raise InvalidArgumentError(f"unknown witness {which!r}; expected fbpt or mot")
    if table.spec.name != name or table.stats:
        raise UnsupportedError(f"the {name} witness applies to the unweighted {name} table only")
    N = table.N
    v = TruncatedSeries(table.diagonal(), N)
    total = TruncatedSeries.zero(N)
    power = TruncatedSeries.one(N)
    for coeffs in WITNESSES[name]:
        total = total + TruncatedSeries(coeffs, N) * power
        power = power * v
    residue = [n for n in range(N + 1) if not total[n].is_zero()]
    return {
        'success': not residue,
        'troupe': name,
        'N': N,
        'counts': [str(c) for c in table.diagonal()],
        'nonzero_orders': residue,
    }


# --- three-stack recurrence --------------------------------------------------------------

def three_stack(spec, stats=(), n=1):
    """Sum over postorder preimages of W_2(n) in the troupe, by the E-recurrence."""
    if n < 1:
        raise InvalidArgumentError(f"n must be positive, got {n}")
    stats = tree.normalize_stats(stats)
    Config.check_cap('THREE_STACK_N', n)
    g = tree.g_table(spec, n + 1, stats)
    memo = {}

    def E(ell, gen, m):
        if gen <= 0:
            return ZERO
        if m == 1:
            return g[ell + 1] if gen == 2 else ZERO
        key = (ell, gen, m)
        if key in memo:
            return memo[key]
        k = m - 1
        total = ZERO
        for j in range(1, ell + 1):
            for a in range(2, k + 1):
                for b in range(max(2, gen - a), gen):
                    for i in range(a - 1, k - b + 2):
                        left = E(j - 1, a, i)
                        if left:
                            total = total + left * E(ell - j + 1, b, k - i)
            total = total + E(j - 1, gen - 1, k) * g[ell - j + 1]
        total = total + E(ell + 1, gen - 1, k)
        memo[key] = total
        return total

    result = ZERO
    for gen in range(1, n + 2):
        result = result + E(0, gen, n)
    return result


def three_stack_brute(spec, stats=(), n=1):
    """Sum of preimage polynomials over the two-stack-sortable permutations of length n."""
    stats = tree.normalize_stats(stats)
    Config.check_cap('BRUTE_PERM_N', n)
    total = ZERO
    for p in perms.all_permutations(n):
        if perms.is_t_stack_sortable(p, 2):
            total = total + tree.preimage_polynomial(p, spec, stats)
    return total


def three_stack_series(spec, stats=(), N=6):
    return [three_stack(spec, stats, n) for n in range(1, N + 1)]


def two_stack_counts(spec, N):
    """Unweighted I(z, 0) coefficients as integers."""
    return [MultiPoly.coerce(c).to_int() for c in two_stack(spec, (), N).diagonal()]


CLASS_TROUPES = {'alternating': 'FBPT', 'edp': 'MOT'}
_CLASS_TESTS = {'alternating': perms.is_alternating, 'edp': perms.is_edp}


def _class_troupe(cls, n):
    if cls not in CLASS_TROUPES:
        raise InvalidArgumentError(f"unknown class {cls!r}; expected one of {sorted(CLASS_TROUPES)}")
    if cls == 'alternating' and n % 2 == 0:
        raise UnsupportedError("full binary trees have odd size; alternating counts need odd n")
    return tree.TroupeSpec.named(CLASS_TROUPES[cls])


def three_stack_class(cls, n):
    """Three-stack-sortable permutations of length n in the class, by the E-recurrence."""
    return three_stack(_class_troupe(cls, n), (), n).to_int()


def three_stack_class_brute(cls, n):
    _class_troupe(cls, n)
    Config.check_cap('BRUTE_PERM_N', n)
    keep = _CLASS_TESTS[cls]
    return sum(1 for p in perms.all_permutations(n) if keep(p) and perms.is_t_stack_sortable(p, 3))
