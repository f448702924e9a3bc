"""
Stack-sorting statistics

Fertility formulas, class-restricted preimage counts, uniquely sorted
permutations, descents of sorted images and of postorder readings, sorted
counts and the degree of noninvertibility.
"""
import logging
import math
from collections import Counter
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache

from config import Config
from cumulant import CumulantSequence, convert
from errors import InvalidArgumentError, UnsupportedError
import perm as perms
import series
from series import MultiPoly, ZERO, TruncatedSeries, X
import tree
import vhc

logger = logging.getLogger(__name__)

FERTILITY_METHODS = ['brute', 'vhc_formula', 'postorder']
PREIMAGE_CLASSES = {'alternating': 'FBPT', 'edp': 'MOT', 'all': 'BPT'}
DESCENT_ROUTES = ['enumerate', 'cumulant']


# --- fertility ---------------------------------------------------------------------

def fertility(perm, method='vhc_formula'):
    perm = perms.validate(perm)
    if method == 'brute':
        return perms.fertility_brute(perm)
    if method == 'vhc_formula':
        return vhc.fertility_formula(perm)
    if method == 'postorder':
        return len(tree.postorder_preimages(perm, tree.TroupeSpec.named('BPT')))
    raise InvalidArgumentError(f"unknown fertility method {method!r}; expected one of {FERTILITY_METHODS}")


def fertility_report(perm):
    """Configuration count, fertility and the class-restricted values of one permutation."""
    perm = perms.validate(perm)
    report = {
        'base': perms.format_perm(perm),
        'vhc_count': vhc.count_vhc(perm),
        'fertility': fertility(perm),
        'classes': {},
    }
    for cls in ('alternating', 'edp'):
        try:
            report['classes'][cls] = class_preimage(perm, cls)
        except UnsupportedError:
            report['classes'][cls] = None
    return report


def class_preimage(perm, cls, weighted=False, method='formula'):
    """Preimages of perm in a permutation class; weighted counts carry x^(des+1)."""
    perm = perms.validate(perm)
    if cls not in PREIMAGE_CLASSES:
        raise InvalidArgumentError(f"unknown class {cls!r}; expected one of {sorted(PREIMAGE_CLASSES)}")
    if cls == 'alternating' and len(perm) % 2 == 0:
        raise UnsupportedError(
            "alternating preimages of even-length permutations are an open problem; use odd length"
        )
    if method == 'brute':
        return _class_preimage_brute(perm, cls, weighted)
    if method != 'formula':
        raise InvalidArgumentError(f"unknown method {method!r}")
    Config.check_cap('VHC_N', len(perm))
    spec = tree.TroupeSpec.named(PREIMAGE_CLASSES[cls])
    stats = ('des_plus_one',) if weighted else ()
    weights = tree.g_table(spec, len(perm), stats)
    total = vhc.weighted_fertility(perm, weights)
    return total if weighted else total.to_int()


_MEMBERSHIP = {
    'alternating': perms.is_alternating,
    'edp': perms.is_edp,
    'all': lambda p: True,
}


def _class_preimage_brute(perm, cls, weighted):
    keep = _MEMBERSHIP[cls]
    found = [p for p in perms.brute_preimages(perm) if keep(perms.standardize(p))]
    if not weighted:
        return len(found)
    total = ZERO
    for p in found:
        total = total + MultiPoly.monomial([len(perms.descents(p)) + 1])
    return total


def refined_fertility_check(perm, spec, stats=()):
    """Refined tree fertility: sum over postorder preimages equals the configuration sum."""
    perm = perms.validate(perm)
    stats = tree.normalize_stats(stats)
    direct = tree.preimage_polynomial(perm, spec, stats)
    formula = vhc.weighted_fertility(perm, tree.g_table(spec, len(perm), stats))
    return {
        'success': direct == formula,
        'base': perms.format_perm(perm),
        'troupe': spec.label,
        'direct': str(direct),
        'formula': str(formula),
    }


def decomposition_lemma_check(perm, d, spec=None, stats=('des', 'peak')):
    """Split the preimage polynomial at a right-bound descent d over the hooks with southwest end d."""
    perm = perms.validate(perm)
    spec = spec or tree.TroupeSpec.named('BPT')
    stats = tree.normalize_stats(stats)
    if d not in perms.right_bound_descents(perm):
        raise InvalidArgumentError(f"{d} is not a right-bound descent of {perms.format_perm(perm)}")
    left = tree.preimage_polynomial(perm, spec, stats)
    right = ZERO
    for hook in vhc.sw_hooks(perm, d):
        outer = tree.preimage_polynomial(vhc.unsheltered(perm, hook), spec, stats)
        inner = tree.preimage_polynomial(vhc.sheltered(perm, hook), spec, stats)
        right = right + outer * inner
    return {
        'success': left == right,
        'base': perms.format_perm(perm),
        'descent': d,
        'left': str(left),
        'right': str(right),
    }


# --- uniquely sorted ---------------------------------------------------------------------

def is_sorted(perm):
    """perm is in the image of s."""
    perm = tuple(perm)
    return next(vhc.iter_configurations(perm), None) is not None


def uniquely_sorted(perm):
    """Sorted with exactly (n-1)/2 descents."""
    perm = perms.validate(perm)
    n = len(perm)
    if n % 2 == 0:
        return False
    return len(perms.descents(perm)) == (n - 1) // 2 and is_sorted(perm)


def matching_free_cumulants(N):
    return CumulantSequence('free', [-1 if n == 2 else 0 for n in range(1, N + 1)])


def count_uniquely_sorted(n, method='cumulant'):
    if n < 0:
        raise InvalidArgumentError(f"n must be nonnegative, got {n}")
    if n == 0 or n % 2 == 0:
        return 0
    if method == 'enumerate':
        Config.check_cap('BRUTE_PERM_N', n)
        return sum(1 for p in perms.all_permutations(n) if uniquely_sorted(p))
    if method != 'cumulant':
        raise InvalidArgumentError(f"unknown method {method!r}")
    classical = convert(matching_free_cumulants(n + 1), 'classical', 'recursion')
    return (-classical(n + 1)).to_int()


# --- descents of sorted images -------------------------------------------------------------

def sorted_descent_polynomial(n, route='cumulant'):
    """Sum over sigma in S_(n-1) of x^(des(s(sigma))+1)."""
    if n < 1:
        raise InvalidArgumentError(f"n must be positive, got {n}")
    if route == 'enumerate':
        Config.check_cap('BRUTE_PERM_N', n - 1)
        total = Counter(len(perms.descents(perms.stack_sort(s))) + 1 for s in perms.all_permutations(n - 1))
        return MultiPoly({(k,): count for k, count in total.items()})
    if route != 'cumulant':
        raise InvalidArgumentError(f"unknown route {route!r}; expected one of {DESCENT_ROUTES}")
    kappa = CumulantSequence('free', [-X * series.catalan(m - 1) for m in range(1, n + 1)])
    return -convert(kappa, 'classical', 'recursion')(n)


def _mean_exponent(poly):
    total = poly.evaluate({1: 1})
    return poly.derivative(1).evaluate({1: 1}) / total


def expected_descent(n):
    """E(des(s(sigma)) + 1) for sigma uniform in S_(n-1)."""
    if n < 1:
        raise InvalidArgumentError(f"n must be positive, got {n}")
    return (3 - sum(Fraction(1, math.factorial(j)) for j in range(n + 1))) * n


@lru_cache(maxsize=None)
def _stirling2(m, j):
    if m == j:
        return 1
    if j == 0 or j > m:
        return 0
    return j * _stirling2(m - 1, j) + _stirling2(m - 1, j - 1)


def descent_moment(n, m, route='cumulant'):
    """E(D_n^m) from factorial moments, i.e. x-derivatives of the descent polynomial at x = 1."""
    if m < 0:
        raise InvalidArgumentError(f"moment order must be nonnegative, got {m}")
    poly = sorted_descent_polynomial(n, route)
    mass = math.factorial(n - 1)
    result = Fraction(0)
    derived = poly
    for j in range(m + 1):
        if j:
            derived = derived.derivative(1)
        weight = _stirling2(m, j)
        if weight:
            result += weight * derived.evaluate({1: 1}) / mass
    return result


def first_descent_probability(n):
    """Probability that 1 is a descent of s(sigma), sigma uniform in S_n."""
    if n < 1:
        raise InvalidArgumentError(f"n must be positive, got {n}")
    total = sum(Fraction(m * (m - 1) * (m - 2), 2 * math.factorial(m + 1)) for m in range(1, n))
    return total + Fraction((n - 1) * (n - 2), 2 * math.factorial(n))


def descent_position_probabilities(n, positions=(1, 2)):
    """Brute probabilities that i is a descent of s(sigma), sigma uniform in S_n."""
    Config.check_cap('BRUTE_PERM_N', n)
    hits = Counter()
    for s in perms.all_permutations(n):
        image_descents = set(perms.descents(perms.stack_sort(s)))
        for i in positions:
            if i in image_descents:
                hits[i] += 1
    total = math.factorial(n)
    return {i: Fraction(hits[i], total) for i in positions}


def expectation_series(N):
    """Sum of E(D_n)/n z^n = (1 + 2z - e^z)/(1 - z)."""
    z = TruncatedSeries.z(N)
    return (1 + 2 * z - series.exp_series(N)) / (1 - z)


def second_moment_series(N):
    """Sum of E(D_n^2)/n z^n."""
    z = TruncatedSeries.z(N)
    e1 = series.exp_series(N)
    e2 = series.exp_series(N, scale=2)
    head = 2 + 7 * z - (3 + 5 * z - 3 * z ** 2 + z ** 3) * e1 + e2
    return head / ((1 - z) * (1 - z))


# --- descents of postorder readings in a troupe ------------------------------------------

def troupe_descent_polynomial(spec, n, route='cumulant'):
    """Sum over standardized decreasing trees of size n-1 in the troupe of x^(des(postorder)+1)."""
    if n < 1:
        raise InvalidArgumentError(f"n must be positive, got {n}")
    if route == 'enumerate':
        total = ZERO
        for t in tree.enumerate_decreasing(spec, n - 1):
            reading = tree.traverse(t, 'postorder')
            total = total + MultiPoly.monomial([len(perms.descents(reading)) + 1])
        return total
    if route != 'cumulant':
        raise InvalidArgumentError(f"unknown route {route!r}; expected one of {DESCENT_ROUTES}")
    counts = tree.g_table(spec, n - 1)
    kappa = CumulantSequence('free', [-X * counts[m - 1] for m in range(1, n + 1)])
    return -convert(kappa, 'classical', 'recursion')(n)


def closed_form_f(name, order):
    """The moment series of kappa_n = -x G_(n-1) in closed form, for the named troupes."""
    name = name.upper()
    z = TruncatedSeries.z(order)
    x1 = X
    if name == 'BPT':
        root = ((2 * x1 - 4) * z + x1 * x1 * z * z).sqrt1p()
        return (-x1 - x1 * x1 * z + x1 * root) / 2
    if name == 'FBPT':
        root = ((4 * x1 - 4) * z * z).sqrt1p()
        return -x1 * (1 + 2 * x1 * z * z - root) / (2 * (1 + x1 * x1 * z * z))
    if name == 'MOT':
        root = (-2 * z + (4 * x1 - 3) * z * z).sqrt1p()
        return -x1 * (1 - z + 2 * x1 * z * z - root) / (2 * (1 - x1 * z + x1 * x1 * z * z))
    if name == 'SCH':
        root = ((2 * x1 - 6) * z + (1 + 2 * x1 + x1 * x1) * z * z).sqrt1p()
        return -x1 * (1 - z + x1 * z - root) / (2 * (1 - x1 * z))
    raise UnsupportedError(f"no closed form for troupe {name!r}")


def troupe_descent_series(spec, N, route='cumulant'):
    """EGF in z whose n-th coefficient is the descent polynomial over trees of size n-1."""
    Config.check_cap('SERIES_ORDER', N)
    if route == 'closed':
        if not spec.is_named:
            raise UnsupportedError("closed forms exist only for the named troupes")
        moments = closed_form_f(spec.name, N).to_egf()
        return -moments.log1p()
    coeffs = [ZERO] + [troupe_descent_polynomial(spec, n, route) / math.factorial(n) for n in range(1, N + 1)]
    return TruncatedSeries(coeffs, N)


def _period_six(values, order):
    return TruncatedSeries([Fraction(values[n % 6]) / math.factorial(n) for n in range(order + 1)], order)


def descent_derivative_series(name, N):
    """Closed form of the sum over n of (sum of des(postorder)+1 over trees of size n-1) z^n/n!."""
    name = name.upper()
    z = TruncatedSeries.z(N)
    e1 = series.exp_series(N)
    if name == 'BPT':
        return expectation_series(N)
    if name == 'FBPT':
        sec = TruncatedSeries(
            [Fraction(series.euler(n), math.factorial(n)) if n % 2 == 0 else 0 for n in range(N + 1)], N
        )
        tan = TruncatedSeries(
            [Fraction(series.euler(n), math.factorial(n)) if n % 2 == 1 else 0 for n in range(N + 1)], N
        )
        return 1 - sec + z * tan
    if name == 'MOT':
        # e^(z/2) cos(sqrt(3) z/2) and e^(z/2) sin(sqrt(3) z/2)/sqrt(3)
        cos_part = _period_six([1, Fraction(1, 2), Fraction(-1, 2), -1, Fraction(-1, 2), Fraction(1, 2)], N)
        sin_part = _period_six([0, Fraction(1, 2), Fraction(1, 2), 0, Fraction(-1, 2), Fraction(-1, 2)], N)
        return -(e1 - cos_part - (1 + 2 * z) * sin_part) / (cos_part - sin_part)
    if name == 'SCH':
        e2 = series.exp_series(N, scale=2)
        return -(1 - (2 + z) * e1 + e2) / (2 - e1)
    raise UnsupportedError(f"no closed derivative series for troupe {name!r}")


def troupe_expected_descent(spec, n, route='cumulant'):
    return _mean_exponent(troupe_descent_polynomial(spec, n, route))


def fbpt_expected_descent_closed(n):
    """(1 - E_n/(n E_(n-1))) n for even n, E the Euler zigzag numbers."""
    if n < 2 or n % 2:
        raise InvalidArgumentError(f"n must be even and at least 2, got {n}")
    return (1 - Fraction(series.euler(n), n * series.euler(n - 1))) * n


def sparse_troupe_counts():
    """G_0..G_7 for the troupe generated by one black vertex and every black/white branch on 7 vertices."""
    extra = len(tree.all_branches(7, (tree.BLACK, tree.WHITE)))
    return [series.aerated_catalan(n) + (extra if n == 7 else 0) for n in range(8)]


def sparse_troupe_descent_polynomial(counts=None):
    """Descent polynomial over decreasing trees of size 7 in the troupe above; not unimodal."""
    counts = counts or sparse_troupe_counts()
    N = len(counts)
    kappa = CumulantSequence('free', [-X * counts[m - 1] for m in range(1, N + 1)])
    return -convert(kappa, 'classical', 'recursion')(N)


# --- sorted counts -------------------------------------------------------------------------

def _sorted_recurrence(M):
    rows = {0: None}

    def e(m, n):
        if n < 0:
            return 0
        if m == 0:
            return 1
        return rows[m][n]

    for m in range(1, M + 1):
        row = []
        for n in range(M - m + 1):
            total = e(m - 1, n + 1)
            for i in range(1, m):
                binom = math.comb(m - 1, i)
                for j in range(n):
                    step = e(i, j) - e(i, j - 1)
                    if step:
                        total += binom * e(m - i - 1, n - j) * step
            row.append(total)
        rows[m] = row
    return e(M, 0)


def sorted_count(m, method='recurrence'):
    """|s(S_m)|, the number of sorted permutations of length m."""
    if m < 0:
        raise InvalidArgumentError(f"m must be nonnegative, got {m}")
    if method == 'brute':
        Config.check_cap('BRUTE_PERM_N', m)
        return len({perms.stack_sort(s) for s in perms.all_permutations(m)})
    if method != 'recurrence':
        raise InvalidArgumentError(f"unknown method {method!r}")
    Config.check_cap('SORTED_COUNT_M', m)
    if m == 0:
        return 1
    return _sorted_recurrence(m)


# --- degree of noninvertibility -----------------------------------------------------------

def degree_noninvertibility(n, method='formula'):
    """(1/n!) times the sum over S_n of the squared fertilities."""
    if n < 0:
        raise InvalidArgumentError(f"n must be nonnegative, got {n}")
    if method == 'brute':
        Config.check_cap('BRUTE_PERM_N', n)
        images = Counter(perms.stack_sort(s) for s in perms.all_permutations(n))
        squares = sum(count * count for count in images.values())
    elif method == 'formula':
        Config.check_cap('VHC_N', n)
        squares = sum(vhc.fertility_formula(p) ** 2 for p in perms.all_permutations(n))
    else:
        raise InvalidArgumentError(f"unknown method {method!r}")
    return Fraction(squares, math.factorial(n))


def squared_catalan_classical(N):
    """-c_n for kappa_n = -C_(n-1)^2, n = 1..N."""
    kappa = CumulantSequence('free', [-(series.catalan(m - 1) ** 2) for m in range(1, N + 1)])
    classical = convert(kappa, 'classical', 'recursion')
    return [(-classical(n)).to_int() for n in range(1, N + 1)]


def degree_lower_bound(N, digits=12):
    """(-c_N / (N^2 (N-1)!))^(1/N) for kappa = -C^2, with the exact ingredients."""
    if N < 1:
        raise InvalidArgumentError(f"N must be positive, got {N}")
    minus_c = squared_catalan_classical(N)[-1]
    ratio = Fraction(minus_c, N * N * math.factorial(N - 1))
    with localcontext() as ctx:
        ctx.prec = digits + 10
        root = (Decimal(ratio.numerator) / Decimal(ratio.denominator)) ** (Decimal(1) / Decimal(N))
        rendered = format(root.quantize(Decimal(1).scaleb(-digits)), 'f')
    return {'N': N, 'minus_c': minus_c, 'ratio': str(ratio), 'root': rendered}


def degree_inequality_check(N):
    """(n-1)! d_(n-1) >= -c_n for kappa = -C^2 and n = 1..N."""
    bounds = squared_catalan_classical(N)
    rows = []
    ok = True
    for n in range(1, N + 1):
        left = degree_noninvertibility(n - 1) * math.factorial(n - 1)
        holds = left >= bounds[n - 1]
        ok = ok and holds
        rows.append({'n': n, 'left': str(left), 'minus_c': bounds[n - 1], 'holds': holds})
    return {'success': ok, 'rows': rows}


# --- observations ------------------------------------------------------------------------

def vhc_counts(N):
    """|VHC(S_(n-1))| for n = 1..N via kappa_n = -1."""
    classical = convert(CumulantSequence('free', [-1] * N), 'classical', 'recursion')
    return [(-classical(n)).to_int() for n in range(1, N + 1)]


def conjecture_observations(parity_top=12, roots_top=10):
    """Report the parity pattern of configuration counts and real-rootedness of descent polynomials."""
    counts = vhc_counts(parity_top)
    parity = []
    for n in range(3, parity_top + 1):
        odd = counts[n - 1] % 2 == 1
        power = ((n + 1) & n) == 0
        parity.append({'n': n, 'count': counts[n - 1], 'odd': odd, 'matches': odd == power})

    families = {
        'sorted': lambda n: sorted_descent_polynomial(n),
        'FBPT': lambda n: troupe_descent_polynomial(tree.TroupeSpec.named('FBPT'), n) if n % 2 == 0 else None,
        'MOT': lambda n: troupe_descent_polynomial(tree.TroupeSpec.named('MOT'), n),
        'SCH': lambda n: troupe_descent_polynomial(tree.TroupeSpec.named('SCH'), n),
    }
    real_rooted = {}
    for label, build in families.items():
        rows = []
        for n in range(1, roots_top + 1):
            poly = build(n)
            if poly is None or poly.is_zero():
                continue
            rows.append({'n': n, 'real_rooted': series.is_real_rooted(poly)})
        real_rooted[label] = rows

    holds = all(row['matches'] for row in parity) and all(
        row['real_rooted'] for rows in real_rooted.values() for row in rows
    )
    if not holds:
        logger.warning("an observed pattern failed; see the report")
    return {'success': True, 'all_hold': holds, 'parity': parity, 'real_rooted': real_rooted}
