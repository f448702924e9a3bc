"""
Verification registry for hookcalc
Runs oracle-equivalence suites by name and keeps per-suite status
"""
from datetime import datetime
import math
import sys

from config import Config
import cumulant
from cumulant import CumulantSequence
import partition
import perm as perms
import series
import sortstat
import stacks
import tree
import vhc


class SuiteRegistry:
    """Registry of named verification suites"""

    def __init__(self):
        self.suites = {}
        self._created = datetime.now()

    def register(self, name, check_fn, description='', blocking=True):
        """
        Register a suite

        Args:
            name: Unique suite name (e.g., 'perm.engines')
            check_fn: Callable returning a dict with a 'success' key
            description: One line for listings
            blocking: False for suites whose failure is an observation, not an error
        """
        self.suites[name] = {
            'check_fn': check_fn,
            'description': description,
            'blocking': blocking,
            'status': 'registered',
            'ran_at': None,
            'seconds': None,
            'error': None,
            'details': None,
        }

    def names(self):
        return list(self.suites)

    def run(self, name):
        """Run one suite; returns its result dict"""
        if name not in self.suites:
            print(f"[Verification] Unknown suite: {name}", file=sys.stderr)
            return {'success': False, 'error': f'unknown suite {name}'}

        info = self.suites[name]
        started = datetime.now()
        try:
            details = info['check_fn']()
            passed = bool(details.get('success'))
            info['status'] = 'passed' if passed else 'failed'
            info['error'] = None if passed else details.get('error', 'mismatch')
            info['details'] = details
            print(f"[Verification] {'Passed' if passed else 'Failed'}: {name}", file=sys.stderr)
        except Exception as e:
            info['status'] = 'error'
            info['error'] = str(e)
            info['details'] = None
            print(f"[Verification] Error in {name}: {e}", file=sys.stderr)
        info['ran_at'] = started
        info['seconds'] = (datetime.now() - started).total_seconds()
        return self._entry(name)

    def run_all(self, names=None):
        names = names or self.names()
        print(f"[Verification] Running {len(names)} suites...", file=sys.stderr)
        return [self.run(name) for name in names]

    def _entry(self, name):
        info = self.suites[name]
        return {
            'name': name,
            'success': info['status'] == 'passed' or (not info['blocking'] and info['status'] == 'failed'),
            'status': info['status'],
            'blocking': info['blocking'],
            'seconds': round(info['seconds'], 3) if info['seconds'] is not None else None,
            'error': info['error'],
            'details': info['details'],
        }

    def get_status(self):
        """Totals plus one entry per suite"""
        entries = [self._entry(name) for name in self.suites]
        ran = [e for e in entries if e['status'] != 'registered']
        return {
            'total_suites': len(entries),
            'ran': len(ran),
            'passed': sum(1 for e in ran if e['status'] == 'passed'),
            'success': all(e['success'] for e in ran),
            'suites': entries,
        }


# --- suites ------------------------------------------------------------------------

def _size(cap, preferred):
    return min(preferred, Config.cap(cap))


def check_perm_engines():
    n = _size('BRUTE_PERM_N', 7)
    ground = {
        (4, 1, 6, 2): (1, 4, 2, 6),
        (4, 1, 6, 3, 5, 2): (1, 4, 3, 2, 5, 6),
        (2, 4, 6, 1, 5, 3): (2, 4, 1, 3, 5, 6),
    }
    for p, expected in ground.items():
        if perms.stack_sort(p) != expected:
            return {'success': False, 'error': f'stack_sort({perms.format_perm(p)}) is wrong'}
    for p in perms.all_permutations(n):
        if perms.stack_sort(p, 'stack') != perms.stack_sort(p, 'recursive'):
            return {'success': False, 'error': f'engines disagree on {perms.format_perm(p)}'}
    return {'success': True, 'checked': n}


def check_perm_fertility():
    n = _size('BRUTE_PERM_N', 6)
    bpt = tree.TroupeSpec.named('BPT')
    for p in perms.all_permutations(n):
        brute = perms.fertility_brute(p)
        if brute != vhc.fertility_formula(p) or brute != len(tree.postorder_preimages(p, bpt)):
            return {'success': False, 'error': f'fertility mismatch at {perms.format_perm(p)}'}
    return {'success': True, 'checked': n}


VHC_COUNTS = [1, 1, 1, 2, 6, 22, 99, 520, 3126, 21164]


def check_vhc_counts():
    top = _size('VHC_N', 9) + 1
    counts = [vhc.count_vhc_all(n) for n in range(1, top + 1)]
    from_cumulants = sortstat.vhc_counts(len(VHC_COUNTS))
    ok = counts == VHC_COUNTS[:top] and from_cumulants == VHC_COUNTS
    ok = ok and vhc.count_vhc((3, 1, 4, 2, 5, 6, 7)) == 6
    return {'success': ok, 'enumerated': counts, 'cumulant_route': from_cumulants}


def check_vhc_bijections():
    top = _size('VHC_N', 6) + 1
    for n in range(1, top + 1):
        configs = vhc.enumerate_vhc_all(n)
        images = {vhc.phi(c) for c in configs}
        targets = set()
        for rho in partition.enumerate_partitions(n, 'connected'):
            graph = partition.crossing_graph(rho)
            for orientation in partition.orientations_with_unique_source(graph, rho.block_index(n)):
                targets.add((rho, orientation))
        if images != targets or len(images) != len(configs):
            return {'success': False, 'error': f'phi is not a bijection at n={n}'}

        pairs = set()
        for c in configs:
            eta, sigma = vhc.psi(c)
            pairs.add((eta, sigma))
            if vhc.psi_inverse(eta, sigma) != c:
                return {'success': False, 'error': f'psi_inverse fails at n={n}'}
        if pairs != set(partition.hooked_pairs(n)) or len(pairs) != len(configs):
            return {'success': False, 'error': f'psi is not onto at n={n}'}
    return {'success': True, 'checked': top}


def check_cumulant_routes():
    N = _size('PARTITION_ALL_N', 8)
    symbolic = [series.x(i) for i in range(1, N + 1)]
    for kind in cumulant.KINDS:
        seq = CumulantSequence(kind, symbolic)
        for target in cumulant.KINDS:
            if target == kind:
                continue
            results = cumulant.route_agreement(seq, target)
            values = list(results.values())
            if any(v != values[0] for v in values):
                return {'success': False, 'error': f'routes disagree for {kind} -> {target}'}
            back = cumulant.convert(CumulantSequence(target, values[0]), kind)
            if back != seq:
                return {'success': False, 'error': f'round trip {kind} -> {target} is not the identity'}
    return {'success': True, 'length': N}


def check_known_pairs():
    N = 8
    kappa = CumulantSequence('free', [-series.catalan(n - 1) for n in range(1, N + 1)])
    classical = cumulant.convert(kappa, 'classical')
    moments = cumulant.convert(kappa, 'moments')
    ok = classical.values == [series.MultiPoly.const(-math.factorial(n - 1)) for n in range(1, N + 1)]
    ok = ok and moments.values == [series.MultiPoly.const(-1 if n == 1 else 0) for n in range(1, N + 1)]
    lassalle = [sortstat.count_uniquely_sorted(n) for n in (1, 3, 5, 7, 9, 11)]
    ok = ok and lassalle == [1, 1, 5, 56, 1092, 32670]
    return {'success': ok, 'uniquely_sorted': lassalle}


TROUPE_CASES = [
    ('BPT', ('des', 'peak')),
    ('FBPT', ()),
    ('MOT', ('des',)),
    ('SCH', ('des', 'peak', 'black')),
]


def _minus_classical(name, stats, n):
    kappa = cumulant.troupe_free_cumulants(tree.TroupeSpec.named(name), stats, n)
    return -cumulant.convert(kappa, 'classical')(n)


def check_troupe_correspondence():
    N = _size('TREE_N', 6) + 1
    reports = []
    for name, stats in TROUPE_CASES:
        report = cumulant.troupe_correspondence_check(tree.TroupeSpec.named(name), stats, N, method='recursion')
        reports.append(report)
    ok = all(r['success'] for r in reports)
    for n in range(1, N + 1):
        bpt = _minus_classical('BPT', ('des',), n)
        sch = _minus_classical('SCH', ('des',), n)
        ok = ok and bpt == series.X * series.eulerian_poly(n - 1)
        # the empty tree alone gives -c_1 = x
        if n == 1:
            ok = ok and sch == series.X
        else:
            ok = ok and sch == 2 * series.X * series.eulerian_poly(n - 1, scale=2)
    counter = cumulant.non_troupe_counterexample_check()
    ok = ok and counter['mismatch']
    return {'success': ok, 'reports': reports, 'counterexample': counter}


def check_descents():
    top = _size('BRUTE_PERM_N', 7) + 1
    for n in range(1, top + 1):
        poly = sortstat.sorted_descent_polynomial(n, 'cumulant')
        if poly != sortstat.sorted_descent_polynomial(n, 'enumerate'):
            return {'success': False, 'error': f'descent polynomial routes disagree at n={n}'}
        if sortstat.descent_moment(n, 1) != sortstat.expected_descent(n):
            return {'success': False, 'error': f'expected descent mismatch at n={n}'}
    for n in range(1, top):
        brute = sortstat.descent_position_probabilities(n, (1,))[1]
        if brute != sortstat.first_descent_probability(n):
            return {'success': False, 'error': f'first descent probability mismatch at n={n}'}
    second = sortstat.second_moment_series(top)
    for n in range(1, top + 1):
        if second[n] != sortstat.descent_moment(n, 2) / n:
            return {'success': False, 'error': f'second moment series mismatch at n={n}'}
    fbpt = tree.TroupeSpec.named('FBPT')
    for n in range(2, 11, 2):
        if sortstat.troupe_expected_descent(fbpt, n) != sortstat.fbpt_expected_descent_closed(n):
            return {'success': False, 'error': f'FBPT expectation mismatch at n={n}'}
    return {'success': True, 'checked': top}


def check_sorted_count():
    top = _size('BRUTE_PERM_N', 8)
    brute = [sortstat.sorted_count(m, 'brute') for m in range(top + 1)]
    recurrence = [sortstat.sorted_count(m) for m in range(top + 1)]
    return {'success': brute == recurrence, 'values': recurrence}


def check_degree():
    top = _size('BRUTE_PERM_N', 6)
    for n in range(top + 1):
        if sortstat.degree_noninvertibility(n) != sortstat.degree_noninvertibility(n, 'brute'):
            return {'success': False, 'error': f'degree mismatch at n={n}'}
    return sortstat.degree_inequality_check(_size('VHC_N', 7) + 1)


def check_stacks():
    N = _size('TWO_STACK_N', 10)
    results = {}
    bpt = stacks.two_stack(tree.TroupeSpec.named('BPT'), (), N)
    counts = [c.to_int() for c in bpt.diagonal()]
    results['west'] = counts[1:] == [stacks.west_count(n) for n in range(1, N + 1)]
    for name in ('BPT', 'FBPT', 'MOT'):
        table = bpt if name == 'BPT' else stacks.two_stack(tree.TroupeSpec.named(name), (), N)
        results[f'equation.{name}'] = stacks.functional_equation_check(table)['success']
        if name != 'BPT':
            results[f'witness.{name}'] = stacks.algebraic_witness_check(name, table)['success']
    top = _size('BRUTE_PERM_N', 8)
    for n in range(1, top + 1):
        w3 = sum(1 for p in perms.all_permutations(n) if perms.is_t_stack_sortable(p, 3))
        if stacks.three_stack(tree.TroupeSpec.named('BPT'), (), n).to_int() != w3:
            results['three_stack'] = False
            break
    else:
        results['three_stack'] = True
    results['three_stack.classes'] = all(
        stacks.three_stack_class(cls, n) == stacks.three_stack_class_brute(cls, n)
        for cls in stacks.CLASS_TROUPES
        for n in range(1, top + 1)
        if cls == 'edp' or n % 2
    )
    return {'success': all(results.values()), 'results': results}


TRANSFORM_PAIRS = [
    ([1, 1, 2, 4, 8, 16, 32, 64], [1, 1, 2, 5, 14, 42, 132, 429]),
    ([0, 1, 1, 1, 1, 1, 1, 1], [0, 1, 1, 2, 4, 9, 21, 51]),
    ([0, 1, 0, 0, 0, 0, 0, 0], [0, 1, 0, 1, 0, 2, 0, 5]),
    ([1, 2, 6, 18, 54, 162, 486, 1458], [1, 2, 6, 22, 90, 394, 1806, 8558]),
]


def check_transform():
    N = _size('TRANSFORM_N', 7)
    for omega, expected in TRANSFORM_PAIRS:
        for realization in ('color', 'shape'):
            if tree.troupe_transform(omega, N, realization) != expected[:N + 1]:
                return {'success': False, 'error': f'transform of {omega} by {realization} is wrong'}
    return {'success': True, 'N': N}


def check_observations():
    report = sortstat.conjecture_observations(_size('VHC_N', 11) + 1, 8)
    report['success'] = report['all_hold']
    return report


def default_registry():
    registry = SuiteRegistry()
    registry.register('perm.engines', check_perm_engines, 'stack and recursive engines agree')
    registry.register('perm.fertility', check_perm_fertility, 'brute, configuration and postorder fertility agree')
    registry.register('vhc.counts', check_vhc_counts, 'configuration counts by enumeration and cumulants')
    registry.register('vhc.bijections', check_vhc_bijections, 'phi and psi are bijections')
    registry.register('cumulant.routes', check_cumulant_routes, 'all conversion routes agree and invert')
    registry.register('cumulant.known_pairs', check_known_pairs, 'Catalan and matching cumulants')
    registry.register('troupe.correspondence', check_troupe_correspondence, 'free troupe counts give decreasing trees')
    registry.register('stat.descents', check_descents, 'descent polynomials, moments and probabilities')
    registry.register('stat.sorted_count', check_sorted_count, 'sorted counts by recurrence')
    registry.register('stat.degree', check_degree, 'degree of noninvertibility')
    registry.register('stacks', check_stacks, 'two- and three-stack tables')
    registry.register('transform', check_transform, 'troupe transform pairs')
    registry.register('observations', check_observations, 'parity and real-rootedness patterns', blocking=False)
    return registry
