import unittest

import verification
from verification import SuiteRegistry


def _passing():
    return {'success': True, 'checked': 3}


def _failing():
    return {'success': False, 'error': 'counts differ at n=5'}


def _broken():
    raise RuntimeError('engine crashed')


class SuiteRegistryTests(unittest.TestCase):
    def setUp(self):
        self.registry = SuiteRegistry()
        self.registry.register('good', _passing, 'always passes')
        self.registry.register('bad', _failing, 'always fails')
        self.registry.register('noted', _failing, 'observation only', blocking=False)
        self.registry.register('crash', _broken)

    def test_status_before_running(self):
        status = self.registry.get_status()

        self.assertEqual(status['total_suites'], 4)
        self.assertEqual(status['ran'], 0)
        self.assertTrue(status['success'])
        self.assertEqual(self.registry.names(), ['good', 'bad', 'noted', 'crash'])

    def test_run_records_outcomes(self):
        good = self.registry.run('good')
        bad = self.registry.run('bad')
        crash = self.registry.run('crash')

        self.assertTrue(good['success'])
        self.assertEqual(good['details']['checked'], 3)
        self.assertFalse(bad['success'])
        self.assertEqual(bad['error'], 'counts differ at n=5')
        self.assertEqual(crash['status'], 'error')
        self.assertEqual(crash['error'], 'engine crashed')
        self.assertIsNotNone(crash['seconds'])

    def test_non_blocking_failure_keeps_success(self):
        entry = self.registry.run('noted')

        self.assertEqual(entry['status'], 'failed')
        self.assertTrue(entry['success'])

    def test_run_all_and_totals(self):
        results = self.registry.run_all(['good', 'noted'])
        status = self.registry.get_status()

        self.assertEqual([r['name'] for r in results], ['good', 'noted'])
        self.assertEqual(status['ran'], 2)
        self.assertEqual(status['passed'], 1)
        self.assertTrue(status['success'])

        self.registry.run('bad')
        self.assertFalse(self.registry.get_status()['success'])

    def test_unknown_suite(self):
        result = self.registry.run('missing')

        self.assertFalse(result['success'])
        self.assertIn('missing', result['error'])


class DefaultRegistryTests(unittest.TestCase):
    def test_suite_names(self):
        names = verification.default_registry().names()

        self.assertIn('perm.engines', names)
        self.assertIn('troupe.correspondence', names)
        self.assertIn('observations', names)
        self.assertEqual(len(names), len(set(names)))

    def test_observations_do_not_block(self):
        registry = verification.default_registry()

        self.assertFalse(registry.suites['observations']['blocking'])
        self.assertTrue(registry.suites['stacks']['blocking'])

    def test_engine_suite_passes(self):
        entry = verification.default_registry().run('perm.engines')

        self.assertEqual(entry['status'], 'passed', entry['error'])

    def test_bijection_and_correspondence_suites_pass(self):
        registry = verification.default_registry()
        for name in ('vhc.bijections', 'troupe.correspondence', 'cumulant.routes'):
            with self.subTest(suite=name):
                entry = registry.run(name)
                self.assertEqual(entry['status'], 'passed', entry['error'])

    def test_stack_suite_checks_class_counts(self):
        entry = verification.default_registry().run('stacks')

        self.assertEqual(entry['status'], 'passed', entry['error'])
        self.assertTrue(entry['details']['results']['three_stack.classes'])


if __name__ == '__main__':
    unittest.main()
