import unittest

from errors import (
    HookcalcError,
    InvalidArgumentError,
    ResourceLimitError,
    UnsupportedError,
    VerificationFailure,
)


class ErrorTests(unittest.TestCase):
    def test_exit_codes(self):
        self.assertEqual(HookcalcError('x').exit_code, 1)
        self.assertEqual(InvalidArgumentError('x').exit_code, 2)
        self.assertEqual(UnsupportedError('x').exit_code, 2)
        self.assertEqual(ResourceLimitError('VHC_N', 10, 11).exit_code, 3)
        self.assertEqual(VerificationFailure('x').exit_code, 1)

    def test_builtin_bases(self):
        self.assertIsInstance(InvalidArgumentError('x'), ValueError)
        self.assertIsInstance(ResourceLimitError('VHC_N', 10, 11), RuntimeError)

    def test_to_dict(self):
        data = InvalidArgumentError('bad permutation').to_dict()

        self.assertEqual(data, {'success': False, 'error': 'bad permutation', 'kind': 'InvalidArgumentError'})

    def test_resource_limit_details(self):
        error = ResourceLimitError('TREE_N', 10, 11)
        data = error.to_dict()

        self.assertIn('HOOKCALC_TREE_N', str(error))
        self.assertEqual((data['cap'], data['limit'], data['requested']), ('TREE_N', 10, 11))

    def test_verification_failure_lists_suites(self):
        status = {'suites': [
            {'name': 'vhc', 'status': 'passed', 'error': None, 'details': {}},
            {'name': 'troupes', 'status': 'failed', 'error': 'mismatch at n=4', 'details': {}},
        ]}
        data = VerificationFailure('1 suite failed', status).to_dict()

        self.assertEqual([s['name'] for s in data['suites']], ['vhc', 'troupes'])
        self.assertEqual(data['suites'][1]['error'], 'mismatch at n=4')
        self.assertNotIn('suites', VerificationFailure('plain').to_dict())


if __name__ == '__main__':
    unittest.main()
