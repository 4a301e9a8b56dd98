"""
Unit tests for Verification module
"""
# Info
__author__ = 'Revtori Developers'

# Imports
import json
import time
import unittest
from unittest import mock

# Revtori imports
from revtori.Defaults import default_tolerances
from revtori.Multiprocessing import CheckData
from revtori.Verification import default_check_params, check_functions, check_groups, buildTasks, \
                                 runCheck, runSuite, buildReport


class TestVerification(unittest.TestCase):
    def setUp(self):
        print('-> %s()' % self._testMethodName)
        self.params = dict(default_check_params)
        # Start clock
        self.start = time.time()

    def tearDown(self):
        # End clock
        t = time.time() - self.start
        print('<- %s() %.3f' % (self._testMethodName, t))

    #@unittest.skip('-> check_functions skipped\n')
    def test_registry(self):
        print(list(check_groups['cylinder']))
        self.assertEqual(list(check_functions), list(default_tolerances))
        self.assertEqual(sorted(check_groups['torus'] + check_groups['cylinder']), sorted(check_functions))
        self.assertTrue(all(k.startswith('cylinder') for k in check_groups['cylinder']))

    #@unittest.skip('-> buildTasks() skipped\n')
    def test_buildTasks(self):
        tasks = buildTasks(self.params, groups=('cylinder',))
        names = [t[0] for t in tasks]
        print(names)
        self.assertEqual(names, sorted(check_groups['cylinder']))
        tasks = buildTasks(self.params, names=['tau_norm', 'algebra_real_part'])
        self.assertEqual([t[0] for t in tasks], ['algebra_real_part', 'tau_norm'])
        self.assertEqual(tasks[0][1]['u'], 2.0)

    #@unittest.skip('-> runCheck() skipped\n')
    def test_runCheck(self):
        result = runCheck(CheckData('mean_curvature_special', self.params))
        print(result.log)
        self.assertTrue(result.valid)
        self.assertLess(result.max_residual, 1e-12)

        # Overridden tolerance below the achievable residual fails
        result = runCheck(CheckData('mean_curvature_numeric', self.params),
                          tolerances={'mean_curvature_numeric': 1e-30})
        print(result.log)
        self.assertFalse(result.valid)
        self.assertEqual(result.tolerance, 1e-30)

        # Invalid parameters fail without a residual
        bad = dict(self.params, u=1.0)
        result = runCheck(CheckData('s3_membership', bad))
        print(result.log)
        self.assertFalse(result.valid)
        self.assertIsNone(result.max_residual)
        self.assertIn('ERROR', result.log)

    #@unittest.skip('-> runSuite() skipped\n')
    def test_runSuite(self):
        results = runSuite(buildTasks(self.params), nproc=1)
        for r in results:
            print('%-24s %.3e %.1e %s' % (r.id, r.max_residual, r.tolerance, r.valid))
        self.assertEqual([r.id for r in results], sorted(check_functions))
        self.assertTrue(all(results))

    #@unittest.skip('-> runSuite() other families skipped\n')
    def test_runSuiteFamilies(self):
        for u, v, n in [(2.9, 1.0, 3), (3.0, 1.0, 3)]:
            params = dict(self.params, u=u, v=v, n=n)
            names = ['s3_membership', 'bulge_extrema', 'mean_curvature_special', 'pipeline_prolongation',
                     'pipeline_polychromatic', 'tau_identity']
            results = runSuite(buildTasks(params, names=names), nproc=1)
            for r in results:
                print(u, v, n, r.id, r.max_residual)
            self.assertTrue(all(results))

    #@unittest.skip('-> runSuite() parallel skipped\n')
    def test_runSuiteParallel(self):
        names = ['algebra_real_part', 'mean_curvature_special', 'periodicity', 's3_membership',
                 'tau_identity', 'tau_norm', 'cylinder_periodicity', 'cylinder_multiplier']
        serial = runSuite(buildTasks(self.params, names=names), nproc=1)
        parallel = runSuite(buildTasks(self.params, names=names), nproc=2)
        for s, p in zip(serial, parallel):
            print('%-24s %.3e %.3e' % (s.id, s.max_residual, p.max_residual))
        self.assertEqual([r.id for r in parallel], sorted(names))
        self.assertEqual([r.toRecord() for r in parallel], [r.toRecord() for r in serial])

    #@unittest.skip('-> checkCylinderRound() skipped\n')
    def test_cylinderRoundSpread(self):
        # The non-round spread threshold does not follow the tolerance
        with mock.patch('revtori.Verification.cylinderCMCSpread', return_value=5e-3):
            result = runCheck(CheckData('cylinder_round', self.params), tolerances={'cylinder_round': 1e-2})
        print(result.log)
        self.assertTrue(result.valid)
        with mock.patch('revtori.Verification.cylinderCMCSpread', return_value=5e-4):
            result = runCheck(CheckData('cylinder_round', self.params))
        print(result.log)
        self.assertFalse(result.valid)
        self.assertIn('ERROR', result.log)

    #@unittest.skip('-> monochromatic skipped\n')
    def test_monochromatic(self):
        result = runCheck(CheckData('monochromatic', self.params))
        print(result.log)
        self.assertTrue(result.valid)
        self.assertLess(result.max_residual, 1e-5)

    #@unittest.skip('-> buildReport() skipped\n')
    def test_buildReport(self):
        results = runSuite(buildTasks(self.params, names=['tau_norm', 'algebra_real_part']), nproc=1)
        report = buildReport('verify', self.params, results)
        text = json.dumps(report, indent=2)
        print(text)
        self.assertEqual(list(report), ['command', 'params', 'checks', 'timings'])
        self.assertEqual(report['timings'], {})
        self.assertEqual(list(report['params']), sorted(self.params))
        self.assertEqual(list(report['checks'][0]), ['name', 'max_residual', 'tolerance', 'pass'])
        self.assertEqual(text, json.dumps(buildReport('verify', self.params, results), indent=2))

        timed = buildReport('verify', self.params, results, timings=True, values={'H0': 0.5})
        self.assertEqual(list(timed), ['command', 'params', 'values', 'checks', 'timings'])
        self.assertEqual(list(timed['timings']), ['algebra_real_part', 'tau_norm'])


if __name__ == '__main__':
    unittest.main()
