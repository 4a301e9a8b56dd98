"""
Unit tests for Commandline module
"""
# Info
__author__ = 'Revtori Developers'

# Imports
import multiprocessing as mp
import os
import time
import unittest
from argparse import ArgumentTypeError
from unittest import mock

# Revtori imports
from revtori.Commandline import defaultProcessCount, parseGrid, parseTolerance, getCommonArgParser, \
                                parseCommonArgs
from revtori.Defaults import default_grid, default_seed


class TestCommandline(unittest.TestCase):
    def setUp(self):
        print('-> %s()' % self._testMethodName)
        self.parser = getCommonArgParser(seed=True, grid=True, tolerances=True, multiproc=True)
        # Start clock
        self.start = time.time()

    def tearDown(self):
        # End clock
        t = time.time() - self.start
        print('<- %s() %.3f' % (self._testMethodName, t))

    #@unittest.skip('-> parseGrid() skipped\n')
    def test_parseGrid(self):
        print(parseGrid('64x32'))
        self.assertEqual(parseGrid('64x32'), (64, 32))
        self.assertEqual(parseGrid('8X8'), (8, 8))
        for value in ['64', '64x', 'axb', '2x64', '64x32x8']:
            with self.assertRaises(ArgumentTypeError):
                parseGrid(value)

    #@unittest.skip('-> parseTolerance() skipped\n')
    def test_parseTolerance(self):
        print(parseTolerance('s3_membership=1e-9'))
        self.assertEqual(parseTolerance('s3_membership=1e-9'), ('s3_membership', 1e-9))
        for value in ['s3_membership', 'unknown=1e-9', 's3_membership=abc', 's3_membership=0',
                      's3_membership=-1e-3']:
            with self.assertRaises(ArgumentTypeError):
                parseTolerance(value)

    #@unittest.skip('-> parseCommonArgs() skipped\n')
    def test_parseCommonArgs(self):
        args = self.parser.parse_args(['--tol', 's3_membership=1e-9', '--tol', 'tau_norm=1e-11',
                                       '--nproc', '2', '--timings'])
        args_dict = parseCommonArgs(args)
        print(args_dict)
        self.assertEqual(args_dict['tolerances'], {'s3_membership': 1e-9, 'tau_norm': 1e-11})
        self.assertEqual(args_dict['grid'], default_grid)
        self.assertEqual(args_dict['seed'], default_seed)
        self.assertEqual(args_dict['nproc'], 2)
        self.assertTrue(args_dict['out_args']['timings'])
        self.assertNotIn('out_dir', args_dict)

        args_dict = parseCommonArgs(self.parser.parse_args(['--grid', '16x8']))
        self.assertEqual(args_dict['tolerances'], {})
        self.assertEqual(args_dict['grid'], (16, 8))
        self.assertFalse(args_dict['out_args']['timings'])

        # -o with --outname exits with status 2
        with self.assertRaises(SystemExit) as cm:
            parseCommonArgs(self.parser.parse_args(['-o', 'report.json', '--outname', 'run']))
        self.assertEqual(cm.exception.code, 2)

    #@unittest.skip('-> defaultProcessCount() skipped\n')
    def test_defaultProcessCount(self):
        with mock.patch.dict(os.environ, {'DARBOUX_THREADS': '1'}):
            print(defaultProcessCount())
            self.assertEqual(defaultProcessCount(), 1)
        with mock.patch.dict(os.environ, {'DARBOUX_THREADS': 'many'}):
            self.assertEqual(defaultProcessCount(), mp.cpu_count())
        with mock.patch.dict(os.environ, {'DARBOUX_THREADS': '100000'}):
            self.assertEqual(defaultProcessCount(), mp.cpu_count())
        with mock.patch.dict(os.environ, {}, clear=True):
            self.assertEqual(defaultProcessCount(), mp.cpu_count())


if __name__ == '__main__':
    unittest.main()
