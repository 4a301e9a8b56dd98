"""
Unit tests for Hamiltonian module
"""
# Info
__author__ = 'Revtori Developers'

# Imports
import math
import time
import unittest
import numpy as np

# Revtori imports
from revtori.Errors import InvalidParameter, BelowThreshold, EmptySpectrum
from revtori.Geometry import holomorphicResidual, multiplierResidual
from revtori.Hamiltonian import RectangularTorus, StandardCylinder, MultiplierData, torusEval, \
                                torusFrame, torusMeanCurvature, spectralPoint, spectralFrequencies, \
                                bulgeMultiplier, bulgeRoot, bulgeSpectralPoints, monochromaticSection, \
                                cylinderEval, cylinderFrame, cylinderSections
from revtori.Quaternion import Quaternion, maxDistance


class TestHamiltonian(unittest.TestCase):
    def setUp(self):
        print('-> %s()' % self._testMethodName)
        self.torus = RectangularTorus(2.0, 1.0)
        self.rng = np.random.default_rng(11)
        self.x = self.rng.uniform(0.0, 0.5, 32)
        self.y = self.rng.uniform(0.0, 1.0, 32)
        # Start clock
        self.start = time.time()

    def tearDown(self):
        # End clock
        t = time.time() - self.start
        print('<- %s() %.3f' % (self._testMethodName, t))

    #@unittest.skip('-> RectangularTorus() skipped\n')
    def test_RectangularTorus(self):
        T = self.torus
        print(T, T.r, T.rho)
        self.assertAlmostEqual(T.r, math.sqrt(5.0), places=14)
        self.assertAlmostEqual(T.rho, 2.0 / math.sqrt(5.0), places=14)
        self.assertEqual(complex(T.beta0), 2.0 - 1.0j)
        f = torusEval(T, self.x, self.y)
        self.assertLess(np.max(np.abs(f.norm() - 1.0)), 1e-14)
        for u, v in [(0.0, 1.0), (1.0, -1.0), (float('nan'), 1.0)]:
            with self.assertRaises(InvalidParameter):
                RectangularTorus(u, v)

    #@unittest.skip('-> torusFrame() skipped\n')
    def test_torusFrame(self):
        frame = torusFrame(self.torus, self.x, self.y)
        f_x, f_y = self.torus.partials(self.x, self.y)
        print('F_X>', maxDistance(frame.f_x, f_x))
        print('F_Y>', maxDistance(frame.f_y, f_y))
        self.assertLess(maxDistance(frame.f_x, f_x), 1e-12)
        self.assertLess(maxDistance(frame.f_y, f_y), 1e-12)
        self.assertLess(np.max(np.abs(frame.N.norm() - 1.0)), 1e-14)
        self.assertLess(np.max(np.abs(frame.N.w)), 1e-14)

    #@unittest.skip('-> torusMeanCurvature() skipped\n')
    def test_torusMeanCurvature(self):
        print(torusMeanCurvature(self.torus))
        self.assertAlmostEqual(torusMeanCurvature(self.torus), 0.75, places=15)
        self.assertAlmostEqual(torusMeanCurvature(RectangularTorus(1.0, 1.0)), 0.0, places=15)
        self.assertAlmostEqual(torusMeanCurvature(RectangularTorus(math.sqrt(3.0), 1.0)),
                               1.0 / math.sqrt(3.0), places=14)

    #@unittest.skip('-> bulgeMultiplier() skipped\n')
    def test_bulgeMultiplier(self):
        M = bulgeMultiplier(self.torus, 2)
        print(M)
        self.assertAlmostEqual(complex(M.B), 0.5 + 0.5j, places=14)
        self.assertEqual(bulgeRoot(2.0, 1.0, 2), 1.0)
        self.assertEqual(bulgeRoot(math.sqrt(3.0), 1.0, 2), 0.0)
        with self.assertRaises(BelowThreshold):
            bulgeMultiplier(RectangularTorus(1.0, 1.0), 2)
        with self.assertRaises(InvalidParameter):
            bulgeMultiplier(self.torus, 1)
        with self.assertRaises(InvalidParameter):
            MultiplierData(0.5, A=1.0)

    #@unittest.skip('-> spectralFrequencies() skipped\n')
    def test_spectralFrequencies(self):
        M = bulgeMultiplier(self.torus, 2)
        points = spectralFrequencies(self.torus, M)
        for p in points:  print(p)
        self.assertEqual(len(points), 2)
        self.assertAlmostEqual(complex(points[0].delta), 1.0 - 0.5j, places=14)
        self.assertAlmostEqual(complex(points[1].delta), 1.0 + 1.5j, places=14)
        self.assertAlmostEqual(complex(np.exp(1j * points[0].t)), -0.8 + 0.6j, places=14)
        self.assertAlmostEqual(complex(np.exp(1j * points[1].t)), -1.0j, places=14)
        self.assertAlmostEqual(complex(points[0].lam), 0.8 - 0.6j, places=14)
        self.assertAlmostEqual(complex(points[1].lam), 1.0j, places=14)

        plus, minus = bulgeSpectralPoints(self.torus, M, 2)
        self.assertAlmostEqual(plus.t, points[0].t, places=14)
        self.assertAlmostEqual(minus.t, points[1].t, places=14)

        with self.assertRaises(EmptySpectrum):
            spectralFrequencies(self.torus, MultiplierData(0.123 + 0.456j))
        with self.assertRaises(InvalidParameter):
            spectralPoint(self.torus, M, 0.0)

    #@unittest.skip('-> spectralFrequencies() brute force skipped\n')
    def test_spectralFrequenciesBruteForce(self):
        for __ in range(20):
            u, v = self.rng.uniform(0.5, 3.0, 2)
            T = RectangularTorus(u, v)
            half = complex(T.beta0) / 2.0
            # Circle through a chosen shifted lattice point
            anchor = half + complex(self.rng.integers(-2, 3) * u, self.rng.integers(-2, 3) * v)
            B = anchor + (T.r / 2.0) * np.exp(1j * self.rng.uniform(0.0, 2.0 * np.pi))
            M = MultiplierData(B)
            found = sorted(complex(p.delta) for p in spectralFrequencies(T, M))
            scan = sorted(half + complex(a * u, b * v) for a in range(-30, 31) for b in range(-30, 31)
                          if abs(abs(half + complex(a * u, b * v) - B)**2 - T.r**2 / 4.0) <= 1e-9 * T.r**2)
            self.assertEqual(len(found), len(scan))
            for d, e in zip(found, scan):
                self.assertAlmostEqual(d, e, places=12)

    #@unittest.skip('-> monochromaticSection() skipped\n')
    def test_monochromaticSection(self):
        M = bulgeMultiplier(self.torus, 2)
        left = lambda x, y: torusFrame(self.torus, x, y).N
        for p in bulgeSpectralPoints(self.torus, M, 2):
            alpha = monochromaticSection(self.torus, M, p)
            holomorphic = holomorphicResidual(alpha, left, self.x, self.y)
            multipliers = [multiplierResidual(alpha, g, M.multiplier(g)) for g in (0.5, 1.0j)]
            print(alpha.name, holomorphic, multipliers)
            self.assertLess(holomorphic, 1e-6)
            self.assertLess(max(multipliers), 1e-9)

            # Exact partials agree with differences
            a_x, a_y = alpha.exact_partials(self.x, self.y)
            h = 1e-6
            d_x = (alpha(self.x + h, self.y) - alpha(self.x - h, self.y)) / (2.0 * h)
            self.assertLess(maxDistance(a_x, d_x), 1e-5)

    #@unittest.skip('-> Section() skipped\n')
    def test_Section(self):
        M = bulgeMultiplier(self.torus, 2)
        plus, minus = [monochromaticSection(self.torus, M, p) for p in bulgeSpectralPoints(self.torus, M, 2)]
        total = plus + minus
        scaled = plus.scale(2.0)
        self.assertLess(maxDistance(total(self.x, self.y), plus(self.x, self.y) + minus(self.x, self.y)), 1e-14)
        self.assertLess(maxDistance(scaled(self.x, self.y), plus(self.x, self.y) * 2.0), 1e-14)

    #@unittest.skip('-> cylinderSections() skipped\n')
    def test_cylinderSections(self):
        C = StandardCylinder(2.0)
        B, alpha_plus, alpha_minus = cylinderSections(C, 1.0)
        print(B)
        self.assertAlmostEqual(complex(B), complex((2.0 - math.sqrt(3.0)) / 2.0, 0.5), places=14)
        M = MultiplierData(B)
        left = lambda x, y: cylinderFrame(C, x, y).N
        for alpha in (alpha_plus, alpha_minus):
            holomorphic = holomorphicResidual(alpha, left, self.x, self.y)
            multiplier = multiplierResidual(alpha, 0.5, M.multiplier(0.5))
            print(alpha.name, holomorphic, multiplier)
            self.assertLess(holomorphic, 1e-6)
            self.assertLess(multiplier, 1e-9)
        with self.assertRaises(BelowThreshold):
            cylinderSections(C, 3.0)
        with self.assertRaises(InvalidParameter):
            cylinderSections(C, 0.0)

    #@unittest.skip('-> cylinderEval() skipped\n')
    def test_cylinderEval(self):
        C = StandardCylinder(2.0)
        f = cylinderEval(C, self.x, self.y)
        print(f[:2])
        # Circles of radius 1/u in Span{1, j} translated along k
        self.assertLess(np.max(np.abs(np.hypot(f.w, f.y) - 0.5)), 1e-15)
        self.assertLess(np.max(np.abs(f.x)), 1e-15)
        self.assertLess(np.max(np.abs(f.z - 2.0 * np.pi * self.y)), 1e-14)
        with self.assertRaises(InvalidParameter):
            StandardCylinder(-1.0)

    #@unittest.skip('-> cylinderFrame() skipped\n')
    def test_cylinderFrame(self):
        C = StandardCylinder(2.0)
        frame = cylinderFrame(C, self.x, self.y)
        f_x, f_y = C.partials(self.x, self.y)
        self.assertLess(maxDistance(frame.f_x, f_x), 1e-12)
        self.assertLess(maxDistance(frame.f_y, f_y), 1e-12)


if __name__ == '__main__':
    unittest.main()
