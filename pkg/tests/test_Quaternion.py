"""
Unit tests for Quaternion module
"""
# Info
__author__ = 'Revtori Developers'

# Imports
import time
import unittest
import numpy as np

# Revtori imports
from revtori.Errors import NotUnitAxis, ZeroQuaternion
from revtori.Quaternion import Quaternion, ComplexPoint, QUAT_1, QUAT_I, QUAT_J, QUAT_K, \
                               mul, inv, expUnit, expJ, realPairing, eGamma, embedComplex, \
                               inSpanOneI, inSpanOneJ, maxDistance

try:
    from hypothesis import given, settings, strategies as st
    HAS_HYPOTHESIS = True
except ImportError:
    HAS_HYPOTHESIS = False


def _close(a, b, tol=1e-12):
    return maxDistance(a, b) <= tol


if HAS_HYPOTHESIS:
    unit_floats = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False, allow_infinity=False)
    quaternions = st.builds(Quaternion, unit_floats, unit_floats, unit_floats, unit_floats)
    angles = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)


class TestQuaternion(unittest.TestCase):
    def setUp(self):
        print('-> %s()' % self._testMethodName)
        self.rng = np.random.default_rng(0)
        # Start clock
        self.start = time.time()

    def tearDown(self):
        # End clock
        t = time.time() - self.start
        print('<- %s() %.3f' % (self._testMethodName, t))

    def randomQuaternions(self, count):
        return Quaternion(*self.rng.normal(size=(4, count)))

    #@unittest.skip('-> mul() skipped\n')
    def test_mul(self):
        result = mul(QUAT_I, QUAT_J)
        print(result)
        self.assertTrue(_close(result, QUAT_K))
        self.assertTrue(_close(mul(QUAT_J, QUAT_I), -QUAT_K))
        self.assertTrue(_close(QUAT_J * QUAT_K, QUAT_I))
        self.assertTrue(_close(QUAT_K * QUAT_I, QUAT_J))
        for q in (QUAT_I, QUAT_J, QUAT_K):
            self.assertTrue(_close(q * q, -QUAT_1))

        # k(0.8 - 0.6i) = 0.8k - 0.6j
        result = QUAT_K * Quaternion(0.8, -0.6, 0, 0)
        print(result)
        self.assertTrue(_close(result, Quaternion(0, 0, -0.6, 0.8)))

    #@unittest.skip('-> mul_norm() skipped\n')
    def test_mul_norm(self):
        a, b = self.randomQuaternions(1000), self.randomQuaternions(1000)
        lhs = (a * b).norm()
        rhs = a.norm() * b.norm()
        err = np.max(np.abs(lhs - rhs) / rhs)
        print('max relative error %.3e' % err)
        self.assertLess(err, 1e-14)

        # q conj(q) is the scalar |q|^2
        p = a * a.conj()
        self.assertLess(np.max(np.abs(p.w - a.norm2())), 1e-12)
        self.assertLess(np.max(np.abs(p.imag().norm())), 1e-12)

    #@unittest.skip('-> complex_rejected() skipped\n')
    def test_complex_rejected(self):
        with self.assertRaises(TypeError):
            QUAT_J * 1j
        with self.assertRaises(TypeError):
            Quaternion(1j, 0, 0, 0)
        self.assertTrue(_close(embedComplex(2 - 1j, axis='j'), Quaternion(2, 0, -1, 0)))
        self.assertTrue(_close(ComplexPoint(2, -1).toQuaternion(), Quaternion(2, -1, 0, 0)))

    #@unittest.skip('-> inv() skipped\n')
    def test_inv(self):
        self.assertTrue(_close(inv(QUAT_1), QUAT_1))
        self.assertTrue(_close(inv(QUAT_J), -QUAT_J))
        result = inv(Quaternion(0.5, 0.5, 0.5, 0.5))
        print(result)
        self.assertTrue(_close(result, Quaternion(0.5, -0.5, -0.5, -0.5)))

        q = self.randomQuaternions(100)
        self.assertLess(maxDistance(q * inv(q), QUAT_1), 1e-14)

        with self.assertRaises(ZeroQuaternion):
            inv(Quaternion(0, 0, 0, 0))

    #@unittest.skip('-> expUnit() skipped\n')
    def test_expUnit(self):
        self.assertTrue(_close(expUnit(QUAT_J, 0.0), QUAT_1))
        self.assertTrue(_close(expUnit(QUAT_J, np.pi / 2), QUAT_J))
        result = expUnit(QUAT_J, np.pi / 3)
        print(result)
        self.assertTrue(_close(result, Quaternion(0.5, 0, np.sqrt(3) / 2, 0)))

        axis = Quaternion(0, 0.6, 0, 0.8)
        t1, t2 = 0.7, -2.3
        self.assertTrue(_close(expUnit(axis, t1) * expUnit(axis, t2), expUnit(axis, t1 + t2)))

        with self.assertRaises(NotUnitAxis):
            expUnit(Quaternion(0, 2, 0, 0), 1.0)
        with self.assertRaises(NotUnitAxis):
            expUnit(Quaternion(1, 0, 0, 0), 1.0)

    #@unittest.skip('-> realPairing() skipped\n')
    def test_realPairing(self):
        u, v = 2.0, 1.0
        beta0 = complex(u, -v)
        self.assertAlmostEqual(realPairing(beta0, complex(0.25, 0)), 0.5, delta=1e-15)
        self.assertAlmostEqual(realPairing(beta0, 1j / v), -1.0, delta=1e-15)
        self.assertEqual(realPairing(beta0, 0j), 0.0)

    #@unittest.skip('-> eGamma() skipped\n')
    def test_eGamma(self):
        self.assertTrue(_close(eGamma(complex(2, -1), 0j), QUAT_1))
        self.assertTrue(_close(eGamma(complex(2, -1), complex(0.25, 0)), -QUAT_1))
        a = 1.3
        self.assertTrue(_close(eGamma(complex(0, a), complex(0.4, 1 / (2 * a))), -QUAT_1))

        z = self.rng.normal(size=50) + 1j * self.rng.normal(size=50)
        g1, g2 = complex(0.3, -1.1), complex(2.0, 0.5)
        result = eGamma(g1 + g2, z)
        self.assertTrue(inSpanOneI(result))
        self.assertLess(maxDistance(result, eGamma(g1, z) * eGamma(g2, z)), 1e-12)

    #@unittest.skip('-> conjugation() skipped\n')
    def test_conjugation(self):
        q = self.randomQuaternions(1000)
        q = q / q.norm()
        w = self.randomQuaternions(1000)
        result = (q * w * inv(q)).w
        self.assertLess(np.max(np.abs(result - w.w)), 1e-12)

        theta = np.linspace(-np.pi, np.pi, 37)
        lhs = QUAT_K * Quaternion(np.cos(theta), np.sin(theta), 0, 0)
        rhs = Quaternion(np.cos(theta), -np.sin(theta), 0, 0) * QUAT_K
        self.assertLess(maxDistance(lhs, rhs), 1e-12)

    #@unittest.skip('-> spans() skipped\n')
    def test_spans(self):
        self.assertTrue(inSpanOneJ(expJ(0.3)))
        self.assertFalse(inSpanOneJ(QUAT_I))
        self.assertTrue(inSpanOneI(QUAT_I))
        self.assertFalse(inSpanOneI(QUAT_K))

    #@unittest.skip('-> indexing() skipped\n')
    def test_indexing(self):
        q = Quaternion(np.arange(6.0).reshape(2, 3), 1.0, 0.0, 0.0)
        self.assertEqual(q.shape, (2, 3))
        sample = q[1, 2]
        print(sample)
        self.assertEqual(sample.w, 5.0)
        self.assertEqual(sample.x, 1.0)
        self.assertEqual(q.components().shape, (2, 3, 4))

    @unittest.skipUnless(HAS_HYPOTHESIS, 'hypothesis not installed')
    def test_properties(self):
        @given(quaternions, quaternions)
        @settings(max_examples=200, deadline=None)
        def norm_multiplicative(a, b):
            lhs = (a * b).norm()
            rhs = a.norm() * b.norm()
            self.assertLessEqual(abs(lhs - rhs), 1e-14 * max(1.0, rhs))

        @given(angles, angles)
        @settings(max_examples=200, deadline=None)
        def exponential_additive(t1, t2):
            self.assertTrue(_close(expJ(t1) * expJ(t2), expJ(t1 + t2), tol=1e-12))

        @given(quaternions, quaternions)
        @settings(max_examples=200, deadline=None)
        def conjugation_preserves_real_part(q, w):
            if q.norm() < 1e-3:
                return
            q = q / q.norm()
            self.assertLessEqual(abs((q * w * inv(q)).w - w.w), 1e-12)

        norm_multiplicative()
        exponential_additive()
        conjugation_preserves_real_part()


if __name__ == '__main__':
    unittest.main()
