"""
Unit tests for Mesh module
"""
# Info
__author__ = 'Revtori Developers'

# Imports
import math
import os
import shutil
import tempfile
import time
import unittest
import numpy as np
import pandas as pd

# Revtori imports
from revtori.Darboux import BulgeTorusFamily, CylinderFamily
from revtori.Errors import InvalidParameter, NearPole, IoFailure
from revtori.Hamiltonian import RectangularTorus
from revtori.Mesh import ProjectionSpec, MeshGrid, candidatePoles, stereographic, inverseStereographic, \
                         selectPole, gridFaces, sampleGrid, writeOBJ, readOBJ, writeProfiles, \
                         profileTable, cylinderProfileTable
from revtori.Quaternion import Quaternion, QUAT_I, maxDistance


class TestMesh(unittest.TestCase):
    def setUp(self):
        print('-> %s()' % self._testMethodName)
        self.out_dir = tempfile.mkdtemp()
        self.spec = ProjectionSpec()
        self.rng = np.random.default_rng(5)
        # Start clock
        self.start = time.time()

    def tearDown(self):
        shutil.rmtree(self.out_dir)
        # End clock
        t = time.time() - self.start
        print('<- %s() %.3f' % (self._testMethodName, t))

    def randomSphere(self, count):
        p = self.rng.normal(size=(4, count))
        return Quaternion(*(p / np.linalg.norm(p, axis=0)))

    #@unittest.skip('-> candidatePoles() skipped\n')
    def test_candidatePoles(self):
        poles = candidatePoles()
        print(poles[:3])
        self.assertEqual(len(poles), 24)
        self.assertEqual(tuple(poles[0]), (-1.0, 0.0, 0.0, 0.0))
        self.assertTrue(all(abs(p.norm() - 1.0) < 1e-15 for p in poles))
        self.assertEqual(len(set(tuple(p) for p in poles)), 24)

    #@unittest.skip('-> stereographic() skipped\n')
    def test_stereographic(self):
        origin = stereographic(Quaternion(1.0), self.spec)
        axis = stereographic(QUAT_I, self.spec)
        print(origin, axis)
        np.testing.assert_allclose(origin, [0.0, 0.0, 0.0], atol=1e-15)
        np.testing.assert_allclose(axis, [1.0, 0.0, 0.0], atol=1e-15)
        with self.assertRaises(NearPole):
            stereographic(Quaternion(-1.0), self.spec)
        with self.assertRaises(InvalidParameter):
            stereographic(Quaternion(2.0), self.spec)
        with self.assertRaises(InvalidParameter):
            ProjectionSpec(pole=(2.0, 0.0, 0.0, 0.0))

    #@unittest.skip('-> inverseStereographic() skipped\n')
    def test_inverseStereographic(self):
        p = self.randomSphere(1000)
        for pole in (self.spec.pole, Quaternion(0.5, 0.5, -0.5, 0.5)):
            spec = ProjectionSpec(pole=pole, min_pole_distance=1e-6)
            # Keep away from the pole where the chart loses precision
            keep = (p - pole).norm() > 0.1
            q = p[keep]
            residual = maxDistance(inverseStereographic(stereographic(q, spec), spec), q)
            print(pole, residual)
            self.assertLess(residual, 1e-12)

    #@unittest.skip('-> selectPole() skipped\n')
    def test_selectPole(self):
        samples = Quaternion(-1.0 + np.zeros(3), np.zeros(3))
        spec = selectPole(samples, ProjectionSpec(pole=None))
        print(spec)
        self.assertGreater((samples - spec.pole).norm().min(), 1.0)
        self.assertIs(selectPole(samples, self.spec), self.spec)

        # Samples far from -1 keep the default pole
        spec = selectPole(Quaternion(np.ones(3)), ProjectionSpec(pole=None))
        self.assertEqual(tuple(spec.pole), (-1.0, 0.0, 0.0, 0.0))

        with self.assertRaises(NearPole):
            selectPole(self.randomSphere(20000), ProjectionSpec(pole=None, min_pole_distance=0.5))

    #@unittest.skip('-> gridFaces() skipped\n')
    def test_gridFaces(self):
        both = gridFaces(4, 5, True, True)
        open_y = gridFaces(4, 5, True, False)
        print(both.shape, open_y.shape)
        self.assertEqual(both.shape, (40, 3))
        self.assertEqual(open_y.shape, (32, 3))
        self.assertEqual(both.min(), 0)
        self.assertEqual(both.max(), 19)
        self.assertEqual(set(both.ravel().tolist()), set(range(20)))

    #@unittest.skip('-> sampleGrid() skipped\n')
    def test_sampleGrid(self):
        F = BulgeTorusFamily(2.0, 1.0, 2)
        mesh = sampleGrid(F.surface(), 64, 64)
        print(mesh)
        self.assertEqual(len(mesh.vertices), 4096)
        self.assertEqual(len(mesh.faces), 8192)
        self.assertTrue(mesh.wrap_x and mesh.wrap_y)
        self.assertGreater(mesh.faceAreas().min(), 0.0)

        cylinder = sampleGrid(CylinderFamily(2.0, 1.0).surface(), 16, 12)
        print(cylinder)
        self.assertEqual((cylinder.wrap_x, cylinder.wrap_y), (True, False))
        self.assertEqual(len(cylinder.faces), 2 * 16 * 11)
        self.assertIsNone(cylinder.spec)
        self.assertGreater(cylinder.faceAreas().min(), 0.0)

        with self.assertRaises(InvalidParameter):
            sampleGrid(F.surface(), 2, 64)

    #@unittest.skip('-> sampleGrid() Clifford torus skipped\n')
    def test_sampleGridClifford(self):
        mesh = sampleGrid(RectangularTorus(1.0, 1.0).surface(), 32, 32, spec=self.spec)
        # Stereographic image is a torus of revolution about the second axis
        distance = np.hypot(mesh.vertices[:, 0], mesh.vertices[:, 2]).reshape(32, 32)
        ratio = distance.max() / distance.min()
        print('RATIO>', ratio)
        self.assertAlmostEqual(ratio, (1.0 + math.sqrt(2.0))**2, delta=1e-6)
        # Each x row is a circle about the axis
        self.assertLess(np.max(np.ptp(distance, axis=1)), 1e-12)

    #@unittest.skip('-> sampleGrid() symmetry skipped\n')
    def test_sampleGridSymmetry(self):
        F = BulgeTorusFamily(2.0, 1.0, 2)
        surface = F.surface()
        nx, ny = 16, 16
        X, Y = np.meshgrid(np.arange(nx) / (F.u * nx), np.arange(ny) / (F.v * ny), indexing='ij')
        shifted = surface(X + 1.0 / (F.u * nx), Y)
        rolled = surface(np.roll(X, -1, axis=0), Y)
        self.assertLess(maxDistance(shifted[:-1], rolled[:-1]), 1e-9)
        self.assertLess(maxDistance(shifted[-1], surface(np.zeros(ny), Y[0])), 1e-9)

    #@unittest.skip('-> writeOBJ() skipped\n')
    def test_writeOBJ(self):
        triangle = MeshGrid(3, 1, [[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0 / 3.0, 0.0]],
                            [[0, 1, 2]], False, False)
        path = writeOBJ(triangle, os.path.join(self.out_dir, 'triangle.obj'))
        with open(path) as handle:
            lines = [l for l in handle.read().splitlines() if l and not l.startswith('#')]
        print(lines)
        self.assertEqual(len(lines), 4)
        self.assertEqual(lines[-1], 'f 1 2 3')

        mesh = sampleGrid(BulgeTorusFamily(2.0, 1.0, 2).surface(), 8, 8)
        path = writeOBJ(mesh, os.path.join(self.out_dir, 'torus.obj'))
        vertices, faces = readOBJ(path)
        self.assertEqual(vertices.shape, mesh.vertices.shape)
        self.assertTrue(np.array_equal(vertices, mesh.vertices))
        self.assertTrue(np.array_equal(faces, mesh.faces))

        with self.assertRaises(IoFailure):
            readOBJ(os.path.join(self.out_dir, 'missing.obj'))
        with self.assertRaises(IoFailure):
            writeOBJ(mesh, os.path.join(self.out_dir, 'missing', 'torus.obj'))

    #@unittest.skip('-> writeProfiles() skipped\n')
    def test_writeProfiles(self):
        path = writeProfiles(BulgeTorusFamily(2.0, 1.0, 2), 16, os.path.join(self.out_dir, 'profile.csv'))
        with open(path) as handle:
            header = handle.readline().strip()
        table = pd.read_csv(path)
        print(table.head())
        self.assertEqual(header, 'y,kappa0,H,Rhat')
        self.assertEqual(len(table), 16)
        self.assertAlmostEqual(table['H'][0], 7.0 / 36.0, delta=1e-14)
        self.assertAlmostEqual(table['kappa0'][0], -9.0 / (7.0 * math.sqrt(5.0)), delta=1e-14)

        cmc = profileTable(BulgeTorusFamily(math.sqrt(3.0), 1.0, 2), 32)
        self.assertLess(np.max(np.abs(cmc['H'] - 1.0 / math.sqrt(3.0))), 1e-10)

        cylinder = cylinderProfileTable(CylinderFamily(2.0, 1.0), 8)
        self.assertEqual(list(cylinder.columns), ['y', 'radius', 'height', 'Rhat'])
        self.assertAlmostEqual(cylinder['radius'][0], 3.5, delta=1e-14)


if __name__ == '__main__':
    unittest.main()
