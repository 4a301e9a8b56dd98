"""
Stereographic projection, grid meshes and mesh and profile file I/O
"""
# Info
__author__ = 'Revtori Developers'
from revtori import __version__, __date__

# Imports
import itertools
import numpy as np
import pandas as pd

# Revtori imports
from revtori.Darboux import revolutionProfiles, meanCurvatureClosed, cylinderProfiles
from revtori.Defaults import default_pole, default_min_pole_distance, default_profile_rows
from revtori.Errors import InvalidParameter, NearPole, IoFailure
from revtori.IO import getOutputHandle, openFile, printDebug
from revtori.Quaternion import Quaternion

# Tolerance on |p| = 1 for points to be projected
sphere_tolerance = 1e-9


def candidatePoles():
    """
    The 24 Hurwitz units, default pole first

    Returns:
      list: unit Quaternions -1, the remaining +-1, +-i, +-j, +-k and (+-1 +-i +-j +-k)/2.
    """
    poles = [Quaternion(*default_pole)]
    for axis in range(4):
        for sign in (1.0, -1.0):
            c = [0.0] * 4
            c[axis] = sign
            if tuple(c) != tuple(default_pole):
                poles.append(Quaternion(*c))
    for signs in itertools.product((0.5, -0.5), repeat=4):
        poles.append(Quaternion(*signs))
    return poles


class ProjectionSpec:
    """
    Stereographic projection from S3 minus a pole onto R3

    Attributes:
      pole : unit Quaternion, or None for automatic selection.
      min_pole_distance : smallest accepted distance of a projected point to the pole.
    """
    def __init__(self, pole=default_pole, min_pole_distance=default_min_pole_distance):
        """
        Initializer

        Arguments:
          pole : Quaternion, 4-tuple or None for automatic selection among the Hurwitz units.
          min_pole_distance (float): smallest accepted pole distance.

        Returns:
          revtori.Mesh.ProjectionSpec

        Raises:
          InvalidParameter: if the pole is not a unit quaternion.
        """
        if pole is not None:
            if not isinstance(pole, Quaternion):  pole = Quaternion(*pole)
            if abs(pole.norm() - 1.0) > sphere_tolerance:
                raise InvalidParameter('Projection pole must have unit norm, not %.12g.' % pole.norm())
        self.pole = pole
        self.min_pole_distance = float(min_pole_distance)

    def __repr__(self):
        return 'ProjectionSpec(pole=%r, min_pole_distance=%r)' % (self.pole, self.min_pole_distance)


def stereographic(p, spec):
    """
    Projects points of S3 to R3 from the pole of spec

    Points are rotated by q = -conj(pole) p so the pole goes to -1, then mapped to
    (q_i, q_j, q_k)/(1 + q_w).

    Arguments:
      p (Quaternion): unit quaternion(s).
      spec (ProjectionSpec): projection with a set pole.

    Returns:
      numpy.ndarray: points of shape p.shape + (3,).

    Raises:
      InvalidParameter: if a point is off S3 or the pole is unset.
      NearPole: if a point is within min_pole_distance of the pole.
    """
    if spec.pole is None:
        raise InvalidParameter('Stereographic projection needs a pole; use selectPole first.')
    if np.any(np.abs(p.norm() - 1.0) > sphere_tolerance):
        raise InvalidParameter('Stereographic projection is defined on S3 only.')
    distance = (p - spec.pole).norm()
    if np.any(distance <= spec.min_pole_distance):
        raise NearPole('A sample lies within %.3g of the projection pole (closest %.3g).'
                       % (spec.min_pole_distance, np.min(distance)))
    q = -(spec.pole.conj() * p)
    scale = 1.0 / (1.0 + q.w)
    return np.stack(np.broadcast_arrays(q.x * scale, q.y * scale, q.z * scale), axis=-1)


def inverseStereographic(X, spec):
    """
    Lifts points of R3 to S3, inverting stereographic

    Arguments:
      X : array of shape (..., 3).
      spec (ProjectionSpec): projection with a set pole.

    Returns:
      revtori.Quaternion.Quaternion: unit quaternions.
    """
    X = np.asarray(X, dtype=float)
    s = np.sum(X**2, axis=-1)
    q = Quaternion((1.0 - s) / (1.0 + s), 2.0 * X[..., 0] / (1.0 + s),
                   2.0 * X[..., 1] / (1.0 + s), 2.0 * X[..., 2] / (1.0 + s))
    return -(spec.pole * q)


def selectPole(samples, spec, debug=False):
    """
    Chooses the Hurwitz unit farthest from a sample set

    Arguments:
      samples (Quaternion): points on S3.
      spec (ProjectionSpec): projection whose pole may be unset.
      debug (bool): if True report a moved pole.

    Returns:
      revtori.Mesh.ProjectionSpec: spec with its pole set.

    Raises:
      NearPole: if no candidate clears min_pole_distance.
    """
    if spec.pole is not None:
        return spec
    poles = candidatePoles()
    clearance = np.array([float(np.min((samples - c).norm())) for c in poles])
    best = np.max(clearance)
    if best <= spec.min_pole_distance:
        raise NearPole('No candidate pole clears the samples by %.3g (best %.3g).'
                       % (spec.min_pole_distance, best))
    # First candidate within roundoff of the best keeps the default pole on ties
    index = int(np.nonzero(clearance >= best - 1e-12)[0][0])
    if index > 0:
        printDebug('Projection pole moved to %r with clearance %.3g.' % (poles[index], clearance[index]),
                   debug=debug)
    return ProjectionSpec(pole=poles[index], min_pole_distance=spec.min_pole_distance)


class MeshGrid:
    """
    Triangulated grid of surface samples

    Attributes:
      nx : samples along x.
      ny : samples along y.
      vertices : array of shape (nx*ny, 3); vertex (i, j) has index i*ny + j.
      faces : array of 0-based vertex index triples.
      wrap_x : True if the x direction closes up.
      wrap_y : True if the y direction closes up.
      spec : projection used for S3 surfaces, or None.
    """
    def __init__(self, nx, ny, vertices, faces, wrap_x, wrap_y, spec=None):
        self.nx = nx
        self.ny = ny
        self.vertices = np.asarray(vertices, dtype=float)
        self.faces = np.asarray(faces, dtype=int)
        self.wrap_x = wrap_x
        self.wrap_y = wrap_y
        self.spec = spec

    def __repr__(self):
        return 'MeshGrid(nx=%i, ny=%i, vertices=%i, faces=%i, wrap=(%s, %s))' \
               % (self.nx, self.ny, len(self.vertices), len(self.faces), self.wrap_x, self.wrap_y)

    def faceAreas(self):
        """
        Areas of the triangles
        """
        a, b, c = [self.vertices[self.faces[:, k]] for k in range(3)]
        return 0.5 * np.linalg.norm(np.cross(b - a, c - a), axis=-1)


def gridFaces(nx, ny, wrap_x, wrap_y):
    """
    Triangles of an nx by ny grid with optional wrap-around

    Arguments:
      nx (int): samples along x.
      ny (int): samples along y.
      wrap_x (bool): connect the last x row to the first.
      wrap_y (bool): connect the last y column to the first.

    Returns:
      numpy.ndarray: faces of shape (count, 3), counter-clockwise in the (x, y) parameters.
    """
    cx = nx if wrap_x else nx - 1
    cy = ny if wrap_y else ny - 1
    i, j = np.meshgrid(np.arange(cx), np.arange(cy), indexing='ij')
    i, j = i.ravel(), j.ravel()
    a = i * ny + j
    b = ((i + 1) % nx) * ny + j
    c = ((i + 1) % nx) * ny + (j + 1) % ny
    d = i * ny + (j + 1) % ny
    return np.concatenate([np.stack([a, b, c], axis=1), np.stack([a, c, d], axis=1)])


def sampleGrid(surface, nx, ny, spec=None, debug=False):
    """
    Samples a surface over its fundamental domain and triangulates it

    Closed directions are sampled without the repeated endpoint. Surfaces in S3 are projected
    stereographically; surfaces in R3 = Span{1, j, k} use their (1, j, k) coordinates.

    Arguments:
      surface (ParamSurface): the surface.
      nx (int): samples along x, at least 3.
      ny (int): samples along y, at least 3.
      spec (ProjectionSpec): projection; None selects a pole automatically.
      debug (bool): if True report automatic pole changes.

    Returns:
      revtori.Mesh.MeshGrid: the mesh.

    Raises:
      InvalidParameter: for grids below 3 or surfaces in R4.
      NearPole: if no pole clears the samples.
    """
    if nx < 3 or ny < 3:
        raise InvalidParameter('Mesh grids need at least 3 samples per direction, not %ix%i.' % (nx, ny))
    if surface.target == 'R4':
        raise InvalidParameter('Only surfaces in S3 or R3 can be meshed.')
    wrap_x, wrap_y = surface.wrap
    axes = []
    for n, period, wrap in zip((nx, ny), surface.periods, (wrap_x, wrap_y)):
        period = 1.0 if period is None else period
        axes.append(np.arange(n) * (period / n) if wrap else np.linspace(0.0, period, n))
    X, Y = np.meshgrid(axes[0], axes[1], indexing='ij')
    samples = surface(X.ravel(), Y.ravel())

    if surface.target == 'S3':
        if spec is None:  spec = ProjectionSpec(pole=None)
        spec = selectPole(samples, spec, debug=debug)
        vertices = stereographic(samples, spec)
    else:
        spec = None
        vertices = np.stack([samples.w, samples.y, samples.z], axis=-1)

    return MeshGrid(nx, ny, vertices, gridFaces(nx, ny, wrap_x, wrap_y), wrap_x, wrap_y, spec=spec)


def writeOBJ(mesh, path):
    """
    Writes a mesh as ASCII Wavefront OBJ

    Arguments:
      mesh (MeshGrid): the mesh.
      path (str): output file name.

    Returns:
      str: the output file name.

    Raises:
      IoFailure: if the file cannot be written.
    """
    handle = getOutputHandle(path)
    try:
        for v in mesh.vertices:
            handle.write('v %.17g %.17g %.17g\n' % tuple(v))
        for f in mesh.faces + 1:
            handle.write('f %i %i %i\n' % tuple(f))
    except (IOError, OSError) as e:
        raise IoFailure('File %s cannot be written: %s' % (path, e))
    finally:
        handle.close()
    return path


def readOBJ(path):
    """
    Reads vertices and triangles of an ASCII OBJ file

    Arguments:
      path (str): input file name.

    Returns:
      tuple: (vertices array of shape (n, 3), faces array of 0-based triples).

    Raises:
      IoFailure: if the file cannot be read or is malformed.
    """
    vertices, faces = [], []
    try:
        with openFile(path, 'r') as handle:
            for number, line in enumerate(handle, start=1):
                fields = line.split()
                if not fields or fields[0].startswith('#'):
                    continue
                if fields[0] == 'v' and len(fields) == 4:
                    vertices.append([float(x) for x in fields[1:]])
                elif fields[0] == 'f' and len(fields) == 4:
                    faces.append([int(x.split('/')[0]) - 1 for x in fields[1:]])
                else:
                    raise IoFailure('Malformed OBJ line %i in %s: %s' % (number, path, line.strip()))
    except (IOError, OSError, ValueError) as e:
        if isinstance(e, IoFailure):  raise
        raise IoFailure('File %s cannot be read: %s' % (path, e))
    return np.array(vertices, dtype=float).reshape(-1, 3), np.array(faces, dtype=int).reshape(-1, 3)


def profileTable(F, ny=default_profile_rows):
    """
    Revolution profile of an n-bulge torus over one y period

    Arguments:
      F (BulgeTorusFamily): the family member.
      ny (int): number of rows.

    Returns:
      pandas.DataFrame: columns y, kappa0, H and Rhat.
    """
    y = np.arange(ny) * (1.0 / (F.v * ny))
    kappa0, _ = revolutionProfiles(F, y)
    return pd.DataFrame({'y': y, 'kappa0': kappa0, 'H': meanCurvatureClosed(F, y), 'Rhat': F.Rhat(y)},
                        columns=['y', 'kappa0', 'H', 'Rhat'])


def cylinderProfileTable(G, ny=default_profile_rows):
    """
    Revolution profile of a cylinder family member over one y period

    Returns:
      pandas.DataFrame: columns y, radius, height and Rhat.
    """
    y = np.arange(ny) * (1.0 / (G.a * ny))
    radius, height = cylinderProfiles(G, y)
    return pd.DataFrame({'y': y, 'radius': radius, 'height': height, 'Rhat': G.Rhat(y)},
                        columns=['y', 'radius', 'height', 'Rhat'])


def writeTable(table, path):
    """
    Writes a table as CSV with 17 significant digits and '\\n' line endings

    Raises:
      IoFailure: if the file cannot be written.
    """
    handle = getOutputHandle(path)
    try:
        table.to_csv(handle, index=False, float_format='%.17g', lineterminator='\n')
    except (IOError, OSError) as e:
        raise IoFailure('File %s cannot be written: %s' % (path, e))
    finally:
        handle.close()
    return path


def writeProfiles(F, ny, path):
    """
    Writes the y, kappa0, H, Rhat profile of an n-bulge torus

    Arguments:
      F (BulgeTorusFamily): the family member.
      ny (int): number of rows.
      path (str): output file name.

    Returns:
      str: the output file name.
    """
    return writeTable(profileTable(F, ny), path)
