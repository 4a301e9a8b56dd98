"""
Numerical differential geometry of quaternion valued surfaces
"""
# Info
__author__ = 'Revtori Developers'
from revtori import __version__, __date__

# Imports
import numpy as np

# Revtori imports
from revtori.Defaults import default_jet_step, default_curvature_step, default_curvature_inner, \
                             default_nonconformal_threshold, default_tag_threshold, \
                             default_seed
from revtori.Errors import NonFinite, DegenerateJet, NonConformal, InvalidParameter
from revtori.IO import printWarning
from revtori.Quaternion import Quaternion, QUAT_I, embedComplex, inv, maxDistance

# Surface targets
surface_targets = ('S3', 'R3', 'R4')


class ParamSurface:
    """
    A doubly parametrized map (x, y) -> H

    Attributes:
      eval : vectorized callable (x, y) -> Quaternion.
      exact_partials : optional vectorized callable (x, y) -> (f_x, f_y).
      periods : (px, py) periods of the fundamental domain; an entry may be None.
      target : ambient space tag, one of S3, R3 or R4.
      translation : (tx, ty) quaternion offsets added by one period in each direction.
      name : label used in logs and reports.
    """
    def __init__(self, eval, exact_partials=None, periods=None, target='R4',
                 translation=None, name=None):
        """
        Initializer

        Arguments:
          eval : vectorized callable (x, y) -> Quaternion.
          exact_partials : vectorized callable (x, y) -> (f_x, f_y) or None.
          periods : tuple (px, py) with None for a non-periodic direction.
          target : one of 'S3', 'R3' or 'R4'.
          translation : tuple (tx, ty) of Quaternion offsets, or None for zero offsets.
          name : surface label.

        Returns:
          revtori.Geometry.ParamSurface
        """
        if target not in surface_targets:
            raise InvalidParameter('Surface target must be one of %s, not %s.' % (', '.join(surface_targets), target))
        self.eval = eval
        self.exact_partials = exact_partials
        self.periods = periods if periods is not None else (None, None)
        self.target = target
        self.translation = translation if translation is not None else (None, None)
        self.name = name

    def __call__(self, x, y):
        return self.eval(x, y)

    @property
    def wrap(self):
        """
        Closed directions of the fundamental domain as (wrap_x, wrap_y)
        """
        return tuple(p is not None and t is None for p, t in zip(self.periods, self.translation))

    def periodicityResidual(self, x, y):
        """
        Largest deviation from (translational) periodicity over the samples

        Arguments:
          x : x parameters.
          y : y parameters.

        Returns:
          float: max over both directions of |f(z + period) - f(z) - offset|.
        """
        f = self.eval(x, y)
        residual = 0.0
        for axis, (p, t) in enumerate(zip(self.periods, self.translation)):
            if p is None:
                continue
            shifted = self.eval(x + p, y) if axis == 0 else self.eval(x, y + p)
            offset = t if t is not None else Quaternion()
            residual = max(residual, maxDistance(shifted, f + offset))
        return residual

    def sphereResidual(self, x, y):
        """
        Largest deviation of |f| from one over the samples
        """
        return float(np.max(np.abs(self.eval(x, y).norm() - 1.0)))


class JetSample:
    """
    First jet of a surface at one or more samples

    Attributes:
      f : surface values.
      f_x : x partial derivatives.
      f_y : y partial derivatives.
      step : finite difference step; 0 when exact partials were used.
    """
    __slots__ = ('f', 'f_x', 'f_y', 'step')

    def __init__(self, f, f_x, f_y, step):
        self.f = f
        self.f_x = f_x
        self.f_y = f_y
        self.step = step

    def __repr__(self):
        return 'JetSample(f=%r, f_x=%r, f_y=%r, step=%r)' % (self.f, self.f_x, self.f_y, self.step)


def centralDifference(func, x, y, h):
    """
    Second order central differences of a quaternion valued function

    Arguments:
      func : vectorized callable (x, y) -> Quaternion.
      x : x parameters.
      y : y parameters.
      h (float): step.

    Returns:
      tuple: (d/dx, d/dy) as Quaternions.
    """
    d_x = (func(x + h, y) - func(x - h, y)) / (2.0 * h)
    d_y = (func(x, y + h) - func(x, y - h)) / (2.0 * h)
    return d_x, d_y


def fivePointDifference(func, x, y, h):
    """
    Fourth order five point differences of a quaternion valued function

    Arguments:
      func : vectorized callable (x, y) -> Quaternion.
      x : x parameters.
      y : y parameters.
      h (float): step.

    Returns:
      tuple: (d/dx, d/dy) as Quaternions.
    """
    d_x = (func(x - 2*h, y) - 8.0*func(x - h, y) + 8.0*func(x + h, y) - func(x + 2*h, y)) / (12.0 * h)
    d_y = (func(x, y - 2*h) - 8.0*func(x, y - h) + 8.0*func(x, y + h) - func(x, y + 2*h)) / (12.0 * h)
    return d_x, d_y


def jet(surface, x, y, h=default_jet_step, exact=True):
    """
    Evaluates a surface and its first partial derivatives

    Arguments:
      surface (ParamSurface): the surface.
      x : x parameters.
      y : y parameters.
      h (float): central difference step.
      exact (bool): if True use the surface's exact partials when it has them.

    Returns:
      revtori.Geometry.JetSample: the jet.

    Raises:
      InvalidParameter: if h is not positive.
      NonFinite: if the surface or its partials are not finite.
    """
    if h <= 0:
        raise InvalidParameter('Finite difference step must be positive, not %g.' % h)
    f = surface.eval(x, y)
    if exact and surface.exact_partials is not None:
        f_x, f_y = surface.exact_partials(x, y)
        step = 0.0
    else:
        f_x, f_y = centralDifference(surface.eval, x, y, h)
        step = h
    if not (f.isfinite() and f_x.isfinite() and f_y.isfinite()):
        raise NonFinite('Non-finite surface jet near (%s, %s).' % (np.min(x), np.min(y)))
    return JetSample(f, f_x, f_y, step)


def _checkImmersed(j):
    if np.any(j.f_x.norm() == 0):
        raise DegenerateJet('The x partial derivative vanishes at a sample.')


def normalsNum(j):
    """
    Left and right normals N = f_y f_x^-1 and R = -f_x^-1 f_y of a jet

    Arguments:
      j (JetSample): the jet.

    Returns:
      tuple: (N, R) as unnormalized Quaternions.

    Raises:
      DegenerateJet: if f_x vanishes.
    """
    _checkImmersed(j)
    f_x_inv = inv(j.f_x)
    return j.f_y * f_x_inv, -(f_x_inv * j.f_y)


def conformalityResidual(j):
    """
    Scale invariant departure from conformality

    The residual is |N^2 + 1| / (2 max(1, |N|^2)) with N = f_y f_x^-1. It lies in [0, 1] and
    vanishes exactly where N is a unit imaginary quaternion.

    Arguments:
      j (JetSample): the jet.

    Returns:
      float or numpy.ndarray: residual per sample.

    Raises:
      DegenerateJet: if f_x vanishes.
    """
    _checkImmersed(j)
    N = j.f_y * inv(j.f_x)
    return (N * N + 1.0).norm() / (2.0 * np.maximum(1.0, N.norm2()))


def _leftNormal(surface, h, exact):
    """
    Builds a vectorized callable returning the left normal of a surface
    """
    def _normal(x, y):
        N, _ = normalsNum(jet(surface, x, y, h=h, exact=exact))
        return N
    return _normal


def meanCurvatureNum(surface, x, y, h=default_curvature_step, target=None, exact=True,
                     tagged=False, inner=default_curvature_inner,
                     threshold=default_nonconformal_threshold, tag_threshold=default_tag_threshold):
    """
    Mean curvature computed from a numerically differentiated left normal

    The left normal is differentiated with a five point stencil, (dN)'(dx) = (N_x - N N_y)/2 and
    H = -f_x^-1 (dN)'(dx). The scalar returned depends on the target: Re(f H) in S3, Re(-H i) in R3
    and |H| for the length of the mean curvature vector in R4.

    Arguments:
      surface (ParamSurface): the surface.
      x : x parameters.
      y : y parameters.
      h (float): stencil step.
      target (str): S3, R3 or R4; defaults to the surface target.
      exact (bool): if True use exact partials for the inner jets when available.
      tagged (bool): if True also return the conformality residual per sample.
      inner (float): inner jet step as a fraction of h.
      threshold (float): conformality residual above which curvature is refused.
      tag_threshold (float): conformality residual above which a warning is issued.

    Returns:
      float or numpy.ndarray: mean curvature, or (mean curvature, residual) when tagged.

    Raises:
      DegenerateJet: if f_x vanishes.
      NonConformal: if the conformality residual exceeds threshold.
    """
    if target is None:  target = surface.target
    if target not in surface_targets:
        raise InvalidParameter('Mean curvature target must be one of %s, not %s.' % (', '.join(surface_targets), target))

    center = jet(surface, x, y, h=h * inner, exact=exact)
    residual = conformalityResidual(center)
    worst = float(np.max(residual))
    if worst > threshold:
        raise NonConformal('Conformality residual %.3e exceeds %.1e; curvature refused.' % (worst, threshold))
    elif worst > tag_threshold and not tagged:
        printWarning('Conformality residual %.3e exceeds %.1e; curvature is approximate.' % (worst, tag_threshold))

    N = center.f_y * inv(center.f_x)
    N_x, N_y = fivePointDifference(_leftNormal(surface, h * inner, exact), x, y, h)
    dN = (N_x - N * N_y) * 0.5
    H = -(inv(center.f_x) * dN)

    if target == 'S3':
        value = (center.f * H).w
    elif target == 'R3':
        value = (-(H * QUAT_I)).w
    else:
        value = H.norm()

    return (value, residual) if tagged else value


def holomorphicResidual(section, N, x, y, h=default_jet_step):
    """
    Residual |(a_x + N a_y)/2| of the holomorphic structure induced by a left normal

    Arguments:
      section : vectorized callable (x, y) -> Quaternion.
      N : vectorized callable (x, y) -> Quaternion giving the left normal.
      x : x parameters.
      y : y parameters.
      h (float): central difference step.

    Returns:
      float: largest residual over the samples.

    Raises:
      NonFinite: if the section derivatives are not finite.
    """
    a_x, a_y = centralDifference(section, x, y, h)
    if not (a_x.isfinite() and a_y.isfinite()):
        raise NonFinite('Non-finite section derivatives.')
    return float(np.max(((a_x + N(x, y) * a_y) * 0.5).norm()))


def _samplePoints(count, seed, box=(1.0, 1.0)):
    rng = np.random.default_rng(seed)
    return rng.uniform(0.0, box[0], count), rng.uniform(0.0, box[1], count)


def multiplierResidual(section, gamma, h_expected, x=None, y=None, count=64, seed=default_seed):
    """
    Largest deviation of a section from the multiplier rule a(z + gamma) = a(z) h

    Arguments:
      section : vectorized callable (x, y) -> Quaternion.
      gamma (complex): lattice vector.
      h_expected (complex): expected multiplier of gamma.
      x : x parameters; random samples in the unit square when None.
      y : y parameters.
      count (int): number of random samples.
      seed (int): random seed of the samples.

    Returns:
      float: sup over samples of |a(z + gamma) - a(z) h|.
    """
    if x is None or y is None:
        x, y = _samplePoints(count, seed)
    gamma = complex(gamma)
    shifted = section(x + gamma.real, y + gamma.imag)
    return maxDistance(shifted, section(x, y) * embedComplex(complex(h_expected), axis='i'))


def normalBundleResidual(N, R, n):
    """
    Residual |N n R + n| of the normal bundle condition

    Arguments:
      N (Quaternion): left normal.
      R (Quaternion): right normal.
      n (Quaternion): candidate normal vector.

    Returns:
      float: largest residual over the samples.
    """
    return float(np.max((N * n * R + n).norm()))
