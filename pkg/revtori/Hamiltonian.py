"""
Hamiltonian stationary source surfaces, their spectral data and holomorphic sections
"""
# Info
__author__ = 'Revtori Developers'
from revtori import __version__, __date__

# Imports
import math
import numpy as np
from collections import namedtuple

# Revtori imports
from revtori.Defaults import default_lattice_tolerance, default_cmc_tolerance
from revtori.Errors import InvalidParameter, BelowThreshold, EmptySpectrum
from revtori.Geometry import ParamSurface
from revtori.Quaternion import Quaternion, ComplexPoint, QUAT_I, QUAT_J, QUAT_K, \
                               embedComplex, expI, expJ, realPairing

# Frame of a Hamiltonian stationary surface
Frame = namedtuple('Frame', ['beta', 'g', 'N', 'R', 'f_x', 'f_y'])


def _checkPositive(**kwargs):
    for name, value in kwargs.items():
        if not (np.isfinite(value) and value > 0):
            raise InvalidParameter('%s must be a positive real number, not %s.' % (name, value))


class RectangularTorus:
    """
    Rectangular torus with parameters (u, v) in the 3-sphere

    Attributes:
      u : x frequency.
      v : y frequency.
      r : sqrt(u^2 + v^2).
      rho : scale uv/r.
      beta0 : Lagrangian angle frequency u - iv.
      lattice : generators (1/u, i/v) of the period lattice.
      dual_lattice : generators (u, iv) of the dual lattice.
    """
    def __init__(self, u, v):
        """
        Initializer

        Arguments:
          u (float): positive x frequency.
          v (float): positive y frequency.

        Returns:
          revtori.Hamiltonian.RectangularTorus

        Raises:
          InvalidParameter: if u or v is not positive.
        """
        _checkPositive(u=u, v=v)
        self.u = float(u)
        self.v = float(v)
        self.r = math.hypot(self.u, self.v)
        self.rho = self.u * self.v / self.r
        self.beta0 = ComplexPoint(self.u, -self.v)
        self.lattice = (ComplexPoint(1.0 / self.u, 0.0), ComplexPoint(0.0, 1.0 / self.v))
        self.dual_lattice = (ComplexPoint(self.u, 0.0), ComplexPoint(0.0, self.v))

    def __repr__(self):
        return 'RectangularTorus(u=%r, v=%r)' % (self.u, self.v)

    def eval(self, x, y):
        """
        f = rho((1/u) e^{2 pi j u x} + i (1/v) e^{2 pi j v y})
        """
        a, b = 2.0 * np.pi * self.u * x, 2.0 * np.pi * self.v * y
        return Quaternion(self.rho / self.u * np.cos(a), self.rho / self.v * np.cos(b),
                          self.rho / self.u * np.sin(a), self.rho / self.v * np.sin(b))

    def partials(self, x, y):
        """
        Exact partials f_x = 2 pi rho j e^{2 pi j u x} and f_y = 2 pi rho k e^{2 pi j v y}
        """
        a, b = 2.0 * np.pi * self.u * x, 2.0 * np.pi * self.v * y
        scale = 2.0 * np.pi * self.rho
        f_x = Quaternion(-scale * np.sin(a), 0.0, scale * np.cos(a), 0.0)
        f_y = Quaternion(0.0, -scale * np.sin(b), 0.0, scale * np.cos(b))
        return f_x, f_y

    def surface(self):
        """
        Wraps the torus as a doubly periodic surface in S3
        """
        return ParamSurface(self.eval, exact_partials=self.partials,
                            periods=(1.0 / self.u, 1.0 / self.v), target='S3',
                            name='torus(%g,%g)' % (self.u, self.v))

    def lagrangianAngle(self, x, y):
        return 2.0 * np.pi * realPairing(self.beta0, x + 1j * np.asarray(y))


class StandardCylinder:
    """
    Standard cylinder (1/u) e^{2 pi j u x} + 2 pi k y in Span{1, j, k}

    Attributes:
      u : x frequency and inverse radius.
      beta0 : Lagrangian angle frequency u.
    """
    def __init__(self, u):
        _checkPositive(u=u)
        self.u = float(u)
        self.beta0 = ComplexPoint(self.u, 0.0)

    def __repr__(self):
        return 'StandardCylinder(u=%r)' % self.u

    def eval(self, x, y):
        a = 2.0 * np.pi * self.u * x
        return Quaternion(np.cos(a) / self.u, 0.0, np.sin(a) / self.u, 2.0 * np.pi * np.asarray(y, dtype=float))

    def partials(self, x, y):
        a = 2.0 * np.pi * self.u * x
        f_x = Quaternion(-2.0 * np.pi * np.sin(a), 0.0, 2.0 * np.pi * np.cos(a), 0.0)
        f_y = Quaternion(0.0, 0.0, 0.0, 2.0 * np.pi * np.ones_like(np.asarray(y, dtype=float)))
        return f_x, f_y

    def surface(self):
        """
        Wraps the cylinder as an x periodic surface in R3
        """
        return ParamSurface(self.eval, exact_partials=self.partials,
                            periods=(1.0 / self.u, None), target='R3',
                            name='cylinder(%g)' % self.u)


class MultiplierData:
    """
    Multiplier h^{A,B} of holomorphic sections, h(gamma) = e^{2 pi <A, gamma> - 2 pi i <B, gamma>}

    Attributes:
      A : real exponent; only A = 0 is supported.
      B : phase frequency.
    """
    def __init__(self, B, A=0):
        """
        Initializer

        Arguments:
          B (complex): phase frequency.
          A (complex): real exponent, must be zero.

        Returns:
          revtori.Hamiltonian.MultiplierData

        Raises:
          InvalidParameter: if A is not zero.
        """
        if complex(A) != 0:
            raise InvalidParameter('Only multipliers with A = 0 are supported, not A = %s.' % A)
        self.A = ComplexPoint(0.0, 0.0)
        self.B = ComplexPoint(complex(B))

    def __repr__(self):
        return 'MultiplierData(A=%r, B=%r)' % (self.A, self.B)

    def multiplier(self, gamma):
        """
        Complex multiplier of the lattice vector gamma
        """
        return complex(np.exp(-2j * np.pi * realPairing(self.B, complex(gamma))))


class SpectralPoint:
    """
    Admissible frequency delta = B - (beta0/2) e^{it} of a multiplier

    Attributes:
      delta : the frequency.
      t : angle in [0, 2 pi).
      lam : lambda_delta = (2/beta0)(delta - B).
    """
    __slots__ = ('delta', 't', 'lam')

    def __init__(self, delta, t, lam):
        self.delta = ComplexPoint(complex(delta))
        self.t = float(t)
        self.lam = ComplexPoint(complex(lam))

    def __repr__(self):
        return 'SpectralPoint(delta=%r, t=%r, lam=%r)' % (self.delta, self.t, self.lam)


class Section:
    """
    Closed form section of the trivial quaternionic line bundle over the parameter plane

    Sections add, and scale by complex numbers acting from the right through Span{1, i}.

    Attributes:
      evaluate : vectorized callable (x, y) -> Quaternion.
      exact_partials : vectorized callable (x, y) -> (a_x, a_y), or None.
      name : label.
    """
    def __init__(self, evaluate, exact_partials=None, name=None):
        self.evaluate = evaluate
        self.exact_partials = exact_partials
        self.name = name

    def __repr__(self):
        return 'Section(%s)' % (self.name or '?')

    def __call__(self, x, y):
        return self.evaluate(x, y)

    def __add__(self, other):
        if not isinstance(other, Section):
            return NotImplemented
        partials = None
        if self.exact_partials is not None and other.exact_partials is not None:
            def partials(x, y):
                a_x, a_y = self.exact_partials(x, y)
                b_x, b_y = other.exact_partials(x, y)
                return a_x + b_x, a_y + b_y
        return Section(lambda x, y: self.evaluate(x, y) + other.evaluate(x, y), partials,
                       name='%s+%s' % (self.name, other.name))

    def scale(self, m):
        """
        Right multiplication by a complex coefficient

        Arguments:
          m (complex): coefficient.

        Returns:
          revtori.Hamiltonian.Section: the section a m.
        """
        c = embedComplex(complex(m), axis='i')
        partials = None
        if self.exact_partials is not None:
            def partials(x, y):
                a_x, a_y = self.exact_partials(x, y)
                return a_x * c, a_y * c
        return Section(lambda x, y: self.evaluate(x, y) * c, partials,
                       name='%s*(%s)' % (self.name, complex(m)))


def torusEval(T, x, y):
    """
    Evaluates a rectangular torus

    Arguments:
      T (RectangularTorus): the torus.
      x : x parameters.
      y : y parameters.

    Returns:
      revtori.Quaternion.Quaternion: points on S3.
    """
    return T.eval(x, y)


def torusFrame(T, x, y):
    """
    Lagrangian angle, frame and normals of a rectangular torus

    Arguments:
      T (RectangularTorus): the torus.
      x : x parameters.
      y : y parameters.

    Returns:
      revtori.Hamiltonian.Frame: beta = 2 pi <beta0, z>, g = 2 pi rho j e^{pi j (ux + vy)},
                                 N = e^{2 pi j (ux - vy)} i, R = i e^{2 pi j (ux + vy)},
                                 f_x = e^{j beta/2} g and f_y = e^{j beta/2} i g.
    """
    beta = T.lagrangianAngle(x, y)
    sum_angle = 2.0 * np.pi * (T.u * x + T.v * np.asarray(y, dtype=float))
    g = (2.0 * np.pi * T.rho) * (QUAT_J * expJ(sum_angle / 2.0))
    half = expJ(beta / 2.0)
    return Frame(beta=beta, g=g, N=expJ(beta) * QUAT_I, R=QUAT_I * expJ(sum_angle),
                 f_x=half * g, f_y=half * QUAT_I * g)


def torusMeanCurvature(T):
    """
    Constant mean curvature (u/v - v/u)/2 of a rectangular torus in S3
    """
    return 0.5 * (T.u / T.v - T.v / T.u)


def _spectralPoint(T, M, delta):
    half = complex(T.beta0) / 2.0
    e_it = (complex(M.B) - delta) / half
    t = math.atan2(e_it.imag, e_it.real) % (2.0 * math.pi)
    return SpectralPoint(delta, t, -e_it)


def spectralPoint(T, M, delta, tol=default_lattice_tolerance):
    """
    Builds the spectral point of a frequency on the circle |delta - B| = |beta0|/2

    Arguments:
      T (RectangularTorus or StandardCylinder): the source surface.
      M (MultiplierData): the multiplier.
      delta (complex): the frequency.
      tol (float): relative tolerance of the circle condition.

    Returns:
      revtori.Hamiltonian.SpectralPoint

    Raises:
      InvalidParameter: if delta is not on the circle.
    """
    delta = complex(delta)
    radius2 = abs(complex(T.beta0))**2 / 4.0
    if abs(abs(delta - complex(M.B))**2 - radius2) > tol * 4.0 * radius2:
        raise InvalidParameter('Frequency %s is not on the spectral circle of %r.' % (delta, M))
    return _spectralPoint(T, M, delta)


def spectralFrequencies(T, M, tol=default_lattice_tolerance):
    """
    Enumerates the shifted dual lattice points on the circle of radius r/2 about B

    Arguments:
      T (RectangularTorus): the torus.
      M (MultiplierData): the multiplier.
      tol (float): relative tolerance of the circle condition, scaled by r^2.

    Returns:
      list: SpectralPoint records sorted by t.

    Raises:
      EmptySpectrum: if no lattice point lies on the circle.
    """
    B = complex(M.B)
    half = complex(T.beta0) / 2.0
    r = T.r
    radius2 = r * r / 4.0
    a_range = range(math.ceil((B.real - r - half.real) / T.u), math.floor((B.real + r - half.real) / T.u) + 1)
    b_range = range(math.ceil((B.imag - r - half.imag) / T.v), math.floor((B.imag + r - half.imag) / T.v) + 1)

    points = []
    for a in a_range:
        for b in b_range:
            delta = half + complex(a * T.u, b * T.v)
            if abs(abs(delta - B)**2 - radius2) <= tol * r * r:
                points.append(_spectralPoint(T, M, delta))
    if not points:
        raise EmptySpectrum('No shifted dual lattice point of %r lies on the circle |delta - B| = %.6g about B = %s.'
                            % (T, r / 2.0, B))
    return sorted(points, key=lambda p: p.t)


def bulgeMultiplier(T, n, cmc_tol=default_cmc_tolerance):
    """
    Multiplier of the n-bulge family, B = beta0/2 + nvi/2 - sqrt(u^2 + v^2(1 - n^2))/2

    Arguments:
      T (RectangularTorus): the torus.
      n (int): number of bulges, at least 2.
      cmc_tol (float): relative tolerance below which u = v sqrt(n^2 - 1) is assumed.

    Returns:
      revtori.Hamiltonian.MultiplierData

    Raises:
      InvalidParameter: if n is not an integer of at least 2.
      BelowThreshold: if u < v sqrt(n^2 - 1).
    """
    s = bulgeRoot(T.u, T.v, n, cmc_tol=cmc_tol)
    B = complex(T.beta0) / 2.0 + 0.5j * n * T.v - s / 2.0
    return MultiplierData(B)


def bulgeRoot(u, v, n, cmc_tol=default_cmc_tolerance):
    """
    Computes s = sqrt(u^2 + v^2(1 - n^2)), clamping the boundary case to zero

    Arguments:
      u (float): x frequency.
      v (float): y frequency.
      n (int): number of bulges.
      cmc_tol (float): relative tolerance of the boundary u = v sqrt(n^2 - 1).

    Returns:
      float: s.
    """
    if isinstance(n, bool) or int(n) != n or n < 2:
        raise InvalidParameter('n must be an integer of at least 2, not %s.' % n)
    threshold = v * math.sqrt(n * n - 1)
    if abs(u - threshold) < cmc_tol * v:
        return 0.0
    elif u < threshold:
        raise BelowThreshold('u must be >= v*sqrt(n^2-1) = %.7f for n = %i, not %g.' % (threshold, n, u))
    return math.sqrt(u * u + v * v * (1 - n * n))


def bulgeSpectralPoints(T, M, n):
    """
    Spectral points delta+ = beta0/2 and delta- = beta0/2 + nvi of the n-bulge multiplier

    Returns:
      tuple: (delta+, delta-) as SpectralPoint records.
    """
    half = complex(T.beta0) / 2.0
    return _spectralPoint(T, M, half), _spectralPoint(T, M, half + 1j * n * T.v)


def monochromaticSection(T, M, p):
    """
    Monochromatic section e^{j beta/2}(1 - k lambda) e_{delta - B}

    Arguments:
      T (RectangularTorus): the torus.
      M (MultiplierData): the multiplier.
      p (SpectralPoint): admissible frequency.

    Returns:
      revtori.Hamiltonian.Section: holomorphic section with multiplier h^{0,B}.
    """
    p = spectralPoint(T, M, p.delta)
    coefficient = Quaternion(1.0) - QUAT_K * embedComplex(complex(p.lam), axis='i')
    freq = complex(p.delta) - complex(M.B)

    def _evaluate(x, y):
        return expJ(T.lagrangianAngle(x, y) / 2.0) * coefficient * \
               expI(2.0 * np.pi * realPairing(freq, x + 1j * np.asarray(y)))

    def _partials(x, y):
        alpha = _evaluate(x, y)
        a_x = (np.pi * T.u) * (QUAT_J * alpha) + (2.0 * np.pi * freq.real) * (alpha * QUAT_I)
        a_y = (-np.pi * T.v) * (QUAT_J * alpha) + (2.0 * np.pi * freq.imag) * (alpha * QUAT_I)
        return a_x, a_y

    return Section(_evaluate, _partials, name='alpha(%s)' % complex(p.delta))


def cylinderEval(C, x, y):
    """
    Evaluates a standard cylinder
    """
    return C.eval(x, y)


def cylinderFrame(C, x, y):
    """
    Lagrangian angle, frame and normals of a standard cylinder

    Arguments:
      C (StandardCylinder): the cylinder.
      x : x parameters.
      y : y parameters.

    Returns:
      revtori.Hamiltonian.Frame: beta = 2 pi u x, g = 2 pi j e^{pi j u x}, N = e^{2 pi j u x} i,
                                 R = i e^{2 pi j u x}, f_x and f_y.
    """
    x = np.asarray(x, dtype=float) + 0.0 * np.asarray(y, dtype=float)
    beta = 2.0 * np.pi * C.u * x
    g = (2.0 * np.pi) * (QUAT_J * expJ(beta / 2.0))
    half = expJ(beta / 2.0)
    return Frame(beta=beta, g=g, N=expJ(beta) * QUAT_I, R=QUAT_I * expJ(beta),
                 f_x=half * g, f_y=half * QUAT_I * g)


def cylinderSections(C, a):
    """
    Monochromatic sections (1/u) e^{j pi u x}(u +- ja - k s) e^{pi i (s x -+ a y)} of a cylinder

    Arguments:
      C (StandardCylinder): the cylinder.
      a (float): family parameter with 0 < a <= u; s = sqrt(u^2 - a^2).

    Returns:
      tuple: (B, alpha+, alpha-) with B = (u + ai - s)/2.

    Raises:
      InvalidParameter: if a is not positive.
      BelowThreshold: if a > u.
    """
    _checkPositive(a=a)
    u = C.u
    if a > u:
        raise BelowThreshold('a must be <= u = %g, not %g.' % (u, a))
    s = math.sqrt(max(u * u - a * a, 0.0))
    B = ComplexPoint(0.5 * (u - s), 0.5 * a)

    def _section(sign):
        coefficient = Quaternion(u, 0.0, sign * a, -s) / u

        def _evaluate(x, y):
            return expJ(np.pi * u * np.asarray(x, dtype=float)) * coefficient * \
                   expI(np.pi * (s * np.asarray(x, dtype=float) - sign * a * np.asarray(y, dtype=float)))

        def _partials(x, y):
            alpha = _evaluate(x, y)
            a_x = (np.pi * u) * (QUAT_J * alpha) + (np.pi * s) * (alpha * QUAT_I)
            a_y = (-sign * np.pi * a) * (alpha * QUAT_I)
            return a_x, a_y

        return Section(_evaluate, _partials, name='alpha%s(%g)' % ('+' if sign > 0 else '-', a))

    return B, _section(1.0), _section(-1.0)
