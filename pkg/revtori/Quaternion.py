"""
Quaternion arithmetic, the real pairing of the parameter plane and unit exponentials
"""
# Info
__author__ = 'Revtori Developers'
from revtori import __version__, __date__

# Imports
import numpy as np

# Revtori imports
from revtori.Defaults import default_axis_tolerance, default_tolerance
from revtori.Errors import NotUnitAxis, ZeroQuaternion


def _component(value):
    """
    Normalizes a quaternion component to a float or a float array

    Arguments:
      value : real scalar or array-like.

    Returns:
      float or numpy.ndarray: the component.
    """
    if np.iscomplexobj(value):
        raise TypeError('Quaternion components must be real; embed complex values '
                        'explicitly with embedComplex or ComplexPoint.toQuaternion.')
    if np.ndim(value) == 0:
        return float(value)
    return np.asarray(value, dtype=float)


def _isReal(value):
    """
    Checks whether a multiplication operand is a real scalar or real array
    """
    if isinstance(value, (Quaternion, complex, np.complexfloating)):
        return False
    if isinstance(value, (int, float, np.integer, np.floating)):
        return True
    return isinstance(value, np.ndarray) and not np.iscomplexobj(value)


class Quaternion:
    """
    Class defining an element of H, or an array of elements sharing one shape

    Attributes:
      w : scalar part.
      x : i coefficient.
      y : j coefficient.
      z : k coefficient.
    """
    __slots__ = ('w', 'x', 'y', 'z')
    __array_ufunc__ = None

    def __init__(self, w=0.0, x=0.0, y=0.0, z=0.0):
        """
        Initializer

        Arguments:
          w : scalar part (float or array).
          x : i coefficient (float or array).
          y : j coefficient (float or array).
          z : k coefficient (float or array).

        Returns:
          revtori.Quaternion.Quaternion
        """
        self.w = _component(w)
        self.x = _component(x)
        self.y = _component(y)
        self.z = _component(z)

    def __repr__(self):
        return 'Quaternion(%r, %r, %r, %r)' % (self.w, self.x, self.y, self.z)

    def __iter__(self):
        return iter((self.w, self.x, self.y, self.z))

    def __getitem__(self, index):
        """
        Selects samples from an array valued quaternion
        """
        return Quaternion(*[np.broadcast_to(c, self.shape)[index] for c in self])

    @property
    def shape(self):
        """
        Broadcast shape of the components
        """
        return np.broadcast(self.w, self.x, self.y, self.z).shape

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w + other.w, self.x + other.x,
                              self.y + other.y, self.z + other.z)
        elif _isReal(other):
            return Quaternion(self.w + other, self.x, self.y, self.z)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w - other.w, self.x - other.x,
                              self.y - other.y, self.z - other.z)
        elif _isReal(other):
            return Quaternion(self.w - other, self.x, self.y, self.z)
        return NotImplemented

    def __rsub__(self, other):
        if _isReal(other):
            return Quaternion(other - self.w, -self.x, -self.y, -self.z)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return mul(self, other)
        elif _isReal(other):
            return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        if _isReal(other):
            return Quaternion(other * self.w, other * self.x, other * self.y, other * self.z)
        return NotImplemented

    def __truediv__(self, other):
        if _isReal(other):
            return Quaternion(self.w / other, self.x / other, self.y / other, self.z / other)
        return NotImplemented

    def __abs__(self):
        return self.norm()

    def conj(self):
        """
        Quaternion conjugate
        """
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm2(self):
        """
        Squared Euclidean norm
        """
        return self.w**2 + self.x**2 + self.y**2 + self.z**2

    def norm(self):
        """
        Euclidean norm
        """
        return np.sqrt(self.norm2())

    def real(self):
        """
        Real (scalar) part
        """
        return self.w

    def imag(self):
        """
        Imaginary part as a pure quaternion
        """
        return Quaternion(0.0, self.x, self.y, self.z)

    def inv(self):
        return inv(self)

    def isfinite(self):
        """
        Checks that every component of every sample is finite

        Returns:
          bool: True if all components are finite.
        """
        return bool(all(np.all(np.isfinite(c)) for c in self))

    def components(self):
        """
        Stacks the components along a trailing axis

        Returns:
          numpy.ndarray: array of shape self.shape + (4,).
        """
        return np.stack(np.broadcast_arrays(self.w, self.x, self.y, self.z), axis=-1)


# Basis
QUAT_1 = Quaternion(1.0, 0.0, 0.0, 0.0)
QUAT_I = Quaternion(0.0, 1.0, 0.0, 0.0)
QUAT_J = Quaternion(0.0, 0.0, 1.0, 0.0)
QUAT_K = Quaternion(0.0, 0.0, 0.0, 1.0)


class ComplexPoint(complex):
    """
    Class defining a point x + iy of the parameter plane or a frequency in it
    """
    def __repr__(self):
        return 'ComplexPoint(%r, %r)' % (self.real, self.imag)

    @property
    def re(self):
        return self.real

    @property
    def im(self):
        return self.imag

    def toQuaternion(self, axis='i'):
        """
        Embeds the point into Span{1, i} or Span{1, j}

        Arguments:
          axis (str): 'i' or 'j'.

        Returns:
          revtori.Quaternion.Quaternion: the embedded point.
        """
        return embedComplex(complex(self), axis=axis)


def embedComplex(z, axis='i'):
    """
    Embeds complex values into H

    Arguments:
      z : complex scalar or complex array.
      axis (str): imaginary unit used for the embedding, 'i' or 'j'.

    Returns:
      revtori.Quaternion.Quaternion: values in Span{1, i} or Span{1, j}.
    """
    re, im = np.real(z), np.imag(z)
    if axis == 'i':
        return Quaternion(re, im, 0.0, 0.0)
    elif axis == 'j':
        return Quaternion(re, 0.0, im, 0.0)
    else:
        raise ValueError('Embedding axis must be i or j, not %s.' % axis)


def mul(a, b):
    """
    Hamilton product with i^2 = j^2 = k^2 = -1 and ij = k

    Arguments:
      a (Quaternion): left factor.
      b (Quaternion): right factor.

    Returns:
      revtori.Quaternion.Quaternion: the product ab.
    """
    return Quaternion(a.w*b.w - a.x*b.x - a.y*b.y - a.z*b.z,
                      a.w*b.x + a.x*b.w + a.y*b.z - a.z*b.y,
                      a.w*b.y - a.x*b.z + a.y*b.w + a.z*b.x,
                      a.w*b.z + a.x*b.y - a.y*b.x + a.z*b.w)


def inv(q):
    """
    Multiplicative inverse conj(q)/|q|^2

    Arguments:
      q (Quaternion): quaternion to invert.

    Returns:
      revtori.Quaternion.Quaternion: the inverse.

    Raises:
      ZeroQuaternion: if any sample of q has zero norm.
    """
    n2 = q.norm2()
    if np.any(n2 == 0):
        raise ZeroQuaternion('Cannot invert a quaternion of zero norm.')
    return q.conj() / n2


def expUnit(axis, angle, tol=default_axis_tolerance):
    """
    Exponential of a pure unit quaternion, cos(angle) + axis*sin(angle)

    Arguments:
      axis (Quaternion): pure imaginary unit quaternion.
      angle : real angle or array of angles.
      tol (float): tolerance of the unit and purity checks.

    Returns:
      revtori.Quaternion.Quaternion: unit quaternion.

    Raises:
      NotUnitAxis: if axis is not pure or not of unit length.
    """
    if np.any(np.abs(axis.w) > tol) or np.any(np.abs(axis.norm() - 1.0) > tol):
        raise NotUnitAxis('Exponential axis %r is not a pure unit quaternion.' % (axis,))
    c, s = np.cos(angle), np.sin(angle)
    return Quaternion(c, axis.x * s, axis.y * s, axis.z * s)


def expJ(angle):
    """
    Shortcut for e^{j*angle}
    """
    return Quaternion(np.cos(angle), 0.0, np.sin(angle), 0.0)


def expI(angle):
    """
    Shortcut for e^{i*angle}
    """
    return Quaternion(np.cos(angle), np.sin(angle), 0.0, 0.0)


def realPairing(w, z):
    """
    Real pairing <a + ib, x + iy> = ax + by of the parameter plane

    Arguments:
      w : complex scalar or array.
      z : complex scalar or array.

    Returns:
      float or numpy.ndarray: the pairing.
    """
    return np.real(w) * np.real(z) + np.imag(w) * np.imag(z)


def eGamma(gamma, z):
    """
    Character e_gamma(z) = e^{2 pi i <gamma, z>} with values in Span{1, i}

    Arguments:
      gamma : frequency as a complex number.
      z : parameter point(s) as complex numbers.

    Returns:
      revtori.Quaternion.Quaternion: unit quaternion(s) in Span{1, i}.
    """
    return expI(2.0 * np.pi * realPairing(gamma, z))


def inSpanOneJ(q, tol=default_tolerance):
    """
    Checks membership in the subalgebra Span{1, j}
    """
    return bool(np.all(np.abs(q.x) <= tol) and np.all(np.abs(q.z) <= tol))


def inSpanOneI(q, tol=default_tolerance):
    """
    Checks membership in the subalgebra Span{1, i}
    """
    return bool(np.all(np.abs(q.y) <= tol) and np.all(np.abs(q.z) <= tol))


def maxDistance(a, b):
    """
    Largest pointwise distance between two quaternion samples

    Arguments:
      a (Quaternion): first sample set.
      b (Quaternion): second sample set, broadcastable against a.

    Returns:
      float: max |a - b|.
    """
    return float(np.max((a - b).norm()))
