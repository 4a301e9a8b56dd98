"""
Exception classes
"""
# Info
__author__ = 'Revtori Developers'
from revtori import __version__, __date__


class RevtoriError(Exception):
    """
    Base class of all errors raised by the revtori library
    """
    pass


class InvalidParameter(RevtoriError, ValueError):
    """
    Raised for parameters outside the domain of a surface or family
    """
    pass


class BelowThreshold(InvalidParameter):
    """
    Raised when u < v*sqrt(n^2 - 1) or a > u so that the spectral data is not real
    """
    pass


class ZeroQuaternion(RevtoriError, ZeroDivisionError):
    """
    Raised when inverting a quaternion of zero norm
    """
    pass


class NotUnitAxis(RevtoriError, ValueError):
    """
    Raised when an exponential axis is not a pure unit quaternion
    """
    pass


class NonFinite(RevtoriError, ArithmeticError):
    """
    Raised when a surface or section produces non-finite values
    """
    pass


class DegenerateJet(RevtoriError, ArithmeticError):
    """
    Raised when the x partial derivative of a sample vanishes
    """
    pass


class NonConformal(RevtoriError):
    """
    Raised when a sample is too far from conformal to trust curvature
    """
    pass


class EmptySpectrum(RevtoriError):
    """
    Raised when no shifted dual lattice point lies on the spectral circle
    """
    pass


class BranchPoint(RevtoriError):
    """
    Raised when a prolongation meets samples where the section or its derivative vanishes

    Attributes:
      samples : list of (x, y) parameter pairs where the branch condition was met.
    """
    def __init__(self, message, samples=None):
        """
        Initializer

        Arguments:
          message (str): error message.
          samples (list): flagged (x, y) parameter pairs.

        Returns:
          revtori.Errors.BranchPoint
        """
        super(BranchPoint, self).__init__(message)
        self.samples = samples if samples is not None else []


class VanishingDenominator(RevtoriError, ArithmeticError):
    """
    Raised when a transform denominator is not bounded away from zero

    Attributes:
      minimum : smallest denominator value found.
      argmin : parameter location of the minimum.
    """
    def __init__(self, message, minimum=None, argmin=None):
        """
        Initializer

        Arguments:
          message (str): error message.
          minimum (float): smallest denominator value.
          argmin : parameter location of the minimum.

        Returns:
          revtori.Errors.VanishingDenominator
        """
        super(VanishingDenominator, self).__init__(message)
        self.minimum = minimum
        self.argmin = argmin


class VanishingQ(RevtoriError, ArithmeticError):
    """
    Raised when the real factor q of the transformed x derivative vanishes
    """
    pass


class DegenerateCMC(RevtoriError):
    """
    Raised for operations undefined on the constant mean curvature member of a family
    """
    pass


class DegeneratePoint(RevtoriError, ArithmeticError):
    """
    Raised when the frame route meets a non-immersed point
    """
    pass


class NearPole(RevtoriError):
    """
    Raised when a sample is too close to the stereographic projection pole
    """
    pass


class IoFailure(RevtoriError, IOError):
    """
    Raised when an output file cannot be written or parsed
    """
    pass


class CheckFailure(RevtoriError):
    """
    Raised when a verification check cannot produce a residual because a structural claim fails
    """
    pass
