"""
Darboux transforms: prolongation, polychromatic transforms and the closed form families
"""
# Info
__author__ = 'Revtori Developers'
from revtori import __version__, __date__

# Imports
import math
import numpy as np
from scipy.optimize import brentq, minimize_scalar

# Revtori imports
from revtori.Defaults import default_branch_threshold, default_cmc_tolerance, \
                             default_curvature_step, default_denominator_epsilon, \
                             default_denominator_grid, default_denominator_refine, \
                             default_q_epsilon, default_seed
from revtori.Errors import InvalidParameter, BelowThreshold, BranchPoint, VanishingDenominator, \
                           VanishingQ, DegenerateCMC, DegeneratePoint
from revtori.Geometry import ParamSurface, fivePointDifference, holomorphicResidual, \
                             meanCurvatureNum, normalsNum, jet
from revtori.Hamiltonian import RectangularTorus, StandardCylinder, bulgeRoot
from revtori.Quaternion import Quaternion, QUAT_I, QUAT_J, QUAT_K, embedComplex, expJ, inv, \
                               realPairing


class BulgeTorusFamily:
    """
    Closed form n-bulge Darboux transforms of the rectangular torus (u, v)

    Attributes:
      u : x frequency.
      v : y frequency.
      n : number of bulges.
      s : sqrt(u^2 + v^2(1 - n^2)), clamped to zero at the constant mean curvature member.
      r : sqrt(u^2 + v^2).
      rho : scale uv/r.
      q_tilde : 2r^2 - n^2 v^2.
      R0_tilde : 2u^2 + v^2(1 - n^2)(2 - n^2).
      R1_tilde : 2u^2 + v^2(1 - n^2).
      cmc : True for the constant mean curvature member u = v sqrt(n^2 - 1).
      torus : the source RectangularTorus.
    """
    def __init__(self, u, v, n, cmc_tol=default_cmc_tolerance):
        """
        Initializer

        Arguments:
          u (float): x frequency.
          v (float): y frequency.
          n (int): number of bulges, at least 2.
          cmc_tol (float): relative tolerance of the boundary u = v sqrt(n^2 - 1).

        Returns:
          revtori.Darboux.BulgeTorusFamily

        Raises:
          InvalidParameter: for non-positive frequencies or n < 2.
          BelowThreshold: if u < v sqrt(n^2 - 1).
        """
        self.torus = RectangularTorus(u, v)
        self.u, self.v = self.torus.u, self.torus.v
        self.s = bulgeRoot(self.u, self.v, n, cmc_tol=cmc_tol)
        self.n = int(n)
        self.cmc = abs(self.u - self.v * math.sqrt(self.n**2 - 1)) < cmc_tol * self.v
        self.r = self.torus.r
        self.rho = self.torus.rho
        u2, v2, n2 = self.u**2, self.v**2, self.n**2
        self.q_tilde = 2.0 * self.r**2 - n2 * v2
        self.R0_tilde = 2.0 * u2 + v2 * (1 - n2) * (2 - n2)
        self.R1_tilde = 2.0 * u2 + v2 * (1 - n2)
        self.cmc_tol = cmc_tol
        self.denominator_minimum, self.denominator_argmin = certifyDenominator(self)

    def __repr__(self):
        return 'BulgeTorusFamily(u=%r, v=%r, n=%r)' % (self.u, self.v, self.n)

    def normalized(self):
        """
        Family with parameters (u/v, 1, n); surfaces agree after z -> vz
        """
        return BulgeTorusFamily(self.u / self.v, 1.0, self.n, cmc_tol=self.cmc_tol)

    @property
    def sigma(self):
        """
        Constant offset -(j/u + k/v)/(2 pi) of tau_hat
        """
        return Quaternion(0.0, 0.0, -0.5 / (np.pi * self.u), -0.5 / (np.pi * self.v))

    def ytilde(self, y):
        return 2.0 * np.pi * self.n * self.v * np.asarray(y, dtype=float)

    def Rhat(self, y):
        """
        Denominator u^2(1 + n^2) + v^2(1 - n^2) + (1 - n^2)(s^2 cos y~ - svn sin y~)
        """
        yt = self.ytilde(y)
        n2 = self.n**2
        return self.u**2 * (1 + n2) + self.v**2 * (1 - n2) + \
               (1 - n2) * (self.s**2 * np.cos(yt) - self.s * self.v * self.n * np.sin(yt))

    def _RhatTilde(self, yt):
        return (1 - self.n**2) * (-self.s**2 * np.sin(yt) - self.s * self.v * self.n * np.cos(yt))

    def tauComponents(self, y):
        """
        Coefficients of tau = tau0 + i tau1 = b0 j + a1 i + b1 k

        Arguments:
          y : y parameters.

        Returns:
          tuple: (b0, a1, b1, Rhat) with tau0 = b0 j and tau1 = a1 + b1 j.
        """
        yt = self.ytilde(y)
        u, v, n, s = self.u, self.v, self.n, self.s
        D = self.Rhat(y)
        b0 = u * n**2 / (np.pi * D)
        a1 = n * (s * n * v * np.cos(yt) + s**2 * np.sin(yt)) / (np.pi * v * D)
        b1 = (s**2 + s**2 * np.cos(yt) - s * v * n * np.sin(yt)) / (np.pi * v * D)
        return b0, a1, b1, D

    def tau(self, y):
        b0, a1, b1, _ = self.tauComponents(y)
        return Quaternion(0.0, a1, b0, b1)

    def tauHat(self, y):
        return self.tau(y) + self.sigma

    def tauDerivative(self, y):
        """
        Exact y derivative of tau
        """
        yt = self.ytilde(y)
        u, v, n, s = self.u, self.v, self.n, self.s
        dyt = 2.0 * np.pi * n * v
        D, D_t = self.Rhat(y), self._RhatTilde(yt)
        P_a = n * (s * n * v * np.cos(yt) + s**2 * np.sin(yt))
        P_a_t = n * (-s * n * v * np.sin(yt) + s**2 * np.cos(yt))
        P_b = s**2 + s**2 * np.cos(yt) - s * v * n * np.sin(yt)
        P_b_t = -s**2 * np.sin(yt) - s * v * n * np.cos(yt)
        b0_y = -u * n**2 * D_t * dyt / (np.pi * D**2)
        a1_y = dyt * (P_a_t * D - P_a * D_t) / (np.pi * v * D**2)
        b1_y = dyt * (P_b_t * D - P_b * D_t) / (np.pi * v * D**2)
        return Quaternion(0.0, a1_y, b0_y, b1_y)

    def q(self, y):
        """
        Real factor q = 1 - 2u^2 n^2 / Rhat of the transformed x derivative
        """
        return 1.0 - 2.0 * self.u**2 * self.n**2 / self.Rhat(y)

    def frame(self, x, y):
        """
        Left factor e^{j pi (ux - vy)} and frame g = 2 pi rho j e^{j pi (ux + vy)}
        """
        x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
        E = expJ(np.pi * (self.u * x - self.v * y))
        g = (2.0 * np.pi * self.rho) * (QUAT_J * expJ(np.pi * (self.u * x + self.v * y)))
        return E, g

    def partials(self, x, y):
        """
        Exact partials f_x = E q g and f_y = E (2 pi v (a k - c i) + tau') g of the family
        """
        E, g = self.frame(x, y)
        t_hat = self.tauHat(y)
        f_x = self.q(y) * (E * g)
        inner = (2.0 * np.pi * self.v) * (t_hat.x * QUAT_K - t_hat.z * QUAT_I) + self.tauDerivative(y)
        return f_x, E * inner * g

    def surface(self):
        """
        Wraps the family member as a doubly periodic surface in S3
        """
        return ParamSurface(lambda x, y: bulgeFamilyEval(self, x, y), exact_partials=self.partials,
                            periods=(1.0 / self.u, 1.0 / self.v), target='S3',
                            name='bulge(%g,%g,%i)' % (self.u, self.v, self.n))

    @property
    def profilePeriod(self):
        """
        Period 1/(nv) of the revolution profiles
        """
        return 1.0 / (self.n * self.v)


class CylinderFamily:
    """
    Closed form Darboux transforms 2(-e^{2 pi j u x} tau0 + k tau1) of the standard cylinder

    Attributes:
      u : cylinder frequency.
      a : family parameter with 0 < a <= u.
      s : sqrt(u^2 - a^2).
      round : True when u = a and the transform is a round cylinder.
      cylinder : the source StandardCylinder.
    """
    def __init__(self, u, a, cmc_tol=default_cmc_tolerance, grid=default_denominator_grid,
                 epsilon=default_denominator_epsilon):
        self.cylinder = StandardCylinder(u)
        if not (np.isfinite(a) and a > 0):
            raise InvalidParameter('a must be a positive real number, not %s.' % a)
        self.u, self.a = self.cylinder.u, float(a)
        if self.a > self.u:
            raise BelowThreshold('a must be <= u = %g, not %g.' % (self.u, self.a))
        self.s = math.sqrt(max(self.u**2 - self.a**2, 0.0))
        self.round = abs(self.u - self.a) < cmc_tol * self.u
        certifyDenominator(self, grid=grid, epsilon=epsilon)

    def __repr__(self):
        return 'CylinderFamily(u=%r, a=%r)' % (self.u, self.a)

    def ytilde(self, y):
        return 2.0 * np.pi * self.a * np.asarray(y, dtype=float)

    def _coefficients(self):
        return 1.0 - self.a**2 / self.u**2, self.a * self.s / self.u**2

    def Z(self, y):
        c1, c2 = self._coefficients()
        yt = self.ytilde(y)
        return c1 * np.sin(yt) + c2 * np.cos(yt)

    def Rhat(self, y):
        """
        Denominator 1 - (1 - a^2/u^2) cos y~ + (a/u^2) s sin y~
        """
        c1, c2 = self._coefficients()
        yt = self.ytilde(y)
        return 1.0 - c1 * np.cos(yt) + c2 * np.sin(yt)

    def tauDerivative(self, y):
        """
        Exact y derivatives of tau0 and tau1
        """
        c1, c2 = self._coefficients()
        yt = self.ytilde(y)
        dyt = 2.0 * np.pi * self.a
        D = self.Rhat(y)
        D_y = dyt * (c1 * np.sin(yt) + c2 * np.cos(yt))
        Z = self.Z(y)
        Z_y = dyt * (c1 * np.cos(yt) - c2 * np.sin(yt))
        return -D_y / (self.u * D**2), np.pi + (Z_y * D - Z * D_y) / (self.a * D**2)

    def partials(self, x, y):
        tau0, _, _ = cylinderTau(self, y)
        tau0_y, tau1_y = self.tauDerivative(y)
        a = 2.0 * np.pi * self.u * np.asarray(x, dtype=float)
        scale = 4.0 * np.pi * self.u * tau0
        f_x = Quaternion(scale * np.sin(a), 0.0, -scale * np.cos(a), 0.0)
        f_y = Quaternion(-2.0 * tau0_y * np.cos(a), 0.0, -2.0 * tau0_y * np.sin(a), 2.0 * tau1_y)
        return f_x, f_y

    def surface(self):
        """
        Wraps the family member as an x periodic surface with translational y period 1/a
        """
        return ParamSurface(lambda x, y: cylinderFamilyEval(self, x, y), exact_partials=self.partials,
                            periods=(1.0 / self.u, 1.0 / self.a), target='R3',
                            translation=(None, (2.0 * np.pi / self.a) * QUAT_K),
                            name='cylinder(%g,%g)' % (self.u, self.a))

    @property
    def profilePeriod(self):
        return 1.0 / self.a


class PolychromaticData:
    """
    Admissible frequencies and coefficients of a polychromatic section

    Attributes:
      points : list of SpectralPoint records.
      m : list of complex coefficients, one per point.
    """
    def __init__(self, points, m, tol=1e-12):
        """
        Initializer

        Arguments:
          points (list): SpectralPoint records of one multiplier.
          m (list): complex coefficients.
          tol (float): tolerance of the excluded angle set {0, pi}.

        Returns:
          revtori.Darboux.PolychromaticData

        Raises:
          InvalidParameter: for fewer than two points, mismatched coefficients or angles in {0, pi} only.
        """
        points, m = list(points), [complex(c) for c in m]
        if len(points) < 2:
            raise InvalidParameter('At least two spectral points are required, not %i.' % len(points))
        if len(m) != len(points):
            raise InvalidParameter('Expected %i coefficients, not %i.' % (len(points), len(m)))
        if all(abs(math.sin(p.t)) <= tol for p in points):
            raise InvalidParameter('Spectral angles must not all lie in {0, pi}.')
        if all(c == 0 for c in m):
            raise InvalidParameter('At least one coefficient must be nonzero.')
        self.points = points
        self.m = m

    def __repr__(self):
        return 'PolychromaticData(points=%r, m=%r)' % (self.points, self.m)


def _sampleGrid(periods, grid):
    nx, ny = grid
    x = np.arange(nx) * (periods[0] / nx)
    y = np.arange(ny) * (periods[1] / ny)
    return np.meshgrid(x, y, indexing='ij')


def prolongTransform(f, alpha, branch_threshold=default_branch_threshold, check=True,
                     check_tolerance=1e-4, step=default_curvature_step, target='R4',
                     seed=default_seed):
    """
    Darboux transform f + alpha nu^-1 of a surface by prolongation of a holomorphic section

    The prolongation nu solves d(alpha) = -df nu, so nu = -f_x^-1 alpha_x. Exact partials of the
    surface and the section are used when available, five point differences otherwise.

    Arguments:
      f (ParamSurface): source surface.
      alpha : Section or vectorized callable (x, y) -> Quaternion.
      branch_threshold (float): samples with |alpha| or |nu| below this are branch points.
      check (bool): if True verify holomorphicity of alpha on random samples.
      check_tolerance (float): largest accepted holomorphic residual.
      step (float): five point step for missing partials.
      target (str): ambient tag of the transformed surface.
      seed (int): random seed of the holomorphicity samples.

    Returns:
      revtori.Geometry.ParamSurface: the transformed surface.

    Raises:
      InvalidParameter: if alpha is not holomorphic for the left normal of f.
      BranchPoint: on evaluation at samples where alpha or nu vanishes.
    """
    if check:
        rng = np.random.default_rng(seed)
        px, py = [p if p is not None else 1.0 for p in f.periods]
        x, y = rng.uniform(0.0, px, 16), rng.uniform(0.0, py, 16)
        left = lambda x, y: normalsNum(jet(f, x, y))[0]
        residual = holomorphicResidual(alpha, left, x, y)
        if residual > check_tolerance:
            raise InvalidParameter('Section is not holomorphic for the left normal of the surface '
                                   '(residual %.3e > %.1e).' % (residual, check_tolerance))

    def _surfacePartial(x, y):
        if f.exact_partials is not None:
            return f.exact_partials(x, y)[0]
        return fivePointDifference(f.eval, x, y, step)[0]

    def _sectionPartial(x, y):
        if getattr(alpha, 'exact_partials', None) is not None:
            return alpha.exact_partials(x, y)[0]
        return fivePointDifference(alpha, x, y, step)[0]

    def _eval(x, y):
        x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
        a = alpha(x, y)
        nu = -(inv(_surfacePartial(x, y)) * _sectionPartial(x, y))
        flagged = (np.broadcast_to(a.norm(), x.shape) < branch_threshold) | \
                  (np.broadcast_to(nu.norm(), x.shape) < branch_threshold)
        if np.any(flagged):
            samples = list(zip(np.atleast_1d(x[flagged]).tolist(), np.atleast_1d(y[flagged]).tolist()))
            raise BranchPoint('Prolongation meets %i branch point(s), first at %s.' % (len(samples), samples[0]),
                              samples=samples)
        return f.eval(x, y) + a * inv(nu)

    return ParamSurface(_eval, periods=f.periods, target=target, translation=f.translation,
                        name='prolong(%s)' % f.name)


def _polychromaticTerms(P, x, y):
    """
    Numerator sum and denominator of the polychromatic transform at the samples
    """
    z = np.asarray(x, dtype=float) + 1j * np.asarray(y, dtype=float)
    deltas = [complex(p.delta) for p in P.points]
    sines = [math.sin(p.t) for p in P.points]
    factors = [Quaternion(1.0) + QUAT_K * embedComplex(complex(math.cos(p.t), math.sin(p.t)), axis='i')
               for p in P.points]
    waves = [np.exp(2j * np.pi * realPairing(d, z)) for d in deltas]

    first = sum(c * st * w for c, st, w in zip(P.m, sines, waves))
    second = sum(c * np.exp(1j * p.t) * st * w for c, p, st, w in zip(P.m, P.points, sines, waves))
    R = np.abs(first)**2 + np.abs(second)**2

    numerator = Quaternion()
    for ms, Qs, ws in zip(P.m, factors, waves):
        for mt, Qt, wt, st in zip(P.m, factors, waves, sines):
            if ms == 0 or mt == 0:
                continue
            c = ms * np.conj(mt) * ws * np.conj(wt)
            numerator = numerator + (Qs * embedComplex(c, axis='i') * Qt) * st
    return numerator, R


def polychromaticTransform(T, P, grid=(64, 64), epsilon=default_denominator_epsilon):
    """
    Closed form polychromatic Darboux transform of a rectangular torus

    f^ = f + e^{j beta/2} (sum_{s,t} (1 + k e^{it_s}) m_s conj(m_t) e_{delta_s - delta_t} (1 + k e^{it_t}) sin t_t)
    (1/(R pi conj(beta0))) g, with R = |sum m_t sin t_t e_{delta_t}|^2 + |sum m_t e^{it_t} sin t_t e_{delta_t}|^2.

    Arguments:
      T (RectangularTorus): the torus.
      P (PolychromaticData): frequencies and coefficients.
      grid (tuple): (nx, ny) grid on which R is certified.
      epsilon (float): smallest accepted value of R.

    Returns:
      revtori.Geometry.ParamSurface: the transformed surface.

    Raises:
      VanishingDenominator: if R is not bounded away from zero on the grid.
    """
    X, Y = _sampleGrid((1.0 / T.u, 1.0 / T.v), grid)
    _, R = _polychromaticTerms(P, X, Y)
    index = np.unravel_index(np.argmin(R), R.shape)
    minimum = float(R[index])
    if minimum <= epsilon:
        raise VanishingDenominator('Polychromatic denominator reaches %.3e at (%.6g, %.6g).'
                                   % (minimum, X[index], Y[index]),
                                   minimum=minimum, argmin=(float(X[index]), float(Y[index])))
    scale = 1.0 / (np.pi * np.conj(complex(T.beta0)))

    def _eval(x, y):
        x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
        numerator, R = _polychromaticTerms(P, x, y)
        E = expJ(T.lagrangianAngle(x, y) / 2.0)
        g = (2.0 * np.pi * T.rho) * (QUAT_J * expJ(np.pi * (T.u * x + T.v * y)))
        return T.eval(x, y) + E * numerator * embedComplex(scale / R, axis='i') * g

    return ParamSurface(_eval, periods=(1.0 / T.u, 1.0 / T.v), target='R4',
                        name='polychromatic(%g,%g)' % (T.u, T.v))


def bulgeFamilyEval(F, x, y):
    """
    Evaluates the n-bulge torus f^ = f + e^{j beta/2} tau g

    Arguments:
      F (BulgeTorusFamily): the family member.
      x : x parameters.
      y : y parameters.

    Returns:
      revtori.Quaternion.Quaternion: points on S3.
    """
    E, g = F.frame(x, y)
    return F.torus.eval(x, y) + E * F.tau(y) * g


def revolutionProfiles(F, y):
    """
    Profiles of f^ = e^{2 j pi u x} kappa0 + i e^{2 j pi v y} kappa1

    Arguments:
      F (BulgeTorusFamily): the family member.
      y : y parameters.

    Returns:
      tuple: (kappa0 real, kappa1 Quaternion in Span{1, j}).
    """
    b0, a1, b1, _ = F.tauComponents(y)
    kappa0 = F.rho * (1.0 / F.u - 2.0 * np.pi * b0)
    kappa1 = Quaternion(F.rho * (1.0 / F.v - 2.0 * np.pi * b1), 0.0, 2.0 * np.pi * F.rho * a1, 0.0)
    return kappa0, kappa1


def kappa0Derivative(F, y):
    """
    Exact y derivative of kappa0
    """
    yt = F.ytilde(y)
    dyt = 2.0 * np.pi * F.n * F.v
    return 2.0 * F.rho * F.u * F.n**2 * F._RhatTilde(yt) * dyt / F.Rhat(y)**2


def bulgeExtrema(F):
    """
    Extremal points y_k = (arctan(-vn/s)/pi + k)/(2nv), k = 0..2n-1, of kappa0

    Arguments:
      F (BulgeTorusFamily): the family member.

    Returns:
      numpy.ndarray: the 2n extrema in ascending order.

    Raises:
      DegenerateCMC: for the constant mean curvature member.
    """
    if F.cmc:
        raise DegenerateCMC('kappa0 is constant for u = v*sqrt(n^2-1); no extrema.')
    offset = math.atan(-F.v * F.n / F.s) / math.pi
    return np.array([(offset + k) / (2.0 * F.n * F.v) for k in range(2 * F.n)])


def profileCriticalPoints(F, rows=4096):
    """
    Critical points of kappa0 over one y period located numerically

    Sign changes of the exact derivative on a grid are refined with Brent's method.

    Arguments:
      F (BulgeTorusFamily): the family member.
      rows (int): number of grid intervals.

    Returns:
      numpy.ndarray: sorted critical points in [0, 1/v).
    """
    period = 1.0 / F.v
    y = (np.arange(rows + 1) + 0.5) * (period / rows)
    d = kappa0Derivative(F, y)
    roots = []
    for i in np.nonzero(np.sign(d[:-1]) * np.sign(d[1:]) < 0)[0]:
        roots.append(brentq(lambda t: float(kappa0Derivative(F, t)), y[i], y[i + 1], xtol=1e-14))
    return np.sort(np.mod(roots, period))


def certifyDenominator(F, grid=default_denominator_grid, refine=default_denominator_refine,
                       epsilon=default_denominator_epsilon):
    """
    Certifies that the denominator Rhat of a closed form family stays positive

    Rhat is sampled on a grid over one profile period; the grid minimum and every sample below
    refine times the maximum are refined by bounded scalar minimization.

    Arguments:
      F (BulgeTorusFamily or CylinderFamily): the family member.
      grid (int): number of samples per period.
      refine (float): relative level below which samples are refined.
      epsilon (float): smallest accepted minimum.

    Returns:
      tuple: (minimum, argmin).

    Raises:
      VanishingDenominator: if the certified minimum is not above epsilon.
    """
    period = F.profilePeriod
    step = period / grid
    y = np.arange(grid) * step
    values = F.Rhat(y)
    candidates = set(np.nonzero(values < refine * np.max(values))[0].tolist())
    candidates.add(int(np.argmin(values)))

    minimum, argmin = float(np.min(values)), float(y[np.argmin(values)])
    for i in sorted(candidates):
        result = minimize_scalar(lambda t: float(F.Rhat(t)), bounds=(y[i] - step, y[i] + step),
                                 method='bounded', options={'xatol': 1e-13})
        if result.fun < minimum:
            minimum, argmin = float(result.fun), float(result.x)
    if minimum <= epsilon:
        raise VanishingDenominator('Denominator of %r reaches %.3e at y = %.9g.' % (F, minimum, argmin),
                                   minimum=minimum, argmin=argmin)
    return minimum, argmin % period


def meanCurvatureClosed(F, y, epsilon=default_q_epsilon):
    """
    Closed form mean curvature of the n-bulge torus in S3

    H = Im(tau0/v - tau1/u)/(pi |tau|^2) + (v/u + u/v)/(2q)

    Arguments:
      F (BulgeTorusFamily): the family member.
      y : y parameters.
      epsilon (float): smallest accepted |q|.

    Returns:
      float or numpy.ndarray: the mean curvature.

    Raises:
      VanishingQ: if q vanishes at a sample.
    """
    b0, a1, b1, _ = F.tauComponents(y)
    q = F.q(y)
    if np.any(np.abs(q) < epsilon):
        raise VanishingQ('q = 1 - 2u^2n^2/Rhat vanishes for %r.' % F)
    tau2 = b0**2 + a1**2 + b1**2
    result = (b0 / F.v - b1 / F.u) / (np.pi * tau2) + (F.v / F.u + F.u / F.v) / (2.0 * q)
    return float(result) if np.ndim(result) == 0 else result


def specialValues(F):
    """
    Closed displays of the mean curvature at y = 0 and at y~ = pi

    Returns:
      tuple: ([r^2(v^2 n^4 - q~) - 2 q~ (n^2 - 1) v^2] / [2(n^2 - 1) u v q~],
              [2 u^2 v^2 (n^2 - 1) - r^2 R1~] / [2 (n^2 - 1) u v^3]).
    """
    u, v, n2, r2 = F.u, F.v, F.n**2, F.r**2
    H0 = (r2 * (v**2 * n2**2 - F.q_tilde) - 2.0 * F.q_tilde * (n2 - 1) * v**2) / \
         (2.0 * (n2 - 1) * u * v * F.q_tilde)
    Hhalf = (2.0 * u**2 * v**2 * (n2 - 1) - r2 * F.R1_tilde) / (2.0 * (n2 - 1) * u * v**3)
    return H0, Hhalf


def meanCurvatureSpecial(F):
    """
    Mean curvature at y = 0 and y = 1/(2nv) and the constant mean curvature decision

    Arguments:
      F (BulgeTorusFamily): the family member.

    Returns:
      tuple: (H0, Hhalf, cmc).
    """
    return meanCurvatureClosed(F, 0.0), meanCurvatureClosed(F, 0.5 / (F.n * F.v)), F.cmc


def hatHViaFrame(F, x, y, epsilon=default_q_epsilon):
    """
    Mean curvature of the n-bulge torus from its transformed frame

    Uses H^ = -T^-1 N^ + f^_x^-1 (T r_x + N^ f^_x) T^-1 with T = E tau g, N^ = E tau i tau^-1 E^-1,
    f^_x = E q g and r_x = pi g^-1 j (ui - v) g, and returns Re(f^ H^).

    Arguments:
      F (BulgeTorusFamily): the family member.
      x : x parameters.
      y : y parameters.
      epsilon (float): smallest accepted |q| and |tau|.

    Returns:
      float or numpy.ndarray: the mean curvature in S3.

    Raises:
      DegeneratePoint: where q or tau vanishes.
    """
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    q = F.q(y)
    tau = F.tau(y)
    if np.any(np.abs(q) < epsilon) or np.any(tau.norm() < epsilon):
        raise DegeneratePoint('The frame route is undefined where q or tau vanishes for %r.' % F)
    E, g = F.frame(x, y)
    T = E * tau * g
    T_inv = inv(T)
    N_hat = E * tau * QUAT_I * inv(tau) * E.conj()
    f_hat = F.torus.eval(x, y) + T
    f_hat_x = q * (E * g)
    r_x = np.pi * (inv(g) * QUAT_J * Quaternion(-F.v, F.u, 0.0, 0.0) * g)
    H_hat = -(T_inv * N_hat) + inv(f_hat_x) * (T * r_x + N_hat * f_hat_x) * T_inv
    result = (f_hat * H_hat).w
    return float(result) if np.ndim(result) == 0 else result


def cylinderTau(G, y):
    """
    Profile functions of the cylinder family

    tau0 = (1/u)(-1/2 + 1/Rhat) and tau1 = pi y + (sin y~ (1 - a^2/u^2) + cos y~ (a/u^2) s)/(a Rhat).

    Arguments:
      G (CylinderFamily): the family member.
      y : y parameters.

    Returns:
      tuple: (tau0, tau1, Rhat).
    """
    D = G.Rhat(y)
    tau0 = (-0.5 + 1.0 / D) / G.u
    tau1 = np.pi * np.asarray(y, dtype=float) + G.Z(y) / (G.a * D)
    return tau0, tau1, D


def cylinderFamilyEval(G, x, y):
    """
    Evaluates the cylinder family f^ = 2(-e^{2 pi j u x} tau0 + k tau1)
    """
    tau0, tau1, _ = cylinderTau(G, y)
    a = 2.0 * np.pi * G.u * np.asarray(x, dtype=float)
    return Quaternion(-2.0 * tau0 * np.cos(a), 0.0, -2.0 * tau0 * np.sin(a), 2.0 * tau1 + 0.0 * a)


def cylinderProfiles(G, y):
    """
    Radius 2 tau0 and height 2 tau1 of the cylinder of revolution
    """
    tau0, tau1, _ = cylinderTau(G, y)
    return 2.0 * tau0, 2.0 * tau1


def cylinderCMCSpread(G, h=default_curvature_step):
    """
    Difference of the numerical mean curvature in R3 between y = 0 and y = 1/(4a)

    Returns:
      float: |H(0, 0) - H(0, 1/(4a))|.
    """
    H = meanCurvatureNum(G.surface(), np.zeros(2), np.array([0.0, 0.25 / G.a]), h=h, target='R3')
    return float(abs(H[0] - H[1]))


def cylinderCMCTest(G, tol=1e-5, h=default_curvature_step):
    """
    Decides numerically whether a cylinder family member has constant mean curvature

    Arguments:
      G (CylinderFamily): the family member.
      tol (float): largest accepted spread of the mean curvature.
      h (float): curvature stencil step.

    Returns:
      bool: True if the mean curvature at y = 0 and y = 1/(4a) agrees to tol.
    """
    return cylinderCMCSpread(G, h=h) < tol
