"""
Named verification checks of the closed form families and their assembly into suites
"""
# Info
__author__ = 'Revtori Developers'
from revtori import __version__, __date__

# Imports
import math
import numpy as np
from collections import OrderedDict
from time import time

# Revtori imports
from revtori.Defaults import default_cylinder_spread_min, default_membership_grid, default_pipeline_grid, \
                             default_sample_count, default_seed, default_tolerances
from revtori.Errors import RevtoriError, CheckFailure
from revtori.Geometry import jet, normalsNum, conformalityResidual, meanCurvatureNum, \
                             holomorphicResidual, multiplierResidual, normalBundleResidual
from revtori.Hamiltonian import RectangularTorus, StandardCylinder, MultiplierData, torusFrame, \
                                torusMeanCurvature, bulgeMultiplier, bulgeSpectralPoints, \
                                spectralFrequencies, monochromaticSection, cylinderFrame, \
                                cylinderSections
from revtori.Darboux import BulgeTorusFamily, CylinderFamily, PolychromaticData, prolongTransform, \
                            polychromaticTransform, bulgeFamilyEval, revolutionProfiles, \
                            bulgeExtrema, profileCriticalPoints, meanCurvatureClosed, \
                            meanCurvatureSpecial, specialValues, hatHViaFrame, cylinderCMCSpread
from revtori.IO import printLog, printProgress
from revtori.Multiprocessing import CheckData, CheckResult, manageProcesses, feedCheckQueue, \
                                    processCheckQueue, collectCheckQueue
from revtori.Quaternion import Quaternion, QUAT_I, QUAT_J, QUAT_K, expI, expJ, expUnit, inv, \
                               maxDistance

# Default parameters of the verify command
default_check_params = OrderedDict([('u', 2.0), ('v', 1.0), ('n', 2),
                                    ('cylinder_u', 2.0), ('a', 1.0),
                                    ('seed', default_seed)])


def _samples(params, periods, count=None):
    rng = np.random.default_rng(params.get('seed', default_seed))
    if count is None:  count = params.get('samples', default_sample_count)
    return rng.uniform(0.0, periods[0], count), rng.uniform(0.0, periods[1], count)


def _grid(periods, grid):
    nx, ny = grid
    return np.meshgrid(np.arange(nx) * (periods[0] / nx), np.arange(ny) * (periods[1] / ny),
                       indexing='ij')


def _family(params):
    return BulgeTorusFamily(params['u'], params['v'], params['n'])


def _bulgeData(F):
    M = bulgeMultiplier(F.torus, F.n)
    return M, bulgeSpectralPoints(F.torus, M, F.n)


# Algebra and spectral data
def checkAlgebraRealPart(params, tolerance):
    """
    Conjugation invariance of the real part, exponential additivity and the swap rule through k
    """
    rng = np.random.default_rng(params.get('seed', default_seed))
    count = params.get('samples', default_sample_count)
    q = Quaternion(*rng.normal(size=(4, count)))
    q = q / q.norm()
    w = Quaternion(*rng.uniform(-1.0, 1.0, size=(4, count)))
    residual = float(np.max(np.abs((q * w * inv(q)).w - w.w)))

    t1, t2 = rng.uniform(-np.pi, np.pi, size=(2, count))
    residual = max(residual, maxDistance(expUnit(QUAT_J, t1) * expUnit(QUAT_J, t2), expUnit(QUAT_J, t1 + t2)))
    residual = max(residual, maxDistance(QUAT_K * expI(t1), expI(-t1) * QUAT_K))
    return residual


def checkSpectralUnitCircle(params, tolerance, draws=20):
    """
    Unit circle identity of the bulge spectral angles and their presence in the enumeration
    """
    rng = np.random.default_rng(params.get('seed', default_seed))
    cases = [(params['u'], params['v'], params['n'])]
    for __ in range(draws):
        n = int(rng.integers(2, 5))
        v = rng.uniform(0.5, 2.0)
        cases.append((v * math.sqrt(n * n - 1) * (1.0 + rng.uniform(0.01, 1.0)), v, n))

    residual = 0.0
    for u, v, n in cases:
        F = BulgeTorusFamily(u, v, n)
        M, points = _bulgeData(F)
        r2 = F.r**2
        c = ((-n * v**2 - u * F.s) / r2, (n * v**2 - u * F.s) / r2)
        s = (v * (n * u - F.s) / r2, -v * (n * u + F.s) / r2)
        found = spectralFrequencies(F.torus, M)
        for p, ci, si in zip(points, c, s):
            residual = max(residual, abs(ci**2 + si**2 - 1.0),
                           abs(math.cos(p.t) - ci), abs(math.sin(p.t) - si),
                           min(abs(complex(f.delta) - complex(p.delta)) for f in found))
    return residual


# Source torus
def checkTorusNormals(params, tolerance):
    """
    Numerical normals against the closed form frame, and the normal bundle predicate
    """
    T = RectangularTorus(params['u'], params['v'])
    x, y = _samples(params, (1.0 / T.u, 1.0 / T.v))
    frame = torusFrame(T, x, y)
    j = jet(T.surface(), x, y)
    N, R = normalsNum(j)
    return max(maxDistance(N, frame.N), maxDistance(R, frame.R),
               maxDistance(j.f_x, frame.f_x), maxDistance(j.f_y, frame.f_y),
               normalBundleResidual(frame.N, frame.R, frame.N * j.f))


def checkTorusMeanCurvature(params, tolerance, draws=10):
    """
    Numerical mean curvature of the source torus and of random rectangular tori in S3 and R4
    """
    rng = np.random.default_rng(params.get('seed', default_seed))
    cases = [(params['u'], params['v'])] + [tuple(c) for c in rng.uniform(0.5, 4.0, size=(draws, 2))]

    residual = 0.0
    for u, v in cases:
        T = RectangularTorus(u, v)
        x, y = _samples(params, (1.0 / T.u, 1.0 / T.v), count=16)
        H = torusMeanCurvature(T)
        H_s3 = meanCurvatureNum(T.surface(), x, y, target='S3')
        H_r4 = meanCurvatureNum(T.surface(), x, y, target='R4')
        residual = max(residual, float(np.max(np.abs(H_s3 - H))),
                       float(np.max(np.abs(H_r4 - math.sqrt(H**2 + 1.0)))))
    return residual


def checkHolomorphicSections(params, tolerance):
    """
    Holomorphicity of both monochromatic bulge sections for the torus left normal
    """
    F = _family(params)
    T = F.torus
    M, points = _bulgeData(F)
    x, y = _samples(params, (1.0 / T.u, 1.0 / T.v))
    left = lambda x, y: torusFrame(T, x, y).N
    return max(holomorphicResidual(monochromaticSection(T, M, p), left, x, y) for p in points)


def checkMultiplier(params, tolerance):
    """
    Multiplier rule of both monochromatic bulge sections over the lattice generators
    """
    F = _family(params)
    T = F.torus
    M, points = _bulgeData(F)
    x, y = _samples(params, (1.0 / T.u, 1.0 / T.v))
    residual = 0.0
    for p in points:
        alpha = monochromaticSection(T, M, p)
        for gamma in T.lattice:
            residual = max(residual, multiplierResidual(alpha, gamma, M.multiplier(gamma), x, y))
    return residual


# Bulge family
def checkS3Membership(params, tolerance):
    F = _family(params)
    X, Y = _grid((1.0 / F.u, 1.0 / F.v), params.get('membership_grid', default_membership_grid))
    return F.surface().sphereResidual(X, Y)


def checkPeriodicity(params, tolerance):
    F = _family(params)
    x, y = _samples(params, (1.0 / F.u, 1.0 / F.v))
    return F.surface().periodicityResidual(x, y)


def checkConformality(params, tolerance):
    """
    Conformality residual of the bulge family from finite difference jets
    """
    F = _family(params)
    x, y = _samples(params, (1.0 / F.u, 1.0 / F.v))
    return float(np.max(conformalityResidual(jet(F.surface(), x, y, exact=False))))


def checkTauIdentity(params, tolerance):
    F = _family(params)
    _, y = _samples(params, (1.0 / F.u, 1.0 / F.v))
    b0, a1, b1, _ = F.tauComponents(y)
    return float(np.max(np.abs(np.pi * F.u * F.v * (b0**2 + a1**2 + b1**2) - (F.v * b0 + F.u * b1))))


def checkTauNorm(params, tolerance):
    F = _family(params)
    _, y = _samples(params, (1.0 / F.u, 1.0 / F.v))
    return float(np.max(np.abs(F.tauHat(y).norm2() - 1.0 / (4.0 * np.pi**2 * F.rho**2))))


def checkRevolutionProfiles(params, tolerance):
    """
    Reconstruction of the family from its revolution profiles
    """
    F = _family(params)
    X, Y = _grid((1.0 / F.u, 1.0 / F.v), default_pipeline_grid)
    kappa0, kappa1 = revolutionProfiles(F, Y)
    rebuilt = expJ(2.0 * np.pi * F.u * X) * kappa0 + QUAT_I * expJ(2.0 * np.pi * F.v * Y) * kappa1
    return maxDistance(rebuilt, bulgeFamilyEval(F, X, Y))


def checkBulgeExtrema(params, tolerance):
    """
    Critical points of kappa0 against the closed form extrema
    """
    F = _family(params)
    found = profileCriticalPoints(F)
    if F.cmc:
        if len(found):
            raise CheckFailure('kappa0 of the constant mean curvature member has %i critical points.' % len(found))
        return 0.0
    period = 1.0 / F.v
    expected = np.sort(np.mod(bulgeExtrema(F), period))
    if len(found) != len(expected):
        raise CheckFailure('Found %i critical points of kappa0, expected %i.' % (len(found), len(expected)))
    d = np.abs(found - expected)
    return float(np.max(np.minimum(d, period - d)))


def checkMeanCurvatureSpecial(params, tolerance):
    F = _family(params)
    H0, Hhalf, _ = meanCurvatureSpecial(F)
    D0, Dhalf = specialValues(F)
    return max(abs(H0 - D0), abs(Hhalf - Dhalf))


def checkCMCCriterion(params, tolerance):
    """
    Constant mean curvature of the boundary member equal to that of its rectangular torus
    """
    v, n = params['v'], params['n']
    u = v * math.sqrt(n * n - 1)
    F = BulgeTorusFamily(u, v, n)
    y = np.arange(64) * (F.profilePeriod / 64)
    H = meanCurvatureClosed(F, y)
    return float(max(np.ptp(H), np.max(np.abs(H - torusMeanCurvature(RectangularTorus(u, v))))))


def checkMeanCurvatureFrame(params, tolerance):
    F = _family(params)
    x, y = _samples(params, (1.0 / F.u, 1.0 / F.v))
    return float(np.max(np.abs(hatHViaFrame(F, x, y) - meanCurvatureClosed(F, y))))


def checkMeanCurvatureNumeric(params, tolerance):
    """
    Closed form mean curvature against the numerical oracle on finite difference jets
    """
    F = _family(params)
    x, y = _samples(params, (1.0 / F.u, 1.0 / F.v), count=8)
    x = np.concatenate([x, [0.0, 0.0]])
    y = np.concatenate([y, [0.0, 0.5 / (F.n * F.v)]])
    H = meanCurvatureNum(F.surface(), x, y, target='S3', exact=False)
    return float(np.max(np.abs(H - meanCurvatureClosed(F, y))))


# Pipelines
def checkPipelineProlongation(params, tolerance):
    """
    Prolongation of the two frequency section against the closed form family
    """
    F = _family(params)
    M, (p_plus, p_minus) = _bulgeData(F)
    alpha = monochromaticSection(F.torus, M, p_plus) + monochromaticSection(F.torus, M, p_minus)
    S = prolongTransform(F.torus.surface(), alpha, seed=params.get('seed', default_seed))
    X, Y = _grid((1.0 / F.u, 1.0 / F.v), default_pipeline_grid)
    return maxDistance(S(X, Y), bulgeFamilyEval(F, X, Y))


def checkMonochromatic(params, tolerance):
    """
    Constant mean curvature of the single frequency transforms of the source torus
    """
    F = _family(params)
    M, points = _bulgeData(F)
    x, y = _samples(params, (1.0 / F.u, 1.0 / F.v), count=16)
    seed = params.get('seed', default_seed)
    surfaces = [prolongTransform(F.torus.surface(), monochromaticSection(F.torus, M, p), seed=seed)
                for p in points]
    surfaces.append(polychromaticTransform(F.torus, PolychromaticData(points, [1.0, 0.0])))
    return max(float(np.ptp(meanCurvatureNum(S, x, y, target='R4'))) for S in surfaces)


def checkPipelinePolychromatic(params, tolerance):
    F = _family(params)
    _, points = _bulgeData(F)
    S = polychromaticTransform(F.torus, PolychromaticData(points, [1.0, 1.0]))
    X, Y = _grid((1.0 / F.u, 1.0 / F.v), default_pipeline_grid)
    return maxDistance(S(X, Y), bulgeFamilyEval(F, X, Y))


def checkPipelineScaling(params, tolerance):
    """
    Independence of the polychromatic transform from a common coefficient
    """
    F = _family(params)
    _, points = _bulgeData(F)
    X, Y = _grid((1.0 / F.u, 1.0 / F.v), default_pipeline_grid)
    base = polychromaticTransform(F.torus, PolychromaticData(points, [1.0, 1.0]))(X, Y)
    return max(maxDistance(polychromaticTransform(F.torus, PolychromaticData(points, [c, c]))(X, Y), base)
               for c in (2.0, 1j, 1.0 + 1j))


# Cylinders
def checkCylinderSections(params, tolerance):
    C = StandardCylinder(params['cylinder_u'])
    _, alpha_plus, alpha_minus = cylinderSections(C, params['a'])
    x, y = _samples(params, (1.0 / C.u, 1.0))
    left = lambda x, y: cylinderFrame(C, x, y).N
    return max(holomorphicResidual(alpha, left, x, y) for alpha in (alpha_plus, alpha_minus))


def checkCylinderMultiplier(params, tolerance):
    C = StandardCylinder(params['cylinder_u'])
    B, alpha_plus, alpha_minus = cylinderSections(C, params['a'])
    M = MultiplierData(B)
    gamma = 1.0 / C.u
    x, y = _samples(params, (1.0 / C.u, 1.0))
    return max(multiplierResidual(alpha, gamma, M.multiplier(gamma), x, y)
               for alpha in (alpha_plus, alpha_minus))


def checkCylinderPeriodicity(params, tolerance):
    G = CylinderFamily(params['cylinder_u'], params['a'])
    x, y = _samples(params, (1.0 / G.u, 1.0 / G.a))
    return G.surface().periodicityResidual(x, y)


def checkCylinderRound(params, tolerance):
    """
    Constant mean curvature u/2 of the round member, and non-constant curvature otherwise
    """
    u = params['cylinder_u']
    R = CylinderFamily(u, u)
    y = np.arange(8) * (R.profilePeriod / 8)
    H = meanCurvatureNum(R.surface(), np.zeros_like(y), y, target='R3')
    residual = float(max(np.ptp(H), np.max(np.abs(np.abs(H) - u / 2.0))))

    G = CylinderFamily(u, params['a'])
    if not G.round:
        spread = cylinderCMCSpread(G)
        if spread <= default_cylinder_spread_min:
            raise CheckFailure('Mean curvature spread %.3e of %r does not exceed %.1e.'
                               % (spread, G, default_cylinder_spread_min))
    return residual


# Registry of named checks
check_functions = OrderedDict([('algebra_real_part', checkAlgebraRealPart),
                               ('bulge_extrema', checkBulgeExtrema),
                               ('cmc_criterion', checkCMCCriterion),
                               ('conformality', checkConformality),
                               ('cylinder_periodicity', checkCylinderPeriodicity),
                               ('cylinder_round', checkCylinderRound),
                               ('cylinder_sections', checkCylinderSections),
                               ('cylinder_multiplier', checkCylinderMultiplier),
                               ('holomorphic_sections', checkHolomorphicSections),
                               ('mean_curvature_frame', checkMeanCurvatureFrame),
                               ('mean_curvature_numeric', checkMeanCurvatureNumeric),
                               ('mean_curvature_special', checkMeanCurvatureSpecial),
                               ('monochromatic', checkMonochromatic),
                               ('multiplier', checkMultiplier),
                               ('periodicity', checkPeriodicity),
                               ('pipeline_polychromatic', checkPipelinePolychromatic),
                               ('pipeline_prolongation', checkPipelineProlongation),
                               ('pipeline_scaling', checkPipelineScaling),
                               ('revolution_profiles', checkRevolutionProfiles),
                               ('s3_membership', checkS3Membership),
                               ('spectral_unit_circle', checkSpectralUnitCircle),
                               ('tau_identity', checkTauIdentity),
                               ('tau_norm', checkTauNorm),
                               ('torus_mean_curvature', checkTorusMeanCurvature),
                               ('torus_normals', checkTorusNormals)])

# Checks grouped by the family they exercise
check_groups = OrderedDict([('torus', [k for k in check_functions if not k.startswith('cylinder')]),
                            ('cylinder', [k for k in check_functions if k.startswith('cylinder')])])


def buildTasks(params, groups=('torus', 'cylinder'), names=None):
    """
    Assembles the verification tasks of a run

    Arguments:
      params (dict): family parameters u, v, n, cylinder_u, a and seed.
      groups (tuple): check groups to include.
      names (list): explicit check names overriding groups.

    Returns:
      list: (check name, parameter dictionary) pairs in name order.
    """
    if names is None:
        names = [k for g in groups for k in check_groups[g]]
    return [(k, dict(params)) for k in sorted(names)]


def runCheck(data, tolerances=None):
    """
    Runs a single named check

    Arguments:
      data (CheckData): check name and parameters.
      tolerances (dict): tolerance overrides by check name.

    Returns:
      revtori.Multiprocessing.CheckResult: the result; a check raising a RevtoriError fails
                                           with no residual.
    """
    tolerance = default_tolerances[data.id]
    if tolerances is not None:  tolerance = tolerances.get(data.id, tolerance)
    result = CheckResult(data.id, tolerance)

    start_time = time()
    try:
        residual = float(check_functions[data.id](data.data, tolerance))
    except RevtoriError as e:
        result.log['ERROR'] = str(e)
    else:
        result.max_residual = residual
        result.valid = bool(np.isfinite(residual) and residual <= tolerance)
    result.elapsed = time() - start_time

    result.log['RESIDUAL'] = result.max_residual
    result.log['TOLERANCE'] = tolerance
    result.log['PASS'] = result.valid
    return result


def runSuite(tasks, tolerances=None, nproc=1, log_file=None):
    """
    Runs verification tasks serially or across worker processes

    Arguments:
      tasks (list): (check name, parameter dictionary) pairs.
      tolerances (dict): tolerance overrides by check name.
      nproc (int): number of worker processes; 1 runs in process.
      log_file (str): log file name; if None do not write a log.

    Returns:
      list: CheckResult objects sorted by check name.
    """
    if nproc is not None and nproc > 1 and len(tasks) > 1:
        return manageProcesses(feed_func=feedCheckQueue, work_func=processCheckQueue,
                               collect_func=collectCheckQueue,
                               feed_args={'tasks': tasks},
                               work_args={'process_func': runCheck,
                                          'process_args': {'tolerances': tolerances}},
                               collect_args={'total': len(tasks), 'log_file': log_file},
                               nproc=min(nproc, len(tasks)))

    log_handle = None if log_file is None else open(log_file, 'a')
    results = []
    start_time = time()
    for i, task in enumerate(tasks):
        printProgress(i, len(tasks), 0.05, start_time=start_time, task='verify')
        result = runCheck(CheckData(*task), tolerances=tolerances)
        printLog(result.log, handle=log_handle)
        results.append(result)
    printProgress(len(tasks), len(tasks), 0.05, start_time=start_time, task='verify')
    if log_handle is not None:  log_handle.close()

    return sorted(results, key=lambda r: r.id)


def buildReport(command, params, results, timings=False, values=None):
    """
    Assembles the machine readable report of a run

    Arguments:
      command (str): subcommand name.
      params (dict): run parameters.
      results (list): CheckResult objects.
      timings (bool): if True fill timings with per check wall clock times.
      values (dict): derived family values reported between params and checks.

    Returns:
      collections.OrderedDict: report with keys command, params, values, checks and timings;
                               values is optional and timings is empty unless requested.
    """
    report = OrderedDict()
    report['command'] = command
    report['params'] = OrderedDict((k, params[k]) for k in sorted(params))
    if values is not None:
        report['values'] = OrderedDict(values)
    report['checks'] = [r.toRecord() for r in sorted(results, key=lambda r: r.id)]
    report['timings'] = OrderedDict()
    if timings:
        report['timings'].update((r.id, round(r.elapsed, 6)) for r in sorted(results, key=lambda r: r.id))
    return report
