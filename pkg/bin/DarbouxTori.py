#!/usr/bin/env python3
"""
Generates, verifies and exports Darboux transforms of Hamiltonian stationary tori and cylinders
"""
# Info
__author__ = 'Revtori Developers'
from revtori import __version__, __date__

# Imports
import math
import os
import sys
import numpy as np
import pandas as pd
from argparse import ArgumentParser
from collections import OrderedDict
from inspect import signature
from textwrap import dedent
from time import time

# Revtori imports
from revtori.Defaults import default_out_args, default_grid, default_seed, default_profile_rows, \
                            default_sweep_count, default_sweep_umax, default_figure_sets, \
                            default_cylinder_figure_sets
from revtori.Commandline import CommonHelpFormatter, checkArgs, getCommonArgParser, parseCommonArgs
from revtori.Darboux import BulgeTorusFamily, CylinderFamily, meanCurvatureClosed, \
                            meanCurvatureSpecial, cylinderCMCSpread
from revtori.Errors import RevtoriError, InvalidParameter, BelowThreshold, CheckFailure
from revtori.Hamiltonian import RectangularTorus, StandardCylinder, bulgeRoot
from revtori.IO import getOutputName, getOutputHandle, writeReport, printLog, printTable, \
                       printProgress, printError
from revtori.Mesh import ProjectionSpec, sampleGrid, writeOBJ, readOBJ, writeTable, profileTable, \
                         cylinderProfileTable
from revtori.Multiprocessing import CheckResult
from revtori.Verification import check_functions, check_groups, buildTasks, runSuite, buildReport


def inferBulgeCount(u, v=1.0):
    """
    Infers the number of bulges of a torus parameter

    Figure presets keep their captioned count; otherwise the largest n with v*sqrt(n^2-1) <= u.

    Arguments:
      u (float): x frequency.
      v (float): y frequency.

    Returns:
      int: the number of bulges.

    Raises:
      BelowThreshold: if u < v*sqrt(3).
    """
    for sets in default_figure_sets.values():
        for pu, pv, pn in sets:
            if math.isclose(u, pu) and math.isclose(v, pv):  return pn
    if u < v * math.sqrt(3.0):
        raise BelowThreshold('u must be >= v*sqrt(3) = %.7f for any bulge count, not %g.'
                             % (v * math.sqrt(3.0), u))
    n = 2
    while v * math.sqrt((n + 1)**2 - 1) <= u:  n += 1
    return n


def checkFamilyArgs(args_dict):
    """
    Validates family parameters before any computation

    Arguments:
      args_dict (dict): parsed arguments; n is inferred in place when missing.

    Raises:
      InvalidParameter: for out of domain parameters.
      BelowThreshold: for u below the bulge threshold or a > u.
    """
    family = args_dict.get('family', 'torus')
    if args_dict.get('figure') is not None:
        return None
    if family == 'torus' and args_dict.get('u') is not None:
        RectangularTorus(args_dict['u'], args_dict['v'])
        if args_dict.get('n') is None:  args_dict['n'] = inferBulgeCount(args_dict['u'], args_dict['v'])
        bulgeRoot(args_dict['u'], args_dict['v'], args_dict['n'])
    if family == 'cylinder' or args_dict.get('cylinder_u') is not None:
        u = args_dict.get('cylinder_u') or args_dict['u']
        StandardCylinder(u)
        if not args_dict['a'] > 0:
            raise InvalidParameter('a must be a positive real number, not %s.' % args_dict['a'])
        if args_dict['a'] > u:
            raise BelowThreshold('a must be <= u = %g, not %g.' % (u, args_dict['a']))
    return None


def _reportFile(default_name, out_file, out_args):
    if out_file is not None:
        return out_file
    return getOutputName(default_name, out_dir=out_args['out_dir'], out_name=out_args['out_name'],
                         out_type='json')


def _siblingReport(path):
    # JSON report next to a data file
    if path.endswith('.gz'):  path = path[:-3]
    return os.path.splitext(path)[0] + '.json'


def _writeReport(command, params, results, values, report_file, out_args):
    report = buildReport(command, params, results, timings=out_args['timings'], values=values)
    with getOutputHandle(report_file) as handle:
        writeReport(report, handle)
    if report['checks']:
        printTable(report['checks'])
    return report


def _finishChecks(command, params, results, values, out_file, out_args):
    """
    Writes the report and table of a run and logs its end

    Returns:
      int: exit status; 0 if every check passed, 1 otherwise.
    """
    report_file = _reportFile(command.replace('-', '_'), out_file, out_args)
    _writeReport(command, params, results, values, report_file, out_args)

    failed = [r.id for r in results if not r]
    log = OrderedDict()
    log['OUTPUT'] = report_file
    log['CHECKS'] = len(results)
    log['FAIL'] = len(failed)
    log['END'] = 'DarbouxTori'
    printLog(log)

    if failed:
        printError('Checks outside tolerance: %s.' % ', '.join(failed), exit=False)
        return 1
    return 0


def torusFamily(u, v=1.0, n=None, verify=False, grid=default_grid, seed=default_seed,
                tolerances=None, out_file=None, out_args=default_out_args, nproc=1):
    """
    Evaluates an n-bulge torus family member and optionally verifies it

    Arguments:
      u (float): x frequency of the source torus.
      v (float): y frequency of the source torus.
      n (int): number of bulges; inferred from u and v if None.
      verify (bool): if True run the torus check suite.
      grid (tuple): (nx, ny) grid of the membership residual.
      seed (int): seed of randomized sample locations.
      tolerances (dict): tolerance overrides by check name.
      out_file (str): report file name; generated from the command if None.
      out_args (dict): common output argument dictionary from parseCommonArgs.
      nproc (int): number of worker processes.

    Returns:
      int: exit status.
    """
    if n is None:  n = inferBulgeCount(u, v)
    log = OrderedDict()
    log['START'] = 'DarbouxTori'
    log['COMMAND'] = 'torus-family'
    log['U'] = u
    log['V'] = v
    log['N'] = n
    log['VERIFY'] = verify
    printLog(log)

    F = BulgeTorusFamily(u, v, n)
    nx, ny = grid
    X, Y = np.meshgrid(np.arange(nx) / (F.u * nx), np.arange(ny) / (F.v * ny), indexing='ij')
    H0, Hhalf, cmc = meanCurvatureSpecial(F)
    values = OrderedDict([('s', F.s),
                          ('cmc', bool(cmc)),
                          ('denominator_minimum', float(F.denominator_minimum)),
                          ('denominator_argmin', float(F.denominator_argmin)),
                          ('s3_residual', F.surface().sphereResidual(X, Y)),
                          ('H0', float(H0)),
                          ('Hhalf', float(Hhalf))])
    printLog(OrderedDict((k.upper(), x) for k, x in values.items()))

    params = OrderedDict([('u', F.u), ('v', F.v), ('n', F.n), ('grid', list(grid)), ('seed', seed)])
    results = []
    if verify:
        tasks = buildTasks(params, groups=('torus',))
        results = runSuite(tasks, tolerances=tolerances, nproc=nproc, log_file=out_args['log_file'])

    return _finishChecks('torus-family', params, results, values, out_file, out_args)


def cylinderFamily(u, a, verify=False, seed=default_seed, tolerances=None, out_file=None,
                   out_args=default_out_args, nproc=1):
    """
    Evaluates a cylinder family member and optionally verifies it

    Arguments:
      u (float): frequency of the standard cylinder.
      a (float): family parameter with 0 < a <= u.
      verify (bool): if True run the cylinder check suite.
      seed (int): seed of randomized sample locations.
      tolerances (dict): tolerance overrides by check name.
      out_file (str): report file name; generated from the command if None.
      out_args (dict): common output argument dictionary from parseCommonArgs.
      nproc (int): number of worker processes.

    Returns:
      int: exit status.
    """
    log = OrderedDict()
    log['START'] = 'DarbouxTori'
    log['COMMAND'] = 'cylinder-family'
    log['U'] = u
    log['A'] = a
    log['VERIFY'] = verify
    printLog(log)

    G = CylinderFamily(u, a)
    y = np.arange(default_profile_rows) / (G.a * default_profile_rows)
    values = OrderedDict([('s', G.s),
                          ('round', bool(G.round)),
                          ('denominator_minimum', float(np.min(G.Rhat(y)))),
                          ('curvature_spread', cylinderCMCSpread(G))])
    printLog(OrderedDict((k.upper(), x) for k, x in values.items()))

    params = OrderedDict([('cylinder_u', G.u), ('a', G.a), ('seed', seed)])
    results = []
    if verify:
        tasks = buildTasks(params, groups=('cylinder',))
        results = runSuite(tasks, tolerances=tolerances, nproc=nproc, log_file=out_args['log_file'])

    return _finishChecks('cylinder-family', params, results, values, out_file, out_args)


def verifyFamilies(u=2.0, v=1.0, n=2, cylinder_u=2.0, a=1.0, group='all', checks=None,
                   seed=default_seed, tolerances=None, out_file=None, out_args=default_out_args,
                   nproc=1):
    """
    Runs the verification suite

    Arguments:
      u, v, n : torus family parameters.
      cylinder_u, a : cylinder family parameters.
      group (str): one of torus, cylinder or all.
      checks (list): explicit check names overriding group.
      seed (int): seed of randomized sample locations.
      tolerances (dict): tolerance overrides by check name.
      out_file (str): report file name; generated from the command if None.
      out_args (dict): common output argument dictionary from parseCommonArgs.
      nproc (int): number of worker processes.

    Returns:
      int: exit status.
    """
    groups = tuple(check_groups) if group == 'all' else (group,)
    log = OrderedDict()
    log['START'] = 'DarbouxTori'
    log['COMMAND'] = 'verify'
    log['TORUS'] = '(%g, %g, %i)' % (u, v, n)
    log['CYLINDER'] = '(%g, %g)' % (cylinder_u, a)
    log['CHECKS'] = ','.join(checks) if checks else ','.join(groups)
    log['NPROC'] = nproc
    printLog(log)

    params = OrderedDict([('u', u), ('v', v), ('n', n), ('cylinder_u', cylinder_u), ('a', a),
                          ('seed', seed)])
    tasks = buildTasks(params, groups=groups, names=checks)
    results = runSuite(tasks, tolerances=tolerances, nproc=nproc, log_file=out_args['log_file'])

    return _finishChecks('verify', params, results, None, out_file, out_args)


def sweepFamilies(v=1.0, n=2, umax=default_sweep_umax, count=default_sweep_count,
                  rows=default_profile_rows, out_file=None, out_args=default_out_args):
    """
    Tabulates the mean curvature at y = 0 and y = 1/(2nv) over u in [v*sqrt(n^2-1), umax]

    Arguments:
      v (float): y frequency.
      n (int): number of bulges.
      umax (float): largest u.
      count (int): number of u values.
      rows (int): samples of the mean curvature spread over one y period.
      out_file (str): CSV file name; generated from the command if None.
      out_args (dict): common output argument dictionary from parseCommonArgs.

    Returns:
      pandas.DataFrame: columns u, H0, Hhalf, difference, spread and cmc.
    """
    umin = v * math.sqrt(n * n - 1)
    if not umax > umin:
        raise InvalidParameter('umax must exceed v*sqrt(n^2-1) = %.7f, not %g.' % (umin, umax))
    log = OrderedDict()
    log['START'] = 'DarbouxTori'
    log['COMMAND'] = 'sweep'
    log['V'] = v
    log['N'] = n
    log['RANGE'] = '[%.7f, %g]' % (umin, umax)
    log['COUNT'] = count
    printLog(log)

    y = np.arange(rows) / (v * rows)
    table = []
    start_time = time()
    for i, u in enumerate(np.linspace(umin, umax, count)):
        printProgress(i, count, 0.05, start_time=start_time, task='sweep')
        F = BulgeTorusFamily(u, v, n)
        H0, Hhalf, cmc = meanCurvatureSpecial(F)
        H = meanCurvatureClosed(F, y)
        table.append((float(u), H0, Hhalf, abs(H0 - Hhalf), float(np.max(H) - np.min(H)), bool(cmc)))
    printProgress(count, count, 0.05, start_time=start_time, task='sweep')
    table = pd.DataFrame(table, columns=['u', 'H0', 'Hhalf', 'difference', 'spread', 'cmc'])

    if out_file is None:
        out_file = getOutputName('sweep', out_dir=out_args['out_dir'], out_name=out_args['out_name'],
                                 out_type='csv')
    writeTable(table, out_file)

    bulged = table['difference'][~table['cmc']]
    params = OrderedDict([('v', v), ('n', n), ('umax', umax), ('count', count), ('rows', rows)])
    values = OrderedDict([('output', os.path.basename(out_file)),
                          ('rows', len(table)),
                          ('cmc_rows', int(table['cmc'].sum())),
                          ('min_difference', float(bulged.min()) if len(bulged) else None)])
    report_file = _siblingReport(out_file)
    _writeReport('sweep', params, [], values, report_file, out_args)

    log = OrderedDict()
    log['OUTPUT'] = out_file
    log['REPORT'] = report_file
    log['ROWS'] = len(table)
    log['CMC'] = values['cmc_rows']
    log['END'] = 'DarbouxTori'
    printLog(log)

    return table


def _figureSurfaces(figure):
    names = list(default_figure_sets) + list(default_cylinder_figure_sets) if figure == 'all' else [figure]
    surfaces = []
    for name in names:
        if name in default_figure_sets:
            for i, (u, v, n) in enumerate(default_figure_sets[name]):
                surfaces.append(('%s_%s' % (name, 'abc'[i]), BulgeTorusFamily(u, v, n).surface()))
        elif name in default_cylinder_figure_sets:
            for i, (u, a) in enumerate(default_cylinder_figure_sets[name]):
                surfaces.append(('%s_%s' % (name, 'abc'[i]), CylinderFamily(u, a).surface()))
        else:
            raise InvalidParameter('Unknown figure %s.' % name)
    return surfaces


def _objCheck(name, mesh, path):
    """
    Re-reads a written OBJ file and compares its vertex and face counts with the grid

    Returns:
      revtori.Multiprocessing.CheckResult: residual is the total count mismatch.
    """
    start_time = time()
    result = CheckResult('obj_%s' % name, 0.0)
    vertices, faces = readOBJ(path)
    cx = mesh.nx if mesh.wrap_x else mesh.nx - 1
    cy = mesh.ny if mesh.wrap_y else mesh.ny - 1
    residual = abs(len(vertices) - mesh.nx * mesh.ny) + abs(len(faces) - 2 * cx * cy)
    if len(faces) and faces.max() >= len(vertices):  residual += 1
    result.max_residual = float(residual)
    result.valid = residual == 0
    result.elapsed = time() - start_time
    return result


def meshFamilies(u=None, v=1.0, n=None, a=None, family='torus', figure=None, grid=default_grid,
                 out_file=None, out_args=default_out_args, debug=False):
    """
    Writes OBJ meshes of family members or of the figure presets

    Arguments:
      u (float): x frequency of the source torus or cylinder.
      v (float): y frequency of the source torus.
      n (int): number of bulges; inferred from u and v if None.
      a (float): cylinder family parameter.
      family (str): torus or cylinder.
      figure (str): preset name or all; overrides the family parameters.
      grid (tuple): (nx, ny) sampling grid.
      out_file (str): OBJ file name for a single mesh.
      out_args (dict): common output argument dictionary from parseCommonArgs.
      debug (bool): if True report automatic pole changes.

    Returns:
      list: names of the files written.
    """
    log = OrderedDict()
    log['START'] = 'DarbouxTori'
    log['COMMAND'] = 'mesh'
    log['FIGURE'] = figure
    log['GRID'] = '%ix%i' % tuple(grid)
    printLog(log)

    if figure is not None:
        surfaces = _figureSurfaces(figure)
        if out_file is not None and len(surfaces) > 1:
            raise InvalidParameter('The -o argument names a single file; %s has %i meshes.'
                                   % (figure, len(surfaces)))
    elif family == 'cylinder':
        surfaces = [('cylinder_%g_%g' % (u, a), CylinderFamily(u, a).surface())]
    else:
        if n is None:  n = inferBulgeCount(u, v)
        surfaces = [('torus_%g_%g_%i' % (u, v, n), BulgeTorusFamily(u, v, n).surface())]

    log_handle = None if out_args['log_file'] is None else open(out_args['log_file'], 'a')
    files, results = [], []
    start_time = time()
    for i, (name, surface) in enumerate(surfaces):
        printProgress(i, len(surfaces), 0.05, start_time=start_time, task='mesh')
        mesh = sampleGrid(surface, grid[0], grid[1], spec=ProjectionSpec(pole=None), debug=debug)
        if out_file is not None:
            path = out_file
        else:
            prefix = name if out_args['out_name'] is None else '%s_%s' % (out_args['out_name'], name)
            path = getOutputName(prefix, out_dir=out_args['out_dir'], out_type='obj')
        writeOBJ(mesh, path)
        files.append(path)
        results.append(_objCheck(name, mesh, path))

        record = OrderedDict()
        record['SURFACE'] = surface.name
        record['OUTPUT'] = path
        record['VERTICES'] = len(mesh.vertices)
        record['FACES'] = len(mesh.faces)
        record['POLE'] = mesh.spec.pole if mesh.spec is not None else None
        record['PASS'] = results[-1].valid
        printLog(record, handle=log_handle)
    printProgress(len(surfaces), len(surfaces), 0.05, start_time=start_time, task='mesh')
    if log_handle is not None:  log_handle.close()

    params = OrderedDict([('family', family), ('figure', figure), ('u', u), ('v', v), ('n', n),
                          ('a', a), ('grid', list(grid))])
    values = OrderedDict([('files', [os.path.basename(f) for f in files])])
    report_file = _reportFile('mesh', None, out_args) if out_file is None else _siblingReport(out_file)
    _writeReport('mesh', params, results, values, report_file, out_args)

    failed = [r.id for r in results if not r]
    log = OrderedDict()
    log['OUTPUT'] = len(files)
    log['REPORT'] = report_file
    log['FAIL'] = len(failed)
    log['END'] = 'DarbouxTori'
    printLog(log)

    if failed:
        raise CheckFailure('OBJ files with wrong vertex or face counts: %s.' % ', '.join(failed))
    return files


def writeProfile(u, v=1.0, n=None, a=None, family='torus', rows=default_profile_rows,
                 out_file=None, out_args=default_out_args):
    """
    Writes the revolution profile of a family member as CSV

    Arguments:
      u (float): x frequency of the source torus or cylinder.
      v (float): y frequency of the source torus.
      n (int): number of bulges; inferred from u and v if None.
      a (float): cylinder family parameter.
      family (str): torus or cylinder.
      rows (int): number of rows over one y period.
      out_file (str): CSV file name; generated from the parameters if None.
      out_args (dict): common output argument dictionary from parseCommonArgs.

    Returns:
      str: the output file name.
    """
    log = OrderedDict()
    log['START'] = 'DarbouxTori'
    log['COMMAND'] = 'profile'
    log['FAMILY'] = family
    log['ROWS'] = rows
    printLog(log)

    if family == 'cylinder':
        name, table = 'cylinder_%g_%g' % (u, a), cylinderProfileTable(CylinderFamily(u, a), rows)
    else:
        if n is None:  n = inferBulgeCount(u, v)
        name, table = 'torus_%g_%g_%i' % (u, v, n), profileTable(BulgeTorusFamily(u, v, n), rows)
    if out_file is None:
        out_file = getOutputName(name, out_label='profile', out_dir=out_args['out_dir'],
                                 out_name=out_args['out_name'], out_type='csv')
    writeTable(table, out_file)

    params = OrderedDict([('family', family), ('u', u), ('v', v), ('n', n), ('a', a), ('rows', rows)])
    values = OrderedDict([('output', os.path.basename(out_file)),
                          ('rows', len(table)),
                          ('Rhat_minimum', float(table['Rhat'].min()))])
    report_file = _siblingReport(out_file)
    _writeReport('profile', params, [], values, report_file, out_args)

    log = OrderedDict()
    log['OUTPUT'] = out_file
    log['REPORT'] = report_file
    log['END'] = 'DarbouxTori'
    printLog(log)

    return out_file


def getArgParser():
    """
    Defines the ArgumentParser

    Returns:
      argparse.ArgumentParser: argument parser object.
    """
    # Define output file names and header fields
    fields = dedent(
             '''
             output files:
                 <command>.json, <data file>.json
                     report with keys command, params, values, checks and timings; timings
                     is empty unless --timings is given. sweep and profile reports sit next
                     to their CSV, mesh.json lists the OBJ files and their re-read counts.
                 torus_<u>_<v>_<n>.obj, cylinder_<u>_<a>.obj, <figure>_<letter>.obj
                     ASCII meshes of the family members or figure presets.
                 sweep.csv
                     columns u, H0, Hhalf, difference, spread and cmc.
                 <family>_profile.csv
                     columns y, kappa0, H, Rhat for tori and y, radius, height, Rhat
                     for cylinders.

             exit status:
                 0 on success, 1 if a check exceeds its tolerance, 2 for invalid parameters.

             environment:
                 DARBOUX_THREADS caps the number of worker processes.
             ''')

    # Define ArgumentParser
    parser = ArgumentParser(description=__doc__, epilog=fields,
                            formatter_class=CommonHelpFormatter, add_help=False)
    group_help = parser.add_argument_group('help')
    group_help.add_argument('--version', action='version',
                            version='%(prog)s:' + ' %s %s' %(__version__, __date__))
    group_help.add_argument('-h', '--help', action='help', help='show this help message and exit')
    subparsers = parser.add_subparsers(title='subcommands', dest='command', metavar='',
                                       help='Operation')
    subparsers.required = True

    # Parent parsers
    parser_checks = getCommonArgParser(seed=True, grid=True, tolerances=True, multiproc=True)
    parser_plain = getCommonArgParser(grid=True)

    # Torus family
    parser_torus = subparsers.add_parser('torus-family', parents=[parser_checks],
                                         formatter_class=CommonHelpFormatter, add_help=False,
                                         help='Evaluates an n-bulge torus family member.',
                                         description='Evaluates an n-bulge torus family member.')
    group_torus = parser_torus.add_argument_group('family arguments')
    group_torus.add_argument('--u', action='store', dest='u', type=float, required=True,
                             help='x frequency of the source torus.')
    group_torus.add_argument('--v', action='store', dest='v', type=float, default=1.0,
                             help='y frequency of the source torus.')
    group_torus.add_argument('--n', action='store', dest='n', type=int, default=None,
                             help='Number of bulges. Inferred from u and v if unspecified.')
    group_torus.add_argument('--verify', action='store_true', dest='verify',
                             help='If specified run the torus check suite.')
    parser_torus.set_defaults(main=torusFamily)

    # Cylinder family
    parser_cylinder = subparsers.add_parser('cylinder-family', parents=[parser_checks],
                                            formatter_class=CommonHelpFormatter, add_help=False,
                                            help='Evaluates a cylinder family member.',
                                            description='Evaluates a cylinder family member.')
    group_cylinder = parser_cylinder.add_argument_group('family arguments')
    group_cylinder.add_argument('--u', action='store', dest='u', type=float, required=True,
                                help='Frequency of the standard cylinder.')
    group_cylinder.add_argument('--a', action='store', dest='a', type=float, required=True,
                                help='Family parameter with 0 < a <= u.')
    group_cylinder.add_argument('--verify', action='store_true', dest='verify',
                                help='If specified run the cylinder check suite.')
    parser_cylinder.set_defaults(main=cylinderFamily, family='cylinder')

    # Verification suite
    parser_verify = subparsers.add_parser('verify', parents=[parser_checks],
                                          formatter_class=CommonHelpFormatter, add_help=False,
                                          help='Runs the verification suite.',
                                          description='Runs the verification suite.')
    group_verify = parser_verify.add_argument_group('verification arguments')
    group_verify.add_argument('--u', action='store', dest='u', type=float, default=2.0,
                              help='x frequency of the source torus.')
    group_verify.add_argument('--v', action='store', dest='v', type=float, default=1.0,
                              help='y frequency of the source torus.')
    group_verify.add_argument('--n', action='store', dest='n', type=int, default=2,
                              help='Number of bulges.')
    group_verify.add_argument('--cylinder-u', action='store', dest='cylinder_u', type=float,
                              default=2.0, help='Frequency of the standard cylinder.')
    group_verify.add_argument('--a', action='store', dest='a', type=float, default=1.0,
                              help='Cylinder family parameter.')
    group_verify.add_argument('--group', action='store', dest='group', default='all',
                              choices=['all'] + list(check_groups),
                              help='Check group to run.')
    group_verify.add_argument('--check', action='append', dest='checks', default=None,
                              choices=list(check_functions), metavar='NAME',
                              help='Runs only the named check. May be repeated.')
    parser_verify.set_defaults(main=verifyFamilies)

    # Parameter sweep
    parser_sweep = subparsers.add_parser('sweep', parents=[getCommonArgParser()],
                                         formatter_class=CommonHelpFormatter, add_help=False,
                                         help='Tabulates H0 and Hhalf over u.',
                                         description='''Tabulates the mean curvature at y=0 and
                                                     y=1/(2nv) over u in [v*sqrt(n^2-1), umax].''')
    group_sweep = parser_sweep.add_argument_group('sweep arguments')
    group_sweep.add_argument('--v', action='store', dest='v', type=float, default=1.0,
                             help='y frequency of the source tori.')
    group_sweep.add_argument('--n', action='store', dest='n', type=int, default=2,
                             help='Number of bulges.')
    group_sweep.add_argument('--umax', action='store', dest='umax', type=float,
                             default=default_sweep_umax, help='Largest u of the sweep.')
    group_sweep.add_argument('--count', action='store', dest='count', type=int,
                             default=default_sweep_count, help='Number of u values.')
    parser_sweep.set_defaults(main=sweepFamilies)

    # Mesh export
    parser_mesh = subparsers.add_parser('mesh', parents=[parser_plain],
                                        formatter_class=CommonHelpFormatter, add_help=False,
                                        help='Writes OBJ meshes.',
                                        description='''Writes OBJ meshes of a family member or of
                                                    the figure presets.''')
    group_mesh = parser_mesh.add_argument_group('mesh arguments')
    group_mesh.add_argument('--family', action='store', dest='family', default='torus',
                            choices=['torus', 'cylinder'], help='Family to mesh.')
    group_mesh.add_argument('--u', action='store', dest='u', type=float, default=None,
                            help='x frequency of the source torus or cylinder.')
    group_mesh.add_argument('--v', action='store', dest='v', type=float, default=1.0,
                            help='y frequency of the source torus.')
    group_mesh.add_argument('--n', action='store', dest='n', type=int, default=None,
                            help='Number of bulges. Inferred from u and v if unspecified.')
    group_mesh.add_argument('--a', action='store', dest='a', type=float, default=None,
                            help='Cylinder family parameter.')
    group_mesh.add_argument('--figure', action='store', dest='figure', default=None,
                            choices=['all'] + list(default_figure_sets) + list(default_cylinder_figure_sets),
                            help='Figure preset to mesh instead of a single member.')
    group_mesh.add_argument('--debug', action='store_true', dest='debug',
                            help='If specified report automatic projection pole changes.')
    parser_mesh.set_defaults(main=meshFamilies)

    # Profile export
    parser_profile = subparsers.add_parser('profile', parents=[getCommonArgParser()],
                                           formatter_class=CommonHelpFormatter, add_help=False,
                                           help='Writes the revolution profile as CSV.',
                                           description='Writes the revolution profile as CSV.')
    group_profile = parser_profile.add_argument_group('profile arguments')
    group_profile.add_argument('--family', action='store', dest='family', default='torus',
                               choices=['torus', 'cylinder'], help='Family of the profile.')
    group_profile.add_argument('--u', action='store', dest='u', type=float, required=True,
                               help='x frequency of the source torus or cylinder.')
    group_profile.add_argument('--v', action='store', dest='v', type=float, default=1.0,
                               help='y frequency of the source torus.')
    group_profile.add_argument('--n', action='store', dest='n', type=int, default=None,
                               help='Number of bulges. Inferred from u and v if unspecified.')
    group_profile.add_argument('--a', action='store', dest='a', type=float, default=None,
                               help='Cylinder family parameter.')
    group_profile.add_argument('--rows', action='store', dest='rows', type=int,
                               default=default_profile_rows, help='Rows over one y period.')
    parser_profile.set_defaults(main=writeProfile)

    return parser


def runCommand(args_dict):
    """
    Dispatches parsed arguments to the subcommand function

    Arguments:
      args_dict (dict): dictionary from parseCommonArgs.

    Returns:
      int: exit status; 0 on success, 1 for failed checks, 2 for invalid parameters.
    """
    args_dict = dict(args_dict)
    main = args_dict.pop('main')
    command = args_dict.pop('command')
    try:
        if command == 'mesh' and args_dict.get('figure') is None:
            if args_dict.get('u') is None:
                raise InvalidParameter('The mesh command needs --u or --figure.')
            if args_dict['family'] == 'cylinder' and args_dict.get('a') is None:
                raise InvalidParameter('Cylinder meshes need --a.')
        if command == 'profile' and args_dict['family'] == 'cylinder' and args_dict.get('a') is None:
            raise InvalidParameter('Cylinder profiles need --a.')
        checkFamilyArgs(args_dict)
    except InvalidParameter as e:
        printError(str(e), exit=False)
        return 2

    # Keep only the arguments of the subcommand function
    keys = signature(main).parameters
    kwargs = {k: args_dict[k] for k in keys if k in args_dict}
    try:
        status = main(**kwargs)
    except InvalidParameter as e:
        printError(str(e), exit=False)
        return 2
    except RevtoriError as e:
        printError(str(e), exit=False)
        return 1
    return status if isinstance(status, int) else 0


if __name__ == '__main__':
    """
    Parses command line arguments and calls main function
    """
    # Parse arguments
    parser = getArgParser()
    checkArgs(parser)
    args = parser.parse_args()
    args_dict = parseCommonArgs(args)
    sys.exit(runCommand(args_dict))
