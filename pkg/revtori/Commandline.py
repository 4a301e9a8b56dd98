"""
Commandline interface functions
"""
# Info
__author__ = 'Revtori Developers'
from revtori import __version__, __date__

# Imports
import os
import sys
import multiprocessing as mp
from argparse import ArgumentParser, ArgumentDefaultsHelpFormatter, \
                     RawDescriptionHelpFormatter, ArgumentTypeError

# Revtori imports
from revtori.Defaults import default_grid, default_seed, default_thread_env, default_tolerances
from revtori.IO import printError, printWarning


class CommonHelpFormatter(RawDescriptionHelpFormatter, ArgumentDefaultsHelpFormatter):
    """
    Custom argparse.HelpFormatter
    """
    pass


def defaultProcessCount():
    """
    Number of worker processes, capped by the DARBOUX_THREADS environment variable

    Returns:
      int: min(cpu_count, DARBOUX_THREADS), or cpu_count if the variable is unset or invalid.
    """
    count = mp.cpu_count()
    cap = os.environ.get(default_thread_env)
    if cap is None:
        return count
    try:
        cap = int(cap)
    except ValueError:
        printWarning('Ignoring non-integer %s=%s.' % (default_thread_env, cap))
        return count
    return max(1, min(count, cap))


def parseGrid(value):
    """
    Parses a grid size of the form NXxNY

    Arguments:
      value (str): grid string such as 64x64.

    Returns:
      tuple: (nx, ny).

    Raises:
      argparse.ArgumentTypeError: if the string is malformed or a size is below 3.
    """
    try:
        nx, ny = [int(x) for x in value.lower().split('x')]
    except ValueError:
        raise ArgumentTypeError('Grid must be of the form NXxNY, not %s.' % value)
    if nx < 3 or ny < 3:
        raise ArgumentTypeError('Grid sizes must be at least 3, not %s.' % value)
    return nx, ny


def parseTolerance(value):
    """
    Parses a tolerance override of the form NAME=VALUE

    Arguments:
      value (str): override string such as s3_membership=1e-9.

    Returns:
      tuple: (name, float value).

    Raises:
      argparse.ArgumentTypeError: for unknown check names or non-positive values.
    """
    name, sep, number = value.partition('=')
    if not sep or name not in default_tolerances:
        raise ArgumentTypeError('Tolerance must be NAME=VALUE with NAME one of: %s.'
                                % ', '.join(default_tolerances))
    try:
        number = float(number)
    except ValueError:
        raise ArgumentTypeError('Tolerance value of %s is not a number: %s.' % (name, number))
    if not number > 0:
        raise ArgumentTypeError('Tolerance of %s must be positive, not %g.' % (name, number))
    return name, number


def getCommonArgParser(out_file=True, log=True, multiproc=False, seed=False, grid=False,
                       tolerances=False, add_help=True):
    """
    Defines an ArgumentParser object with common revtori arguments

    Arguments:
      out_file (bool): if True add an explicit output file name argument.
      log (bool): If True include log arguments.
      multiproc (bool): If True include multiprocessing arguments.
      seed (bool): If True include the random seed argument.
      grid (bool): If True include the sampling grid argument.
      tolerances (bool): If True include tolerance override arguments.
      add_help (bool): If True add help and version arguments.

    Returns:
      argparse.ArgumentParser: ArgumentParser object.
    """
    parser = ArgumentParser(formatter_class=CommonHelpFormatter, add_help=False)

    # Add help and version arguments
    if add_help:
        group_help = parser.add_argument_group('help')
        group_help.add_argument('--version', action='version',
                                version='%(prog)s:' + ' %s %s' %(__version__, __date__))
        group_help.add_argument('-h', '--help', action='help', help='show this help message and exit')

    # Set standard group
    group = parser.add_argument_group('standard arguments')

    # Output filename
    if out_file:
        group.add_argument('-o', action='store', dest='out_file', default=None,
                           help='''Explicit output file name. Note, this argument cannot be used with
                                 the --outdir or --outname arguments. If unspecified, then
                                 the output filename will be based on the command and parameters.''')

    # Universal arguments
    group.add_argument('--outdir', action='store', dest='out_dir', default=None,
                        help='Specify to changes the output directory to the location specified. \
                              The current directory is used if this is not specified.')
    group.add_argument('--outname', action='store', dest='out_name', default=None,
                        help='Changes the prefix of the output files to the string specified.')

    # Log arguments
    if log:
        group.add_argument('--log', action='store', dest='log_file', default=None,
                            help='Specify to write verbose logging to a file.')
        group.add_argument('--timings', action='store_true', dest='timings',
                            help='''If specified add wall clock timings to the JSON report.
                                  Reports with timings are not byte-identical between runs.''')

    # Sampling arguments
    if seed:
        group.add_argument('--seed', action='store', dest='seed', type=int, default=default_seed,
                            help='Random seed of the randomized sample locations.')
    if grid:
        group.add_argument('--grid', action='store', dest='grid', type=parseGrid,
                            default=default_grid, metavar='NXxNY',
                            help='Sampling grid over the fundamental domain.')

    # Tolerance arguments
    if tolerances:
        group.add_argument('--tol', action='append', dest='tolerances', type=parseTolerance,
                            default=None, metavar='NAME=VALUE',
                            help='Overrides the tolerance of a named check. May be repeated.')

    # Multiprocessing arguments
    if multiproc:
        group.add_argument('--nproc', action='store', dest='nproc', type=int,
                            default=defaultProcessCount(),
                            help='''The number of simultaneous computational processes to execute
                                  (CPU cores to utilized). Capped by the DARBOUX_THREADS
                                  environment variable.''')

    return parser


def parseCommonArgs(args):
    """
    Checks common arguments from getCommonArgParser and transforms output options to a dictionary

    Arguments:
      args : Argument Namespace defined by ArgumentParser.parse_args

    Returns:
      dict : Dictionary copy of args with output arguments embedded in the dictionary out_args
             and tolerance overrides folded into a dictionary.
    """
    args_dict = args.__dict__.copy()

    # Verify output file arguments and exit if anything is hinky
    if args_dict.get('out_file', None) is not None:
        if args_dict.get('out_dir', None) is not None:
            printError('The -o argument may not be specified with the --outdir argument.', code=2)
        if args_dict.get('out_name', None) is not None:
            printError('The -o argument may not be specified with the --outname argument.', code=2)
        if os.path.isfile(args_dict['out_file']):
            printWarning('Output file %s already exists and will be overwritten.' % args_dict['out_file'])

    # Verify output directory
    if 'out_dir' in args_dict and args_dict['out_dir']:
        if os.path.exists(args_dict['out_dir']) and not os.path.isdir(args_dict['out_dir']):
            printError('Directory %s exists but it is not a directory.' % args_dict['out_dir'], code=2)

    # Verify process count
    if args_dict.get('nproc', 1) is not None and args_dict.get('nproc', 1) < 1:
        printError('The --nproc argument must be at least 1.', code=2)

    # Fold tolerance overrides into a dictionary
    if 'tolerances' in args_dict:
        args_dict['tolerances'] = dict(args_dict['tolerances'] or [])

    # Redefine common output options as out_args dictionary
    out_args = ['log_file', 'out_dir', 'out_name', 'timings']
    args_dict['out_args'] = {k:args_dict.setdefault(k, None) for k in out_args}
    args_dict['out_args']['timings'] = bool(args_dict['out_args']['timings'])
    for k in out_args: del args_dict[k]

    return args_dict


def checkArgs(parser, argv=None):
    """
    Checks that arguments have been provided and prints help if they have not.

    Arguments:
      parser : An argparse.ArgumentParser defining the commandline arguments.
      argv : argument list; defaults to sys.argv.

    Returns:
      boolean : True if arguments are present. Prints help and exits with status 2 if not.
    """
    if argv is None:  argv = sys.argv
    if len(argv) == 1:
        parser.print_help()
        sys.exit(2)

    return True
