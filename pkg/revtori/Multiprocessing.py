"""
Multiprocessing functions
"""
# Info
__author__ = 'Revtori Developers'
from revtori import __version__, __date__

# Imports
import ctypes
import os
import signal
import sys
import multiprocessing as mp
from collections import OrderedDict
from time import time

# Revtori imports
from revtori.IO import printLog, printProgress, printError

# Constants
TERMINATION_SENTINEL = None


class CheckData:
    """
    Class defining verification tasks for worker processes

    Attributes:
      id : check name.
      data : dictionary of check parameters.
      valid : if True the task is suitable for processing.
    """
    def __init__(self, id, data):
        """
        Initializer

        Arguments:
          id :  check name.
          data : dictionary of check parameters.

        Returns:
          revtori.Multiprocessing.CheckData
        """
        self.id = id
        self.data = data
        self.valid = (id is not None and data is not None)

    def __bool__(self):
        return self.valid


class CheckResult:
    """
    Class defining verification results for collector processes

    Attributes:
      id : check name.
      max_residual : largest residual found, or None if the check raised.
      tolerance : accepted residual.
      valid : if True the check passed.
      log : dictionary containing the check log.
    """
    def __init__(self, id, tolerance):
        """
        Initializer

        Arguments:
          id :  check name.
          tolerance : accepted residual.

        Returns:
          revtori.Multiprocessing.CheckResult
        """
        self.id = id
        self.tolerance = tolerance
        self.max_residual = None
        self.valid = False
        self.elapsed = 0.0
        self.log = OrderedDict([('CHECK', id)])

    def __bool__(self):
        return self.valid

    def toRecord(self):
        """
        Report entry of the check

        Returns:
          collections.OrderedDict: name, max_residual, tolerance and pass.
        """
        return OrderedDict([('name', self.id),
                            ('max_residual', self.max_residual),
                            ('tolerance', self.tolerance),
                            ('pass', self.valid)])


def manageProcesses(feed_func, work_func, collect_func,
                    feed_args={}, work_args={}, collect_args={},
                    nproc=None, queue_size=None):
    """
    Manages feeder, worker and collector processes

    Arguments:
      feed_func (function): Data Queue feeder function.
      work_func (function): Worker function.
      collect_func (function): Result Queue collector function.
      feed_args (dict): Dictionary of arguments to pass to feed_func.
      work_args (dict): Dictionary of arguments to pass to work_func.
      collect_args (dict): Dictionary of arguments to pass to collect_func.
      nproc (int): Number of processQueue processes;
                   if None defaults to the number of CPUs
      queue_size (int): Maximum size of the argument queue;
                        if None defaults to 2*nproc

    Returns:
      dict: Dictionary of collector results
    """
    # Define signal handler that raises KeyboardInterrupt
    def _signalHandler(s, f):
        raise SystemExit

    # Define function to terminate child processes
    def _terminate():
        sys.stderr.write('NOTICE> Terminating child processes...  ')
        feeder.terminate()
        feeder.join()
        for w in workers:
            w.terminate()
            w.join()
        collector.terminate()
        collector.join()
        sys.stderr.write('Done.\n')

    # Raise SystemExit upon termination signal
    signal.signal(signal.SIGTERM, _signalHandler)

    # Define number of processes and queue size
    if nproc is None:  nproc = mp.cpu_count()
    if queue_size is None:  queue_size = nproc * 2

    # Define shared child process keep alive flag
    alive = mp.Value(ctypes.c_bool, True)

    # Define shared data queues
    data_queue = mp.Queue(queue_size)
    result_queue = mp.Queue(queue_size)
    collect_queue = mp.get_context().SimpleQueue()

    feeder, workers, collector = None, [], None
    try:
        # Initiate feeder process
        feeder = mp.Process(target=feed_func, args=(alive, data_queue), kwargs=feed_args)
        feeder.start()

        # Initiate worker processes
        for __ in range(nproc):
            w = mp.Process(target=work_func, args=(alive, data_queue, result_queue), kwargs=work_args)
            w.start()
            workers.append(w)

        # Initiate collector process
        collector = mp.Process(target=collect_func, args=(alive, result_queue, collect_queue),
                               kwargs=collect_args)
        collector.start()

        # Wait for feeder to finish and add sentinel objects to data_queue
        feeder.join()
        for __ in range(nproc):  data_queue.put(TERMINATION_SENTINEL)

        # Wait for worker processes to finish and add sentinel to result_queue
        for w in workers:  w.join()
        result_queue.put(TERMINATION_SENTINEL)

        # Wait for collector process to finish and add sentinel to collect_queue
        collector.join()
        collect_queue.put(TERMINATION_SENTINEL)

        # Get collector return values
        collected = collect_queue.get()
    except (KeyboardInterrupt, SystemExit):
        sys.stderr.write('NOTICE> Exit signal received.\n')
        _terminate()
        sys.exit(1)
    except Exception as e:
        printError('%s.' % e, exit=False)
        _terminate()
        sys.exit(1)
    else:
        if not alive.value:
            printError('Exiting due to child process error.', exit=False)
            _terminate()
            sys.exit(1)

    return collected


def feedCheckQueue(alive, data_queue, tasks):
    """
    Feeds the data queue with verification tasks

    Arguments:
      alive : multiprocessing.Value boolean controlling whether processing
              continues; when False function returns
      data_queue : multiprocessing.Queue to hold data for processing
      tasks : list of (check name, parameter dictionary) pairs

    Returns:
      None
    """
    data_iter = iter(tasks)
    try:
        while alive.value:
            if data_queue.full():  continue
            else:  data = next(data_iter, None)
            # Exit upon reaching end of iterator
            if data is None:  break
            data_queue.put(CheckData(*data))
        else:
            sys.stderr.write('PID %s> Error in sibling process detected. Cleaning up.\n' \
                             % os.getpid())
            return None
    except:
        alive.value = False
        raise

    return None


def processCheckQueue(alive, data_queue, result_queue, process_func, process_args={}):
    """
    Pulls from data queue, runs checks, and feeds results queue

    Arguments:
      alive : multiprocessing.Value boolean controlling whether processing
              continues; when False function returns
      data_queue : multiprocessing.Queue holding checks to run
      result_queue : multiprocessing.Queue to hold check results
      process_func : function running a single CheckData and returning a CheckResult
      process_args : Dictionary of arguments to pass to process_func

    Returns:
      None
    """
    data = None
    try:
        while alive.value:
            if data_queue.empty():  continue
            else:  data = data_queue.get()
            # Exit upon reaching sentinel
            if data is None:  break
            result_queue.put(process_func(data, **process_args))
        else:
            sys.stderr.write('PID %s> Error in sibling process detected. Cleaning up.\n' \
                             % os.getpid())
            return None
    except:
        alive.value = False
        printError('Error running check: %s.' % (data.id if data is not None else None), exit=False)
        raise

    return None


def collectCheckQueue(alive, result_queue, collect_queue, total, log_file=None):
    """
    Pulls from results queue and assembles check results in name order

    Arguments:
      alive : a multiprocessing.Value boolean controlling whether processing
              continues; when False function returns.
      result_queue : Multiprocessing.Queue holding worker results.
      collect_queue : Multiprocessing.Queue to store collector return values.
      total : number of checks expected.
      log_file : log file name; if None do not write a log.

    Returns:
      None: Adds a list of CheckResult objects sorted by name to collect_queue.
    """
    try:
        log_handle = None if log_file is None else open(log_file, 'a')
    except:
        alive.value = False
        raise

    try:
        results = []
        start_time = time()
        while alive.value:
            if result_queue.empty():  continue
            else:  result = result_queue.get()
            # Exit upon reaching sentinel
            if result is None:  break
            printProgress(len(results), total, 0.05, start_time=start_time, task='verify')
            results.append(result)
            printLog(result.log, handle=log_handle)
        else:
            sys.stderr.write('PID %s> Error in sibling process detected. Cleaning up.\n' \
                             % os.getpid())
            return None

        printProgress(len(results), total, 0.05, start_time=start_time, task='verify')
        if log_handle is not None:
            log_handle.close()
        collect_queue.put(sorted(results, key=lambda r: r.id))
    except:
        alive.value = False
        raise

    return None
