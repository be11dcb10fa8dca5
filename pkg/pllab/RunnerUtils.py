"""
Trial runner: fans independent Monte Carlo trials out over a process pool.
"""
import logging
from multiprocessing import Pool

from pllab.Utils import get_num_workers

__author__ = "pllab developers"

__all__ = ["run_trials"]


def run_trials(func, trial_args, num_workers=None):
    """
    Apply func to every element of trial_args and return the results in
    the order of trial_args, whatever the number of workers.

    Parameters:
      func - picklable callable of one argument (module-level function
             or functools.partial of one)
      trial_args - list of arguments, usually trial indices
      num_workers - number of processes, default from $PLANCHEREL_LAB_THREADS
    """
    trial_args = list(trial_args)
    if num_workers is None:
        num_workers = get_num_workers()
    num_workers = max(1, min(num_workers, len(trial_args)))
    if num_workers == 1:
        return [func(arg) for arg in trial_args]

    logging.debug("Running %s trials on %s workers.", len(trial_args), num_workers)
    pool = Pool(processes=num_workers)
    try:
        chunksize = max(1, len(trial_args) // (4 * num_workers))
        rets = pool.map(func, trial_args, chunksize=chunksize)
        pool.close()
    except BaseException:
        pool.terminate()
        raise
    finally:
        pool.join()
    return rets
