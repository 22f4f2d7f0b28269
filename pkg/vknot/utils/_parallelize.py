"""
Parallel loops over knots and random seeds, with an optional progress bar.
"""

import os
import contextlib
from joblib import Parallel, delayed

from ._checks import check_n_jobs
from ._utils import _optional_import


def _get_n_jobs(n_jobs):
    """Number of workers to start, capped by the number of processors."""
    max_jobs = os.cpu_count() or 1
    n_jobs = check_n_jobs(n_jobs)
    if n_jobs == -1:
        return max_jobs
    return min(n_jobs, max_jobs)


@contextlib.contextmanager
def _tqdm_joblib(tqdm_object):
    """
    Context manager to patch joblib to report into tqdm progress bar given as argument.
    """

    def tqdm_print_progress(self):
        if self.n_completed_tasks > tqdm_object.n:
            n_completed = self.n_completed_tasks - tqdm_object.n
            tqdm_object.update(n=n_completed)

    original_print_progress = Parallel.print_progress
    Parallel.print_progress = tqdm_print_progress

    try:
        yield tqdm_object
    finally:
        Parallel.print_progress = original_print_progress
        tqdm_object.close()


def parallel_loop(function, iterable, n_jobs=None, progress_bar=False, description=None):
    """
    Apply ``function`` to every element of ``iterable``, possibly in parallel.

    Results keep the order of ``iterable`` whatever the number of workers.

    Parameters
    ----------
    function : callable
        Function of a single argument. It must be picklable when
        ``n_jobs != 1``.

    iterable : sized iterable
        Elements to loop over.

    n_jobs : int, default=None
        Number of workers. None means 1, -1 means all processors.

    progress_bar : bool, default=False
        Show a tqdm progress bar.

    description : str, default=None
        Label of the progress bar.

    Returns
    -------
    list
        ``[function(x) for x in iterable]``.
    """
    n_jobs = _get_n_jobs(n_jobs)
    items = list(iterable)

    if progress_bar:
        tqdm = _optional_import("tqdm.auto").tqdm

        with _tqdm_joblib(tqdm(desc=description, total=len(items))):
            return Parallel(n_jobs=n_jobs)(delayed(function)(i) for i in items)

    return Parallel(n_jobs=n_jobs)(delayed(function)(i) for i in items)
