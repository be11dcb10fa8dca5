"""
Monte Carlo statistics of the first row and first column of Plancherel
growth diagrams: lambda1 grows like 2 sqrt(n), hence lambda1/n -> 0.
"""

import logging
import math
from collections import Counter
from functools import partial

import numpy as np

from pllab.PlLabException import ValidationError
from pllab.LabOptions import get_caps
from pllab.RunnerUtils import run_trials
from pllab.plancherel.Growth import grow
from pllab.plancherel.Measures import total_variation
from pllab.io.Summary import RowGrowthReport, SublinearityReport

__all__ = ["RowGrowthReport",
           "SublinearityReport",
           "first_row_statistics",
           "sublinearity_check",
           "row_column_symmetry",
           "MIN_TRIALS"]

log = logging.getLogger(__name__)

MIN_TRIALS = 10


def _row_lengths(n, seed, caps, trial):
    state = grow(n, seed, trial, caps)
    lam1, lam1_prime = state.first_row, state.first_column
    # the diagram fits in its lambda1 x lambda1' bounding box
    assert lam1 * lam1_prime >= n, "lambda1={a} lambda1'={b} n={n}".format(
        a=lam1, b=lam1_prime, n=n)
    return lam1, lam1_prime


def _collect(n, trials, seed, caps, num_workers):
    if n < 1:
        raise ValidationError("n must be >= 1, got {n}".format(n=n))
    get_caps(caps).check("sampling", n)
    return run_trials(partial(_row_lengths, n, seed, caps), range(trials), num_workers)


def first_row_statistics(n, trials, seed, caps=None, num_workers=None,
                         min_trials=MIN_TRIALS):
    """
    Sample trials growth diagrams of size n and summarise lambda1/sqrt(n),
    lambda1'/sqrt(n) and lambda1/n. Deterministic under seed.
    """
    if trials < min_trials:
        raise ValidationError("trials={t} is below {m}".format(t=trials, m=min_trials))
    lengths = _collect(n, trials, seed, caps, num_workers)
    root = math.sqrt(n)
    per_trial = [(i, a, b, a / root) for i, (a, b) in enumerate(lengths)]
    ratios = np.array([row[3] for row in per_trial])
    primes = np.array([b / root for _, b in lengths])

    report = RowGrowthReport(n, trials, seed, per_trial)
    report.mean_ratio = float(np.mean(ratios))
    report.std_ratio = float(np.std(ratios, ddof=1)) if trials > 1 else 0.0
    report.mean_ratio_prime = float(np.mean(primes))
    report.mean_density = float(np.mean([a for a, _ in lengths])) / n
    rows = Counter(a for a, _ in lengths)
    cols = Counter(b for _, b in lengths)
    report.row_column_tv = float(total_variation(
        dict((k, float(v) / trials) for k, v in rows.items()),
        dict((k, float(v) / trials) for k, v in cols.items())))
    log.info("First row n=%s trials=%s: mean lambda1/sqrt(n)=%.4f", n, trials, report.mean_ratio)
    return report


def sublinearity_check(n_list, trials, seed, caps=None, num_workers=None):
    """Report the mean of lambda1/n over an increasing list of sizes."""
    n_list = [int(n) for n in n_list]
    if len(n_list) == 0:
        raise ValidationError("n_list is empty")
    if any(a >= b for a, b in zip(n_list, n_list[1:])):
        raise ValidationError("n_list {l} is not increasing".format(l=n_list))
    if trials < 1:
        raise ValidationError("trials must be >= 1")
    means = []
    for n in n_list:
        lengths = _collect(n, trials, seed, caps, num_workers)
        means.append(float(np.mean([a for a, _ in lengths])) / n)
        log.debug("n=%s mean lambda1/n=%.5f", n, means[-1])
    return SublinearityReport(n_list, trials, seed, means)


def row_column_symmetry(n, trials, seed, caps=None, num_workers=None):
    """Total variation between the empirical laws of lambda1 and lambda1'."""
    return first_row_statistics(n, trials, seed, caps, num_workers, min_trials=1).row_column_tv
