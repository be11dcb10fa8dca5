"""
Statistical test that the Plancherel measure is invariant under the
transfer: the first-k prefix of a transferred Plancherel tableau should
follow the exact law Pl_k.
"""

import logging
from collections import OrderedDict
from functools import partial

from scipy.stats import chi2

from pllab.PlLabException import ValidationError, DomainError
from pllab.LabOptions import get_caps
from pllab.RunnerUtils import run_trials
from pllab.young.Tableau import enumerate_tableaux
from pllab.plancherel.Growth import sample_growth
from pllab.plancherel.Measures import tableau_measure, total_variation
from pllab.transfer.Transfer import transfer_step
from pllab.io.Summary import TransferReport

__all__ = ["quasi_stationarity_test",
           "MIN_BUFFER",
           "MIN_TRIALS"]

log = logging.getLogger(__name__)

# cells kept between the prefix and the truncation edge
MIN_BUFFER = 50
MIN_TRIALS = 1000


def _transferred_prefix(k, n, seed, caps, trial):
    t = sample_growth(n, seed, trial, caps).tableau
    return transfer_step(t).prefix(k)


def quasi_stationarity_test(k, n, trials, seed, significance=0.01, caps=None,
                            num_workers=None):
    """
    Sample trials Plancherel tableaux of size n, apply the transfer once
    and compare the first-k prefixes with Pl_k by a chi-square test.
    Parameters:
      k - prefix size
      n - tableau size, at least k + MIN_BUFFER
      trials - number of samples, at least MIN_TRIALS
      seed - 64-bit seed; trial i uses substream (seed, i)
      significance - level of the chi-square test
    """
    caps = get_caps(caps)
    if k < 1:
        raise ValidationError("Prefix size k must be >= 1, got {k}".format(k=k))
    caps.check("qs_k", k)
    if n < k + MIN_BUFFER:
        raise DomainError("n={n} leaves less than {b} cells between the prefix and "
                          "the truncation edge; use n >= {m}".format(
                              n=n, b=MIN_BUFFER, m=k + MIN_BUFFER))
    if trials < MIN_TRIALS:
        raise ValidationError("trials={t} is below {m}".format(t=trials, m=MIN_TRIALS))
    if not 0 < significance < 1:
        raise ValidationError("significance must lie in (0,1), got {s}".format(s=significance))

    expected = OrderedDict((t, tableau_measure(t)) for t in enumerate_tableaux(k, caps))
    counts = OrderedDict((t, 0) for t in expected)
    func = partial(_transferred_prefix, k, n, seed, caps)
    for prefix in run_trials(func, range(trials), num_workers):
        counts[prefix] += 1

    statistic = sum((counts[t] - trials * float(p)) ** 2 / (trials * float(p))
                    for t, p in expected.items())
    df = len(expected) - 1
    critical = float(chi2.ppf(1.0 - significance, df)) if df > 0 else 0.0
    freqs = dict((t, float(c) / trials) for t, c in counts.items())
    tv = float(total_variation(freqs, dict((t, float(p)) for t, p in expected.items())))
    log.info("Quasi-stationarity k=%s n=%s: chi2=%.4f critical=%.4f tv=%.4f",
             k, n, statistic, critical, tv)
    return TransferReport(k=k, n=n, trials=trials, seed=seed, statistic=statistic,
                          critical=critical, significance=significance,
                          tv_distance=tv, counts=counts, expected=expected)
