"""
Exact Plancherel measures on levels and tableaux, their coherence, and
the transition and cotransition probabilities of the growth chain.
"""

import logging
from collections import OrderedDict, namedtuple
from fractions import Fraction
from math import factorial

from pllab.PlLabException import ValidationError, DomainError
from pllab.LabOptions import get_caps
from pllab.young.YoungUtils import enumerate_level, covers_up, \
    dim_hook, add_cell_ratio, skew_path_count
from pllab.young.Tableau import enumerate_tableaux
from pllab.Utils import rational_str

__all__ = ["LevelMeasure",
           "CoherenceReport",
           "level_measure",
           "tableau_measure",
           "check_coherence",
           "transition_prob",
           "cotransition_prob",
           "pushforward",
           "induced_prefix_distribution",
           "prefix_distance",
           "total_variation"]

log = logging.getLogger(__name__)

CoherenceReport = namedtuple("CoherenceReport", ["holds", "witness", "n", "checked"])


class LevelMeasure(object):

    """The Plancherel measure dim(lam)^2/n! on partitions of n."""

    def __init__(self, n, weights):
        self.n = n
        self.weights = OrderedDict(weights)

    def __getitem__(self, lam):
        return self.weights.get(lam, Fraction(0))

    def __len__(self):
        return len(self.weights)

    def items(self):
        return self.weights.items()

    def total(self):
        return sum(self.weights.values(), Fraction(0))

    def to_json(self):
        return OrderedDict((str(lam), rational_str(w)) for lam, w in self.weights.items())


def level_measure(n, caps=None):
    """Return the exact level-n Plancherel measure, reverse-lex ordered."""
    if n < 1:
        raise ValidationError("Level measures need n >= 1, got {n}".format(n=n))
    nfact = factorial(n)
    return LevelMeasure(n, [(lam, Fraction(dim_hook(lam) ** 2, nfact))
                            for lam in enumerate_level(n, caps)])


def tableau_measure(t):
    """Return dim(shape(t))/n!, the same for every tableau of a shape."""
    return Fraction(dim_hook(t.shape), factorial(t.n))


def check_coherence(n, caps=None):
    """
    For every tableau t with n cells check that the measures of its
    one-cell extensions sum to the measure of t, exactly.
    """
    if n < 1:
        raise ValidationError("Coherence needs n >= 1, got {n}".format(n=n))
    caps = get_caps(caps)
    caps.check("tableau", n)
    dims = {}

    def dim(lam):
        ret = dims.get(lam)
        if ret is None:
            ret = dims[lam] = dim_hook(lam)
        return ret

    nfact, next_fact = factorial(n), factorial(n + 1)
    checked = 0
    for t in enumerate_tableaux(n, caps):
        lam = t.shape
        lhs = sum(Fraction(dim(big), next_fact) for big in covers_up(lam))
        checked += 1
        if lhs != Fraction(dim(lam), nfact):
            log.info("Coherence fails at %s", t)
            return CoherenceReport(False, t, n, checked)
    log.debug("Coherence holds at n=%s over %s tableaux.", n, checked)
    return CoherenceReport(True, None, n, checked)


def _added_row(lam, big):
    """Return the row of the cell big has beyond lam, or raise DomainError."""
    if big.n == lam.n + 1 and len(big) - len(lam) in (0, 1):
        diff = [r for r in range(len(big)) if big.row_length(r) != lam.row_length(r)]
        if len(diff) == 1 and big.row_length(diff[0]) == lam.row_length(diff[0]) + 1:
            return diff[0]
    raise DomainError("{b} does not cover {l}".format(b=big, l=lam))


def transition_prob(lam, big):
    """dim(big) / ((n+1) dim(lam)), from the hooks of the added cell."""
    return add_cell_ratio(lam, _added_row(lam, big)) / (lam.n + 1)


def cotransition_prob(lam, big):
    """dim(lam) / dim(big)."""
    _added_row(lam, big)
    return Fraction(dim_hook(lam), dim_hook(big))


def pushforward(n, caps=None):
    """Push the level-n measure one step through transition_prob."""
    ret = OrderedDict((lam, Fraction(0)) for lam in enumerate_level(n + 1, caps))
    for lam, w in level_measure(n, caps).items():
        for big in covers_up(lam):
            ret[big] += w * transition_prob(lam, big)
    return LevelMeasure(n + 1, ret)


def _check_prefix_args(lam, k, caps):
    if k < 1:
        raise ValidationError("Prefix length k must be >= 1, got {k}".format(k=k))
    if k > lam.n:
        raise ValidationError("Prefix length {k} exceeds |{l}|={n}".format(k=k, l=lam, n=lam.n))
    caps = get_caps(caps)
    caps.check("prefix_k", k)
    caps.check("prefix_shape", lam.n)
    return caps


def induced_prefix_distribution(lam, k, caps=None):
    """
    Distribution of the first k steps of a uniformly random path from
    the empty diagram to lam: a k-cell tableau t gets the number of paths
    from shape(t) up to lam divided by dim(lam). Tableaux not fitting in
    lam are left out.
    """
    caps = _check_prefix_args(lam, k, caps)
    total = dim_hook(lam)
    counts = {}
    ret = OrderedDict()
    for t in enumerate_tableaux(k, caps):
        mu = t.shape
        if not lam.contains(mu):
            continue
        c = counts.get(mu)
        if c is None:
            c = counts[mu] = skew_path_count(mu, lam)
        ret[t] = Fraction(c, total)
    return ret


def total_variation(p, q):
    """Half the l1 distance between two finitely supported distributions."""
    keys = list(p) + [key for key in q if key not in p]
    return sum((abs(p.get(key, 0) - q.get(key, 0)) for key in keys), Fraction(0)) / 2


def prefix_distance(lam, k, caps=None):
    """Total variation between the prefix law induced by lam and Pl_k."""
    caps = _check_prefix_args(lam, k, caps)
    pl = OrderedDict((t, tableau_measure(t)) for t in enumerate_tableaux(k, caps))
    return total_variation(induced_prefix_distribution(lam, k, caps), pl)
