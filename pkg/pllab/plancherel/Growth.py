"""
The Plancherel growth process: a Markov chain on Young diagrams started
at [1] which adds one cell at a time with probability
dim(Lam) / ((n+1) dim(lam)).

The transition weights are evaluated from cell contents (col - row).
With addable contents a_0 > ... > a_m and removable contents
b_0 > ... > b_{m-1}, which interlace, the weight of the k-th addable cell is

    p_k = prod_i (a_k - b_i) / prod_{j != k} (a_k - a_j),

a product of m ratios each in (0, 1) once paired up, so neither big
integers nor logarithms are needed above the exact threshold.
"""

import logging
from bisect import bisect_right
from collections import namedtuple
from fractions import Fraction

import numpy as np

from pllab.PlLabException import ValidationError
from pllab.LabOptions import get_caps, MAX_SEED
from pllab.young.YoungUtils import Partition
from pllab.young.Tableau import StandardTableau

__all__ = ["GrowthState",
           "GrowthSample",
           "trial_generator",
           "grow",
           "sample_growth"]

log = logging.getLogger(__name__)

GrowthSample = namedtuple("GrowthSample", ["tableau", "seed", "n", "trial"])

# float screening margin before falling back to exact cumulative sums
_MARGIN = 1e-12
_TWO64 = 1 << 64


def trial_generator(seed, trial=0):
    """Return the counter-based generator of substream (seed, trial)."""
    if seed < 0 or seed > MAX_SEED:
        raise ValidationError("seed {s} is not a 64-bit unsigned integer".format(s=seed))
    ss = np.random.SeedSequence(int(seed), spawn_key=(int(trial),))
    return np.random.Generator(np.random.Philox(ss))


class GrowthState(object):

    """
    A diagram stored as blocks [value, count] of equal rows, longest
    first, together with the row word of the path grown so far.
    """

    def __init__(self):
        self.blocks = [[1, 1]]
        self.rows = [0]
        self.num_rows = 1

    @property
    def n(self):
        return len(self.rows)

    @property
    def first_row(self):
        return self.blocks[0][0]

    @property
    def first_column(self):
        return self.num_rows

    def shape(self):
        parts = []
        for value, count in self.blocks:
            parts.extend([value] * count)
        return Partition._from_trusted(tuple(parts))

    def contents(self):
        """Return (addable rows, addable contents, removable contents)."""
        add_rows, add_c, rem_c = [], [], []
        top = 0
        for value, count in self.blocks:
            add_rows.append(top)
            add_c.append(value - top)
            rem_c.append(value - top - count)
            top += count
        add_rows.append(top)
        add_c.append(-top)
        return add_rows, add_c, rem_c

    def add(self, k):
        """Add a cell at the k-th addable corner; return its row."""
        blocks = self.blocks
        if k == len(blocks):
            row = self.num_rows
            if blocks[-1][0] == 1:
                blocks[-1][1] += 1
            else:
                blocks.append([1, 1])
            self.num_rows += 1
        else:
            row = sum(c for _, c in blocks[:k])
            value = blocks[k][0]
            if k > 0 and blocks[k - 1][0] == value + 1:
                blocks[k - 1][1] += 1
                blocks[k][1] -= 1
                if blocks[k][1] == 0:
                    del blocks[k]
            elif blocks[k][1] == 1:
                blocks[k][0] += 1
            else:
                blocks[k][1] -= 1
                blocks.insert(k, [value + 1, 1])
        self.rows.append(row)
        return row


def exact_weights(add_c, rem_c):
    """Return the exact transition weights as (numerator, denominator) pairs."""
    ret = []
    for k, a in enumerate(add_c):
        num, den = 1, 1
        for b in rem_c:
            num *= a - b
        for j, other in enumerate(add_c):
            if j != k:
                den *= a - other
        ret.append((num, den))
    return ret


def float_weights(add_c, rem_c):
    """Return the transition weights as floats, by paired ratios."""
    a = np.asarray(add_c, dtype=np.float64)
    m = len(rem_c)
    if m == 0:
        return np.ones(1)
    b = np.asarray(rem_c, dtype=np.float64)
    k = np.arange(m + 1)[:, None]
    i = np.arange(m)[None, :]
    # pair b_i with a_i when i < k, with a_{i+1} otherwise
    partner = np.where(i < k, i, i + 1)
    ratios = (a[:, None] - b[None, :]) / (a[:, None] - a[partner])
    return np.prod(ratios, axis=1)


def _choose_exact(weights, rng):
    """
    Pick index k with probability weights[k] exactly: a uniform point is
    drawn 64 bits at a time until its dyadic interval falls inside one
    bucket. Floats decide unless the point is within _MARGIN of a border.
    """
    word = int(rng.bit_generator.random_raw())
    approx = np.cumsum([float(num) / den for num, den in weights])
    u = word / float(_TWO64)
    k = int(np.searchsorted(approx, u, side="right"))
    lo = approx[k - 1] if k > 0 else 0.0
    if k < len(weights) - 1 and u - lo > _MARGIN and approx[k] - u > _MARGIN:
        return k
    if k == len(weights) - 1 and u - lo > _MARGIN:
        return k

    cum, acc = [], Fraction(0)
    for num, den in weights:
        acc += Fraction(num, den)
        cum.append(acc)
    lo_num, bits = word, 64
    while True:
        lo = Fraction(lo_num, 1 << bits)
        k = bisect_right(cum, lo)
        if Fraction(lo_num + 1, 1 << bits) <= cum[k]:
            return k
        lo_num = (lo_num << 64) | int(rng.bit_generator.random_raw())
        bits += 64


def _choose_float(weights, rng):
    cum = np.cumsum(weights)
    k = int(np.searchsorted(cum, rng.random() * cum[-1], side="right"))
    return min(k, len(weights) - 1)


def grow(n, seed, trial=0, caps=None):
    """
    Run the growth chain for n cells on substream (seed, trial) and
    return the final GrowthState. Up to the exact threshold the weights
    are exact rationals; above it they are float paired ratios of cell
    contents rather than differences of log_dim, which would need every
    hook of both diagrams at each step. Both give dim(Lam)/((n+1) dim(lam)).
    """
    if n < 1:
        raise ValidationError("Growth needs n >= 1, got {n}".format(n=n))
    caps = get_caps(caps)
    caps.check("sampling", n)
    rng = trial_generator(seed, trial)
    exact = n <= caps.exact_threshold
    state = GrowthState()
    while state.n < n:
        _rows, add_c, rem_c = state.contents()
        if exact:
            k = _choose_exact(exact_weights(add_c, rem_c), rng)
        else:
            k = _choose_float(float_weights(add_c, rem_c), rng)
        state.add(k)
    return state


def sample_growth(n, seed, trial=0, caps=None):
    """Draw a tableau with n cells from the growth chain, replayable by seed."""
    state = grow(n, seed, trial, caps)
    return GrowthSample(StandardTableau(state.rows), seed, n, trial)
