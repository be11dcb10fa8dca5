"""
Total positivity of one-sided coefficient sequences.

A sequence c_0, c_1, ... (c_k = 0 for k < 0) is totally positive when
every Toeplitz minor det(c_{i_s - j_t}) is nonnegative. Only finitely
many minors can be checked, so verdicts are bounded by order and window.
All arithmetic is exact.
"""

import logging
import math
from collections import namedtuple
from fractions import Fraction
from itertools import combinations

from pllab.PlLabException import ValidationError, DomainError
from pllab.LabOptions import get_caps
from pllab.Utils import rational_str, parse_rational
from pllab.plancherel.Growth import trial_generator
from pllab.totpos.Series import series, series_mul, series_inv, series_exp, series_shift

__all__ = ["CoefficientSequence",
           "ThomaParams",
           "TPReport",
           "TP_UP_TO_ORDER",
           "COUNTEREXAMPLE",
           "bareiss_det",
           "exact_det",
           "toeplitz_minor",
           "check_total_positivity",
           "thoma_coefficients",
           "character_gf",
           "sample_thoma_params"]

log = logging.getLogger(__name__)

TP_UP_TO_ORDER = "TotallyPositive-up-to-order"
COUNTEREXAMPLE = "Counterexample"

# witness: (rows, cols, minor value)
TPReport = namedtuple("TPReport", ["verdict", "witness", "max_order", "window", "checked"])


class CoefficientSequence(object):

    """c_0..c_N; c_k is 0 for k < 0 and k > N."""

    def __init__(self, coeffs):
        self.coeffs = tuple(parse_rational(c) for c in coeffs)
        if len(self.coeffs) == 0:
            raise ValidationError("A coefficient sequence needs c_0")
        if self.coeffs[0] < 0:
            raise ValidationError("c_0 = {c} is negative".format(c=self.coeffs[0]))

    @property
    def N(self):
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        if k < 0 or k > self.N:
            return Fraction(0)
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, CoefficientSequence) and self.coeffs == other.coeffs

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "CoefficientSequence({c})".format(c=self.to_json())

    def to_json(self):
        return [rational_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, (list, tuple)):
            raise ValidationError("Coefficients are a JSON array of \"p/q\" strings")
        return cls(obj)

    @classmethod
    def named(cls, name, N):
        """exp: 1/n!, one-plus-z: 1+z, geometric: 1/(1-z)."""
        if name == "exp":
            return cls(Fraction(1, math.factorial(k)) for k in range(N + 1))
        if name == "one-plus-z":
            return cls(series([1, 1], N))
        if name == "geometric":
            return cls([1] * (N + 1))
        raise ValidationError("Unknown sequence {n}, expected exp, one-plus-z or "
                              "geometric".format(n=name))


class ThomaParams(object):

    """alpha, beta weakly decreasing and nonnegative, gamma >= 0, m >= 0."""

    def __init__(self, alpha=(), beta=(), gamma=0, m=0):
        self.alpha = tuple(parse_rational(a) for a in alpha)
        self.beta = tuple(parse_rational(b) for b in beta)
        self.gamma = parse_rational(gamma)
        self.m = int(m)
        for name, seq in (("alpha", self.alpha), ("beta", self.beta)):
            if any(x < 0 for x in seq):
                raise ValidationError("{n} has a negative entry".format(n=name))
            if any(x < y for x, y in zip(seq, seq[1:])):
                raise ValidationError("{n} is not weakly decreasing".format(n=name))
        if self.gamma < 0:
            raise ValidationError("gamma = {g} is negative".format(g=self.gamma))
        if self.m < 0:
            raise ValidationError("m = {m} is negative".format(m=self.m))
        total = sum(self.alpha) + sum(self.beta) + self.gamma
        if total != 1:
            raise ValidationError("sum(alpha) + sum(beta) + gamma = {t}, not 1".format(
                t=rational_str(total)))

    def __repr__(self):
        return "ThomaParams(alpha={a}, beta={b}, gamma={g}, m={m})".format(
            a=[rational_str(x) for x in self.alpha], b=[rational_str(x) for x in self.beta],
            g=rational_str(self.gamma), m=self.m)


def bareiss_det(matrix):
    """Determinant of a square integer matrix, fraction-free elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def exact_det(matrix):
    """Determinant of a square rational matrix: scale to integers, Bareiss."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    scale = math.lcm(*[x.denominator for row in rows for x in row]) if rows else 1
    ints = [[x.numerator * (scale // x.denominator) for x in row] for row in rows]
    return Fraction(bareiss_det(ints), scale ** len(rows))


def _check_index_sets(rows, cols, caps):
    rows, cols = tuple(int(i) for i in rows), tuple(int(j) for j in cols)
    if len(rows) != len(cols):
        raise DomainError("Minor needs |rows| == |cols|, got {a} and {b}".format(
            a=len(rows), b=len(cols)))
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise DomainError("Row and column indices must be distinct")
    if any(i < 0 for i in rows + cols):
        raise DomainError("Indices must be nonnegative")
    get_caps(caps).check("minor_order", len(rows))
    return rows, cols


def toeplitz_minor(c, rows, cols, caps=None):
    """det(c_{i_s - j_t}), rows and cols in the order given."""
    rows, cols = _check_index_sets(rows, cols, caps)
    return exact_det([[c[i - j] for j in cols] for i in rows])


def check_total_positivity(c, max_order, window, caps=None):
    """
    Evaluate every minor with index sets of size <= max_order drawn from
    0..window: orders ascending, then rows and columns lexicographically.
    The first negative minor is the witness; otherwise the verdict only
    covers the minors checked.
    """
    caps = get_caps(caps)
    if max_order < 1 or window < 0:
        raise ValidationError("Need max_order >= 1 and window >= 0")
    caps.check("minor_order", max_order)
    caps.check("window", window)
    # integer coefficients c_k * scale share the sign of every minor
    coeffs = [c[k] for k in range(window + 1)]
    scale = math.lcm(*[x.denominator for x in coeffs])
    ints = [x.numerator * (scale // x.denominator) for x in coeffs]
    checked = 0
    for order in range(1, max_order + 1):
        index_sets = list(combinations(range(window + 1), order))
        for rows in index_sets:
            for cols in index_sets:
                matrix = [[ints[i - j] if i >= j else 0 for j in cols] for i in rows]
                det = bareiss_det(matrix)
                checked += 1
                if det < 0:
                    value = Fraction(det, scale ** order)
                    log.info("Negative minor rows=%s cols=%s value=%s", rows, cols, value)
                    return TPReport(COUNTEREXAMPLE, (rows, cols, value), max_order, window, checked)
        log.debug("All %s minors of order <= %s are nonnegative.", checked, order)
    return TPReport(TP_UP_TO_ORDER, None, max_order, window, checked)


def thoma_coefficients(p, N, caps=None):
    """Taylor coefficients of z^m e^{gamma z} prod (1+alpha z)/(1-beta z) to order N."""
    if N < 0:
        raise ValidationError("N must be >= 0")
    get_caps(caps).check("series", N)
    ret = series([p.gamma ** k / math.factorial(k) for k in range(N + 1)], N)
    for a in p.alpha:
        ret = series_mul(ret, [1, a], N)
    for b in p.beta:
        ret = series_mul(ret, series_inv([1, -b], N), N)
    return CoefficientSequence(series_shift(ret, p.m, N))


def character_gf(chi_on_cycles, N, caps=None):
    """
    Coefficients of exp(sum_n chi(n) z^n / n) to order N, chi(n) the
    character on an n-cycle; missing values count as 0.
    """
    if N < 0:
        raise ValidationError("N must be >= 0")
    get_caps(caps).check("series", N)
    chi = [parse_rational(x) for x in chi_on_cycles]
    if len(chi) == 0 or chi[0] != 1:
        raise ValidationError("chi(1) must be 1, got {c}".format(
            c=rational_str(chi[0]) if chi else None))
    f = [Fraction(0)] + [(chi[k - 1] if k <= len(chi) else Fraction(0)) / k
                         for k in range(1, N + 1)]
    return CoefficientSequence(series_exp(f, N))


def sample_thoma_params(seed, index, max_alpha=3, max_beta=3, max_m=2):
    """
    Draw Thoma parameters from substream (seed, index): up to max_alpha
    alphas and max_beta betas with integer weights normalised to sum 1.
    """
    rng = trial_generator(seed, index)
    num_alpha = int(rng.integers(0, max_alpha + 1))
    num_beta = int(rng.integers(0, max_beta + 1))
    weights = [int(w) for w in rng.integers(1, 10, size=num_alpha + num_beta)]
    gamma_weight = int(rng.integers(0, 10))
    if num_alpha + num_beta == 0:
        gamma_weight = max(gamma_weight, 1)
    total = sum(weights) + gamma_weight
    alpha = sorted((Fraction(w, total) for w in weights[:num_alpha]), reverse=True)
    beta = sorted((Fraction(w, total) for w in weights[num_alpha:]), reverse=True)
    return ThomaParams(alpha, beta, Fraction(gamma_weight, total),
                       int(rng.integers(0, max_m + 1)))
