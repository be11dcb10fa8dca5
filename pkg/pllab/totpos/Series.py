"""Exact truncated power series over the rationals.

A series is a list of Fractions c_0..c_N; every operation keeps N+1 terms.
"""

from fractions import Fraction

from pllab.PlLabException import DomainError

__all__ = ["series",
           "series_mul",
           "series_inv",
           "series_exp",
           "series_shift"]


def series(coeffs, N):
    """Pad or cut coeffs to exactly N+1 Fractions."""
    ret = [Fraction(c) for c in list(coeffs)[:N + 1]]
    return ret + [Fraction(0)] * (N + 1 - len(ret))


def series_mul(a, b, N):
    a, b = series(a, N), series(b, N)
    return [sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(N + 1)]


def series_inv(a, N):
    """1/a, for a with a nonzero constant term."""
    a = series(a, N)
    if a[0] == 0:
        raise DomainError("Series with zero constant term has no inverse")
    ret = [1 / a[0]]
    for k in range(1, N + 1):
        ret.append(-sum((a[i] * ret[k - i] for i in range(1, k + 1)), Fraction(0)) / a[0])
    return ret


def series_exp(f, N):
    """
    exp(f) for f with zero constant term, by g_0 = 1 and
    k g_k = sum_{j=1..k} j f_j g_{k-j}.
    """
    f = series(f, N)
    if f[0] != 0:
        raise DomainError("exp needs a zero constant term, got {c}".format(c=f[0]))
    g = [Fraction(1)]
    for k in range(1, N + 1):
        g.append(sum((j * f[j] * g[k - j] for j in range(1, k + 1)), Fraction(0)) / k)
    return g


def series_shift(a, m, N):
    """z^m a(z)."""
    return series([Fraction(0)] * m + list(a), N)
