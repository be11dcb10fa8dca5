"""Define util functions."""

import os
import os.path as op
import logging
import numbers
import tempfile
from fractions import Fraction

from pllab.PlLabException import ValidationError

__all__ = ["mkdir",
           "atomic_write",
           "rational_str",
           "parse_rational",
           "parse_rational_list",
           "parse_int_list",
           "as_int",
           "get_num_workers",
           "THREADS_ENV"]

THREADS_ENV = "PLANCHEREL_LAB_THREADS"


def mkdir(path):
    """Create a directory if it does not pre-exist,
    otherwise, pass."""
    if path and not op.exists(path) and not op.lexists(path):
        try:
            os.makedirs(path)
        except OSError as e:
            # Another worker may have created it in the meantime.
            if e.errno != 17:
                raise


def atomic_write(path, text):
    """
    Write text to path atomically: write a temporary file in the
    destination directory, then rename it over path.
    Parameters:
      path - destination file
      text - str content
    """
    out_dir = op.dirname(op.abspath(path))
    mkdir(out_dir)
    fd, tmp_fn = tempfile.mkstemp(dir=out_dir, prefix="." + op.basename(path),
                                  suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as writer:
            writer.write(text)
        os.replace(tmp_fn, path)
    except BaseException:
        if op.exists(tmp_fn):
            os.remove(tmp_fn)
        raise
    logging.debug("Wrote %s", path)


def rational_str(q):
    """Return an exact rational as a "p/q" string, e.g. 1/2 or 3/1."""
    q = Fraction(q)
    return "{p}/{q}".format(p=q.numerator, q=q.denominator)


def parse_rational(s):
    """Parse "p/q", an integer or a terminating decimal into a Fraction."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    try:
        return Fraction(str(s).strip())
    except (ValueError, ZeroDivisionError):
        raise ValidationError("Not an exact rational: {s!r}".format(s=s))


def parse_rational_list(s):
    """Parse a comma separated list of rationals; "" gives []."""
    s = "" if s is None else str(s).strip().strip("[]")
    return [parse_rational(x) for x in s.split(",") if x.strip()]


def parse_int_list(s):
    """Parse "3,1" or "[3,1]" into a list of ints."""
    s = "" if s is None else str(s).strip().strip("[]")
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise ValidationError("Not a list of integers: {s!r}".format(s=s))


def as_int(x):
    """Return x as an int; floats, bools and strings are rejected."""
    if isinstance(x, bool) or not isinstance(x, numbers.Integral):
        raise ValidationError("Not an integer: {x!r}".format(x=x))
    return int(x)


def get_num_workers(default=1):
    """Return the worker count bound by $PLANCHEREL_LAB_THREADS."""
    val = os.environ.get(THREADS_ENV)
    if val is None or val.strip() == "":
        return default
    try:
        n = int(val)
    except ValueError:
        raise ValidationError("{e}={v} is not an integer".format(e=THREADS_ENV, v=val))
    if n < 1:
        raise ValidationError("{e}={v} must be at least 1".format(e=THREADS_ENV, v=val))
    return n
