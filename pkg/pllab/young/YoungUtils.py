"""
Partitions, Young-graph adjacency and exact dimensions.

A partition is stored as a tuple of weakly decreasing positive parts;
the empty tuple is the empty diagram. Cells are (row, col), 0-based.
"""

import math
import logging
from collections import namedtuple
from fractions import Fraction
from functools import lru_cache

from pllab.PlLabException import ValidationError, DomainError
from pllab.LabOptions import get_caps
from pllab.Utils import as_int

__all__ = ["Cell",
           "Partition",
           "EMPTY",
           "enumerate_level",
           "covers_up",
           "covers_down",
           "conjugate",
           "hook_lengths",
           "dim_hook",
           "dim_paths",
           "log_dim",
           "add_cell_ratio",
           "skew_path_count"]

log = logging.getLogger(__name__)

Cell = namedtuple("Cell", ["row", "col"])


class Partition(object):

    """An integer partition, drawn as a Young diagram."""

    __slots__ = ("parts", "n")

    def __init__(self, parts=()):
        parts = tuple(as_int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValidationError("Partition {p} has a non-positive part".format(
                    p=list(parts)))
            if i > 0 and parts[i - 1] < p:
                raise ValidationError("Partition {p} is not weakly decreasing".format(
                    p=list(parts)))
        self.parts = parts
        self.n = sum(parts)

    @classmethod
    def _from_trusted(cls, parts):
        """Wrap parts already known to be a partition."""
        obj = cls.__new__(cls)
        obj.parts = parts
        obj.n = sum(parts)
        return obj

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __repr__(self):
        return "Partition({p})".format(p=list(self.parts))

    def __str__(self):
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    def __getstate__(self):
        return (self.parts,)

    def __setstate__(self, state):
        parts, = state
        self.parts = parts
        self.n = sum(parts)

    @property
    def is_empty(self):
        return self.n == 0

    def row_length(self, row):
        """Length of row, 0 beyond the last row."""
        return self.parts[row] if row < len(self.parts) else 0

    def has_cell(self, cell):
        row, col = cell
        return row >= 0 and col >= 0 and col < self.row_length(row)

    def cells(self):
        """Return cells in row-major order."""
        return [Cell(r, c) for r, p in enumerate(self.parts) for c in range(p)]

    def contains(self, other):
        """Return True if the diagram of other lies inside this one."""
        if len(other) > len(self):
            return False
        return all(q <= p for p, q in zip(self.parts, other.parts))

    def conjugate(self):
        return conjugate(self)

    def addable_rows(self):
        """Rows where a cell can be added, top to bottom."""
        parts = self.parts
        return [r for r in range(len(parts) + 1)
                if r == 0 or parts[r - 1] > (parts[r] if r < len(parts) else 0)]

    def removable_rows(self):
        """Rows whose last cell is a removable corner, top to bottom."""
        parts = self.parts
        k = len(parts)
        return [r for r in range(k) if r == k - 1 or parts[r] > parts[r + 1]]

    def add_cell(self, row):
        parts = list(self.parts)
        if row == len(parts):
            parts.append(1)
        else:
            parts[row] += 1
        return Partition._from_trusted(tuple(parts))

    def remove_cell(self, row):
        parts = list(self.parts)
        parts[row] -= 1
        if parts[row] == 0:
            parts.pop()
        return Partition._from_trusted(tuple(parts))

    def to_json(self):
        return list(self.parts)

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, (list, tuple)):
            raise ValidationError("A partition is a JSON array of parts, got {o!r}".format(o=obj))
        return cls(obj)


EMPTY = Partition(())


def _partitions(n, largest):
    """Yield partitions of n with parts <= largest, reverse-lexicographic."""
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_level(n, caps=None):
    """
    Return all partitions of n exactly once, in reverse-lexicographic
    order of parts, e.g. [4],[3,1],[2,2],[2,1,1],[1,1,1,1].
    """
    if n < 0:
        raise ValidationError("Level {n} is negative".format(n=n))
    get_caps(caps).check("enumeration", n)
    return [Partition._from_trusted(p) for p in _partitions(n, n)]


def covers_up(lam):
    """Return the diagrams obtained by adding one cell, rows ascending."""
    return [lam.add_cell(r) for r in lam.addable_rows()]


def covers_down(lam):
    """Return the diagrams obtained by deleting one corner, rows ascending."""
    if lam.is_empty:
        raise DomainError("The empty diagram has no lower covers")
    return [lam.remove_cell(r) for r in lam.removable_rows()]


def conjugate(lam):
    """Return the transpose of the diagram."""
    parts = lam.parts
    if not parts:
        return EMPTY
    return Partition._from_trusted(
        tuple(sum(1 for p in parts if p > c) for c in range(parts[0])))


def hook_lengths(lam):
    """Return one hook length (arm + leg + 1) per cell, row-major."""
    conj = conjugate(lam).parts
    return [(p - c - 1) + (conj[c] - r - 1) + 1
            for r, p in enumerate(lam.parts) for c in range(p)]


def dim_hook(lam):
    """Number of standard tableaux of shape lam by the hook-length formula."""
    return math.factorial(lam.n) // math.prod(hook_lengths(lam))


@lru_cache(maxsize=None)
def _dim_paths(parts):
    if not parts:
        return 1
    lam = Partition._from_trusted(parts)
    return sum(_dim_paths(mu.parts) for mu in covers_down(lam))


def dim_paths(lam, caps=None):
    """
    Number of paths from the empty diagram to lam, counted by the
    recursion dim(lam) = sum of dim over lower covers. Independent of
    the hook-length formula; serves as its oracle.
    """
    get_caps(caps).check("oracle", lam.n)
    return _dim_paths(lam.parts)


def log_dim(lam):
    """Natural log of dim(lam), evaluated in log-space from hook lengths."""
    return math.lgamma(lam.n + 1) - math.fsum(math.log(h) for h in hook_lengths(lam))


def add_cell_ratio(lam, row):
    """
    Return dim(Lam)/dim(lam) exactly, Lam being lam plus one cell in row.

    Only hooks in the row and column of the new cell change, each by one,
    so the ratio is (n+1) times the product of h/(h+1) over those cells.
    """
    parts = lam.parts
    if row not in lam.addable_rows():
        raise DomainError("Row {r} of {l} has no addable cell".format(r=row, l=lam))
    col = lam.row_length(row)
    num, den = lam.n + 1, 1
    # cells above the new cell, column col
    for i in range(row):
        h = (parts[i] - col - 1) + (row - 1 - i) + 1
        num *= h
        den *= h + 1
    # cells left of the new cell, row `row`; i sweeps to the length of column j
    i = len(parts)
    for j in range(col):
        while i > row + 1 and parts[i - 1] <= j:
            i -= 1
        h = (col - 1 - j) + (i - 1 - row) + 1
        num *= h
        den *= h + 1
    return Fraction(num, den)


def skew_path_count(mu, lam):
    """Number of paths in the Young graph going up from mu to lam."""
    if not lam.contains(mu):
        return 0
    memo = {}

    def count(nu):
        if nu.n == mu.n:
            return 1 if nu == mu else 0
        ret = memo.get(nu.parts)
        if ret is None:
            ret = sum(count(kappa) for kappa in covers_down(nu) if kappa.contains(mu))
            memo[nu.parts] = ret
        return ret

    return count(lam)
