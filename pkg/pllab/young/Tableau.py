"""
Standard Young tableaux.

A tableau with n cells is stored as its row word: rows[k] is the row of
the cell holding entry k+1. The row word is the path form (cell k+1 is
the cell added at step k+1) and converts to and from the entry form, a
list of rows of entries such as [[1,3],[2]].
"""

import logging

from pllab.PlLabException import ValidationError
from pllab.LabOptions import get_caps
from pllab.Utils import as_int
from pllab.young.YoungUtils import Partition, Cell

__all__ = ["StandardTableau",
           "enumerate_tableaux",
           "tableaux_of_shape"]

log = logging.getLogger(__name__)


class StandardTableau(object):

    """A path in the Young graph starting at the one-cell diagram [1]."""

    __slots__ = ("rows", "_lengths")

    def __init__(self, rows):
        rows = tuple(as_int(r) for r in rows)
        if len(rows) == 0:
            raise ValidationError("A tableau has at least one cell; paths start at [1]")
        lengths = []
        for k, r in enumerate(rows):
            if r < 0 or r > len(lengths) or \
                    (r > 0 and lengths[r - 1] <= (lengths[r] if r < len(lengths) else 0)):
                raise ValidationError(
                    "Entry {e} cannot go to row {r} of shape {s}".format(
                        e=k + 1, r=r, s=lengths))
            if r == len(lengths):
                lengths.append(1)
            else:
                lengths[r] += 1
        self.rows = rows
        self._lengths = tuple(lengths)

    def __eq__(self, other):
        return isinstance(other, StandardTableau) and self.rows == other.rows

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.rows)

    def __len__(self):
        return len(self.rows)

    def __repr__(self):
        return "StandardTableau({e})".format(e=self.entries())

    def __str__(self):
        return "[" + ",".join("[" + ",".join(str(x) for x in row) + "]"
                              for row in self.entries()) + "]"

    def __getstate__(self):
        return (self.rows, self._lengths)

    def __setstate__(self, state):
        self.rows, self._lengths = state

    @property
    def n(self):
        return len(self.rows)

    @property
    def shape(self):
        return Partition._from_trusted(self._lengths)

    def path(self):
        """Return the diagrams [1], ..., shape(t) visited by the path."""
        lengths, ret = [], []
        for r in self.rows:
            if r == len(lengths):
                lengths.append(1)
            else:
                lengths[r] += 1
            ret.append(Partition._from_trusted(tuple(lengths)))
        return ret

    def cells(self):
        """Return the cell of entry k+1 at index k."""
        lengths, ret = [], []
        for r in self.rows:
            if r == len(lengths):
                lengths.append(0)
            ret.append(Cell(r, lengths[r]))
            lengths[r] += 1
        return ret

    def entries(self):
        """Return the entry form: one list of entries per row."""
        ret = [[] for _ in self._lengths]
        for k, r in enumerate(self.rows):
            ret[r].append(k + 1)
        return ret

    def prefix(self, k):
        """Return the tableau formed by entries 1..k."""
        if k < 1 or k > self.n:
            raise ValidationError("Prefix length {k} outside 1..{n}".format(k=k, n=self.n))
        return StandardTableau(self.rows[:k])

    def to_json(self):
        return self.entries()

    @classmethod
    def from_path(cls, path):
        """Build a tableau from diagrams of sizes 1..n, each covering the last."""
        rows, prev = [], ()
        for lam in path:
            parts = tuple(lam)
            diff = [r for r in range(len(parts))
                    if parts[r] != (prev[r] if r < len(prev) else 0)]
            if sum(parts) != sum(prev) + 1 or len(diff) != 1 or len(parts) < len(prev):
                raise ValidationError("{a} does not cover {b}".format(
                    a=list(parts), b=list(prev)))
            rows.append(diff[0])
            prev = parts
        return cls(rows)

    @classmethod
    def from_entries(cls, entries):
        """Build a tableau from its rows of entries, e.g. [[1,3],[2]]."""
        try:
            entries = [[as_int(x) for x in row] for row in entries]
        except (TypeError, ValidationError):
            raise ValidationError("A tableau is a list of rows of integers")
        if any(len(row) == 0 for row in entries):
            raise ValidationError("Tableau {e} has an empty row".format(e=entries))
        Partition([len(row) for row in entries])
        flat = sorted(x for row in entries for x in row)
        if flat != list(range(1, len(flat) + 1)):
            raise ValidationError("Entries of {e} are not 1..n".format(e=entries))
        rows = [0] * len(flat)
        for r, row in enumerate(entries):
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValidationError("Row {r} of {e} does not increase".format(r=r, e=entries))
            for x in row:
                rows[x - 1] = r
        # the row word check enforces increasing columns
        return cls(rows)

    @classmethod
    def from_json(cls, obj):
        return cls.from_entries(obj)


def _grow(rows, lengths, n, bound):
    if len(rows) == n:
        yield StandardTableau(rows)
        return
    for r in range(len(lengths) + 1):
        cur = lengths[r] if r < len(lengths) else 0
        if r > 0 and lengths[r - 1] <= cur:
            continue
        if bound is not None and cur >= bound.row_length(r):
            continue
        if r == len(lengths):
            lengths.append(1)
        else:
            lengths[r] += 1
        rows.append(r)
        for t in _grow(rows, lengths, n, bound):
            yield t
        rows.pop()
        if lengths[r] == 1 and r == len(lengths) - 1:
            lengths.pop()
        else:
            lengths[r] -= 1


def enumerate_tableaux(n, caps=None):
    """Return all standard tableaux with n cells, ordered by row word."""
    if n < 1:
        raise ValidationError("Tableaux have n >= 1 cells, got {n}".format(n=n))
    get_caps(caps).check("tableau", n)
    return list(_grow([0], [1], n, None))


def tableaux_of_shape(lam, caps=None):
    """Return all standard tableaux of shape lam, ordered by row word."""
    if lam.n < 1:
        raise ValidationError("Tableaux have n >= 1 cells")
    get_caps(caps).check("tableau", lam.n)
    return list(_grow([0], [1], lam.n, lam))
