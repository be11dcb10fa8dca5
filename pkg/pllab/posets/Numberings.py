"""
Monotone numberings of posets, ideal densities, and the centrality check.

A monotone numbering is the sequence phi(1), phi(2), ... of distinct
elements such that each prefix is a finite ideal. Finite numberings of
Z^2_+ are exactly standard tableaux: entry k sits at cell phi(k) = (row, col).
"""

import logging
from collections import OrderedDict, namedtuple
from fractions import Fraction

from pllab.PlLabException import ValidationError
from pllab.LabOptions import get_caps
from pllab.Utils import as_int
from pllab.posets.Posets import lattice_z2

__all__ = ["MonotoneNumbering",
           "IdealSpec",
           "CentralityReport",
           "ideal_density",
           "density_sequence",
           "check_centrality",
           "enumerate_numberings",
           "lattice_shift"]

log = logging.getLogger(__name__)

# witness: (ideal, numbering, weight, other numbering, other weight)
CentralityReport = namedtuple("CentralityReport", ["holds", "witness", "n", "ideals"])


class MonotoneNumbering(object):

    """A finite prefix phi(1..n) of a monotone numbering."""

    __slots__ = ("prefix",)

    def __init__(self, prefix, poset=None):
        self.prefix = tuple(tuple(as_int(x) for x in a) for a in prefix)
        if poset is not None:
            self.validate(poset)

    def validate(self, poset):
        """Raise ValidationError unless every prefix is an ideal of poset."""
        seen = set()
        for k, a in enumerate(self.prefix):
            poset.validate(a)
            if a in seen:
                raise ValidationError("Element {a} is numbered twice".format(a=list(a)))
            missing = [b for b in poset.lower_covers(a) if b not in seen]
            if len(missing) > 0:
                raise ValidationError(
                    "phi({k})={a} comes before its lower cover {b}".format(
                        k=k + 1, a=list(a), b=list(missing[0])))
            seen.add(a)
        return self

    def __eq__(self, other):
        return isinstance(other, MonotoneNumbering) and self.prefix == other.prefix

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.prefix)

    def __len__(self):
        return len(self.prefix)

    def __iter__(self):
        return iter(self.prefix)

    def __repr__(self):
        return "MonotoneNumbering({p})".format(p=self.to_json())

    def __getstate__(self):
        return (self.prefix,)

    def __setstate__(self, state):
        self.prefix, = state

    @property
    def ideal(self):
        return frozenset(self.prefix)

    def to_json(self):
        return [list(a) for a in self.prefix]

    @classmethod
    def from_json(cls, obj, poset=None):
        try:
            return cls(obj, poset)
        except (TypeError, ValueError) as e:
            if isinstance(e, ValidationError):
                raise
            raise ValidationError("A numbering is a JSON array of coordinates")

    @classmethod
    def from_tableau(cls, t):
        """Number Z^2_+ by a tableau: phi(k) is the (row, col) cell of entry k."""
        return cls(tuple(c) for c in t.cells())


class IdealSpec(object):

    """
    A downward-closed subset of Z^2_+: the full rows 0..a-1, the full
    columns 0..b-1, and finitely many extra cells.
    """

    def __init__(self, rows=(), cols=(), cells=(), whole=False):
        self.rows = frozenset(int(r) for r in rows)
        self.cols = frozenset(int(c) for c in cols)
        self.cells = frozenset(tuple(int(x) for x in a) for a in cells)
        self.whole = bool(whole)
        for name, idx in (("rows", self.rows), ("cols", self.cols)):
            if idx != frozenset(range(len(idx))):
                raise ValidationError(
                    "Full {n} {i} are not downward-closed; use 0..k-1".format(
                        n=name, i=sorted(idx)))
        z2 = lattice_z2()
        for a in self.cells:
            z2.validate(a)
            for b in z2.lower_covers(a):
                if not self.contains(b):
                    raise ValidationError("Cell {a} needs its lower cover {b}".format(
                        a=list(a), b=list(b)))

    @classmethod
    def whole_poset(cls):
        return cls(whole=True)

    @classmethod
    def parse(cls, s):
        """Parse e.g. "rows=0", "rows=0,1;cols=0", "cells=0:0,0:1" or "all"."""
        s = s.strip()
        if s in ("all", "whole"):
            return cls.whole_poset()
        kwargs = {}
        for item in s.split(";"):
            if not item.strip():
                continue
            key, _, val = item.partition("=")
            key = key.strip()
            try:
                if key in ("rows", "cols"):
                    kwargs[key] = [int(x) for x in val.split(",") if x.strip()]
                elif key == "cells":
                    kwargs[key] = [tuple(int(y) for y in x.split(":"))
                                   for x in val.split(",") if x.strip()]
                else:
                    raise ValidationError("Unknown ideal key {k!r}".format(k=key))
            except ValueError:
                raise ValidationError("Cannot parse ideal {s!r}".format(s=s))
        return cls(**kwargs)

    @property
    def is_finite(self):
        return not self.whole and len(self.rows) == 0 and len(self.cols) == 0

    def __len__(self):
        if not self.is_finite:
            raise ValidationError("An infinite ideal has no size")
        return len(self.cells)

    def contains(self, a):
        if self.whole:
            return True
        return a[0] in self.rows or a[1] in self.cols or tuple(a) in self.cells

    def __contains__(self, a):
        return self.contains(a)

    def __str__(self):
        if self.whole:
            return "all"
        items = []
        if self.rows:
            items.append("rows=" + ",".join(str(r) for r in sorted(self.rows)))
        if self.cols:
            items.append("cols=" + ",".join(str(c) for c in sorted(self.cols)))
        if self.cells:
            items.append("cells=" + ",".join("{0}:{1}".format(*a) for a in sorted(self.cells)))
        return ";".join(items)


def ideal_density(numbering, ideal):
    """(1/n) |{i <= n : phi(i) in ideal}| over the whole prefix."""
    n = len(numbering)
    if n < 1:
        raise ValidationError("Density needs a prefix of length >= 1")
    return Fraction(sum(1 for a in numbering if ideal.contains(a)), n)


def density_sequence(numbering, ideal, checkpoints=None):
    """
    Return [(k, density of the first k elements)] at the checkpoints,
    by default the powers of two below n and n itself.
    """
    n = len(numbering)
    if n < 1:
        raise ValidationError("Density needs a prefix of length >= 1")
    if checkpoints is None:
        checkpoints, k = [], 1
        while k < n:
            checkpoints.append(k)
            k *= 2
        checkpoints.append(n)
    wanted = set(checkpoints)
    if any(k < 1 or k > n for k in wanted):
        raise ValidationError("Checkpoints must lie in 1..{n}".format(n=n))
    ret, hits = [], 0
    for k, a in enumerate(numbering, 1):
        if ideal.contains(a):
            hits += 1
        if k in wanted:
            ret.append((k, Fraction(hits, k)))
    return ret


def enumerate_numberings(poset, n, caps=None):
    """All monotone numberings of length n, depth-first in the poset's order."""
    if n < 0:
        raise ValidationError("Numbering length {n} is negative".format(n=n))
    get_caps(caps).check("numbering", n)
    ret = []
    prefix, seen = [], set()

    def extend():
        if len(prefix) == n:
            ret.append(MonotoneNumbering(prefix))
            return
        if len(prefix) == 0:
            candidates = [poset.bottom]
        else:
            candidates = set(b for a in prefix for b in poset.upper_covers(a)
                             if b not in seen)
            candidates = sorted((b for b in candidates
                                 if all(c in seen for c in poset.lower_covers(b))),
                                key=poset.sort_key)
        for b in candidates:
            prefix.append(b)
            seen.add(b)
            extend()
            seen.discard(b)
            prefix.pop()

    extend()
    log.debug("%s numberings of length %s on %s.", len(ret), n, poset)
    return ret


def check_centrality(weights, n, poset=None, caps=None):
    """
    Check that weights, a probability vector over all monotone numberings
    of length n, is uniform over the numberings of each n-element ideal.
    Missing numberings weigh 0.
    """
    caps = get_caps(caps)
    caps.check("centrality", n)
    poset = lattice_z2() if poset is None else poset
    weights = dict((k if isinstance(k, MonotoneNumbering) else MonotoneNumbering(k),
                    Fraction(w)) for k, w in weights.items())
    if sum(weights.values(), Fraction(0)) != 1:
        raise ValidationError("Weights sum to {s}, not 1".format(
            s=sum(weights.values(), Fraction(0))))
    numberings = enumerate_numberings(poset, n, caps)
    unknown = set(weights) - set(numberings)
    if len(unknown) > 0:
        raise ValidationError("{u} is not a monotone numbering of length {n}".format(
            u=sorted(unknown, key=lambda x: x.prefix)[0].to_json(), n=n))
    groups = OrderedDict()
    for phi in numberings:
        groups.setdefault(phi.ideal, []).append(phi)
    for ideal, group in groups.items():
        first = group[0]
        w0 = weights.get(first, Fraction(0))
        for phi in group[1:]:
            w = weights.get(phi, Fraction(0))
            if w != w0:
                witness = (sorted(ideal, key=poset.sort_key), first, w0, phi, w)
                return CentralityReport(False, witness, n, len(groups))
    return CentralityReport(True, None, n, len(groups))


def lattice_shift(numbering, omit="row"):
    """
    Return the numbering of Z^2_+ induced on the lattice with its first
    row, first column, or both omitted, translated back to the origin
    and renumbered in the original order.
    """
    if omit not in ("row", "column", "both"):
        raise ValidationError("omit must be row, column or both, got {o!r}".format(o=omit))
    dr = 1 if omit in ("row", "both") else 0
    dc = 1 if omit in ("column", "both") else 0
    return MonotoneNumbering((r - dr, c - dc) for r, c in numbering
                             if r >= dr and c >= dc)
