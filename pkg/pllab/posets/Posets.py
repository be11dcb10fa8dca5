"""
Locally finite posets with a minimal element.

Elements are tuples of nonnegative integers. The lattice Z^d_+ carries
the componentwise order. The nonrigid example lives on Z^2_+ with
(x,y) > (u,v) if y > v, (x,0) > (u,0) if x > u, and incomparability
otherwise; every element of row 1 lies above the whole infinite row 0,
so it is handled inside a finite square window.
"""

import logging
from itertools import count

import networkx as nx

from pllab.PlLabException import ValidationError, DomainError
from pllab.LabOptions import get_caps

__all__ = ["PosetHandle",
           "LatticeZd",
           "NonrigidPoset",
           "lattice_z2",
           "lattice_zd",
           "nonrigid_poset",
           "get_poset"]

log = logging.getLogger(__name__)


class PosetHandle(object):

    """Abstract poset with a unique minimal element."""

    name = None

    @property
    def bottom(self):
        raise NotImplementedError("PosetHandle.bottom not implemented")

    def validate(self, a):
        """Return a as a tuple element of the poset, or raise ValidationError."""
        raise NotImplementedError("PosetHandle.validate not implemented")

    def less_than(self, a, b):
        """Strict order a < b."""
        raise NotImplementedError("PosetHandle.less_than not implemented")

    def lower_covers(self, a):
        raise NotImplementedError("PosetHandle.lower_covers not implemented")

    def upper_covers(self, a):
        raise NotImplementedError("PosetHandle.upper_covers not implemented")

    def elements(self):
        """Iterate over elements in the poset's fixed order."""
        raise NotImplementedError("PosetHandle.elements not implemented")

    def sort_key(self, a):
        raise NotImplementedError("PosetHandle.sort_key not implemented")

    def compare(self, a, b):
        """Return "<", ">", "=" or None for incomparable."""
        if a == b:
            return "="
        if self.less_than(a, b):
            return "<"
        if self.less_than(b, a):
            return ">"
        return None

    def __str__(self):
        return self.name


class LatticeZd(PosetHandle):

    """Z^d_+ with the componentwise order."""

    def __init__(self, d):
        self.d = d
        self.name = "z{d}".format(d=d)

    @property
    def bottom(self):
        return (0,) * self.d

    def validate(self, a):
        try:
            a = tuple(int(x) for x in a)
        except (TypeError, ValueError):
            raise ValidationError("{a!r} is not an element of {p}".format(a=a, p=self.name))
        if len(a) != self.d or any(x < 0 for x in a):
            raise ValidationError("{a} is not an element of {p}".format(a=list(a), p=self.name))
        return a

    def less_than(self, a, b):
        return a != b and all(x <= y for x, y in zip(a, b))

    def lower_covers(self, a):
        return sorted(a[:i] + (a[i] - 1,) + a[i + 1:] for i in range(self.d) if a[i] > 0)

    def upper_covers(self, a):
        return sorted(a[:i] + (a[i] + 1,) + a[i + 1:] for i in range(self.d))

    def sort_key(self, a):
        # by rank, then reverse-lexicographic
        return (sum(a), tuple(-x for x in a))

    def elements(self):
        for rank in count():
            for a in sorted(_compositions(rank, self.d), key=self.sort_key):
                yield a


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class NonrigidPoset(PosetHandle):

    """
    The nonrigid example restricted to the window [0,W) x [0,W). Covers
    are the transitive reduction of the order on the window.
    """

    name = "nonrigid"

    def __init__(self, window=8):
        if window < 2:
            raise DomainError("The nonrigid window needs W >= 2, got {w}".format(w=window))
        self.window = window
        elems = list(self._spiral())
        self._pos = dict((a, i) for i, a in enumerate(elems))
        order = nx.DiGraph()
        order.add_nodes_from(elems)
        order.add_edges_from((a, b) for a in elems for b in elems if self.less_than(a, b))
        self._hasse = nx.transitive_reduction(order)
        log.debug("Nonrigid window %s: %s elements, %s covers.",
                  window, len(elems), self._hasse.number_of_edges())

    def _spiral(self):
        # square shells around the origin: (s,0) .. (s,s) .. (0,s)
        yield (0, 0)
        for s in range(1, self.window):
            for y in range(s + 1):
                yield (s, y)
            for x in range(s - 1, -1, -1):
                yield (x, s)

    @property
    def bottom(self):
        return (0, 0)

    def validate(self, a):
        try:
            a = tuple(int(x) for x in a)
        except (TypeError, ValueError):
            raise ValidationError("{a!r} is not an element of nonrigid".format(a=a))
        if a not in self._pos:
            raise ValidationError("{a} is outside the nonrigid window {w}".format(
                a=list(a), w=self.window))
        return a

    def less_than(self, a, b):
        (x, y), (u, v) = a, b
        return v > y or (y == 0 and v == 0 and u > x)

    def lower_covers(self, a):
        return sorted(self._hasse.predecessors(self.validate(a)), key=self.sort_key)

    def upper_covers(self, a):
        return sorted(self._hasse.successors(self.validate(a)), key=self.sort_key)

    def sort_key(self, a):
        return self._pos[a]

    def elements(self):
        return iter(sorted(self._pos, key=self.sort_key))


def lattice_z2():
    return LatticeZd(2)


def lattice_zd(d, caps=None):
    """Return Z^d_+ for 2 <= d <= cap_zd_dim."""
    if d < 2 or d > get_caps(caps).zd_dim:
        raise DomainError("d={d} is outside 2..{m}".format(d=d, m=get_caps(caps).zd_dim))
    return LatticeZd(d)


def nonrigid_poset(window=8):
    return NonrigidPoset(window)


def get_poset(name, window=8, caps=None):
    """Look a poset up by its command line name: z2, z3, z4 or nonrigid."""
    if name == "nonrigid":
        return nonrigid_poset(window)
    if name.startswith("z") and name[1:].isdigit():
        return lattice_zd(int(name[1:]), caps)
    raise ValidationError("Unknown poset {p}, expected z2, z3, z4 or nonrigid".format(p=name))
