"""
Graded multigraphs (Bratteli diagrams) and the Plancherel-graph check.

A GradedGraph is finite: it holds levels 0..max_level. Vertex ids are
opaque strings, edges carry a positive multiplicity, and dim(v) is the
weighted number of paths from the unique level-0 vertex.
"""

import logging
from collections import namedtuple
from fractions import Fraction

import networkx as nx

from pllab.PlLabException import StructuralError, DomainError, ValidationError
from pllab.LabOptions import get_caps
from pllab.young.YoungUtils import enumerate_level, covers_up, dim_hook

__all__ = ["GradedGraph",
           "YoungGraph",
           "LevelMass",
           "PlancherelReport",
           "young_graph_adapter",
           "pascal_graph",
           "level_mass",
           "is_plancherel_graph",
           "check_restriction"]

log = logging.getLogger(__name__)

LevelMass = namedtuple("LevelMass", ["n", "d"])

# witness: (vertex, expected ratio, actual ratio)
PlancherelReport = namedtuple("PlancherelReport", ["holds", "witness", "level"])


class GradedGraph(object):

    """A finite graded multigraph backed by a networkx DiGraph."""

    def __init__(self, levels, edges):
        """
        Parameters:
          levels - list of lists of vertex ids, level 0 first
          edges - iterable of (from, to, multiplicity), from one level to the next
        """
        if len(levels) == 0 or len(levels[0]) != 1:
            raise StructuralError("Level 0 must contain exactly one vertex")
        g = nx.DiGraph()
        self._levels = []
        for n, level in enumerate(levels):
            ids = [str(v) for v in level]
            for pos, v in enumerate(ids):
                if v in g:
                    raise StructuralError("Vertex {v} appears twice".format(v=v))
                g.add_node(v, level=n, pos=pos)
            self._levels.append(ids)
        for u, v, m in edges:
            u, v, m = str(u), str(v), int(m)
            if u not in g or v not in g:
                raise StructuralError("Edge {u}->{v} has an unknown end".format(u=u, v=v))
            if g.nodes[v]["level"] != g.nodes[u]["level"] + 1:
                raise StructuralError("Edge {u}->{v} does not go up one level".format(u=u, v=v))
            if m < 1:
                raise StructuralError("Edge {u}->{v} has multiplicity {m}".format(u=u, v=v, m=m))
            if g.has_edge(u, v):
                m += g[u][v]["mult"]
            g.add_edge(u, v, mult=m)
        for level in self._levels[1:]:
            for v in level:
                if g.in_degree(v) == 0:
                    raise StructuralError("Vertex {v} has no incoming edge".format(v=v))
        self._g = g
        self._dims = self._path_counts()

    def _path_counts(self):
        dims = {self._levels[0][0]: 1}
        for level in self._levels[1:]:
            for v in level:
                dims[v] = sum(d["mult"] * dims[u] for u, _, d in self._g.in_edges(v, data=True))
        return dims

    @property
    def max_level(self):
        return len(self._levels) - 1

    @property
    def root(self):
        return self._levels[0][0]

    def level(self, n):
        if n < 0 or n > self.max_level:
            raise DomainError("Level {n} outside 0..{m}".format(n=n, m=self.max_level))
        return list(self._levels[n])

    def level_of(self, v):
        return self._g.nodes[v]["level"]

    def _ordered(self, pairs):
        return sorted(pairs, key=lambda p: self._g.nodes[p[0]]["pos"])

    def up_edges(self, v):
        """Return [(vertex, multiplicity)] one level up, in level order."""
        return self._ordered((w, d["mult"]) for _, w, d in self._g.out_edges(v, data=True))

    def down_edges(self, v):
        """Return [(vertex, multiplicity)] one level down, in level order."""
        return self._ordered((u, d["mult"]) for u, _, d in self._g.in_edges(v, data=True))

    def edges(self):
        """Return all edges as [from, to, mult], ordered by level."""
        return [[u, w, m] for level in self._levels for u in level
                for w, m in self.up_edges(u)]

    def dim(self, v):
        return self._dims[v]

    def without_edge(self, u, v):
        """
        Return a copy without the edge u->v. Vertices left without an
        incoming edge are dropped together with their up-edges, level by
        level, so the result is again a graded graph.
        """
        u, v = str(u), str(v)
        if not self._g.has_edge(u, v):
            raise StructuralError("No edge {u}->{v}".format(u=u, v=v))
        g = self._g.copy()
        g.remove_edge(u, v)
        levels = [list(self._levels[0])]
        for level in self._levels[1:]:
            kept = []
            for w in level:
                if g.in_degree(w) == 0:
                    log.debug("Dropping %s, no incoming edge left.", w)
                    g.remove_node(w)
                else:
                    kept.append(w)
            levels.append(kept)
        while len(levels[-1]) == 0:
            levels.pop()
        edges = [(a, b, d["mult"]) for a, b, d in g.edges(data=True)]
        return GradedGraph(levels, edges)

    def to_json(self):
        return {"levels": [list(level) for level in self._levels],
                "edges": self.edges()}

    @classmethod
    def from_json(cls, obj):
        try:
            levels = obj["levels"]
            edges = [(e[0], e[1], e[2] if len(e) > 2 else 1) for e in obj["edges"]]
        except (KeyError, TypeError, IndexError):
            raise ValidationError("A graph is {levels: [[...]], edges: [[from,to,mult],...]}")
        return cls(levels, edges)


class YoungGraph(GradedGraph):

    """
    Levels 0..max_level of the Young graph; dim delegates to dim_hook.
    max_level may exceed the level cap by one, the extra level being
    what a check at the cap looks up to.
    """

    def __init__(self, max_level, caps=None):
        get_caps(caps).check("level", max_level - 1)
        levels = [enumerate_level(n) for n in range(max_level + 1)]
        edges = [(lam, big, 1) for level in levels[:-1] for lam in level
                 for big in covers_up(lam)]
        self._partitions = dict((str(lam), lam) for level in levels for lam in level)
        GradedGraph.__init__(self, levels, edges)

    def _path_counts(self):
        return dict((v, dim_hook(lam)) for v, lam in self._partitions.items())

    def partition(self, v):
        return self._partitions[str(v)]


def young_graph_adapter(max_level=16, caps=None):
    """Return the Young graph truncated at max_level as a GradedGraph."""
    return YoungGraph(max_level, caps=caps)


def pascal_graph(depth):
    """Return Pascal's graph: (n,k) -> (n+1,k) and (n+1,k+1)."""
    name = "({n},{k})".format
    levels = [[name(n=n, k=k) for k in range(n + 1)] for n in range(depth + 1)]
    edges = [(name(n=n, k=k), name(n=n + 1, k=k + j), 1)
             for n in range(depth) for k in range(n + 1) for j in (0, 1)]
    return GradedGraph(levels, edges)


def level_mass(g, n, caps=None):
    """Return d_n, the sum of dim(v)^2 over level n."""
    get_caps(caps).check("level", n)
    return _level_mass(g, n)


def _level_mass(g, n):
    return LevelMass(n, sum(g.dim(v) ** 2 for v in g.level(n)))


def _up_mass(g, v):
    ups = g.up_edges(v)
    if len(ups) == 0:
        raise StructuralError("Vertex {v} has no up-edges".format(v=v))
    return sum(m * g.dim(w) for w, m in ups)


def is_plancherel_graph(g, up_to, caps=None):
    """
    Check dim(v) / sum over up-edges (w, m) of m*dim(w) == d_n / d_{n+1}
    at every vertex v of every level n <= up_to, exactly. The witness
    names the first offending vertex in level order.
    """
    get_caps(caps).check("level", up_to)
    if up_to + 1 > g.max_level:
        raise DomainError("Checking up to level {u} needs levels 0..{m}, the graph has {g}".format(
            u=up_to, m=up_to + 1, g=g.max_level))
    # level up_to + 1 only feeds the ratio at up_to; the cap bounds up_to
    masses = [_level_mass(g, n).d for n in range(up_to + 2)]
    for n in range(up_to + 1):
        expected = Fraction(masses[n], masses[n + 1])
        for v in g.level(n):
            actual = Fraction(g.dim(v), _up_mass(g, v))
            if actual != expected:
                log.info("Plancherel ratio fails at %s: expected %s, actual %s", v, expected, actual)
                return PlancherelReport(False, (v, expected, actual), n)
        log.debug("Level %s ratio %s holds.", n, expected)
    return PlancherelReport(True, None, None)


def check_restriction(g, n, caps=None):
    """
    Project the level-(n+1) Plancherel measure dim^2/d_{n+1} down along
    the cotransition probabilities m*dim(v)/dim(w) and compare with the
    level-n measure dim^2/d_n, exactly.
    """
    get_caps(caps).check("level", n)
    if n + 1 > g.max_level:
        raise DomainError("Level {m} is beyond the graph".format(m=n + 1))
    d_n, d_next = _level_mass(g, n).d, _level_mass(g, n + 1).d
    for v in g.level(n):
        expected = Fraction(g.dim(v) ** 2, d_n)
        actual = sum(Fraction(g.dim(w) ** 2, d_next) * Fraction(m * g.dim(v), g.dim(w))
                     for w, m in g.up_edges(v))
        if actual != expected:
            return PlancherelReport(False, (v, expected, actual), n)
    return PlancherelReport(True, None, None)
