"""Routings, vertex and edge loads, and forwarding indices.

A routing assigns an elementary path to every ordered pair of distinct
vertices. The load of a vertex counts the paths using it as an inner
vertex; the load of an edge counts the paths traversing it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .circulant import CirculantGraph
from .distance import bfs_distances
from .errors import DomainError, RoutingError, SizeLimitError

ROUTING_CAP = 1024


def edge_key(u, v):
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on arbitrary sortable vertex labels."""

    vertices: tuple
    edges: frozenset

    def __post_init__(self):
        verts = set(self.vertices)
        if len(verts) != len(self.vertices):
            raise DomainError("duplicate vertex labels")
        norm = set()
        for e in self.edges:
            u, v = tuple(e)
            if u == v:
                raise DomainError(f"loop at {u}")
            if u not in verts or v not in verts:
                raise DomainError(f"edge {u}-{v} uses an unknown vertex")
            norm.add(edge_key(u, v))
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        object.__setattr__(self, "edges", frozenset(norm))
        adj = {v: set() for v in self.vertices}
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", {v: frozenset(ws) for v, ws in adj.items()})
        object.__setattr__(self, "_nbrs", {v: tuple(sorted(ws)) for v, ws in adj.items()})

    @classmethod
    def from_edges(cls, edges, vertices=None):
        edges = [tuple(e) for e in edges]
        if vertices is None:
            vertices = {x for e in edges for x in e}
        return cls(tuple(vertices), frozenset(edges))

    @classmethod
    def from_circulant(cls, g: CirculantGraph):
        return cls(tuple(range(g.n)), frozenset(g.edges()))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def adjacent(self, u, v) -> bool:
        return v in self._adj[u]

    def neighbors(self, v):
        return list(self._nbrs[v])

    def distances_from(self, s) -> dict:
        dist = {s: 0}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in self._nbrs[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        return dist


@dataclass
class Routing:
    """Path table keyed by ordered pair ``(x, y)``.

    ``minimal`` and ``symmetric`` are None until :func:`validate_routing`
    fills them in.
    """

    paths: dict
    minimal: bool | None = None
    symmetric: bool | None = None

    def __len__(self):
        return len(self.paths)

    def __getitem__(self, pair):
        return self.paths[pair]


@dataclass
class ValidationReport:
    valid: bool
    violations: list[str]
    minimal: bool | None
    symmetric: bool | None

    def __bool__(self):
        return self.valid


def validate_routing(g: Graph, r: Routing) -> ValidationReport:
    """Check coverage, elementarity and edge-adjacency; derive the flags."""
    violations = []
    verts = set(g.vertices)
    for x in g.vertices:
        for y in g.vertices:
            if x != y and (x, y) not in r.paths:
                violations.append(f"missing path for ({x}, {y})")
    for (x, y), path in r.paths.items():
        if x == y or x not in verts or y not in verts:
            violations.append(f"unexpected pair ({x}, {y})")
            continue
        path = tuple(path)
        if len(path) < 2 or path[0] != x or path[-1] != y:
            violations.append(f"path {path} does not run from {x} to {y}")
            continue
        if len(set(path)) != len(path):
            violations.append(f"path {path} repeats a vertex")
        for u, v in zip(path, path[1:]):
            if u not in verts or v not in verts or not g.adjacent(u, v):
                violations.append(f"path {path} uses non-edge {u}-{v}")
                break
    if violations:
        return ValidationReport(False, violations, None, None)

    minimal = True
    for x in g.vertices:
        dist = g.distances_from(x)
        if any(len(r.paths[(x, y)]) - 1 != dist[y] for y in g.vertices if y != x):
            minimal = False
            break
    symmetric = all(tuple(r.paths[(y, x)]) == tuple(reversed(p)) for (x, y), p in r.paths.items())
    r.minimal, r.symmetric = minimal, symmetric
    return ValidationReport(True, [], minimal, symmetric)


@dataclass
class LoadProfile:
    """Per-vertex and per-edge loads; edges keyed by the sorted endpoint pair."""

    vertex_load: dict = field(default_factory=dict)
    edge_load: dict = field(default_factory=dict)

    @property
    def xi_of_R(self) -> int:
        return max(self.vertex_load.values(), default=0)

    @property
    def pi_of_R(self) -> int:
        return max(self.edge_load.values(), default=0)

    def merge(self, other: "LoadProfile") -> "LoadProfile":
        out = LoadProfile(dict(self.vertex_load), dict(self.edge_load))
        for v, c in other.vertex_load.items():
            out.vertex_load[v] = out.vertex_load.get(v, 0) + c
        for e, c in other.edge_load.items():
            out.edge_load[e] = out.edge_load.get(e, 0) + c
        return out

    def vertex_csv(self) -> str:
        rows = ["vertex,load\n"]
        rows += [f"{v},{c}\n" for v, c in sorted(self.vertex_load.items())]
        return "".join(rows)

    def edge_csv(self) -> str:
        rows = ["u,v,load\n"]
        rows += [f"{u},{v},{c}\n" for (u, v), c in sorted(self.edge_load.items())]
        return "".join(rows)


def _require_valid(g: Graph, r: Routing) -> None:
    report = validate_routing(g, r)
    if not report:
        raise RoutingError(report.violations)


def _accumulate(g: Graph, r: Routing, sources=None) -> LoadProfile:
    prof = LoadProfile({v: 0 for v in g.vertices}, {e: 0 for e in g.edges})
    wanted = None if sources is None else set(sources)
    for (x, _), path in r.paths.items():
        if wanted is not None and x not in wanted:
            continue
        for v in path[1:-1]:
            prof.vertex_load[v] += 1
        for u, v in zip(path, path[1:]):
            prof.edge_load[edge_key(u, v)] += 1
    return prof


def loads(g: Graph, r: Routing, sources=None) -> LoadProfile:
    """Vertex and edge loads of a routing, optionally only for paths leaving ``sources``."""
    _require_valid(g, r)
    return _accumulate(g, r, sources)


def vertex_loads(g: Graph, r: Routing) -> LoadProfile:
    prof = loads(g, r)
    return LoadProfile(vertex_load=prof.vertex_load)


def edge_loads(g: Graph, r: Routing) -> LoadProfile:
    prof = loads(g, r)
    return LoadProfile(edge_load=prof.edge_load)


def shortest_path_family(g: CirculantGraph) -> list[tuple[int, ...]]:
    """``family[t]`` is the BFS-tree path 0 -> t under the canonical scan order."""
    _, tree = bfs_distances(g, 0)
    return [tuple(tree.path_from_root(t)) for t in range(g.n)]


def translation_invariant_routing(g: CirculantGraph, cap: int | None = ROUTING_CAP) -> Routing:
    """Minimal routing R(x, y) = P(0, y - x) + x built from one BFS tree."""
    if cap is not None and g.n > cap:
        raise SizeLimitError(f"n={g.n} exceeds the routing table cap {cap}; use translation_invariant_loads")
    family = shortest_path_family(g)
    n = g.n
    paths = {}
    for x in range(n):
        for t in range(1, n):
            paths[(x, (x + t) % n)] = tuple((v + x) % n for v in family[t])
    return Routing(paths, minimal=True, symmetric=None)


def translation_invariant_loads(g: CirculantGraph, sources=None) -> LoadProfile:
    """Loads of the translation-invariant routing without materialising its paths.

    Each template path P(0, t) is shifted by every source at once with numpy.
    """
    n = g.n
    family = shortest_path_family(g)
    shifts = np.arange(n, dtype=np.int64) if sources is None else np.asarray(sorted(set(sources)), dtype=np.int64)
    vload = np.zeros(n, dtype=np.int64)
    ekeys = []
    for path in family[1:]:
        p = np.asarray(path, dtype=np.int64)
        if p.size > 2:
            inner = (p[1:-1, None] + shifts[None, :]) % n
            vload += np.bincount(inner.ravel(), minlength=n)
        a = (p[:-1, None] + shifts[None, :]) % n
        b = (p[1:, None] + shifts[None, :]) % n
        ekeys.append((np.minimum(a, b) * n + np.maximum(a, b)).ravel())
    prof = LoadProfile({v: int(c) for v, c in enumerate(vload)},
                       {edge_key(u, w): 0 for u, w in g.edges()})
    if ekeys:
        keys, counts = np.unique(np.concatenate(ekeys), return_counts=True)
        for k, c in zip(keys.tolist(), counts.tolist()):
            prof.edge_load[divmod(k, n)] = c
    return prof


# Edge set read off the consecutive vertex pairs of the two routings below.
FIGURE3_EDGES = ((1, 2), (1, 3), (1, 4), (2, 4), (3, 4), (2, 5), (3, 6), (5, 6))

FIGURE3_R1 = (
    (1, 2), (1, 3), (1, 4), (1, 2, 5), (1, 3, 6), (2, 1), (2, 1, 3), (2, 4), (2, 5), (2, 5, 6),
    (3, 1), (3, 1, 2), (3, 4), (3, 6, 5), (3, 6), (4, 1), (4, 2), (4, 3), (4, 2, 5), (4, 3, 6),
    (5, 2, 1), (5, 2), (5, 6, 3), (5, 2, 4), (5, 6), (6, 3, 1), (6, 5, 2), (6, 3), (6, 3, 4), (6, 5),
)

FIGURE3_R2 = (
    (1, 4, 2), (1, 3), (1, 4), (1, 3, 6, 5), (1, 3, 6), (2, 1), (2, 1, 3), (2, 4), (2, 5), (2, 1, 3, 6),
    (3, 1), (3, 1, 2), (3, 4), (3, 4, 1, 2, 5), (3, 6), (4, 1), (4, 2), (4, 3), (4, 3, 6, 5), (4, 3, 6),
    (5, 2, 1), (5, 6, 3, 1, 2), (5, 6, 3), (5, 2, 4), (5, 6), (6, 3, 1), (6, 5, 2), (6, 3), (6, 3, 4),
    (6, 3, 4, 2, 5),
)


def routing_from_paths(paths) -> Routing:
    table = {}
    for p in paths:
        key = (p[0], p[-1])
        if key in table:
            raise DomainError(f"two paths given for {key}")
        table[key] = tuple(p)
    return Routing(table)


def figure3_fixture() -> tuple[Graph, Routing, Routing]:
    """Six-vertex example graph with its minimal routing R1 and non-minimal R2."""
    g = Graph.from_edges(FIGURE3_EDGES, vertices=range(1, 7))
    return g, routing_from_paths(FIGURE3_R1), routing_from_paths(FIGURE3_R2)
