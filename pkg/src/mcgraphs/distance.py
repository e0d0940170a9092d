"""Distance rows of circulant graphs.

Three independent routes produce the first row of the distance matrix:

* :func:`bfs_distances`, a level-synchronous breadth-first search that is the
  reference for everything else;
* :func:`extend_row_base2`, the doubling step MC(2^(h-1)) -> MC(2^h);
* :func:`extend_row_base3`, the tripling step MC(3^(h-1)) -> MC(3^h).

Rows are stored as ``int32`` numpy arrays; sums are returned as Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circulant import CirculantGraph
from .errors import DisconnectedGraphError, DomainError, SizeLimitError

H_CAP_BASE2 = 22
H_CAP_BASE3 = 14
MATRIX_CAP = 4096

# Rows of the frontier expanded per numpy batch; bounds peak memory of the BFS.
_BFS_BATCH = 1 << 16

LEFT, MIDDLE, RIGHT, ROOT = "Left", "Middle", "Right", "Root"


@dataclass(frozen=True, eq=False)
class DistanceRow:
    """``dist[v]`` is the distance from ``source`` to ``v``."""

    dist: np.ndarray
    source: int = 0

    def __post_init__(self):
        arr = np.ascontiguousarray(self.dist, dtype=np.int32)
        arr.setflags(write=False)
        object.__setattr__(self, "dist", arr)

    @property
    def n(self) -> int:
        return int(self.dist.shape[0])

    @property
    def transmission(self) -> int:
        return int(self.dist.sum(dtype=np.int64))

    @property
    def diameter(self) -> int:
        return int(self.dist.max())

    def tolist(self) -> list[int]:
        return self.dist.tolist()

    def is_symmetric(self) -> bool:
        """True when ``dist[source + j] == dist[source - j]`` for every j."""
        d = np.roll(self.dist, -self.source)
        return bool(np.array_equal(d[1:], d[1:][::-1]))

    def __eq__(self, other):
        if not isinstance(other, DistanceRow):
            return NotImplemented
        return self.source == other.source and np.array_equal(self.dist, other.dist)

    def __repr__(self):
        body = ",".join(map(str, self.dist[:16].tolist()))
        tail = ",..." if self.n > 16 else ""
        return f"DistanceRow(n={self.n}, source={self.source}, dist=[{body}{tail}])"


@dataclass(frozen=True, eq=False)
class BfsTree:
    """Breadth-first tree; ``parent[root] == -1``.

    ``order`` lists vertices in discovery order, so ``order`` restricted to a
    level is the set V_i in the order the algorithm scanned it.
    """

    root: int
    parent: np.ndarray
    level: np.ndarray
    order: np.ndarray
    origin: tuple[int, int] | None = None

    @property
    def n(self) -> int:
        return int(self.parent.shape[0])

    def part(self, v: int) -> str | None:
        """Left/Middle/Right/Root label of ``v``, or None for non-MC(2^h), MC(3^h) trees."""
        if self.origin is None or self.origin[0] not in (2, 3):
            return None
        return part_label(self.origin[0], self.origin[1], (v - self.root) % self.n)

    def parts(self) -> list[str | None]:
        return [self.part(v) for v in range(self.n)]

    def children(self, v: int) -> list[int]:
        """Children of ``v`` in the order the scan created them."""
        return [int(w) for w in self.order if self.parent[w] == v]

    def path_from_root(self, v: int) -> list[int]:
        path = [v]
        while path[-1] != self.root:
            path.append(int(self.parent[path[-1]]))
        path.reverse()
        return path


def bfs_distances(g: CirculantGraph, source: int = 0) -> tuple[DistanceRow, BfsTree]:
    """Single-source distances and BFS tree under the canonical scan order.

    Each level is expanded in batches with numpy, keeping the exact
    semantics of the sequential algorithm: vertices of V_i are scanned in the
    order they entered V_i, neighbours in :meth:`CirculantGraph.scan_offsets`
    order, and an unvisited vertex becomes the child of the first scanner
    that reaches it.
    """
    n = g.n
    if not 0 <= source < n:
        raise DomainError(f"source {source} outside 0..{n - 1}")
    offsets = g.neighbor_array()
    level = np.full(n, -1, dtype=np.int32)
    parent = np.full(n, -1, dtype=np.int64)
    level[source] = 0
    order = [np.array([source], dtype=np.int64)]
    frontier = order[0]
    depth = 0
    while frontier.size and offsets.size:
        found = []
        for start in range(0, frontier.size, _BFS_BATCH):
            chunk = frontier[start:start + _BFS_BATCH]
            cand = ((chunk[:, None] + offsets[None, :]) % n).ravel()
            fresh = level[cand] == -1
            if not fresh.any():
                continue
            cand = cand[fresh]
            scanner = np.repeat(chunk, offsets.size)[fresh]
            uniq, first = np.unique(cand, return_index=True)
            seq = np.sort(first)
            new = cand[seq]
            level[new] = depth + 1
            parent[new] = scanner[seq]
            found.append(new)
        frontier = np.concatenate(found) if found else np.empty(0, dtype=np.int64)
        if frontier.size:
            order.append(frontier)
        depth += 1
    if (level < 0).any():
        raise DisconnectedGraphError(source, np.flatnonzero(level < 0).tolist())
    tree = BfsTree(root=source, parent=parent, level=level,
                   order=np.concatenate(order), origin=g.origin)
    return DistanceRow(level, source=source), tree


def thresholds_base2(h: int) -> tuple[int, int | None]:
    """``(max[L u M], min[R])`` of the BFS tree of MC(2^h).

    ``min[R]`` is None for h = 1, where the tree has no right part.
    """
    if h < 1:
        raise DomainError(f"h must be at least 1, got {h}")
    if h % 2:
        max_lm = (4 ** ((h + 1) // 2) - 1) // 3
    else:
        max_lm = 2 * (4 ** (h // 2) - 1) // 3
    return max_lm, (max_lm + 1 if h > 1 else None)


def half_base3(h: int) -> int:
    """Largest vertex of the left part of the BFS tree of MC(3^h)."""
    return (3**h - 1) // 2


def part_label(m: int, h: int, offset: int) -> str:
    """Part of the BFS tree of MC(m^h) containing the vertex ``offset`` from the root."""
    n = m**h
    offset %= n
    if offset == 0:
        return ROOT
    if m == 2:
        max_lm, _ = thresholds_base2(h)
        if offset > max_lm:
            return RIGHT
        return MIDDLE if offset >= n - max_lm else LEFT
    if m == 3:
        return LEFT if offset <= half_base3(h) else RIGHT
    raise DomainError(f"part labels are defined for bases 2 and 3, got {m}")


def mirror_symmetry(half, n: int) -> DistanceRow:
    """Complete a row from its entries 0..floor(n/2) using dist[n-j] = dist[j]."""
    half = np.asarray(half, dtype=np.int32)
    need = n // 2 + 1
    if half.shape[0] < need:
        raise DomainError(f"need entries 0..{n // 2} to mirror a row of length {n}, got {half.shape[0]}")
    full = np.empty(n, dtype=np.int32)
    full[:need] = half[:need]
    # j runs over ceil(n/2)..n-1, i.e. mirrors of 1..ceil(n/2)-1
    rest = n - need
    if rest:
        full[need:] = full[1:1 + rest][::-1]
    return DistanceRow(full)


def extend_row_base2(prev: DistanceRow, h: int) -> DistanceRow:
    """Row of MC(2^h) from the row of MC(2^(h-1)).

    Entries up to ``max[L u M]`` of the previous tree are copied, the
    descended entries up to the new antipode 2^(h-1) gain one, and the rest
    follow by symmetry.
    """
    if h < 2:
        raise DomainError(f"h must be at least 2, got {h}")
    half = 2 ** (h - 1)
    if prev.n != half:
        raise DomainError(f"expected a row of length {half} for h={h}, got {prev.n}")
    keep, _ = thresholds_base2(h - 1)
    j = np.arange(half + 1)
    new_half = prev.dist[j % half].astype(np.int32)
    new_half[keep + 1:] += 1
    return mirror_symmetry(new_half, 2 * half)


def extend_row_base3(prev: DistanceRow, h: int) -> DistanceRow:
    """Row of MC(3^h) from the row of MC(3^(h-1)).

    Entries 0..(3^(h-1)-1)/2 are copied, entries up to 3^(h-1)-1 gain one,
    vertices 3^(h-1)+j for j in 0..(3^(h-1)-1)/2 take prev[j]+1, and the
    remaining half follows by symmetry.
    """
    if h < 2:
        raise DomainError(f"h must be at least 2, got {h}")
    third = 3 ** (h - 1)
    if prev.n != third:
        raise DomainError(f"expected a row of length {third} for h={h}, got {prev.n}")
    split = (third - 1) // 2
    new_half = np.empty(third + split + 1, dtype=np.int32)
    new_half[:split + 1] = prev.dist[:split + 1]
    new_half[split + 1:third] = prev.dist[split + 1:] + 1
    new_half[third:] = prev.dist[:split + 1] + 1
    return mirror_symmetry(new_half, 3 * third)


def _check_cap(m: int, h: int, cap: int | None) -> None:
    if cap is None:
        cap = {2: H_CAP_BASE2, 3: H_CAP_BASE3}[m]
    if h > cap:
        raise SizeLimitError(f"h={h} exceeds the row cap {cap} for base {m}")


def recursive_row(m: int, h: int, cap: int | None = None) -> DistanceRow:
    """Row of MC(m^h), m in {2, 3}, by iterating the extension step from h = 1."""
    if m not in (2, 3):
        raise DomainError(f"recursive rows exist for bases 2 and 3 only, got {m}")
    if h < 1:
        raise DomainError(f"h must be at least 1, got {h}")
    _check_cap(m, h, cap)
    return recursive_rows(m, h, cap)[-1]


def recursive_rows(m: int, h_max: int, cap: int | None = None) -> list[DistanceRow]:
    """Rows of MC(m^1), ..., MC(m^h_max)."""
    _check_cap(m, h_max, cap)
    if m == 2:
        rows, step = [DistanceRow([0, 1])], extend_row_base2
    elif m == 3:
        rows, step = [DistanceRow([0, 1, 1])], extend_row_base3
    else:
        raise DomainError(f"recursive rows exist for bases 2 and 3 only, got {m}")
    for h in range(2, h_max + 1):
        rows.append(step(rows[-1], h))
    return rows


def distance_matrix(row: DistanceRow, cap: int | None = MATRIX_CAP) -> np.ndarray:
    """Full circulant distance matrix ``M[i, j] = row[(j - i) mod n]``."""
    n = row.n
    if cap is not None and n > cap:
        raise SizeLimitError(
            f"n={n} exceeds the dense matrix cap {cap}; work with the first row instead"
        )
    base = np.roll(row.dist, -row.source)
    idx = np.arange(n)
    return base[(idx[None, :] - idx[:, None]) % n]


def diameter_of(row: DistanceRow) -> int:
    return row.diameter


def format_row(row: DistanceRow) -> str:
    return ",".join(map(str, row.dist.tolist()))


def format_matrix(matrix: np.ndarray) -> str:
    return "".join(",".join(map(str, r)) + "\n" for r in matrix.tolist())
