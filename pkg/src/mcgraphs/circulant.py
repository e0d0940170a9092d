"""Circulant graphs Cay(Z_n, S) and multiplicative circulant instances MC(m^h)."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .errors import DomainError, SizeLimitError

# Vertex counts must fit a signed 64-bit integer so numpy index arithmetic stays exact.
MAX_VERTICES = 2**62


def fold_jump(j: int, n: int) -> int:
    """Map a jump into [0, floor(n/2)] using the symmetry j ~ n - j."""
    j %= n
    return min(j, n - j)


@dataclass(frozen=True)
class CirculantGraph:
    """Undirected circulant graph on the residues 0..n-1.

    ``jumps`` are stored folded into ``[1, n // 2]`` and strictly increasing.
    ``origin`` records ``(m, h)`` for graphs built by :func:`build_mc`.
    """

    n: int
    jumps: tuple[int, ...]
    origin: tuple[int, int] | None = None
    regularity: int = field(init=False)

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"vertex count must be positive, got {self.n}")
        if self.n > MAX_VERTICES:
            raise SizeLimitError(f"n={self.n} exceeds the supported maximum {MAX_VERTICES}")
        folded = {fold_jump(j, self.n) for j in self.jumps}
        if 0 in folded:
            raise DomainError(f"jump set {self.jumps} contains a multiple of n={self.n}")
        object.__setattr__(self, "jumps", tuple(sorted(folded)))
        r = 2 * len(self.jumps)
        if self.n % 2 == 0 and self.n // 2 in self.jumps:
            r -= 1
        object.__setattr__(self, "regularity", r)

    @property
    def is_connected(self) -> bool:
        g = self.n
        for j in self.jumps:
            g = gcd(g, j)
        return g == 1

    def scan_offsets(self) -> list[int]:
        """Signed neighbour offsets in canonical scan order.

        The largest power ``m^(h-1)`` goes first for MC graphs (largest jump
        otherwise), then the remaining jumps in descending order; within a
        jump ``+j`` precedes ``-j``. Offsets that coincide modulo n are kept once.
        """
        if self.origin is not None:
            m, h = self.origin
            lead = fold_jump(m ** (h - 1), self.n)
        else:
            lead = self.jumps[-1] if self.jumps else None
        order = [lead] if lead is not None else []
        order += [j for j in reversed(self.jumps) if j != lead]
        offsets: list[int] = []
        seen: set[int] = set()
        for j in order:
            for off in (j, self.n - j):
                if off % self.n not in seen:
                    seen.add(off % self.n)
                    offsets.append(off % self.n)
        return offsets

    def neighbors(self, v: int) -> list[int]:
        if not 0 <= v < self.n:
            raise DomainError(f"vertex {v} outside 0..{self.n - 1}")
        return [(v + off) % self.n for off in self.scan_offsets()]

    def neighbor_array(self) -> np.ndarray:
        return np.asarray(self.scan_offsets(), dtype=np.int64)

    def edge_count(self) -> int:
        return self.n * self.regularity // 2

    def edges(self):
        """Yield each undirected edge once as ``(u, v)`` with ``u < v``."""
        for u in range(self.n):
            for w in self.neighbors(u):
                if u < w:
                    yield u, w


def build_mc(m: int, h: int) -> CirculantGraph:
    """Construct MC(m^h) = Cay(Z_{m^h}, {m^0, ..., m^(h-1)})."""
    if m < 2:
        raise DomainError(f"base m must be at least 2, got {m}")
    if h < 1:
        raise DomainError(f"exponent h must be at least 1, got {h}")
    # Compare logarithmically first so huge requests never materialise m**h.
    if h * (m.bit_length() - 1) > MAX_VERTICES.bit_length() or m**h > MAX_VERTICES:
        raise SizeLimitError(f"{m}^{h} exceeds the supported maximum {MAX_VERTICES}")
    n = m**h
    jumps = tuple(sorted({fold_jump(m**i, n) for i in range(h)}))
    return CirculantGraph(n=n, jumps=jumps, origin=(m, h))


def neighbors(g: CirculantGraph, v: int) -> list[int]:
    return g.neighbors(v)


def edge_count(g: CirculantGraph) -> int:
    return g.edge_count()
