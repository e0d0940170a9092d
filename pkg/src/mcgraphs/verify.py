"""Cross-check oracle BFS rows, recursive rows and closed forms."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import closed_forms as cf
from .circulant import build_mc
from .distance import BfsTree, bfs_distances, half_base3, recursive_rows, thresholds_base2


@dataclass
class HCheck:
    m: int
    h: int
    n: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def subtree_parts(tree: BfsTree, m: int, h: int) -> np.ndarray:
    """Label every vertex by the depth-1 ancestor it hangs under (0 root, 1 left, 2 middle, 3 right)."""
    n = tree.n
    anc = np.arange(n, dtype=np.int64)
    for _ in range(int(tree.level.max())):
        deep = tree.level[anc] > 1
        if not deep.any():
            break
        anc[deep] = tree.parent[anc[deep]]
    off = (anc - tree.root) % n
    labels = np.where(off <= n // 2, 1, 3)
    if m == 2:
        labels[off == 2 ** (h - 1)] = 2
    labels[tree.level == 0] = 0
    return labels


def threshold_parts(m: int, h: int) -> np.ndarray:
    n = m**h
    off = np.arange(n)
    if m == 2:
        max_lm, _ = thresholds_base2(h)
        labels = np.where(off > max_lm, 3, np.where(off >= n - max_lm, 2, 1))
    else:
        labels = np.where(off <= half_base3(h), 1, 3)
    labels[0] = 0
    return labels


def check_h(m: int, h: int) -> HCheck:
    """Run every cross-check for one exponent."""
    g = build_mc(m, h)
    res = HCheck(m, h, g.n)
    oracle, tree = bfs_distances(g)
    rec = recursive_rows(m, h, cap=h)[-1]
    if oracle != rec:
        bad = int(np.flatnonzero(oracle.dist != rec.dist)[0])
        res.failures.append(f"recursive row differs from BFS at vertex {bad}")
    if not oracle.is_symmetric():
        res.failures.append("BFS row is not symmetric")
    rho = cf.rho_closed(m, h)
    if oracle.transmission != rho:
        res.failures.append(f"row sum {oracle.transmission} != rho_closed {rho}")
    if oracle.diameter != cf.diam_closed(m, h):
        res.failures.append(f"diameter {oracle.diameter} != diam_closed {cf.diam_closed(m, h)}")
    if cf.diam_grc([m] * h) != cf.diam_closed(m, h):
        res.failures.append("diam_grc disagrees with diam_closed")
    if cf.mu_closed(m, h) * (g.n - 1) != oracle.transmission:
        res.failures.append("mu * (n - 1) != transmission")
    if cf.xi_closed(m, h) != oracle.transmission - (g.n - 1):
        res.failures.append("xi != transmission - (n - 1)")
    if h >= 2:
        prev, _ = bfs_distances(build_mc(m, h - 1))
        p = prev.n
        if m == 2:
            keep, _ = thresholds_base2(h - 1)
            j = np.arange(p + 1)
            expected = prev.dist[j % p] + (j > keep)
        else:
            keep = half_base3(h - 1)
            j = np.arange(p)
            expected = np.concatenate([prev.dist + (j > keep), prev.dist[:keep + 1] + 1])
        got = oracle.dist[:expected.shape[0]]
        if not np.array_equal(got, expected):
            res.failures.append(f"copy/+1 split at {keep} does not hold on the BFS row")
    if m in (2, 3):
        if not np.array_equal(subtree_parts(tree, m, h), threshold_parts(m, h)):
            res.failures.append("threshold part labels disagree with BFS subtrees")
        if m == 2 and h >= 3 and thresholds_base2(h)[0] != 2**h - thresholds_base2(h - 1)[1]:
            res.failures.append("max[L u M] != 2^h - min[R] of the previous tree")
    return res


def _check_args(args):
    return check_h(*args)


def verify(m: int, h_max: int, jobs: int = 1) -> list[HCheck]:
    """Checks for h = 1..h_max, in order; ``jobs > 1`` spreads exponents over processes."""
    tasks = [(m, h) for h in range(1, h_max + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_check_args, tasks))
    return [check_h(m, h) for m, h in tasks]
