"""Reference computations used only by the tests.

Each oracle is written from the definitions and shares no code path with
the package it checks.
"""

from collections import deque

import numpy as np


def circulant_adjacency(n, jumps):
    """Neighbour sets straight from |v - w| mod n in S u (n - S)."""
    steps = {j % n for j in jumps} | {(-j) % n for j in jumps}
    steps.discard(0)
    return [sorted((v + s) % n for s in steps) for v in range(n)]


def naive_bfs(adj, source):
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def sequential_bfs_tree(n, offsets, source):
    """Textbook queue BFS with an explicit scan order; returns (dist, parent)."""
    dist = [-1] * n
    parent = [-1] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for off in offsets:
            w = (v + off) % n
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                parent[w] = v
                queue.append(w)
    return dist, parent


def mc_row(m, h):
    """Distance row of MC(m^h) by plain BFS."""
    n = m**h
    return naive_bfs(circulant_adjacency(n, [m**i for i in range(h)]), 0)


def dense_eigenvalues(row):
    n = len(row)
    mat = np.array([[row[(j - i) % n] for j in range(n)] for i in range(n)], dtype=float)
    return np.sort(np.linalg.eigvalsh(mat))[::-1]


def count_inner(paths):
    loads = {}
    for p in paths:
        for v in p[1:-1]:
            loads[v] = loads.get(v, 0) + 1
    return loads
