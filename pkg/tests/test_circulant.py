import pytest
from hypothesis import given, strategies as st

from mcgraphs import CirculantGraph, build_mc, edge_count, neighbors
from mcgraphs.errors import DomainError, SizeLimitError


@pytest.mark.parametrize("m,h,n,jumps,r", [
    (2, 3, 8, (1, 2, 4), 5),
    (3, 2, 9, (1, 3), 4),
    (2, 1, 2, (1,), 1),
])
def test_build_mc(m, h, n, jumps, r):
    g = build_mc(m, h)
    assert (g.n, g.jumps, g.regularity, g.origin) == (n, jumps, r, (m, h))


@pytest.mark.parametrize("m,h", [(1, 3), (0, 1), (2, 0), (3, -1)])
def test_build_mc_domain(m, h):
    with pytest.raises(DomainError):
        build_mc(m, h)


def test_build_mc_too_large():
    with pytest.raises(SizeLimitError):
        build_mc(2, 63)
    with pytest.raises(SizeLimitError):
        build_mc(10, 10**6)


def test_neighbors_scan_order():
    # m^(h-1) first, then the remaining jumps descending, +j before -j
    assert neighbors(build_mc(2, 3), 0) == [4, 2, 6, 1, 7]
    assert set(neighbors(build_mc(2, 3), 0)) == {1, 2, 4, 6, 7}
    assert neighbors(build_mc(3, 2), 0) == [3, 6, 1, 8]
    assert neighbors(build_mc(2, 1), 1) == [0]


def test_neighbors_out_of_range():
    with pytest.raises(DomainError):
        build_mc(2, 3).neighbors(8)


@pytest.mark.parametrize("m,h,count", [(2, 3, 20), (3, 2, 18), (2, 1, 1)])
def test_edge_count(m, h, count):
    assert edge_count(build_mc(m, h)) == count
    assert len(list(build_mc(m, h).edges())) == count


@pytest.mark.parametrize("m,hmax", [(2, 13), (3, 8), (5, 5), (4, 6)])
def test_degree_equals_regularity(m, hmax):
    for h in range(1, hmax + 1):
        g = build_mc(m, h)
        if g.n > 10**4:
            break
        assert all(len(g.neighbors(v)) == g.regularity for v in range(g.n))
        expected = 2 * h - 1 if m == 2 else 2 * h
        assert g.regularity == expected


@given(m=st.integers(2, 6), h=st.integers(1, 5), data=st.data())
def test_neighbor_set_definition(m, h, data):
    g = build_mc(m, h)
    v = data.draw(st.integers(0, g.n - 1))
    allowed = set(g.jumps) | {g.n - j for j in g.jumps}
    assert set(g.neighbors(v)) == {w for w in range(g.n) if (w - v) % g.n in allowed}


@pytest.mark.parametrize("m", [2, 3])
def test_jumps_nested(m):
    for h in range(1, 12):
        small, big = build_mc(m, h), build_mc(m, h + 1)
        assert set(big.jumps) == set(small.jumps) | {m**h}


def test_generic_circulant_folds_and_connectivity():
    g = CirculantGraph(12, (10, 4))
    assert g.jumps == (2, 4)
    assert not g.is_connected
    assert g.regularity == 4
    assert CirculantGraph(16, [1, 4]).is_connected
    with pytest.raises(DomainError):
        CirculantGraph(6, (6,))
