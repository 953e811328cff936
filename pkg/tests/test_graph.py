import numpy as np
import pytest

from coverdepth.graph import (
    Graph,
    GraphFormatError,
    adjacency_matrix,
    bfs_levels,
    complement,
    components,
    csr,
    disjoint_union,
    eccentricity,
    gen_complete,
    gen_cycle,
    gen_path,
    gen_petersen,
    gen_star,
    induced_subgraph,
    is_connected,
    parse_graph,
    read_graph,
    relabel,
    serialize_graph,
    write_graph,
)


def test_from_edges_sorts_and_dedups_direction():
    g = Graph.from_edges(3, [(2, 0), (1, 2)])
    assert g.adjacency == ((2,), (2,), (0, 1))
    assert g.m == 2
    assert g.edges() == [(0, 2), (1, 2)]
    assert g.has_edge(0, 2) and g.has_edge(2, 0) and not g.has_edge(0, 1)


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 1), (1, 0)], [(0, 5)]])
def test_from_edges_rejects_bad_edges(edges):
    with pytest.raises((ValueError, IndexError)):
        Graph.from_edges(3, edges)


def test_roundtrip_text_format(tmp_path):
    g = gen_petersen()
    text = serialize_graph(g)
    assert text.splitlines()[0] == "10 15"
    assert text.endswith("\n")
    assert parse_graph(text) == g
    assert parse_graph(text.encode()) == g
    path = tmp_path / "p.txt"
    write_graph(g, str(path))
    assert read_graph(str(path)) == g


def test_parse_skips_comments_and_blank_lines():
    g = parse_graph("# triangle\n3 3\n0 1\n\n# middle\n1 2\n2 0")
    assert g == gen_cycle(3)


@pytest.mark.parametrize(
    "text, line",
    [
        ("x 1\n0 1\n", 1),
        ("3 1\n0\n", 2),
        ("3 1\n0 3\n", 2),
        ("3 1\n1 1\n", 2),
        ("3 2\n0 1\n1 0\n", 3),
        ("3 2\n0 1\n", 1),
        ("0 1 # x\n", 1),
        ("1 2 3\n", 1),
        ("3 1\n0 1\n1 2\n", 3),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(GraphFormatError) as err:
        parse_graph(text)
    if line is not None:
        assert err.value.line == line


def test_generators():
    assert gen_path(1).n == 1 and gen_path(1).m == 0
    assert gen_path(5).m == 4
    assert all(gen_cycle(7).degree(v) == 2 for v in range(7))
    assert gen_complete(5).m == 10
    star = gen_star(4)
    assert star.degree(0) == 4 and star.n == 5
    p = gen_petersen()
    assert p.m == 15 and all(p.degree(v) == 3 for v in range(10))
    with pytest.raises(ValueError):
        gen_cycle(2)


def test_disjoint_union_offset():
    u, off = disjoint_union(gen_path(2), gen_cycle(3))
    assert off == 2 and u.n == 5 and u.m == 4
    assert u.has_edge(2, 3) and not u.has_edge(1, 2)


def test_complement_involution():
    g = gen_path(5)
    assert complement(complement(g)) == g
    assert complement(g).m == 10 - 4


def test_relabel_preserves_structure():
    g = gen_path(4)
    h = relabel(g, [3, 2, 1, 0])
    assert h.edges() == g.edges()
    h2 = relabel(g, [1, 0, 2, 3])
    assert h2.has_edge(1, 2) is False and h2.has_edge(0, 2)


def test_induced_subgraph():
    sub, kept = induced_subgraph(gen_cycle(5), [0, 1, 2])
    assert kept == [0, 1, 2]
    assert sub == gen_path(3)


def test_bfs_and_connectivity():
    g = gen_path(5)
    assert bfs_levels(g, 0) == [0, 1, 2, 3, 4]
    assert eccentricity(g, 2) == 2
    two = disjoint_union(gen_cycle(3), gen_cycle(3))[0]
    assert not is_connected(two)
    assert sorted(map(sorted, components(two))) == [[0, 1, 2], [3, 4, 5]]
    assert bfs_levels(two, 0)[3] == -1
    with pytest.raises(ValueError):
        eccentricity(two, 0)


def test_array_forms():
    g = gen_cycle(4)
    a = adjacency_matrix(g)
    assert a.dtype == np.uint8 and (a == a.T).all() and a.sum() == 8
    off, tgt = csr(g)
    assert list(off) == [0, 2, 4, 6, 8]
    assert sorted(tgt[off[0]:off[1]]) == [1, 3]
