"""Graph construction, the windmill families, subdivision, Laplacians, and
the edge-list text format."""

import random

import pytest
from hypothesis import given, strategies as st

from treecount import (
    EdgeListFormatError,
    Graph,
    complete_graph,
    connected_components,
    cycle_graph,
    det_bareiss,
    friendship_graph,
    is_connected,
    laplacian,
    parse_edge_list,
    reduced_laplacian,
    serialize_edge_list,
    subdivide,
)

from helpers import random_connected_graph


def test_graph_normalises_and_validates():
    g = Graph(3, [(2, 0), (0, 1)])
    assert g.edges == {(0, 2), (0, 1)}
    assert g.has_edge(2, 0) and not g.has_edge(1, 2)
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(-1)


def test_friendship_shape():
    for k in (1, 2, 5, 9):
        g = friendship_graph(k)
        assert g.n == 2 * k + 1
        assert g.num_edges == 3 * k
        degrees = g.degrees()
        assert degrees[0] == 2 * k
        assert all(d == 2 for d in degrees[1:])
    with pytest.raises(ValueError):
        friendship_graph(0)


def test_friendship_block_layout():
    g = friendship_graph(2)
    assert g.edges == {(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)}


def test_cycle_and_complete():
    c = cycle_graph(5)
    assert c.n == 5 and c.num_edges == 5
    assert all(d == 2 for d in c.degrees())
    k4 = complete_graph(4)
    assert k4.num_edges == 6
    assert all(d == 3 for d in k4.degrees())
    assert complete_graph(1).num_edges == 0
    with pytest.raises(ValueError):
        cycle_graph(2)
    with pytest.raises(ValueError):
        complete_graph(0)


def test_subdivide_counts():
    for k in range(1, 7):
        s = subdivide(friendship_graph(k))
        assert s.n == 5 * k + 1
        assert s.num_edges == 6 * k
        degrees = s.degrees()
        assert degrees[0] == 2 * k
        assert all(d == 2 for d in degrees[1:])


def test_subdivide_triangle_matches_six_cycle():
    s = subdivide(friendship_graph(1))
    c6 = cycle_graph(6)
    assert (s.n, s.num_edges) == (c6.n, c6.num_edges)
    assert sorted(s.degrees()) == sorted(c6.degrees())
    assert is_connected(s)


def test_subdivide_labels_are_deterministic():
    # triangle edges sorted: (0,1), (0,2), (1,2) -> midpoints 3, 4, 5
    s = subdivide(friendship_graph(1))
    assert s.edges == {(0, 3), (1, 3), (0, 4), (2, 4), (1, 5), (2, 5)}


def test_subdivide_single_edge():
    s = subdivide(Graph(2, [(0, 1)]))
    assert s.n == 3 and s.edges == {(0, 2), (1, 2)}


def test_subdivide_preserves_component_count():
    two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert connected_components(two_triangles) == 2
    assert connected_components(subdivide(two_triangles)) == 2
    rng = random.Random(7)
    for _ in range(20):
        g = random_connected_graph(rng)
        assert connected_components(subdivide(g)) == 1


def test_laplacian_triangle():
    L = laplacian(friendship_graph(1))
    assert L.rows == ((2, -1, -1), (-1, 2, -1), (-1, -1, 2))


def test_laplacian_row_sums_and_symmetry():
    for g in (friendship_graph(4), subdivide(friendship_graph(2)), cycle_graph(7), complete_graph(5)):
        L = laplacian(g)
        assert L == L.transpose()
        assert all(sum(row) == 0 for row in L.rows)
        assert det_bareiss(L) == 0
        assert all(L[v][v] == g.degree(v) for v in range(g.n))


def test_reduced_laplacian():
    r = reduced_laplacian(friendship_graph(1), 0)
    assert r.rows == ((2, -1), (-1, 2))
    r2 = reduced_laplacian(friendship_graph(2), 0)
    assert r2.rows == ((2, -1, 0, 0), (-1, 2, 0, 0), (0, 0, 2, -1), (0, 0, -1, 2))
    with pytest.raises(ValueError):
        reduced_laplacian(friendship_graph(1), 3)
    with pytest.raises(ValueError):
        reduced_laplacian(Graph(1), 0)


def test_parse_edge_list_example():
    g = parse_edge_list("p 3 3\n0 1\n1 2\n0 2\n")
    assert g == friendship_graph(1)


def test_serialize_sorted():
    assert serialize_edge_list(friendship_graph(1)) == "p 3 3\n0 1\n0 2\n1 2\n"
    assert serialize_edge_list(Graph(2)) == "p 2 0\n"


def test_parse_edge_list_comments_and_blanks():
    text = "# windmill\n\np 3 3\n0 1\n# middle\n1 2\n0 2\n"
    assert parse_edge_list(text) == friendship_graph(1)


@pytest.mark.parametrize(
    "text,line",
    [
        ("q 3 3\n0 1\n", 1),
        ("p 3\n", 1),
        ("p a b\n", 1),
        ("p 2 1\n0 0\n", 2),
        ("p 2 1\n0 2\n", 2),
        ("p 3 2\n0 1\n1 0\n", 3),
        ("p 3 1\n0 1\n1 2\n", 3),
        ("p 3 1\n0 1 2\n", 2),
        ("p 3 1\nx y\n", 2),
    ],
)
def test_parse_edge_list_errors_carry_line(text, line):
    with pytest.raises(EdgeListFormatError) as err:
        parse_edge_list(text)
    assert err.value.line == line


def test_parse_edge_list_missing_lines():
    with pytest.raises(EdgeListFormatError):
        parse_edge_list("p 3 2\n0 1\n")
    with pytest.raises(EdgeListFormatError):
        parse_edge_list("# empty\n")


@given(st.integers(1, 9), st.data())
def test_edge_list_round_trip(n, data):
    possible = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = data.draw(st.sets(st.sampled_from(possible))) if possible else set()
    g = Graph(n, chosen)
    assert parse_edge_list(serialize_edge_list(g)) == g
