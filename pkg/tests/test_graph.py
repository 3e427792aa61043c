from itertools import combinations

import pytest

from goldens import EDGE_COUNTS, R4_CENSUS
from runcube import graph, strings
from runcube.errors import DomainError, ResourceLimitError, StructureError, ValidationError


def hamming(a, b):
    return sum(x != y for x, y in zip(a, b))


@pytest.mark.parametrize("n", range(1, 11))
def test_adjacency_matches_pairwise_hamming(n):
    g = graph.build(n)
    labels = [g.label_string(i) for i in range(g.vertex_count)]
    assert len(labels) == strings.fibonacci(n + 2)
    want = {
        (i, j)
        for i, j in combinations(range(len(labels)), 2)
        if hamming(labels[i], labels[j]) == 1
    }
    assert set(g.edges()) == want


def test_edge_counts_frozen():
    for n, want in enumerate(EDGE_COUNTS, start=1):
        assert graph.edge_count(n) == want


def test_degree_census_r4():
    census = graph.degree_census(4)
    assert census.counts == R4_CENSUS
    assert census.vertex_total() == 8
    assert census.edge_total() == 10


def test_census_agrees_with_build():
    for n in range(1, 12):
        census = graph.degree_census(n)
        g = graph.build(n)
        assert census.vertex_total() == g.vertex_count
        assert census.edge_total() == g.edge_count
        brute = {}
        for i in range(g.vertex_count):
            key = (int(g.up_degrees[i]), int(g.down_degrees[i]))
            brute[key] = brute.get(key, 0) + 1
        assert census.counts == brute


def test_census_sharding_and_threads_are_invisible():
    base = graph.degree_census(12)
    assert graph.degree_census(12, shards=7).counts == base.counts
    assert graph.degree_census(12, threads=2).counts == base.counts


def test_vertex_degrees_matches_flips():
    for label in ("0000", "1000", "0100", "0010"):
        up, down = graph.vertex_degrees(4, label)
        assert (up, down) == strings.flip_degrees(label + "00")


def test_distances_and_eccentricity():
    g = graph.build(4)
    assert graph.eccentricity(g, "0000") == 2
    assert graph.diameter(graph.build(1)) == 1
    dist = graph.bfs_distances(g, "0000")
    assert int(dist[g.index_of("0000")]) == 0
    assert all(int(d) >= 0 for d in dist)


def test_bfs_rejects_bad_sources():
    g = graph.build(4)
    with pytest.raises(ValidationError):
        graph.bfs_distances(g, "0011")
    with pytest.raises(ValidationError):
        graph.bfs_distances(g, 99)


def test_maximal_vertices_have_no_up_flips():
    for n in range(1, 9):
        labels = graph.maximal_vertices(n)
        for label in labels:
            up, _ = strings.flip_degrees(label + "00")
            assert up == 0
        all_labels = [
            strings.mask_to_word(int(m), n) for m in graph.vertex_labels(n)
        ]
        others = set(all_labels) - set(labels)
        for label in others:
            up, _ = strings.flip_degrees(label + "00")
            assert up > 0


def test_closed_form_edge_count():
    for n in range(5, 14):
        assert graph.closed_form_edge_count(n) == EDGE_COUNTS[n - 1]
    with pytest.raises(DomainError):
        graph.closed_form_edge_count(4)


def test_count_induced_cubes_small():
    # R_1 is a single edge: two vertices, one edge, no squares
    assert graph.count_induced_cubes(1) == [2, 1]
    for n in range(1, 9):
        h = graph.count_induced_cubes(n)
        assert h[0] == strings.fibonacci(n + 2)
        assert h[1] == graph.edge_count(n)


def test_vertex_cap_enforced():
    with pytest.raises(ResourceLimitError):
        graph.build(30, cap=1000)
    with pytest.raises(ResourceLimitError):
        graph.degree_census(30, cap=1000)


def test_dot_output_mentions_every_vertex():
    g = graph.build(3)
    text = graph.to_dot(g)
    for i in range(g.vertex_count):
        assert '"%s"' % g.label_string(i) in text
    assert text.count("--") == g.edge_count
