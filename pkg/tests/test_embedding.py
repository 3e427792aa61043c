import pytest

from runcube import embedding as emb
from runcube import graph, strings
from runcube.errors import ValidationError


def test_printed_n3_table_bit_exact():
    for word, image in emb.ENCODING_TABLE_N3.items():
        res = emb.encode(word)
        assert res.image == image
        assert res.label == image[:8]
        assert res.host_dim == 8


def test_encode_shapes_and_validity():
    for n in range(1, 7):
        seen = set()
        for v in range(1 << n):
            word = format(v, "0%db" % n)
            res = emb.encode(word)
            assert len(res.image) == 3 * n + 1
            assert res.image.endswith("00")
            assert strings.is_run_constrained(res.image)
            assert res.label == res.image[: 3 * n - 1]
            seen.add(res.label)
        assert len(seen) == 1 << n


def test_encode_rejects_junk():
    with pytest.raises(ValidationError):
        emb.encode("")
    with pytest.raises(ValidationError):
        emb.encode("01a")


def test_dilation_frozen_values():
    for n, want in emb.DILATION_PREFIX.items():
        assert emb.dilation(n).dilation == want


def test_dilation_worst_edge_is_deterministic():
    res = emb.dilation(3)
    again = emb.dilation(3)
    assert res.worst_edge == again.worst_edge
    assert res.host_dim == 8


def test_cube_gf_matches_brute_interval_counts():
    series = emb.cube_gf().expand(10)
    for n in range(1, 11):
        brute = graph.count_induced_cubes(n)
        poly = series.coefficient(n)
        got = [poly.coefficient("x", k).constant_term() for k in range(len(brute))]
        assert got == brute
        assert poly.degree("x") < len(brute)


def test_smallest_hosts():
    records = emb.smallest_host_probe(8)
    assert [r.smallest_host for r in records] == [1, 3, 6, 8, 11, 13, 16, 18]
    assert all(r.smallest_host == r.conjectured for r in records)


def test_reports():
    for rep in emb.suite(max_n=3, order=16):
        assert rep.ok, "\n".join(rep.failures)
