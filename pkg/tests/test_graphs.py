import json
from collections import Counter

import pytest

import oracles
from multisym.graphs import (
    Graph,
    complement,
    complete_multipartite,
    graph_join,
    jmaximal_partitions,
    parse_graph,
    simple_graph_classes,
    stable_partitions,
)
from multisym.partitions import Partition, SetPartition, enumerate_set_partitions, partitions_of, refines

BELL = [1, 1, 2, 5, 15, 52, 203]


def test_graph_canonical_form():
    a = Graph(3, ((2, 1), (3, 2)))
    b = Graph(3, [[3, 2], [1, 2]])
    assert a == b and a.edges == ((1, 2), (2, 3))
    with pytest.raises(ValueError):
        Graph(2, ((1, 3),))
    with pytest.raises(ValueError):
        Graph(-1)


def test_loops_and_parallel_edges():
    g = Graph(2, ((1, 2), (1, 2), (2, 2)))
    assert g.has_loop() and not g.is_simple()
    assert g.simplified() == Graph(2, ((1, 2), (2, 2)))
    assert Graph.path(4).is_simple()


def test_named_constructors():
    assert Graph.complete(3).edges == ((1, 2), (1, 3), (2, 3))
    assert Graph.cycle(4).edges == ((1, 2), (1, 4), (2, 3), (3, 4))
    assert Graph.empty(3).edges == ()
    with pytest.raises(ValueError):
        Graph.cycle(2)


def test_complete_multipartite_examples():
    assert complete_multipartite((1, 1, 1)) == Graph.complete(3)
    assert complete_multipartite((4,)) == Graph.empty(4)
    g = complete_multipartite((2, 1))
    assert g.edges == ((1, 3), (2, 3))
    assert complete_multipartite(()) == Graph(0)


@pytest.mark.parametrize("lam", [lam for n in range(1, 7) for lam in partitions_of(n)])
def test_multipartite_is_join_of_edgeless(lam):
    g = Graph(0)
    for part in lam:
        g = graph_join(g, Graph.empty(part))
    assert g == complete_multipartite(lam)
    assert len(stable_partitions(g, lam)) == 1


def test_complement_examples():
    assert complement(Graph.complete(4)) == Graph.empty(4)
    assert complement(complete_multipartite((2, 1))) == Graph(3, ((1, 2),))
    with pytest.raises(ValueError):
        complement(Graph(2, ((1, 2), (1, 2))))
    with pytest.raises(ValueError):
        complement(Graph(2, ((1, 1),)))


@pytest.mark.parametrize("n", range(0, 6))
def test_complement_involution(n):
    for g in simple_graph_classes(n):
        assert complement(complement(g)) == g
        assert len(complement(g).edges) + len(g.edges) == n * (n - 1) // 2


def test_join_examples():
    assert graph_join(Graph.empty(1), Graph.empty(1)) == Graph.complete(2)
    k23 = graph_join(Graph.empty(2), Graph.empty(3))
    assert k23.edges == tuple((u, v) for u in (1, 2) for v in (3, 4, 5))


def test_join_edge_count_and_associativity():
    g, h, k = Graph.path(3), Graph(2, ((1, 2), (1, 2))), Graph.cycle(3)
    j = graph_join(g, h)
    assert len(j.edges) == len(g.edges) + len(h.edges) + g.n * h.n
    assert graph_join(graph_join(g, h), k) == graph_join(g, graph_join(h, k))


def test_stable_partitions_examples():
    p3 = Graph.path(3)
    shapes = Counter(r.shape for r in stable_partitions(p3))
    assert shapes == {(1, 1, 1): 1, (2, 1): 1}
    assert stable_partitions(p3, (2, 1))[0].partition == SetPartition.parse("1,3|2")
    assert len(stable_partitions(Graph.empty(4))) == BELL[4]
    assert len(stable_partitions(Graph.complete(4))) == 1
    assert stable_partitions(Graph(2, ((1, 1),))) == []


def test_jmaximal_examples():
    got = [r.partition for r in jmaximal_partitions(Graph.path(3), 0)]
    assert got == [SetPartition.parse("1,3|2")]
    k2 = {(r.partition, r.internal_edges) for r in jmaximal_partitions(Graph.complete(2), 1)}
    assert k2 == {(SetPartition.parse("1|2"), 0), (SetPartition.parse("1,2"), 1)}
    assert [r.partition for r in jmaximal_partitions(Graph.empty(3), 0)] == [SetPartition.coarsest(3)]
    with pytest.raises(ValueError):
        jmaximal_partitions(Graph.path(2), -1)


def test_internal_edges_count_multiplicity():
    g = Graph(2, ((1, 2), (1, 2), (1, 1)))
    by_part = {r.partition: r.internal_edges for r in jmaximal_partitions(g, 5)}
    # the loop at 1 stays internal in every partition
    assert by_part == {SetPartition.finest(2): 1, SetPartition.coarsest(2): 3}
    assert [r.partition for r in jmaximal_partitions(g, 1)] == [SetPartition.finest(2)]
    assert jmaximal_partitions(g, 0) == []


@pytest.mark.parametrize("n", range(0, 6))
def test_jmaximal_against_definition(n):
    for g in simple_graph_classes(n):
        for j in range(len(g.edges) + 1):
            got = {frozenset(map(frozenset, r.partition.blocks)) for r in jmaximal_partitions(g, j)}
            want = {p for p in oracles.set_partitions(n) if oracles.is_jmaximal(p, g.edges, j)}
            assert got == want


def _stable(blocks, edges):
    b = oracles.block_of(blocks)
    return all(b[u] != b[v] for u, v in edges)


@pytest.mark.parametrize("n", range(0, 7))
def test_maximal_stable_partitions(n):
    for g in simple_graph_classes(n):
        maximal = [r.partition for r in jmaximal_partitions(g, 0)]
        for m in maximal:
            blocks = [set(b) for b in m.blocks]
            assert _stable(blocks, g.edges)
            # merging any two blocks breaks stability
            for i in range(len(blocks)):
                for k in range(i + 1, len(blocks)):
                    merged = [b for t, b in enumerate(blocks) if t not in (i, k)] + [blocks[i] | blocks[k]]
                    assert not _stable(merged, g.edges)
        if n <= 5:
            for p in enumerate_set_partitions(n):
                stable = _stable([set(b) for b in p.blocks], g.edges)
                assert stable == any(refines(p, m) for m in maximal)


def test_simple_graph_class_counts():
    assert [len(simple_graph_classes(n)) for n in range(7)] == [1, 1, 2, 4, 11, 34, 156]


@pytest.mark.parametrize(
    "spec,expected",
    [
        ("path:4", Graph.path(4)),
        ("cycle:5", Graph.cycle(5)),
        ("complete:3", Graph.complete(3)),
        ("empty:4", Graph.empty(4)),
        ("multipartite:2,2,1", complete_multipartite((2, 2, 1))),
        ("multipartite:1,2", complete_multipartite((2, 1))),
        ('{"n":3,"edges":[[1,2],[1,2],[3,3]]}', Graph(3, ((1, 2), (1, 2), (3, 3)))),
    ],
)
def test_parse_graph(spec, expected):
    assert parse_graph(spec) == expected


def test_parse_graph_file(tmp_path):
    f = tmp_path / "g.json"
    f.write_text(json.dumps(Graph.cycle(4).to_json()))
    assert parse_graph(f"@{f}") == Graph.cycle(4)


@pytest.mark.parametrize("spec", ["path:x", "wheel:4", "{bad json", '{"n":2,"edges":[[1,3]]}', "@/no/such/file.json",
                                  "multipartite:2,a"])
def test_parse_graph_rejects(spec):
    with pytest.raises(ValueError):
        parse_graph(spec)


def test_report_shape():
    r = stable_partitions(Graph.empty(3), Partition((2, 1)))
    assert len(r) == 3 and all(x.shape == (2, 1) and x.internal_edges == 0 for x in r)
