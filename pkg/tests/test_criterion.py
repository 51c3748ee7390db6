import itertools
import random

import networkx as nx
import pytest

from bridgekit.criterion import (
    CERTIFIED,
    INCONCLUSIVE,
    AdjacencyGraph,
    CriterionOutOfScope,
    chords_adjacent,
    check,
    graph,
    has_cycle,
    is_two_connected,
    separating_family,
)
from bridgekit.diagram import HEMISPHERES, LOWER, UPPER, canonical_form, with_labels
from bridgekit.families import fig8_example, gen_kn, standard_unlink
from bridgekit.plat import plat_closure, standard_diagram

from corpus import random_reduced
from oracles import adjacent_by_faces, faces_brute


def G(n, *edges):
    return AdjacencyGraph(n, frozenset(frozenset(e) for e in edges))


def corpus(seed, count, **kw):
    rng = random.Random(seed)
    kw.setdefault("n_min", 3)
    kw.setdefault("len_max", 16)
    return [canonical_form(random_reduced(rng, **kw)) for _ in range(count)]


# --- 2-connectedness ------------------------------------------------------------

def test_small_graphs():
    assert is_two_connected(G(3, (1, 2), (2, 3), (1, 3))) == (True, None)
    ok, wit = is_two_connected(G(3, (1, 2), (2, 3)))
    assert not ok and wit.vertex == 2 and wit.components == ((1,), (3,))
    ok, wit = is_two_connected(G(3))
    assert not ok and wit.vertex in (1, 2, 3)


def test_two_connected_matches_networkx():
    rng = random.Random(0)
    for _ in range(400):
        n = rng.randint(3, 7)
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        edges = [e for e in pairs if rng.random() < 0.45]
        ref = nx.Graph()
        ref.add_nodes_from(range(1, n + 1))
        ref.add_edges_from(edges)
        ok, wit = is_two_connected(G(n, *edges))
        assert ok == nx.is_biconnected(ref)
        if not ok:
            sub = ref.copy()
            sub.remove_node(wit.vertex)
            assert nx.number_connected_components(sub) == len(wit.components) > 1


def test_has_cycle():
    g = G(4, (1, 2), (2, 3), (3, 4), (4, 1))
    assert has_cycle(g, [1, 2, 3, 4])
    assert not has_cycle(g, [1, 3, 2, 4])


# --- adjacency ------------------------------------------------------------------

def test_nested_pair_adjacent():
    # chords of one hemisphere on a plain loop; validation is not needed here
    d = standard_diagram(1)
    chords = ((0, 7), (2, 5))
    fake = type(d)(1, tuple(range(8)), chords, ())
    assert chords_adjacent(fake, UPPER, (0, 7), (2, 5))
    fake = type(d)(1, tuple(range(8)), chords + ((3, 4),), ())
    assert chords_adjacent(fake, UPPER, (0, 7), (2, 5))
    fake = type(d)(1, tuple(range(8)), ((0, 7), (1, 6), (2, 5)), ())
    assert not chords_adjacent(fake, UPPER, (0, 7), (2, 5))


def test_faces_small():
    d = standard_diagram(1)
    assert len(faces_brute(type(d)(1, tuple(range(6)), (), ()), UPPER)) == 1
    nested = ((0, 5), (1, 4), (2, 3))
    assert len(faces_brute(type(d)(1, tuple(range(6)), nested, ()), UPPER)) == 4


def test_adjacency_matches_faces():
    for d in corpus(1, 150, n_min=2, n_max=4):
        for h in HEMISPHERES:
            faces = faces_brute(d, h)
            assert len(faces) == len(d.chords(h)) + 1
            shared = adjacent_by_faces(d, h)
            for c1, c2 in itertools.combinations(d.chords(h), 2):
                assert chords_adjacent(d, h, c1, c2) == (frozenset((c1, c2)) in shared)


# --- families and graphs --------------------------------------------------------

def gap_points(d, i):
    a = d.puncture_position(2 * i)
    b = d.puncture_position(2 * i + 1) if i < d.n else d.size
    return [x + 0.5 for x in range(a, b)]


def separates(c, gi, gj):
    side = lambda x: c[0] < x < c[1]
    si, sj = {side(x) for x in gi}, {side(x) for x in gj}
    return len(si) == len(sj) == 1 and si != sj


def test_family_brute_force_and_nesting():
    for d in corpus(2, 120):
        for i, j in itertools.permutations(range(1, d.n + 1), 2):
            gi, gj = gap_points(d, i), gap_points(d, j)
            for h in HEMISPHERES:
                fam = separating_family(d, i, j, h)
                got = [c for c, _ in fam.chords]
                assert sorted(got) == sorted(c for c in d.chords(h) if separates(c, gi, gj))
                # each member's gap-i side contains the previous member's
                sides = []
                for c in got:
                    inner = set(range(c[0] + 1, c[1]))
                    outer = set(range(d.size)) - inner - set(c)
                    sides.append(inner if c[0] < gi[0] < c[1] else outer)
                assert all(a < b for a, b in zip(sides, sides[1:]))


def test_consecutive_edges_equal_all_pairs():
    for d in corpus(3, 120):
        for i, j in itertools.combinations(range(1, d.n + 1), 2):
            for h in HEMISPHERES:
                fam = separating_family(d, i, j, h)
                edges = set()
                for (c1, l1), (c2, l2) in itertools.combinations(fam.chords, 2):
                    if l1 != l2 and chords_adjacent(d, h, c1, c2):
                        edges.add(frozenset((l1, l2)))
                assert graph(d, i, j, h, fam).edges == edges


def test_family_direction_is_symmetric():
    for d in corpus(4, 40):
        for i, j in itertools.combinations(range(1, d.n + 1), 2):
            for h in HEMISPHERES:
                a = separating_family(d, i, j, h).chords
                b = separating_family(d, j, i, h).chords
                assert a == tuple(reversed(b))


# --- the examples ---------------------------------------------------------------

def test_unlink_has_empty_families():
    d = standard_unlink(3)
    assert separating_family(d, 1, 3, UPPER).chords == ()
    for i, j in itertools.combinations(range(1, 4), 2):
        for h in HEMISPHERES:
            assert graph(d, i, j, h).edges == frozenset()
    assert check(d).verdict == INCONCLUSIVE


def test_example_diagram():
    d = fig8_example()
    fam = separating_family(d, 1, 2, UPPER)
    assert set(fam.labels) == {1, 2, 3, 4}
    g = graph(d, 1, 2, UPPER)
    assert list(g.vertices) == [1, 2, 3, 4] and is_two_connected(g)[0]
    assert not is_two_connected(graph(d, 2, 3, UPPER))[0]
    r = check(d)
    assert r.verdict == INCONCLUSIVE
    assert (2, 3, UPPER) in {(f.i, f.j, f.hemisphere) for f in r.failures()}


def test_k4_certified():
    r = check(plat_closure(gen_kn(4)))
    assert r.verdict == CERTIFIED and len(r.records) == 12


def test_out_of_scope():
    with pytest.raises(CriterionOutOfScope):
        check(standard_diagram(2))
    with pytest.raises(ValueError):
        separating_family(standard_diagram(3), 2, 2, UPPER)
    with pytest.raises(ValueError):
        separating_family(standard_diagram(3), 1, 4, LOWER)


def test_verdict_ignores_arc_labels():
    rng = random.Random(13)
    for d in corpus(13, 40, n_max=4) + [fig8_example()]:
        perm = list(range(1, d.n + 1))
        rng.shuffle(perm)
        e = with_labels(d, [perm[lab - 1] for lab in d.arc_labels()])
        a, b = check(d), check(e)
        assert [r.two_connected for r in a.records] == [r.two_connected for r in b.records]
        for ra, rb in zip(a.records, b.records):
            mapped = {frozenset(perm[v - 1] for v in edge) for edge in ra.graph.edges}
            assert mapped == set(rb.graph.edges)
