import itertools
import random

import pytest

from primewitness.families import Family, FamilyId, generate
from primewitness.graphs import (
    Graph,
    Graph6Error,
    are_isomorphic,
    complement,
    emit_graph6,
    find_isomorphism,
    induced_subgraph,
    parse_graph6,
)

from util import all_graphs, random_graph


def test_constructor_rejects_bad_rows():
    with pytest.raises(ValueError):
        Graph(2, [0b10])  # asymmetric
    with pytest.raises(ValueError):
        Graph(2, [0b01, 0b10])  # self loop
    with pytest.raises(ValueError):
        Graph(1, [0b10, 0])  # wrong row count


def test_complement_of_complete_is_empty():
    assert complement(Graph.complete(3)) == Graph.empty(3)
    assert complement(Graph.empty(4)) == Graph.complete(4)


def test_complement_is_involution():
    rng = random.Random(1)
    for _ in range(200):
        g = random_graph(rng, rng.randrange(0, 11))
        assert complement(complement(g)) == g


def test_complement_of_thin_spider_is_thick_spider():
    thin = generate(FamilyId(Family.THIN_SPIDER, 5)).graph
    thick = generate(FamilyId(Family.THICK_SPIDER, 5)).graph
    assert are_isomorphic(complement(thin), thick)


def test_induced_subgraph_identity_and_prefix():
    p4 = Graph.path(4)
    whole, back = induced_subgraph(p4, range(4))
    assert whole == p4 and back == (0, 1, 2, 3)
    sub, back = induced_subgraph(p4, [0, 1, 2])
    assert sub == Graph.path(3) and back == (0, 1, 2)


def test_induced_subgraph_of_half_graph():
    h3 = generate(FamilyId(Family.HALF_GRAPH, 3)).graph
    h2 = generate(FamilyId(Family.HALF_GRAPH, 2)).graph
    # a1, a2, b1, b2 of H3 sit at indices 0, 1, 3, 4
    sub, _ = induced_subgraph(h3, [0, 1, 3, 4])
    assert sub == h2


def test_induced_subgraph_edge_restriction():
    rng = random.Random(2)
    for _ in range(100):
        g = random_graph(rng, 9)
        picked = sorted(rng.sample(range(9), rng.randrange(0, 10)))
        sub, back = induced_subgraph(g, picked)
        expected = {
            (i, j)
            for i, j in itertools.combinations(range(len(picked)), 2)
            if g.adjacent(back[i], back[j])
        }
        assert set(sub.edges()) == expected


def test_p4_isomorphic_to_its_complement():
    p4 = Graph.path(4)
    m = find_isomorphism(p4, complement(p4))
    assert m is not None
    for i, j in itertools.combinations(range(4), 2):
        assert p4.adjacent(i, j) == complement(p4).adjacent(m[i], m[j])


def test_triangle_not_isomorphic_to_path():
    assert not are_isomorphic(Graph.complete(3), Graph.path(3))


def _brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    for perm in itertools.permutations(range(g.n)):
        if all(
            g.adjacent(i, j) == h.adjacent(perm[i], perm[j])
            for i, j in itertools.combinations(range(g.n), 2)
        ):
            return True
    return False


def test_isomorphism_matches_permutation_oracle():
    rng = random.Random(3)
    for _ in range(120):
        n = rng.randrange(1, 8)
        g = random_graph(rng, n)
        if rng.random() < 0.5:
            perm = list(range(n))
            rng.shuffle(perm)
            rows = [0] * n
            for i, j in g.edges():
                rows[perm[i]] |= 1 << perm[j]
                rows[perm[j]] |= 1 << perm[i]
            h = Graph(n, rows)
        else:
            h = random_graph(rng, n)
        assert are_isomorphic(g, h) == _brute_isomorphic(g, h)


# graph6 -------------------------------------------------------------------

def test_parse_known_encodings():
    k2 = parse_graph6("A_")
    assert k2.n == 2 and k2.adjacent(0, 1)
    assert emit_graph6(Graph.empty(1)) == "@"
    assert emit_graph6(Graph.empty(0)) == "?"
    # header tolerated on input, never emitted
    assert parse_graph6(">>graph6<<A_") == k2
    assert not emit_graph6(k2).startswith(">>")


def test_graph6_round_trip_random():
    rng = random.Random(4)
    for _ in range(1000):
        g = random_graph(rng, rng.randrange(0, 21))
        text = emit_graph6(g)
        assert parse_graph6(text) == g
        assert emit_graph6(parse_graph6(text)) == text


def test_graph6_round_trip_large_n():
    rng = random.Random(5)
    g = random_graph(rng, 100, 0.1)
    text = emit_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g


def test_graph6_errors_carry_offsets():
    with pytest.raises(Graph6Error) as e:
        parse_graph6("")
    assert e.value.offset == 0
    with pytest.raises(Graph6Error) as e:
        parse_graph6("C")  # 4 vertices need one data char
    with pytest.raises(Graph6Error) as e:
        parse_graph6("A_X")  # trailing garbage
    assert e.value.offset == 2
    with pytest.raises(Graph6Error) as e:
        parse_graph6("A\x1f")  # out-of-range character
    assert e.value.offset == 1


def test_graph6_exhaustive_small():
    for n in range(5):
        for g in all_graphs(n):
            assert parse_graph6(emit_graph6(g)) == g


def test_graph6_fuzz_never_crashes():
    # arbitrary short strings either parse or raise Graph6Error, nothing else;
    # whatever parses survives a canonical round trip
    rng = random.Random(6)
    alphabet = [chr(c) for c in range(32, 128)]
    for _ in range(2000):
        text = "".join(rng.choice(alphabet) for _ in range(rng.randrange(0, 12)))
        try:
            g = parse_graph6(text)
        except Graph6Error:
            continue
        assert parse_graph6(emit_graph6(g)) == g
