import itertools
import random

import pytest

from primewitness.chains import chain_induces_prime, validate_chain
from primewitness.families import (
    Family,
    FamilyId,
    check_witness,
    find_induced_copy,
    find_induced_embedding,
    find_prime_chain,
    find_witness_any,
    generate,
)
from primewitness.graphs import Graph, are_isomorphic, complement
from primewitness.homogeneous import is_prime
from primewitness.witnesses import ChainWitness, Witness

from util import random_graph


def test_family_id_parsing():
    fid = FamilyId.parse("half-graph:5")
    assert fid == FamilyId(Family.HALF_GRAPH, 5)
    fid = FamilyId.parse("thin-spider:4!")
    assert fid == FamilyId(Family.THIN_SPIDER, 4, complemented=True)
    assert str(fid) == "thin-spider:4!"
    for bad in ("k2:1", "half-graph", "half-graph:x", "half-graph:"):
        with pytest.raises(ValueError):
            FamilyId.parse(bad)


def test_generate_size_guard():
    with pytest.raises(ValueError):
        generate(FamilyId(Family.HALF_GRAPH, 0))
    with pytest.raises(ValueError):
        generate(FamilyId(Family.HALF_GRAPH, (1 << 16) + 1))


def _expected_counts(fam: Family, n: int) -> tuple[int, int]:
    pairs = n * (n - 1) // 2
    return {
        Family.HALF_GRAPH: (2 * n, n * (n + 1) // 2),
        Family.HALF_SPLIT: (2 * n, n * (n + 1) // 2 + pairs),
        Family.HALF_SPLIT_APEX: (2 * n + 1, n * (n + 1) // 2 + pairs + n),
        Family.HALF_SPLIT_PENDANT: (2 * n + 1, n * (n + 1) // 2 + pairs + 1),
        Family.THIN_SPIDER: (2 * n, n + pairs),
        Family.THICK_SPIDER: (2 * n, n * (n - 1) + pairs),
        Family.MATCHING: (2 * n, n),
        Family.LINE_K2N: (2 * n, 2 * pairs + n),
        Family.SUBDIVIDED_STAR: (2 * n + 1, 2 * n),
        Family.PRIME_CHAIN: (n + 1, n),
    }[fam]


@pytest.mark.parametrize("fam", [f for f in Family if not f.value.startswith("compl-")])
@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_generator_closed_forms(fam, n):
    g = generate(FamilyId(fam, n)).graph
    nv, ne = _expected_counts(fam, n)
    assert g.n == nv and g.edge_count() == ne


def test_complemented_tags_and_flag():
    for fam, base in (
        (Family.COMPL_LINE_K2N, Family.LINE_K2N),
        (Family.COMPL_HALF_SPLIT_PENDANT, Family.HALF_SPLIT_PENDANT),
    ):
        for n in (2, 4):
            assert generate(FamilyId(fam, n)).graph == complement(
                generate(FamilyId(base, n)).graph
            )
            # the complemented flag undoes the tag
            assert generate(FamilyId(fam, n, complemented=True)).graph == generate(
                FamilyId(base, n)
            ).graph


def test_half_graph_small_edges():
    h2 = generate(FamilyId(Family.HALF_GRAPH, 2)).graph
    assert sorted(h2.edges()) == [(0, 2), (1, 2), (1, 3)]  # a1b1, a2b1, a2b2


def test_thin_spider_one_leg_is_an_edge():
    g = generate(FamilyId(Family.THIN_SPIDER, 1)).graph
    assert g.n == 2 and g.edge_count() == 1


def test_line_k2n_is_two_cliques_plus_matching():
    g = generate(FamilyId(Family.LINE_K2N, 5)).graph
    for s, t in itertools.combinations(range(5), 2):
        assert g.adjacent(s, t) and g.adjacent(5 + s, 5 + t)
    for s in range(5):
        for t in range(5):
            assert g.adjacent(s, 5 + t) == (s == t)


def _line_graph(g: Graph) -> Graph:
    es = list(g.edges())
    out = []
    for i, j in itertools.combinations(range(len(es)), 2):
        if set(es[i]) & set(es[j]):
            out.append((i, j))
    return Graph.from_edges(len(es), out)


def test_thin_spider_is_line_graph_of_subdivided_star():
    star = generate(FamilyId(Family.SUBDIVIDED_STAR, 5)).graph
    thin = generate(FamilyId(Family.THIN_SPIDER, 5)).graph
    assert are_isomorphic(_line_graph(star), thin)


def test_roles_match_adjacency_rules():
    for n in (1, 3, 6):
        labeled = generate(FamilyId(Family.HALF_GRAPH, n))
        idx = {r: v for v, r in enumerate(labeled.roles)}
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                assert labeled.graph.adjacent(idx[f"a{i}"], idx[f"b{j}"]) == (i >= j)
    pend = generate(FamilyId(Family.HALF_SPLIT_PENDANT, 4))
    idx = {r: v for v, r in enumerate(pend.roles)}
    assert pend.graph.degree(idx["pendant"]) == 1
    assert pend.graph.adjacent(idx["pendant"], idx["a4"])


def test_nonprime_fixtures():
    for n in range(2, 6):
        assert not is_prime(generate(FamilyId(Family.HALF_SPLIT, n)).graph)
        assert not is_prime(generate(FamilyId(Family.MATCHING, n)).graph)


# find_induced_copy ---------------------------------------------------------

def test_half_graph_contains_smaller():
    h3 = generate(FamilyId(Family.HALF_GRAPH, 3)).graph
    emb = find_induced_copy(h3, FamilyId(Family.HALF_GRAPH, 2))
    assert emb is not None
    assert check_witness(h3, Witness(FamilyId(Family.HALF_GRAPH, 2), emb))


def test_clique_contains_no_matching():
    assert find_induced_copy(Graph.complete(4), FamilyId(Family.MATCHING, 2)) is None


def test_apex_contains_half_split():
    host = generate(FamilyId(Family.HALF_SPLIT_APEX, 5)).graph
    emb = find_induced_copy(host, FamilyId(Family.HALF_SPLIT, 5))
    assert emb is not None
    assert check_witness(host, Witness(FamilyId(Family.HALF_SPLIT, 5), emb))


def _naive_contains(host: Graph, pat: Graph) -> bool:
    if pat.n > host.n:
        return False
    for sub in itertools.permutations(range(host.n), pat.n):
        if all(
            pat.adjacent(i, j) == host.adjacent(sub[i], sub[j])
            for i, j in itertools.combinations(range(pat.n), 2)
        ):
            return True
    return False


def test_induced_copy_matches_naive_oracle():
    rng = random.Random(30)
    for _ in range(40):
        host = random_graph(rng, rng.randrange(5, 10))
        pat = random_graph(rng, rng.randrange(2, 7))
        assert (find_induced_embedding(host, pat) is not None) == _naive_contains(host, pat)


# find_witness_any ----------------------------------------------------------

def test_self_containment():
    host = generate(FamilyId(Family.HALF_GRAPH, 10)).graph
    w = find_witness_any(host, 4)
    assert isinstance(w, Witness)
    assert w.family == FamilyId(Family.HALF_GRAPH, 4)


def test_complement_closure():
    host = complement(generate(FamilyId(Family.THIN_SPIDER, 8)).graph)
    w = find_witness_any(host, 5)
    assert isinstance(w, Witness)
    assert w.family.family in (Family.THIN_SPIDER, Family.THICK_SPIDER)
    assert check_witness(host, w)


def test_clique_has_no_outcome_of_size_four():
    assert find_witness_any(Graph.complete(5), 4) is None


def test_prime_chain_search_on_cycle():
    c7 = Graph.cycle(7)
    seq = find_prime_chain(c7, 5)
    assert seq is not None and len(seq) == 6
    assert validate_chain(c7, seq) == (True, None)
    assert chain_induces_prime(c7, seq)


def test_witness_chain_on_long_path():
    host = Graph.path(9)
    w = find_witness_any(host, 4)
    assert isinstance(w, ChainWitness) and w.length == 4
    assert check_witness(host, w)


def test_every_embedding_revalidates():
    rng = random.Random(31)
    for _ in range(20):
        host = random_graph(rng, rng.randrange(12, 20))
        w = find_witness_any(host, 3)
        if w is not None:
            assert check_witness(host, w)


def test_witness_search_is_deterministic():
    rng = random.Random(32)
    for _ in range(10):
        host = random_graph(rng, rng.randrange(10, 18))
        assert find_witness_any(host, 3) == find_witness_any(host, 3)


def test_absence_proofs_on_structured_hosts():
    # bipartite hosts contain no triangle-bearing patterns
    host = generate(FamilyId(Family.HALF_GRAPH, 10)).graph
    assert find_induced_copy(host, FamilyId(Family.THICK_SPIDER, 3)) is None
    assert find_induced_copy(host, FamilyId(Family.LINE_K2N, 3)) is None
    # and a clique-heavy host contains no induced pair of disjoint edges
    host = generate(FamilyId(Family.LINE_K2N, 6)).graph
    assert find_induced_copy(host, FamilyId(Family.SUBDIVIDED_STAR, 3)) is None
