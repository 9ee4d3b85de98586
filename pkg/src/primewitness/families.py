"""Generators and induced-copy finders for the named graph families.

Every family is produced with a fixed vertex order -- a_1..a_n, then
b_1..b_n, then any apex/pendant/center vertex last -- so emitted graphs and
embeddings are stable across runs.  1-based indices in role names follow the
usual half-graph convention: a_i is adjacent to b_j iff i >= j.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from . import chains
from .graphs import Graph, bits, complement
from .witnesses import ChainWitness, Witness

SIZE_LIMIT = 1 << 16


class Family(enum.Enum):
    SUBDIVIDED_STAR = "subdivided-star"      # K_{1,n} with every edge subdivided once
    LINE_K2N = "line-k2n"                    # line graph of K_{2,n}
    THIN_SPIDER = "thin-spider"
    THICK_SPIDER = "thick-spider"
    HALF_GRAPH = "half-graph"
    HALF_SPLIT = "half-split"                # half-graph with the b side a clique
    HALF_SPLIT_APEX = "half-split-apex"      # half split plus a vertex complete to the a side
    HALF_SPLIT_PENDANT = "half-split-pendant"  # half split plus a pendant at a_n
    COMPL_HALF_SPLIT_PENDANT = "compl-half-split-pendant"
    MATCHING = "matching"                    # n disjoint edges
    COMPL_LINE_K2N = "compl-line-k2n"
    PRIME_CHAIN = "prime-chain"              # size parameter is the chain length


@dataclass(frozen=True)
class FamilyId:
    family: Family
    n: int
    complemented: bool = False

    @classmethod
    def parse(cls, spec: str) -> "FamilyId":
        """Parse CLI specs like ``half-graph:5`` or ``thin-spider:4!``."""
        text = spec.strip()
        complemented = text.endswith("!")
        if complemented:
            text = text[:-1]
        name, sep, num = text.partition(":")
        if not sep:
            raise ValueError(f"family spec {spec!r} needs a ':<size>' suffix")
        try:
            family = Family(name)
        except ValueError:
            known = ", ".join(f.value for f in Family)
            raise ValueError(f"unknown family {name!r}; expected one of: {known}") from None
        try:
            n = int(num)
        except ValueError:
            raise ValueError(f"bad size {num!r} in family spec {spec!r}") from None
        return cls(family, n, complemented)

    def __str__(self) -> str:
        return f"{self.family.value}:{self.n}{'!' if self.complemented else ''}"


@dataclass(frozen=True)
class LabeledFamilyGraph:
    graph: Graph
    roles: tuple[str, ...]


def _build_two_sided(n: int, cross, b_clique: bool) -> Graph:
    """Graph on a_1..a_n, b_1..b_n with a_i ~ b_j iff cross(i, j)."""
    edges = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if cross(i, j):
                edges.append((i - 1, n + j - 1))
    if b_clique:
        for j in range(1, n + 1):
            for k in range(j + 1, n + 1):
                edges.append((n + j - 1, n + k - 1))
    return Graph.from_edges(2 * n, edges)


def _ab_roles(n: int) -> list[str]:
    return [f"a{i}" for i in range(1, n + 1)] + [f"b{j}" for j in range(1, n + 1)]


def generate(fid: FamilyId) -> LabeledFamilyGraph:
    """Deterministic generator for a family instance.

    The ``complemented`` flag complements the finished graph; vertex order
    and roles are unchanged by complementation.
    """
    n = fid.n
    if not 1 <= n <= SIZE_LIMIT:
        raise ValueError(f"size {n} out of range 1..{SIZE_LIMIT}")
    fam = fid.family

    if fam is Family.HALF_GRAPH:
        g = _build_two_sided(n, lambda i, j: i >= j, b_clique=False)
        roles = _ab_roles(n)
    elif fam is Family.HALF_SPLIT:
        g = _build_two_sided(n, lambda i, j: i >= j, b_clique=True)
        roles = _ab_roles(n)
    elif fam is Family.HALF_SPLIT_APEX:
        base = _build_two_sided(n, lambda i, j: i >= j, b_clique=True)
        edges = list(base.edges()) + [(2 * n, i) for i in range(n)]
        g = Graph.from_edges(2 * n + 1, edges)
        roles = _ab_roles(n) + ["apex"]
    elif fam is Family.HALF_SPLIT_PENDANT or fam is Family.COMPL_HALF_SPLIT_PENDANT:
        base = _build_two_sided(n, lambda i, j: i >= j, b_clique=True)
        edges = list(base.edges()) + [(2 * n, n - 1)]
        g = Graph.from_edges(2 * n + 1, edges)
        if fam is Family.COMPL_HALF_SPLIT_PENDANT:
            g = complement(g)
        roles = _ab_roles(n) + ["pendant"]
    elif fam is Family.THIN_SPIDER:
        g = _build_two_sided(n, lambda i, j: i == j, b_clique=True)
        roles = _ab_roles(n)
    elif fam is Family.THICK_SPIDER:
        g = _build_two_sided(n, lambda i, j: i != j, b_clique=True)
        roles = _ab_roles(n)
    elif fam is Family.MATCHING:
        g = _build_two_sided(n, lambda i, j: i == j, b_clique=False)
        roles = _ab_roles(n)
    elif fam is Family.LINE_K2N or fam is Family.COMPL_LINE_K2N:
        edges = [(i - 1, n + i - 1) for i in range(1, n + 1)]
        for s in range(n):
            for t in range(s + 1, n):
                edges.append((s, t))
                edges.append((n + s, n + t))
        g = Graph.from_edges(2 * n, edges)
        if fam is Family.COMPL_LINE_K2N:
            g = complement(g)
        roles = _ab_roles(n)
    elif fam is Family.SUBDIVIDED_STAR:
        edges = [(i, n + i) for i in range(n)] + [(n + i, 2 * n) for i in range(n)]
        g = Graph.from_edges(2 * n + 1, edges)
        roles = _ab_roles(n) + ["center"]
    elif fam is Family.PRIME_CHAIN:
        # canonical representative: the path, whose natural order is a chain
        g = Graph.path(n + 1)
        roles = [f"v{i}" for i in range(n + 1)]
    else:  # pragma: no cover
        raise AssertionError(f"unhandled family {fam}")

    if fid.complemented:
        g = complement(g)
    return LabeledFamilyGraph(g, tuple(roles))


@lru_cache(maxsize=512)
def _pattern(fid: FamilyId) -> Graph:
    return generate(fid).graph


# ---------------------------------------------------------------------------
# Induced-copy search: exact backtracking over bitmask candidate domains.
# ---------------------------------------------------------------------------

def _search_order(pat: Graph) -> list[int]:
    # descending degree, tie-broken toward vertices anchored to placed ones
    placed: list[int] = []
    remaining = set(range(pat.n))
    while remaining:
        best = min(
            remaining,
            key=lambda v: (
                -pat.degree(v),
                -sum(1 for w in placed if pat.adjacent(v, w)),
                v,
            ),
        )
        placed.append(best)
        remaining.remove(best)
    return placed


def _candidate_mask(host: Graph, pat: Graph, p: int) -> int:
    pdeg = pat.degree(p)
    pco = pat.n - 1 - pdeg
    pnbr = sorted((pat.degree(q) for q in bits(pat.rows[p])), reverse=True)
    mask = 0
    for v in range(host.n):
        if host.degree(v) < pdeg or host.n - 1 - host.degree(v) < pco:
            continue
        hnbr = sorted((host.degree(w) for w in bits(host.rows[v])), reverse=True)
        if any(hnbr[i] < pnbr[i] for i in range(len(pnbr))):
            continue
        mask |= 1 << v
    return mask


def find_induced_copy(host: Graph, fid: FamilyId) -> tuple[int, ...] | None:
    """Exact search for an induced embedding of the family into ``host``.

    Returns host vertices in pattern order, or None when no embedding exists.
    First match under the fixed search order wins, so results are stable.
    """
    pat = _pattern(fid)
    return find_induced_embedding(host, pat)


def find_induced_embedding(host: Graph, pat: Graph) -> tuple[int, ...] | None:
    if pat.n > host.n:
        return None
    if pat.n == 0:
        return ()
    order = _search_order(pat)
    domains = [0] * pat.n
    for p in range(pat.n):
        domains[p] = _candidate_mask(host, pat, p)
        if domains[p] == 0:
            return None

    assign = [-1] * pat.n
    hrows = host.rows

    def dfs(k: int, doms: list[int]) -> bool:
        if k == pat.n:
            return True
        u = order[k]
        for v in bits(doms[u]):
            nxt = doms[:]
            ok = True
            bv = 1 << v
            for w in order[k + 1:]:
                if pat.adjacent(u, w):
                    nd = nxt[w] & hrows[v] & ~bv
                else:
                    nd = nxt[w] & ~hrows[v] & ~bv
                if nd == 0:
                    ok = False
                    break
                nxt[w] = nd
            if ok:
                assign[u] = v
                if dfs(k + 1, nxt):
                    return True
                assign[u] = -1
        return False

    if dfs(0, domains):
        return tuple(assign)
    return None


def check_witness(g: Graph, w: Witness | ChainWitness) -> bool:
    """Re-validate a witness against its generator (edges and non-edges)."""
    if isinstance(w, ChainWitness):
        if w.length < 3:
            return False
        ok, _ = chains.validate_chain(g, w.chain)
        return ok and chains.chain_induces_prime(g, w.chain)
    pat = _pattern(w.family)
    emb = w.embedding
    if len(emb) != pat.n or len(set(emb)) != len(emb):
        return False
    if any(not 0 <= v < g.n for v in emb):
        return False
    for i in range(pat.n):
        for j in range(i + 1, pat.n):
            if pat.adjacent(i, j) != g.adjacent(emb[i], emb[j]):
                return False
    return True


# ---------------------------------------------------------------------------
# Combined search over the theorem's outcome list.
# ---------------------------------------------------------------------------

THEOREM_FAMILY_ORDER = (
    Family.SUBDIVIDED_STAR,
    Family.LINE_K2N,
    Family.THIN_SPIDER,
    Family.HALF_GRAPH,
    Family.HALF_SPLIT_APEX,
    Family.HALF_SPLIT_PENDANT,
)


def find_witness_any(host: Graph, n: int) -> Witness | ChainWitness | None:
    """First verified outcome witness under the fixed family order, or None.

    Tries the six generated families and their complements, then falls back
    to a greedy prime-chain search of length exactly n.
    """
    if n < 3:
        raise ValueError("outcome size must be at least 3")
    for fam in THEOREM_FAMILY_ORDER:
        for comp in (False, True):
            fid = FamilyId(fam, n, comp)
            if _pattern(fid).n > host.n:
                continue
            emb = find_induced_copy(host, fid)
            if emb is not None:
                w = Witness(fid, emb, provenance="direct-search")
                assert check_witness(host, w)
                return w
    seq = find_prime_chain(host, n)
    if seq is not None:
        w = ChainWitness(seq, provenance="direct-search")
        assert check_witness(host, w)
        return w
    return None


def find_prime_chain(host: Graph, n: int, max_pairs: int | None = None) -> tuple[int, ...] | None:
    """Greedy search for a chain of length exactly n inducing a prime subgraph.

    First looks for an induced path with n edges (the simplest prime chain),
    then runs the constructive chain search from vertex pairs in
    lexicographic order, walking targets farthest-first and trimming longer
    chains down to length n (trims preserve prime induction).  Greedy, not
    exhaustive: a None is not a proof of absence.  Large hosts are capped at
    ``max_pairs`` seed pairs (default: all pairs up to 64 vertices, 512
    beyond).
    """
    if host.n < n + 1:
        return None
    path = _find_induced_path(host, n)
    if path is not None:
        ok, _ = chains.validate_chain(host, path)
        if ok and chains.chain_induces_prime(host, path):
            return path
    if max_pairs is None:
        max_pairs = host.n * (host.n - 1) // 2 if host.n <= 64 else 512
    tried = 0
    for u in range(host.n):
        for v in range(u + 1, host.n):
            tried += 1
            if tried > max_pairs:
                return None
            seq = _prime_chain_from_pair(host, u, v, n)
            if seq is not None:
                return seq
    return None


def _find_induced_path(host: Graph, n: int, node_budget: int = 200_000) -> tuple[int, ...] | None:
    """Backtracking search for an induced path with n edges, lowest start and
    extension first; gives up after ``node_budget`` search nodes."""
    rows = host.rows
    budget = node_budget
    path: list[int] = []

    def extend(used: int, blocked: int) -> bool:
        nonlocal budget
        if len(path) == n + 1:
            return True
        budget -= 1
        if budget < 0:
            return False
        cand = rows[path[-1]] & ~used & ~blocked
        for w in bits(cand):
            path.append(w)
            if extend(used | (1 << w), blocked | (rows[path[-2]] & ~(1 << w))):
                return True
            path.pop()
            if budget < 0:
                return False
        return False

    for start in range(host.n):
        path = [start]
        if extend(1 << start, 0) and len(path) == n + 1:
            return tuple(path)
        if budget < 0:
            return None
    return None


def _prime_chain_from_pair(host: Graph, u: int, v: int, n: int) -> tuple[int, ...] | None:
    imask = (1 << u) | (1 << v)
    parent = chains._aux_parents(host, imask)
    depth: dict[int, int] = {}

    def _depth(t: int) -> int:
        if t not in depth:
            p = parent[t]
            depth[t] = 1 if p is None else _depth(p) + 1
        return depth[t]

    for t in parent:
        _depth(t)
    # chain length to t is its auxiliary depth + 1; walk farthest-first
    targets = sorted(
        (t for t, d in depth.items() if d + 1 >= n),
        key=lambda t: (-depth[t], t),
    )
    for t in targets:
        seq = chains._chain_from_parents(host, imask, parent, t)
        while len(seq) - 1 > n:
            seq = chains.trim_chain_to_prime(host, seq)
        if chains.chain_induces_prime(host, seq):
            return tuple(seq)
    return None
