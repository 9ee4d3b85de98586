"""Chains: validation, constructive search, the prime-chain criterion, and
trimming.

A chain is a sequence of distinct vertices in which every vertex's immediate
predecessor is its unique neighbor or its unique non-neighbor among all
predecessors.  Chains certify primeness reachability: a chain from a
two-vertex set I to v exists exactly when no homogeneous set contains I while
excluding v.  The search builds the auxiliary digraph from that equivalence's
constructive proof and takes a shortest path.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .graphs import Graph, bits, mask_of
from .homogeneous import is_prime


def chain_length(seq: Sequence[int]) -> int:
    """A chain's length is its number of steps, one less than its vertices."""
    return len(seq) - 1


def validate_chain(
    g: Graph, seq: Sequence[int], source_set: Iterable[int] | None = None
) -> tuple[bool, int | None]:
    """Check the chain invariants; on failure return (False, first bad index).

    With ``source_set`` I given, additionally require length >= 2, the first
    two vertices in I, and the rest outside I.
    """
    if len(set(seq)) != len(seq):
        raise ValueError("chain vertices must be distinct")
    for v in seq:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")

    if source_set is not None:
        imask = mask_of(source_set)
        if len(seq) < 3:
            return False, len(seq) - 1
        for idx in (0, 1):
            if not (imask >> seq[idx]) & 1:
                return False, idx
        for idx in range(2, len(seq)):
            if (imask >> seq[idx]) & 1:
                return False, idx

    rows = g.rows
    pred = 0
    for idx, v in enumerate(seq):
        if idx:
            prev_bit = 1 << seq[idx - 1]
            nb = rows[v] & pred
            if nb != prev_bit and (pred & ~rows[v]) != prev_bit:
                return False, idx
        pred |= 1 << v
    return True, None


def _aux_parents(g: Graph, imask: int) -> dict[int, int | None]:
    """Breadth-first parents in the auxiliary digraph rooted outside I.

    Arcs: root -> w when w is mixed on I (parent None), and x -> y when y is
    unmixed on I but mixed on I+{x}.  Queue order is lowest vertex index
    first, so parents encode deterministic shortest paths.
    """
    rows = g.rows
    outside = g.vertex_mask() & ~imask

    # uniform[w]: adjacency of an unmixed w toward I (1 complete, 0 anticomplete)
    mixed = 0
    uniform = {}
    for w in bits(outside):
        x = rows[w] & imask
        if x == 0:
            uniform[w] = 0
        elif x == imask:
            uniform[w] = 1
        else:
            mixed |= 1 << w

    parent: dict[int, int | None] = {}
    queue: deque[int] = deque()
    for w in bits(mixed):
        parent[w] = None
        queue.append(w)
    unseen = outside & ~mixed
    while queue:
        x = queue.popleft()
        bx = rows[x]
        newly = 0
        for y in bits(unseen):
            if ((bx >> y) & 1) != uniform[y]:
                parent[y] = x
                queue.append(y)
                newly |= 1 << y
        unseen &= ~newly
    return parent


def _chain_from_parents(
    g: Graph, imask: int, parent: dict[int, int | None], target: int
) -> tuple[int, ...]:
    rows = g.rows
    path = [target]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    w1 = path[0]
    neighbors = rows[w1] & imask
    non_neighbors = imask & ~rows[w1]
    v0 = (neighbors & -neighbors).bit_length() - 1
    v1 = (non_neighbors & -non_neighbors).bit_length() - 1
    chain = (v0, v1, *path)
    ok, bad = validate_chain(g, chain, source_set=bits(imask))
    assert ok, f"constructed chain violates the chain rule at index {bad}"
    return chain


def find_chain(g: Graph, source_set: Iterable[int], target: int) -> tuple[int, ...] | None:
    """Shortest chain from ``source_set`` to ``target``, or None.

    None is returned exactly when some homogeneous set contains the source
    set but not the target.  Construction: take a shortest root-to-target
    path in the auxiliary digraph (breadth-first, lowest vertex index first)
    and prepend the lowest-index neighbor and non-neighbor of its first
    vertex in I.
    """
    imask = mask_of(source_set)
    if imask.bit_count() < 2:
        raise ValueError("source set needs at least two vertices")
    if not 0 <= target < g.n:
        raise ValueError(f"vertex {target} out of range")
    if (imask >> target) & 1:
        raise ValueError("target must lie outside the source set")

    parent = _aux_parents(g, imask)
    if target not in parent:
        return None
    return _chain_from_parents(g, imask, parent, target)


def chain_induces_prime(g: Graph, seq: Sequence[int]) -> bool:
    """Prime-chain criterion for a valid chain of length >= 3.

    True iff each of the first two vertices has, within the chain, a neighbor
    other than the second-to-last vertex and a non-neighbor other than the
    second-to-last vertex.  Equivalent to primality of the induced subgraph.
    """
    if chain_length(seq) < 3:
        raise ValueError("criterion needs a chain of length at least 3")
    ok, bad = validate_chain(g, seq)
    if not ok:
        raise ValueError(f"not a chain (rule fails at index {bad})")
    penult = seq[-2]
    for u in seq[:2]:
        has_nb = False
        has_non = False
        for w in seq:
            if w == u or w == penult:
                continue
            if g.adjacent(u, w):
                has_nb = True
            else:
                has_non = True
        if not (has_nb and has_non):
            return False
    return True


def trim_chain_to_prime(g: Graph, seq: Sequence[int]) -> tuple[int, ...]:
    """Sub-chain of length t-1 whose induced subgraph is prime (t > 3).

    Dropping either of the first two vertices always leaves a chain; the trim
    guarantee says one of the two induces a prime subgraph.  (The guarantee's
    proof also complements the graph, but the prime-chain criterion is
    complement-invariant, so the two drops cover all four normalizations.)
    """
    if chain_length(seq) <= 3:
        raise ValueError("trimming needs a chain of length greater than 3")
    ok, bad = validate_chain(g, seq)
    if not ok:
        raise ValueError(f"not a chain (rule fails at index {bad})")
    for cand in (tuple(seq[1:]), (seq[0], *seq[2:])):
        ok, _ = validate_chain(g, cand)
        if ok and chain_induces_prime(g, cand):
            return cand
    raise AssertionError("no prime trim exists; this contradicts the trim guarantee")


def assert_criterion_matches_primality(g: Graph, seq: Sequence[int]) -> bool:
    """Cross-check: criterion verdict equals primality of the induced subgraph."""
    from .graphs import induced_subgraph

    sub, _ = induced_subgraph(g, seq)
    return chain_induces_prime(g, seq) == is_prime(sub)
