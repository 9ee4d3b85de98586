"""Command-line surface: family generation, primality verdicts, witness
extraction, and the batch verification harness.

Streaming protocol: graph6 lines in, one verdict or JSON object per line
out, so the tool composes with external graph catalogs.  Exit codes: 0
success, 1 data error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import extraction, families, homogeneous
from .chains import find_chain
from .families import Family, FamilyId, find_induced_copy, generate
from .graphs import Graph, Graph6Error, complement, emit_graph6, parse_graph6
from .witnesses import ChainWitness, InsufficientSize, NotPrimeError, Witness

DEFAULT_SEED = 20150420


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def cmd_gen(args) -> int:
    out = []
    for spec in args.spec:
        try:
            fid = FamilyId.parse(spec)
            labeled = generate(fid)
        except ValueError as e:
            return _fail_usage(str(e))
        out.append(emit_graph6(labeled.graph))
    for line in out:
        print(line)
    return 0


def cmd_prime(args) -> int:
    status = 0
    for lineno, line in enumerate(args.input, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            g = parse_graph6(text)
        except Graph6Error as e:
            print(f"line {lineno}: {e}", file=sys.stderr)
            status = 1
            continue
        hom = homogeneous.find_homogeneous_set(g)
        if hom is None:
            print("prime")
        else:
            print("homogeneous {" + ", ".join(str(v) for v in sorted(hom)) + "}")
    return status


def _witness_payload(text: str, n: int) -> dict:
    g = parse_graph6(text)
    try:
        result = extraction.unavoidable_witness(g, n)
    except NotPrimeError as e:
        return {"nonprime": sorted(e.homogeneous_set)}
    if isinstance(result, (Witness, ChainWitness, InsufficientSize)):
        return result.to_json()
    raise AssertionError(f"unexpected driver result {result!r}")


def _witness_line(item: tuple[int, str, int, bool]) -> tuple[int, str, str]:
    lineno, text, n, as_json = item
    try:
        payload = _witness_payload(text, n)
    except Graph6Error as e:
        return lineno, "", f"line {lineno}: {e}"
    except ValueError as e:
        return lineno, "", f"line {lineno}: {e}"
    if as_json:
        return lineno, json.dumps(payload, separators=(",", ":")), ""
    return lineno, _summarize(payload), ""


def _summarize(payload: dict) -> str:
    if "nonprime" in payload:
        return "nonprime {" + ", ".join(str(v) for v in payload["nonprime"]) + "}"
    if "chain" in payload:
        return f"chain length={payload['length']} {payload['chain']}"
    if "family" in payload:
        suffix = "!" if payload["complemented"] else ""
        return (
            f"witness {payload['family']}:{payload['n']}{suffix} "
            f"embedding={payload['embedding']}"
        )
    return f"insufficient stage={payload['stage']} needed={payload['needed']} had={payload['had']}"


def cmd_witness(args) -> int:
    if args.n < 3:
        return _fail_usage("--n must be at least 3")
    started = time.monotonic()
    items = []
    status = 0
    for lineno, line in enumerate(args.input, start=1):
        text = line.strip()
        if text:
            items.append((lineno, text, args.n, args.json))
    if args.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_witness_line, items))
    else:
        results = [_witness_line(item) for item in items]
    totals = {"witness": 0, "chain": 0, "insufficient": 0, "nonprime": 0, "error": 0}
    for _, out, err in results:
        if err:
            print(err, file=sys.stderr)
            totals["error"] += 1
            status = 1
        else:
            print(out)
    for _, out, err in results:
        if err:
            continue
        if '"family"' in out or out.startswith("witness"):
            totals["witness"] += 1
        elif '"chain"' in out or out.startswith("chain"):
            totals["chain"] += 1
        elif '"nonprime"' in out or out.startswith("nonprime"):
            totals["nonprime"] += 1
        else:
            totals["insufficient"] += 1
    elapsed = time.monotonic() - started
    print(
        f"processed {len(items)} graphs in {elapsed:.2f}s: "
        f"{totals['witness']} family witnesses, {totals['chain']} chain witnesses, "
        f"{totals['insufficient']} insufficient, {totals['nonprime']} non-prime, "
        f"{totals['error']} errors",
        file=sys.stderr,
    )
    return status


# ---------------------------------------------------------------------------
# verify: oracle agreement sweeps and the family non-containment matrix.
# ---------------------------------------------------------------------------

def _all_graphs(n: int):
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for b, (i, j) in enumerate(pairs):
            if (code >> b) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield Graph(n, rows)


def _verify_primality(max_n: int) -> tuple[int, int, dict[int, int]]:
    checked = 0
    bad = 0
    prime_counts: dict[int, int] = {}
    for n in range(max_n + 1):
        count = 0
        for g in _all_graphs(n):
            checked += 1
            fast = homogeneous.find_homogeneous_set(g) is None
            brute = not homogeneous.brute_force_homogeneous(g)
            if fast != brute:
                bad += 1
            if fast and brute:
                count += 1
        prime_counts[n] = count
    return checked, bad, prime_counts


def _verify_chain_equivalence(max_n: int) -> tuple[int, int]:
    checked = 0
    bad = 0
    for n in range(3, max_n + 1):
        for g in _all_graphs(n):
            homsets = homogeneous.brute_force_homogeneous(g)
            for u in range(n):
                for v in range(u + 1, n):
                    for w in range(n):
                        if w in (u, v):
                            continue
                        checked += 1
                        found = find_chain(g, (u, v), w) is not None
                        separated = any(
                            u in s and v in s and w not in s for s in homsets
                        )
                        if found != (not separated):
                            bad += 1
    return checked, bad


_MATRIX_FAMILIES = (
    Family.SUBDIVIDED_STAR,
    Family.LINE_K2N,
    Family.THIN_SPIDER,
    Family.THICK_SPIDER,
    Family.HALF_GRAPH,
    Family.HALF_SPLIT,
    Family.HALF_SPLIT_APEX,
    Family.HALF_SPLIT_PENDANT,
)

_MATRIX_LABELS = {
    Family.SUBDIVIDED_STAR: "substar",
    Family.LINE_K2N: "lineK2n",
    Family.THIN_SPIDER: "thin",
    Family.THICK_SPIDER: "thick",
    Family.HALF_GRAPH: "half",
    Family.HALF_SPLIT: "hsplit",
    Family.HALF_SPLIT_APEX: "hsp-apex",
    Family.HALF_SPLIT_PENDANT: "hsp-pend",
}


def _naive_induced_search(host: Graph, pat: Graph) -> bool:
    # independent second strategy: static pattern order, no candidate filters
    if pat.n > host.n:
        return False

    assign = [-1] * pat.n

    def rec(k: int, used: int) -> bool:
        if k == pat.n:
            return True
        for v in range(host.n):
            if (used >> v) & 1:
                continue
            ok = True
            for q in range(k):
                if pat.adjacent(k, q) != host.adjacent(v, assign[q]):
                    ok = False
                    break
            if ok:
                assign[k] = v
                if rec(k + 1, used | (1 << v)):
                    return True
        return False

    return rec(0, 0)


def _verify_matrix(n_host: int, n_pat: int) -> tuple[list[str], int]:
    lines = []
    disagreements = 0
    pattern_ids = [
        FamilyId(fp, n_pat, complemented=comp)
        for fp in _MATRIX_FAMILIES
        for comp in (False, True)
    ]
    header = "host \\ pattern".ljust(22) + " ".join(
        (_MATRIX_LABELS[fid.family] + ("!" if fid.complemented else "")).ljust(10)
        for fid in pattern_ids
    )
    lines.append(header)
    for fh in _MATRIX_FAMILIES:
        host = generate(FamilyId(fh, n_host)).graph
        cells = []
        for fid in pattern_ids:
            fast = find_induced_copy(host, fid) is not None
            naive = _naive_induced_search(host, generate(fid).graph)
            if fast != naive:
                disagreements += 1
                cells.append("DISAGREE".ljust(10))
            else:
                cells.append(("yes" if fast else "no").ljust(10))
        lines.append(f"{fh.value}:{n_host}".ljust(22) + " ".join(cells))
    return lines, disagreements


def _random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    rows = [0] * n
    for j in range(1, n):
        for i in range(j):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, rows)


def cmd_verify(args) -> int:
    k = args.max_vertices
    if not 1 <= k <= 8:
        return _fail_usage("--max-vertices must be between 1 and 8")
    rng = random.Random(args.seed)
    failures = 0

    checked, bad, prime_counts = _verify_primality(k)
    failures += bad
    print(f"primality sweep: {checked} graphs on <= {k} vertices, {bad} disagreements")
    counts = ", ".join(f"{n}: {c}" for n, c in prime_counts.items())
    print(f"labeled graphs with no homogeneous set: {{{counts}}}")

    k_chain = min(k, 6)
    checked, bad = _verify_chain_equivalence(k_chain)
    failures += bad
    print(
        f"chain reachability sweep: {checked} (graph, pair, target) cases "
        f"on <= {k_chain} vertices, {bad} disagreements"
    )

    spot = 0
    spot_bad = 0
    for _ in range(200):
        g = _random_graph(rng, rng.randrange(8, 13))
        spot += 1
        fast = homogeneous.find_homogeneous_set(g) is None
        brute = not homogeneous.brute_force_homogeneous(g)
        if fast != brute:
            spot_bad += 1
    failures += spot_bad
    print(f"seeded spot-check: {spot} graphs on 8..12 vertices, {spot_bad} disagreements")

    lines, bad = _verify_matrix(n_host=6, n_pat=3)
    failures += bad
    print("family containment matrix (host size 6, pattern size 3, dual-checked):")
    for line in lines:
        print("  " + line)
    print(f"matrix strategy disagreements: {bad}")

    print(f"total disagreements: {failures}")
    return 0 if failures == 0 else 1


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="primewitness",
        description="prime graphs, chains, and unavoidable induced-subgraph witnesses",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="emit family graphs as graph6")
    p_gen.add_argument("spec", nargs="+", help="family spec, e.g. half-graph:5 or thin-spider:4!")
    p_gen.set_defaults(func=cmd_gen)

    p_prime = sub.add_parser("prime", help="per-line primality verdicts for graph6 input")
    p_prime.set_defaults(func=cmd_prime, input=None)

    p_wit = sub.add_parser("witness", help="unavoidable-outcome witnesses for graph6 input")
    p_wit.add_argument("--n", type=int, required=True, help="outcome size (>= 3)")
    p_wit.add_argument("--json", action="store_true", help="emit JSON lines")
    p_wit.add_argument("--jobs", type=int, default=1, help="parallel workers (order preserved)")
    p_wit.set_defaults(func=cmd_witness, input=None)

    p_ver = sub.add_parser("verify", help="oracle agreement sweeps and family matrix")
    p_ver.add_argument("--max-vertices", type=int, default=5, help="exhaustive sweep bound (<= 8)")
    p_ver.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for the spot-check batch")
    p_ver.set_defaults(func=cmd_verify)

    args = parser.parse_args(argv)
    if getattr(args, "input", "skip") is None:
        args.input = sys.stdin
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
