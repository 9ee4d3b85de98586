import io
import json

from primewitness.cli import main
from primewitness.families import Family, FamilyId, generate
from primewitness.graphs import complement, emit_graph6, parse_graph6


def run_cli(capsys, argv, stdin_text=None, monkeypatch=None):
    if stdin_text is not None:
        assert monkeypatch is not None
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_half_graph(capsys):
    code, out, _ = run_cli(capsys, ["gen", "half-graph:2"])
    assert code == 0
    assert out.strip() == "CY"  # 4 vertices, edges a1b1, a2b1, a2b2
    assert parse_graph6(out.strip()) == generate(FamilyId(Family.HALF_GRAPH, 2)).graph


def test_gen_complement_suffix(capsys):
    code, out, _ = run_cli(capsys, ["gen", "thin-spider:5!"])
    assert code == 0
    expected = complement(generate(FamilyId(Family.THIN_SPIDER, 5)).graph)
    assert parse_graph6(out.strip()) == expected


def test_gen_unknown_family(capsys):
    code, _, err = run_cli(capsys, ["gen", "k2:1"])
    assert code == 2 and "k2" in err


def test_prime_verdicts(capsys, monkeypatch):
    from primewitness.graphs import Graph

    lines = "\n".join([emit_graph6(Graph.path(4)), emit_graph6(Graph.cycle(4))]) + "\n"
    code, out, err = run_cli(capsys, ["prime"], lines, monkeypatch)
    assert code == 0
    first, second = out.strip().splitlines()
    assert first == "prime"
    assert second.startswith("homogeneous {")


def test_prime_empty_input(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, ["prime"], "", monkeypatch)
    assert code == 0 and out == ""


def test_prime_parse_error_keeps_going(capsys, monkeypatch):
    from primewitness.graphs import Graph

    lines = "!!notgraph6!!\n" + emit_graph6(Graph.path(4)) + "\n"
    code, out, err = run_cli(capsys, ["prime"], lines, monkeypatch)
    assert code == 1
    assert out.strip() == "prime"
    assert "line 1" in err


def test_witness_json_half_graph(capsys, monkeypatch):
    host = generate(FamilyId(Family.HALF_GRAPH, 12)).graph
    code, out, _ = run_cli(
        capsys, ["witness", "--n", "4", "--json"], emit_graph6(host) + "\n", monkeypatch
    )
    assert code == 0
    payload = json.loads(out.strip())
    assert payload["family"] == "half-graph"
    assert payload["n"] == 4
    assert payload["complemented"] is False
    assert len(payload["embedding"]) == 8


def test_witness_nonprime(capsys, monkeypatch):
    from primewitness.graphs import Graph

    code, out, _ = run_cli(
        capsys, ["witness", "--n", "3", "--json"], emit_graph6(Graph.complete(5)) + "\n", monkeypatch
    )
    assert code == 0
    payload = json.loads(out.strip())
    assert "nonprime" in payload


def test_witness_insufficient(capsys, monkeypatch):
    from primewitness.graphs import Graph

    code, out, _ = run_cli(
        capsys, ["witness", "--n", "6", "--json"], emit_graph6(Graph.cycle(7)) + "\n", monkeypatch
    )
    assert code == 0
    payload = json.loads(out.strip())
    assert set(payload) >= {"stage", "needed", "had"}


def test_witness_bad_n(capsys, monkeypatch):
    code, _, err = run_cli(capsys, ["witness", "--n", "2"], "", monkeypatch)
    assert code == 2


def test_witness_jobs_preserves_order(capsys, monkeypatch):
    from primewitness.graphs import Graph

    hosts = [
        generate(FamilyId(Family.HALF_GRAPH, 8)).graph,
        Graph.complete(6),
        generate(FamilyId(Family.THIN_SPIDER, 6)).graph,
    ]
    text = "".join(emit_graph6(h) + "\n" for h in hosts)
    code1, out1, _ = run_cli(capsys, ["witness", "--n", "3", "--json"], text, monkeypatch)
    code2, out2, _ = run_cli(
        capsys, ["witness", "--n", "3", "--json", "--jobs", "2"], text, monkeypatch
    )
    assert code1 == code2 == 0
    assert out1 == out2


def test_verify_small(capsys):
    code, out, _ = run_cli(capsys, ["verify", "--max-vertices", "4"])
    assert code == 0
    assert "total disagreements: 0" in out
    # every labeled prime graph on 4 vertices is one of the 12 orderings of
    # the path; the count is reported and stable across runs
    assert "4: 12" in out
    code2, out2, _ = run_cli(capsys, ["verify", "--max-vertices", "4"])
    assert out2 == out


def test_verify_rejects_large(capsys):
    code, _, err = run_cli(capsys, ["verify", "--max-vertices", "9"])
    assert code == 2


def test_witness_random_prime_soak(capsys, monkeypatch):
    import random

    from primewitness.families import check_witness
    from primewitness.witnesses import ChainWitness, Witness
    from util import random_prime_graph

    rng = random.Random(60)
    g = random_prime_graph(rng, 100)
    code, out, _ = run_cli(
        capsys, ["witness", "--n", "3", "--json"], emit_graph6(g) + "\n", monkeypatch
    )
    assert code == 0
    payload = json.loads(out.strip())
    assert "family" in payload or "chain" in payload
    if "family" in payload:
        fid = FamilyId.parse(
            f"{payload['family']}:{payload['n']}" + ("!" if payload["complemented"] else "")
        )
        w = Witness(fid, tuple(payload["embedding"]))
    else:
        w = ChainWitness(tuple(payload["chain"]))
    assert check_witness(g, w)
