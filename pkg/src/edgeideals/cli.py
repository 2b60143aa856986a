"""Command line interface: analyze, construct, verify, selftest.

Exit codes: 0 success, 1 verification failure, 2 precondition violation
(non-disjoint cycles, bad certificate shape), 3 budget exhausted, 4 parse
error. JSON reports are byte-identical across runs for the same input:
keys are sorted and timings are kept out of the JSON (they appear only in
the human-readable output).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from pathlib import Path

from edgeideals.certificates import (
    ConstructionError,
    DisjointnessError,
    GeneratorCertificate,
    SearchBudgetError,
    construct_generators,
    sv_check,
)
from edgeideals.covers import CoverSummary, big_height, minimal_covers
from edgeideals.graphs import Graph, GraphParseError, cycle_structure, parse_graph
from edgeideals.groebner import (
    DEFAULT_MAX_STEPS,
    GroebnerBudgetError,
    verify_radical_equals_edge_ideal,
)
from edgeideals.polynomials import PolynomialParseError, parse_polynomial
from edgeideals.sampling import random_disjoint_cycle_graph

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PRECONDITION = 2
EXIT_BUDGET = 3
EXIT_PARSE = 4


def _sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _read_file(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise SystemExit(f"cannot read {path}: {exc}")


def _load_graph(path: str) -> tuple[Graph, str]:
    data = _read_file(path)
    return parse_graph(data.decode("utf-8")), _sha256(data)


def _emit(report: dict, args) -> None:
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    elif args.json:
        sys.stdout.write(text)


def _cmd_analyze(args) -> int:
    G, digest = _load_graph(args.graph)
    t0 = time.perf_counter()
    cs = cycle_structure(G)
    summary = CoverSummary.from_graph(G)
    elapsed = time.perf_counter() - t0
    report = {
        "command": "analyze",
        "input_sha256": digest,
        "graph": [list(e) for e in G.sorted_edges()],
        "cycles": {
            "count": len(cs.cycles),
            "pairwise_disjoint": cs.pairwise_disjoint,
            "cycle_rank": cs.cycle_rank,
        },
        "covers": summary.to_json_dict(),
    }
    _emit(report, args)
    if not args.json:
        print(f"vertices: {len(G.vertices)}  edges: {len(G.edges)}")
        print(f"cycles: {len(cs.cycles)} (pairwise disjoint: {cs.pairwise_disjoint}, "
              f"rank {cs.cycle_rank})")
        print(f"height: {summary.height}  big height: {summary.big_height}  "
              f"minimal covers: {summary.count}")
        for c in summary.maximum_covers:
            print("  maximum cover: " + " ".join(c))
        print(f"elapsed: {elapsed:.3f}s")
    return EXIT_OK


def _cmd_construct(args) -> int:
    G, digest = _load_graph(args.graph)
    t0 = time.perf_counter()
    cert = construct_generators(G, budget=args.budget)
    elapsed = time.perf_counter() - t0
    report = {"command": "construct", "input_sha256": digest}
    report.update(cert.to_json_dict())
    _emit(report, args)
    if not args.json:
        print(f"bound: {cert.bound}  generators: {len(cert.generators)}")
        for g in cert.polynomials():
            print(f"  {g}")
        print(f"elapsed: {elapsed:.3f}s")
    return EXIT_OK


def _load_certificate_polys(path: str, G: Graph):
    """A certificate file is either the JSON report shape or one polynomial
    per line of plain text."""
    data = _read_file(path)
    text = data.decode("utf-8")
    stripped = text.lstrip()
    if stripped.startswith("{"):
        d = json.loads(text)
        cert = GeneratorCertificate.from_json_dict(d)
        if cert.graph != G:
            raise ConstructionError("certificate graph differs from the input graph")
        return cert.polynomials(), cert.bound, _sha256(data)
    polys = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            polys.append(parse_polynomial(line))
    return polys, None, _sha256(data)


def _cmd_verify(args) -> int:
    G, digest = _load_graph(args.graph)
    polys, bound, cert_digest = _load_certificate_polys(args.certificate, G)
    t0 = time.perf_counter()
    result = verify_radical_equals_edge_ideal(
        polys, G, max_steps=args.budget, order_kind=args.order
    )
    elapsed = time.perf_counter() - t0
    over_bound = bound is not None and len(polys) > bound
    ok = result.ok and not over_bound
    report = {
        "command": "verify",
        "input_sha256": digest,
        "certificate_sha256": cert_digest,
        "ok": ok,
        "n_generators": len(polys),
        "bound": bound,
        "failing_edge": list(result.failing_edge) if result.failing_edge else None,
        "reason": ("generator count exceeds the claimed bound" if over_bound
                   else result.reason),
    }
    _emit(report, args)
    if not args.json:
        print("PASS" if ok else f"FAIL: {report['reason']}")
        print(f"elapsed: {elapsed:.3f}s")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def _cmd_selftest(args) -> int:
    rng = random.Random(args.seed)
    t0 = time.perf_counter()
    passed = 0

    # fixed benchmark: 4-cycle with a pendant tree
    g1 = Graph.from_edges(
        [("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x1", "x4"),
         ("x1", "y1"), ("y1", "y2"), ("y2", "y3"), ("y2", "y4")]
    )
    assert big_height(g1) == 5
    passed += 1
    cert = construct_generators(g1, budget=args.budget)
    assert cert.within_bound() and cert.verify().ok
    passed += 1
    assert sv_check([[("a", "b")], [("b", "c"), ("a", "d")]])
    passed += 1

    rounds = 10
    for _ in range(rounds):
        G = random_disjoint_cycle_graph(rng, max_vertices=8, max_cycles=1)
        covers = minimal_covers(G)
        brute = [
            frozenset(s)
            for s in _all_subsets(G.vertices)
            if _is_minimal(G, frozenset(s))
        ]
        assert sorted(covers, key=sorted) == sorted(brute, key=sorted)
        c = construct_generators(G, budget=args.budget)
        assert c.within_bound() and c.verify().ok
        passed += 1
    elapsed = time.perf_counter() - t0
    report = {"command": "selftest", "seed": args.seed, "checks_passed": passed}
    _emit(report, args)
    if not args.json:
        print(f"selftest: {passed} checks passed")
        print(f"elapsed: {elapsed:.3f}s")
    return EXIT_OK


def _all_subsets(vs):
    import itertools

    for r in range(len(vs) + 1):
        yield from itertools.combinations(vs, r)


def _is_minimal(G, s):
    from edgeideals.covers import is_minimal_cover

    return is_minimal_cover(G, s)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit a JSON report to stdout")
    common.add_argument("--out", metavar="FILE",
                        help="write the JSON report to FILE")
    common.add_argument("--budget", type=int, default=DEFAULT_MAX_STEPS,
                        help="work budget (search nodes / reduction steps)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized checks")
    common.add_argument("--order", choices=["grevlex", "lex"], default="grevlex",
                        help="monomial order for the verifier")
    common.add_argument("--jobs", type=int, default=1,
                        help="reserved for parallel verification; must be >= 1")

    p = argparse.ArgumentParser(
        prog="edgeideals",
        description="Edge ideals: covers, generator certificates, radical checks.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common],
                       help="cycle structure and cover summary")
    a.add_argument("graph", help="edge-list file")
    a.set_defaults(fn=_cmd_analyze)

    c = sub.add_parser("construct", parents=[common],
                       help="build a generator certificate")
    c.add_argument("graph", help="edge-list file")
    c.set_defaults(fn=_cmd_construct)

    v = sub.add_parser("verify", parents=[common],
                       help="check a certificate against a graph")
    v.add_argument("graph", help="edge-list file")
    v.add_argument("certificate", help="certificate JSON or one polynomial per line")
    v.set_defaults(fn=_cmd_verify)

    s = sub.add_parser("selftest", parents=[common],
                       help="run bundled consistency checks")
    s.set_defaults(fn=_cmd_selftest)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.jobs < 1:
        print("--jobs must be >= 1", file=sys.stderr)
        return EXIT_PRECONDITION
    try:
        return args.fn(args)
    except (GraphParseError, PolynomialParseError, json.JSONDecodeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (SearchBudgetError, GroebnerBudgetError) as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DisjointnessError, ConstructionError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    raise SystemExit(main())
