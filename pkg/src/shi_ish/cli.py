"""Command-line harness: counting, enumeration, bijections, verification
suites and the geometric oracle.

Subcommands
-----------
count       region totals and breakdowns for Shi and Ish side by side
enumerate   list the regions of one arrangement as ceiling diagrams
map         apply one of the Ish-to-Shi bijections to a diagram (JSON in/out)
verify      run a named verification suite; exit code reports the outcome
oracle      geometric cross-validation report from exact region enumeration

Exit codes: 0 success, 1 verification/assertion failure, 2 usage error,
3 skipped because the requested size exceeds the default limits (pass
``--allow-large`` to raise them).  Progress goes to stderr, results to
stdout.
"""

from __future__ import annotations

import argparse
import hashlib
import itertools
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterator, Optional, Sequence

from .bijections import (
    basic_bijection,
    basic_bijection_inverse,
    bounded_bijection,
    bounded_bijection_inverse,
    dominance_bijection,
    dominance_bijection_inverse,
    freedom_bijection,
    freedom_bijection_inverse,
    ish_diagram_to_parking,
    parking_to_ish_diagram,
)
from .core import (
    Graph,
    SetPartition,
    all_graphs,
    identity_permutation,
    inverse_permutation,
    orbit,
    position_partition,
    set_partitions,
)
from .geometry import cross_validate, oracle_report
from .ish import (
    IshCeilingDiagram,
    ceiling_partition_count,
    is_valid_ish,
    ish_char_poly,
    ish_diagrams,
    ish_region_count,
    ish_statistics,
    poly_eval,
    poly_mul,
    rook_number,
)
from .parking import (
    is_parking_function,
    parking_functions,
    prime_components,
    prime_parking_functions,
    word_to_dyck,
)
from .rookwords import (
    is_prime_rook_word,
    is_rook_word,
    orbit_certificate,
    prime_rook_word_to_parking,
    prime_rook_words,
    rook_word_to_parking,
    rook_words,
    tail_and_dof,
)
from .shi import (
    ShiCeilingDiagram,
    is_valid_shi,
    shi_diagram_to_parking,
    shi_diagrams,
    shi_statistics,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_SKIPPED = 3


class UsageError(Exception):
    """Bad flags or malformed input files."""


class SkippedError(Exception):
    """The requested size exceeds the configured limits."""


def _progress(message: str) -> None:
    print(message, file=sys.stderr, flush=True)


def config_hash(config: dict) -> str:
    """Short deterministic fingerprint of a run configuration.

    >>> config_hash({"n": 3, "command": "count"}) == config_hash({"command": "count", "n": 3})
    True
    """
    blob = json.dumps(config, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:12]


def load_graph(spec: str, n: int) -> Graph:
    """Resolve a --graph argument: preset name or JSON file path.

    Presets: "complete", "empty", and anything starting with "path" (the
    path 1-2-...-n).  Files hold {"n": int, "edges": [[i, j], ...]}.

    >>> load_graph("path", 3).sorted_edges()
    ((1, 2), (2, 3))
    """
    if spec == "complete":
        return Graph.complete(n)
    if spec == "empty":
        return Graph.empty(n)
    if spec.startswith("path"):
        return Graph.path(n)
    try:
        with open(spec, encoding="utf-8") as handle:
            data = json.load(handle)
        graph = Graph.from_json(data)
    except OSError as exc:
        raise UsageError(f"cannot read graph file {spec!r}: {exc}") from exc
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed graph file {spec!r}: {exc}") from exc
    if graph.n != n:
        raise UsageError(f"graph file {spec!r} is on {graph.n} vertices, --n is {n}")
    return graph


def _partition_str(partition: SetPartition) -> str:
    return "|".join(",".join(str(v) for v in block) for block in partition)


def _word_str(word: Sequence[int]) -> str:
    return ",".join(str(v) for v in word)


def _jsonify(value):
    """Best-effort conversion of report values to JSON-compatible types."""
    if isinstance(value, dict):
        return {str(k): _jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value, key=repr) if isinstance(value, (set, frozenset)) else value
        return [_jsonify(v) for v in items]
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return repr(value)


def _check_size(name: str, n: int, limit: int, large_limit: int, allow_large: bool) -> None:
    cap = large_limit if allow_large else limit
    if n > cap:
        hint = "" if allow_large else " (pass --allow-large to raise the limit)"
        raise SkippedError(f"{name} is limited to n <= {cap}, got n = {n}{hint}")


# ---------------------------------------------------------------------------
# region records shared by count/enumerate


def _region_records(kind: str, n: int, graph: Graph) -> Iterator[dict]:
    """Uniform per-region statistic records for one arrangement."""
    if kind == "shi":
        for diagram in shi_diagrams(n, graph):
            stats = shi_statistics(diagram)
            yield {
                "pi": list(diagram.pi),
                "partition": [list(b) for b in diagram.partition],
                "ceiling_partition": stats.ceiling_partition,
                "dof": stats.dof,
                "dominant": stats.dominant,
            }
    elif kind == "ish":
        for diagram in ish_diagrams(n, graph):
            stats = ish_statistics(diagram)
            yield {
                "pi": list(diagram.pi),
                "eps": list(diagram.eps),
                "ceiling_partition": stats.ceiling_partition,
                "dof": stats.dof,
                "dominant": stats.dominant,
                "relatively_bounded": stats.relatively_bounded,
            }
    elif kind == "cox":
        for pi in itertools.permutations(range(1, n + 1)):
            yield {
                "pi": list(pi),
                "ceiling_partition": tuple((v,) for v in range(1, n + 1)),
                "dof": n,
                "dominant": tuple(pi) == identity_permutation(n),
            }
    else:  # pragma: no cover - guarded by argparse choices
        raise UsageError(f"unknown arrangement {kind!r}")


def _breakdown(records: Iterator[dict], by: str) -> tuple[int, dict]:
    total = 0
    hist: dict[str, int] = {}
    for record in records:
        total += 1
        if by == "dof":
            key = str(record["dof"])
        elif by == "dominance":
            key = "dominant" if record["dominant"] else "non_dominant"
        else:  # ceiling-partition
            key = _partition_str(record["ceiling_partition"])
        hist[key] = hist.get(key, 0) + 1
    ordered = {k: hist[k] for k in sorted(hist, key=lambda s: (len(s), s))}
    return total, ordered


# ---------------------------------------------------------------------------
# count


def cmd_count(args: argparse.Namespace) -> int:
    _check_size("count", args.n, 6, 8, args.allow_large)
    graph = load_graph(args.graph, args.n)
    kinds = [args.arrangement] if args.arrangement else ["shi", "ish"]
    results: dict[str, dict] = {}
    for kind in kinds:
        _progress(f"counting {kind} regions (n={args.n})")
        formula = math.factorial(args.n) if kind == "cox" else ish_region_count(graph)
        entry: dict = {"formula": formula}
        if args.by:
            total, hist = _breakdown(_region_records(kind, args.n, graph), args.by)
            entry["total"] = total
            entry[f"by_{args.by.replace('-', '_')}"] = hist
        else:
            entry["total"] = sum(1 for _ in _region_records(kind, args.n, graph))
        results[kind] = entry
    doc = _wrap(args, "count", {"results": results})
    if args.format == "tsv":
        rows = [("arrangement", "key", "count")]
        for kind, entry in results.items():
            rows.append((kind, "total", entry["total"]))
            rows.append((kind, "formula", entry["formula"]))
            for label, count in entry.get(f"by_{args.by.replace('-', '_')}", {}).items() if args.by else ():
                rows.append((kind, f"{args.by}={label}", count))
        _emit_tsv(rows)
    else:
        _emit_json(doc)
    return EXIT_OK


# ---------------------------------------------------------------------------
# enumerate


def cmd_enumerate(args: argparse.Namespace) -> int:
    _check_size("enumerate", args.n, 5, 6, args.allow_large)
    graph = load_graph(args.graph, args.n)
    kind = args.arrangement
    _progress(f"enumerating {kind} regions (n={args.n})")
    records = []
    for record in _region_records(kind, args.n, graph):
        record["ceiling_partition"] = [list(b) for b in record["ceiling_partition"]]
        records.append(record)
    doc = _wrap(args, "enumerate", {"arrangement": kind, "regions": records})
    if args.format == "tsv":
        columns = list(records[0].keys()) if records else ["pi"]
        rows = [tuple(columns)]
        for record in records:
            rows.append(
                tuple(
                    _word_str(v) if isinstance(v, list) and v and isinstance(v[0], int)
                    else "|".join(_word_str(b) for b in v) if isinstance(v, list)
                    else v
                    for v in (record[c] for c in columns)
                )
            )
        _emit_tsv(rows)
    else:
        _emit_json(doc)
    return EXIT_OK


# ---------------------------------------------------------------------------
# map


_BIJECTIONS: dict[str, Callable[[IshCeilingDiagram], ShiCeilingDiagram]] = {
    "basic": basic_bijection,
    "dominance": dominance_bijection,
    "bounded": bounded_bijection,
    "freedom": freedom_bijection,
}


def _read_diagram(path: str) -> IshCeilingDiagram:
    try:
        if path == "-":
            data = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as handle:
                data = json.load(handle)
        return IshCeilingDiagram.from_json(data)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read Ish diagram from {path!r}: {exc}") from exc


def cmd_map(args: argparse.Namespace) -> int:
    graph = load_graph(args.graph, args.n)
    diagram = _read_diagram(args.input)
    if diagram.n != args.n:
        raise UsageError(f"diagram has {diagram.n} letters, --n is {args.n}")
    if not is_valid_ish(diagram, graph):
        raise UsageError("input is not a valid Ish ceiling diagram for the graph")
    if args.bijection == "basic" and graph != Graph.complete(args.n):
        raise UsageError("the basic bijection is defined on the complete graph only")
    stats_in = ish_statistics(diagram)
    if args.bijection == "bounded" and not stats_in.relatively_bounded:
        raise UsageError("the bounded bijection needs a relatively bounded input")

    image = _BIJECTIONS[args.bijection](diagram)
    stats_out = shi_statistics(image)
    certificates: dict = {}
    failures = []
    if args.bijection != "basic":
        if stats_in.ceiling_partition != stats_out.ceiling_partition:
            failures.append("ceiling partition not preserved")
        certificates["ceiling_partition"] = [
            list(b) for b in stats_out.ceiling_partition
        ]
    if args.bijection == "dominance":
        if stats_in.dominant != stats_out.dominant:
            failures.append("dominance not preserved")
        certificates["dominant"] = stats_out.dominant
    if args.bijection == "freedom":
        if stats_in.dof != stats_out.dof:
            failures.append("degrees of freedom not preserved")
        certificates["dof"] = stats_out.dof
    if args.bijection == "bounded":
        if stats_out.dof != 1:
            failures.append("image is not relatively bounded")
        certificates["relatively_bounded"] = stats_out.dof == 1

    doc = _wrap(
        args,
        "map",
        {
            "bijection": args.bijection,
            "input": diagram.to_json(),
            "output": image.to_json(),
            **({"certificates": certificates} if args.bijection != "basic" else {}),
        },
    )
    _emit_json(doc)
    if failures:
        for failure in failures:
            _progress(f"FAIL: {failure}")
        return EXIT_FAIL
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify suites.  Each returns (passed, report-dict); per-graph workers are
# module-level functions so --jobs can fan them out across processes.


def _sweep_graphs(n: int, allow_large: bool, suite: str) -> list[Graph]:
    """Graphs covered by an all-graphs theorem sweep at size n."""
    if n <= 4:
        return list(all_graphs(n))
    cap = 6 if allow_large else 5
    if n <= cap:
        return [Graph.complete(n)]
    raise SkippedError(
        f"{suite} sweeps all graphs for n <= 4 and the complete graph for n <= {cap}, got n = {n}"
    )


def _check_dominance_graph(payload: tuple[int, tuple[tuple[int, int], ...]]) -> dict:
    n, edges = payload
    graph = Graph(n, frozenset(edges))
    shi_set = set(shi_diagrams(n, graph))
    seen = set()
    singletons = tuple((v,) for v in range(1, n + 1))
    for diagram in ish_diagrams(n, graph):
        stats = ish_statistics(diagram)
        image = dominance_bijection(diagram)
        image_stats = shi_statistics(image)
        if not is_valid_shi(image, graph):
            return {"edges": edges, "ok": False, "detail": f"image invalid for G: {diagram}"}
        if image_stats.ceiling_partition != stats.ceiling_partition:
            return {"edges": edges, "ok": False, "detail": f"ceiling partition broken: {diagram}"}
        if image_stats.dominant != stats.dominant:
            return {"edges": edges, "ok": False, "detail": f"dominance broken: {diagram}"}
        if dominance_bijection_inverse(image) != diagram:
            return {"edges": edges, "ok": False, "detail": f"roundtrip broken: {diagram}"}
        if stats.dof == n:
            # full-freedom regions: the image diagram keeps pi and drops all
            # arcs, and the parking word labeling it is the inverse of pi
            if image != ShiCeilingDiagram(diagram.pi, singletons):
                return {"edges": edges, "ok": False, "detail": f"free-region image wrong: {diagram}"}
            if shi_diagram_to_parking(image) != inverse_permutation(diagram.pi):
                return {"edges": edges, "ok": False, "detail": f"free-region word wrong: {diagram}"}
        seen.add(image)
    if seen != shi_set:
        return {"edges": edges, "ok": False, "detail": "image set is not all Shi diagrams"}
    return {"edges": edges, "ok": True, "count": len(seen)}


def _check_bounded_graph(payload: tuple[int, tuple[tuple[int, int], ...]]) -> dict:
    n, edges = payload
    graph = Graph(n, frozenset(edges))
    shi_bounded = {d for d in shi_diagrams(n, graph) if shi_statistics(d).dof == 1}
    seen = set()
    freedom_agrees = 0
    freedom_differs = 0
    for diagram in ish_diagrams(n, graph):
        stats = ish_statistics(diagram)
        if not stats.relatively_bounded:
            continue
        image = bounded_bijection(diagram)
        image_stats = shi_statistics(image)
        if not is_valid_shi(image, graph):
            return {"edges": edges, "ok": False, "detail": f"image invalid for G: {diagram}"}
        if image_stats.dof != 1:
            return {"edges": edges, "ok": False, "detail": f"image not relatively bounded: {diagram}"}
        if image_stats.ceiling_partition != stats.ceiling_partition:
            return {"edges": edges, "ok": False, "detail": f"ceiling partition broken: {diagram}"}
        if bounded_bijection_inverse(image) != diagram:
            return {"edges": edges, "ok": False, "detail": f"roundtrip broken: {diagram}"}
        if freedom_bijection(diagram) == image:
            freedom_agrees += 1
        else:
            freedom_differs += 1
        seen.add(image)
    if seen != shi_bounded:
        return {"edges": edges, "ok": False, "detail": "image set is not all bounded Shi diagrams"}
    return {
        "edges": edges,
        "ok": True,
        "count": len(seen),
        "freedom_agrees": freedom_agrees,
        "freedom_differs": freedom_differs,
    }


def _check_freedom_graph(payload: tuple[int, tuple[tuple[int, int], ...]]) -> dict:
    n, edges = payload
    graph = Graph(n, frozenset(edges))
    shi_set = set(shi_diagrams(n, graph))
    seen = set()
    for diagram in ish_diagrams(n, graph):
        stats = ish_statistics(diagram)
        image = freedom_bijection(diagram)
        image_stats = shi_statistics(image)
        if not is_valid_shi(image, graph):
            return {"edges": edges, "ok": False, "detail": f"image invalid for G: {diagram}"}
        if image_stats.ceiling_partition != stats.ceiling_partition:
            return {"edges": edges, "ok": False, "detail": f"ceiling partition broken: {diagram}"}
        if image_stats.dof != stats.dof:
            return {"edges": edges, "ok": False, "detail": f"dof broken: {diagram}"}
        if freedom_bijection_inverse(image) != diagram:
            return {"edges": edges, "ok": False, "detail": f"roundtrip broken: {diagram}"}
        seen.add(image)
    if seen != shi_set:
        return {"edges": edges, "ok": False, "detail": "image set is not all Shi diagrams"}
    return {"edges": edges, "ok": True, "count": len(seen)}


def _check_formulas_graph(payload: tuple[int, tuple[tuple[int, int], ...]]) -> dict:
    n, edges = payload
    graph = Graph(n, frozenset(edges))
    formula = ish_region_count(graph)
    shi_hist: dict[SetPartition, int] = {}
    ish_hist: dict[SetPartition, int] = {}
    shi_count = ish_count = 0
    for diagram in shi_diagrams(n, graph):
        cp = shi_statistics(diagram).ceiling_partition
        shi_hist[cp] = shi_hist.get(cp, 0) + 1
        shi_count += 1
    for diagram in ish_diagrams(n, graph):
        cp = ish_statistics(diagram).ceiling_partition
        ish_hist[cp] = ish_hist.get(cp, 0) + 1
        ish_count += 1
    if not (shi_count == ish_count == formula):
        return {"edges": edges, "ok": False, "detail": f"counts {shi_count}/{ish_count}/formula {formula}"}
    poly = ish_char_poly(graph)
    if (-1) ** n * poly_eval(poly, -1) != formula:
        return {"edges": edges, "ok": False, "detail": "Zaslavsky count disagrees"}
    if rook_number(graph, n - 1) != formula:
        return {"edges": edges, "ok": False, "detail": "rook number disagrees"}
    if shi_hist != ish_hist:
        return {"edges": edges, "ok": False, "detail": "ceiling-partition histograms differ"}
    for partition in set_partitions(n):
        admissible = all(graph.has_edge(i, j) for i, j in _partition_arcs(partition))
        expected = ceiling_partition_count(graph, partition) if admissible else 0
        if ish_hist.get(partition, 0) != expected:
            return {
                "edges": edges,
                "ok": False,
                "detail": f"partition {partition} count {ish_hist.get(partition, 0)} != {expected}",
            }
    return {"edges": edges, "ok": True, "count": formula}


def _partition_arcs(partition: SetPartition) -> list[tuple[int, int]]:
    pairs = []
    for block in partition:
        pairs.extend(zip(block, block[1:]))
    return pairs


def _run_sweep(
    worker: Callable[[tuple[int, tuple[tuple[int, int], ...]]], dict],
    graphs: list[Graph],
    n: int,
    jobs: int,
) -> list[dict]:
    payloads = [(n, graph.sorted_edges()) for graph in graphs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(worker, payloads))
    else:
        results = []
        for k, payload in enumerate(payloads, 1):
            results.append(worker(payload))
            if len(payloads) > 1:
                _progress(f"  graph {k}/{len(payloads)} done")
    return results


def _suite_cycle_lemma(args: argparse.Namespace) -> tuple[bool, dict]:
    n = args.n
    _check_size("cycle-lemma", n, 5, 6, args.allow_large)
    checks = []

    alphabet = n + 1
    words = orbits = parking = rook = both = 0
    partition_preserved = True
    for word in itertools.product(range(1, alphabet + 1), repeat=n):
        words += 1
        park = is_parking_function(word)
        rk = is_rook_word(word)
        parking += park
        rook += rk
        both += park and rk
        if rk and position_partition(rook_word_to_parking(word)) != position_partition(word):
            partition_preserved = False
        if word == min(orbit(word, alphabet)):
            orbits += 1
            orbit_certificate(word)  # raises unless exactly one of each
    checks.append(
        {
            "name": "orbit uniqueness",
            "ok": orbits == parking == rook == (n + 1) ** (n - 1),
            "words": words,
            "orbits": orbits,
            "parking_functions": parking,
            "rook_words": rook,
            "rook_and_park": both,
        }
    )
    checks.append({"name": "beta preserves position partitions", "ok": partition_preserved})

    if n >= 2:
        alphabet = n - 1
        prime_words = prime_orbits = 0
        prime_preserved = True
        for word in itertools.product(range(1, alphabet + 1), repeat=n):
            prime_words += 1
            if is_prime_rook_word(word):
                image = prime_rook_word_to_parking(word)
                if position_partition(image) != position_partition(word):
                    prime_preserved = False
            if word == min(orbit(word, alphabet)):
                prime_orbits += 1
                orbit_certificate(word, prime=True)
        checks.append(
            {
                "name": "prime orbit uniqueness",
                "ok": prime_orbits == max(1, n - 1) ** (n - 1),
                "words": prime_words,
                "orbits": prime_orbits,
            }
        )
        checks.append({"name": "beta-prime preserves position partitions", "ok": prime_preserved})
    else:
        checks.append(
            {
                "name": "prime objects at n=1",
                "ok": tuple(prime_parking_functions(1)) == ((1,),)
                and tuple(prime_rook_words(1)) == ((1,),),
            }
        )
    return all(c["ok"] for c in checks), {"checks": checks}


def _suite_thm_basic(args: argparse.Namespace) -> tuple[bool, dict]:
    n = args.n
    _check_size("thm-basic", n, 5, 6, args.allow_large)
    graph = Graph.complete(n)
    shi_set = set(shi_diagrams(n, graph))
    seen = set()
    ok = True
    detail = None
    for diagram in ish_diagrams(n, graph):
        image = basic_bijection(diagram)
        if not is_valid_shi(image, graph) or basic_bijection_inverse(image) != diagram:
            ok, detail = False, f"roundtrip broken at {diagram}"
            break
        seen.add(image)
    if ok and seen != shi_set:
        ok, detail = False, "image set is not all Shi diagrams"
    report = {"n": n, "regions": len(seen), "detail": detail}
    return ok, report


def _graph_sweep_suite(args: argparse.Namespace, worker, suite: str) -> tuple[bool, dict]:
    graphs = _sweep_graphs(args.n, args.allow_large, suite)
    _progress(f"{suite}: sweeping {len(graphs)} graph(s) at n={args.n}")
    results = _run_sweep(worker, graphs, args.n, args.jobs)
    failures = [r for r in results if not r["ok"]]
    report: dict = {
        "n": args.n,
        "graphs": len(graphs),
        "regions_checked": sum(r.get("count", 0) for r in results),
        "failures": failures[:5],
    }
    if suite == "thm-bounded":
        report["freedom_agrees_with_bounded"] = sum(r.get("freedom_agrees", 0) for r in results)
        report["freedom_differs_from_bounded"] = sum(r.get("freedom_differs", 0) for r in results)
    return not failures, report


def _suite_thm_freedom(args: argparse.Namespace) -> tuple[bool, dict]:
    passed, report = _graph_sweep_suite(args, _check_freedom_graph, "thm-freedom")
    if passed:
        roundtrip_ok = True
        for word in parking_functions(args.n):
            if ish_diagram_to_parking(parking_to_ish_diagram(word)) != word:
                roundtrip_ok = False
                break
        report["parking_roundtrip"] = roundtrip_ok
        passed = passed and roundtrip_ok
    return passed, report


def _suite_formulas(args: argparse.Namespace) -> tuple[bool, dict]:
    passed, report = _graph_sweep_suite(args, _check_formulas_graph, "formulas")
    # the complete-graph characteristic polynomial in closed form
    n = args.n
    expected = (0, 1)
    for _ in range(n - 1):
        expected = poly_mul(expected, (-n, 1))
    actual = ish_char_poly(Graph.complete(n))
    report["char_poly"] = list(actual)
    report["char_poly_closed_form"] = actual == expected
    return passed and actual == expected, report


def _suite_negative_controls(args: argparse.Namespace) -> tuple[bool, dict]:
    checks = []

    diagram = IshCeilingDiagram((4, 1, 7, 3, 8, 5, 6, 2), (0, 0, 1, 2, 0, 3, 5, 0))
    stats_in = ish_statistics(diagram)
    image = basic_bijection(diagram)
    stats_out = shi_statistics(image)
    expected_cp = ((1, 4), (2, 5), (3, 6), (7,), (8,))
    checks.append(
        {
            "name": "basic bijection breaks the ceiling partition",
            "ok": stats_in.ceiling_partition == ((1, 7), (2, 3, 5, 6), (4,), (8,))
            and stats_out.ceiling_partition == expected_cp
            and stats_out.ceiling_partition != stats_in.ceiling_partition,
        }
    )
    checks.append(
        {
            "name": "basic bijection drops dof 3 -> 2",
            "ok": stats_in.dof == 3 and stats_out.dof == 2,
        }
    )

    shi_dom = sum(
        1
        for d in shi_diagrams(3, Graph.complete(3))
        if (lambda s: s.dof == 1 and s.dominant)(shi_statistics(d))
    )
    ish_dom = sum(
        1
        for d in ish_diagrams(3, Graph.complete(3))
        if (lambda s: s.relatively_bounded and s.dominant)(ish_statistics(d))
    )
    checks.append(
        {
            "name": "dominant relatively bounded counts differ at n=3",
            "ok": shi_dom == 2 and ish_dom == 3,
            "shi": shi_dom,
            "ish": ish_dom,
        }
    )

    for n in (3, 4):
        expected = (n - 1) ** (n - 1)
        shi_total = sum(
            1 for d in shi_diagrams(n, Graph.complete(n)) if shi_statistics(d).dof == 1
        )
        ish_total = sum(
            1
            for d in ish_diagrams(n, Graph.complete(n))
            if ish_statistics(d).relatively_bounded
        )
        checks.append(
            {
                "name": f"relatively bounded totals at n={n}",
                "ok": shi_total == ish_total == expected,
                "shi": shi_total,
                "ish": ish_total,
                "expected": expected,
            }
        )
    return all(c["ok"] for c in checks), {"checks": checks}


def _suite_factorization_candidates(args: argparse.Namespace) -> tuple[bool, dict]:
    """Search harness for the open rook-word factorization question.

    Tabulates degrees of freedom and position partitions over rook words
    and parking functions side by side.  Asserts nothing.
    """
    n = args.n
    _check_size("factorization-candidates", n, 5, 6, args.allow_large)
    rook_by_dof: dict[int, int] = {}
    park_by_dof: dict[int, int] = {}
    joint: dict[tuple[SetPartition, int], list[int]] = {}
    for word in rook_words(n):
        _, dof = tail_and_dof(word)
        rook_by_dof[dof] = rook_by_dof.get(dof, 0) + 1
        key = (position_partition(word), dof)
        joint.setdefault(key, [0, 0])[0] += 1
    for word in parking_functions(n):
        dof = len(prime_components(word_to_dyck(word)))
        park_by_dof[dof] = park_by_dof.get(dof, 0) + 1
        key = (position_partition(word), dof)
        joint.setdefault(key, [0, 0])[1] += 1
    agree = sum(1 for counts in joint.values() if counts[0] == counts[1])
    disagree = {
        f"{_partition_str(partition)} dof={dof}": counts
        for (partition, dof), counts in sorted(joint.items())
        if counts[0] != counts[1]
    }
    report = {
        "n": n,
        "rook_words_by_dof": {str(k): rook_by_dof[k] for k in sorted(rook_by_dof)},
        "parking_functions_by_dof": {str(k): park_by_dof[k] for k in sorted(park_by_dof)},
        "joint_classes": len(joint),
        "joint_classes_agreeing": agree,
        "joint_classes_disagreeing": disagree,
        "note": "tabulation only; no assertion (open question)",
    }
    return True, report


_SUITES: dict[str, Callable[[argparse.Namespace], tuple[bool, dict]]] = {
    "cycle-lemma": _suite_cycle_lemma,
    "thm-basic": _suite_thm_basic,
    "thm-dominance": lambda a: _graph_sweep_suite(a, _check_dominance_graph, "thm-dominance"),
    "thm-bounded": lambda a: _graph_sweep_suite(a, _check_bounded_graph, "thm-bounded"),
    "thm-freedom": _suite_thm_freedom,
    "formulas": _suite_formulas,
    "negative-controls": _suite_negative_controls,
    "factorization-candidates": _suite_factorization_candidates,
}


def cmd_verify(args: argparse.Namespace) -> int:
    passed, report = _SUITES[args.suite](args)
    doc = _wrap(args, "verify", {"suite": args.suite, "passed": passed, "report": _jsonify(report)})
    if args.format == "tsv":
        rows = [("suite", "passed"), (args.suite, str(passed))]
        for check in report.get("checks", []):
            rows.append((check["name"], str(check["ok"])))
        _emit_tsv(rows)
    else:
        _emit_json(doc)
    _progress(f"suite {args.suite}: {'PASS' if passed else 'FAIL'}")
    return EXIT_OK if passed else EXIT_FAIL


# ---------------------------------------------------------------------------
# oracle


def cmd_oracle(args: argparse.Namespace) -> int:
    _check_size("oracle", args.n, 4, 5, args.allow_large)
    graph = load_graph(args.graph, args.n)
    kind = args.arrangement
    _progress(f"enumerating {kind} arrangement geometrically (n={args.n})")
    validation = cross_validate(kind, args.n, graph)
    report = oracle_report(kind, args.n, graph)
    _progress(
        f"{validation['matched']}/{validation['region_count']} regions matched"
    )
    doc = _wrap(
        args,
        "oracle",
        {
            "arrangement": kind,
            "matched": validation["matched"],
            "region_count": validation["region_count"],
            "formula_count": validation["formula_count"],
            "ok": validation["ok"],
            "mismatches": _jsonify(validation["mismatches"]),
            "report": report,
        },
    )
    if args.format == "tsv":
        rows = [("order", "ceilings", "dof", "dominant", "witness")]
        for region in report["regions"]:
            rows.append(
                (
                    _word_str(region["order"]),
                    ";".join("-".join(map(str, c)) for c in region["ceilings"]),
                    region["dof"],
                    region["dominant"],
                    _word_str(region["witness"]),
                )
            )
        _emit_tsv(rows)
    else:
        _emit_json(doc)
    return EXIT_OK if validation["ok"] else EXIT_FAIL


# ---------------------------------------------------------------------------
# plumbing


def _emit_json(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _emit_tsv(rows: list[tuple]) -> None:
    for row in rows:
        print("\t".join(str(cell) for cell in row))


def _config_dict(args: argparse.Namespace, command: str) -> dict:
    config = {"command": command}
    for key in ("n", "graph", "arrangement", "bijection", "by", "format", "jobs", "allow_large", "suite", "input"):
        if hasattr(args, key):
            config[key] = getattr(args, key)
    return config


def _wrap(args: argparse.Namespace, command: str, body: dict) -> dict:
    config = _config_dict(args, command)
    return {"command": command, "config": config, "config_hash": config_hash(config), **body}


def _add_common(parser: argparse.ArgumentParser, *, graph_default: str = "complete") -> None:
    parser.add_argument("--n", type=int, required=True, help="number of coordinates")
    parser.add_argument(
        "--graph",
        default=graph_default,
        help='graph preset ("complete", "empty", "path") or JSON file path',
    )
    parser.add_argument("--format", choices=("json", "tsv"), default="json")
    parser.add_argument("--jobs", type=int, default=1, help="parallel workers for sweeps")
    parser.add_argument(
        "--allow-large", action="store_true", help="raise the default size limits"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shi-ish",
        description="Regions of Shi and Ish arrangements: counting, bijections, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="region totals and breakdowns")
    _add_common(p_count)
    p_count.add_argument("--arrangement", choices=("cox", "shi", "ish"))
    p_count.add_argument("--by", choices=("dof", "dominance", "ceiling-partition"))
    p_count.set_defaults(func=cmd_count)

    p_enum = sub.add_parser("enumerate", help="list regions as ceiling diagrams")
    _add_common(p_enum)
    p_enum.add_argument("--arrangement", choices=("cox", "shi", "ish"), default="shi")
    p_enum.set_defaults(func=cmd_enumerate)

    p_map = sub.add_parser("map", help="apply an Ish-to-Shi bijection to a diagram")
    _add_common(p_map)
    p_map.add_argument(
        "--bijection", choices=("basic", "dominance", "bounded", "freedom"), required=True
    )
    p_map.add_argument(
        "--input", default="-", help='JSON file with {"pi": [...], "eps": [...]} ("-" = stdin)'
    )
    p_map.set_defaults(func=cmd_map)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    _add_common(p_verify)
    p_verify.add_argument("--suite", choices=tuple(_SUITES), required=True)
    p_verify.set_defaults(func=cmd_verify)

    p_oracle = sub.add_parser("oracle", help="geometric cross-validation report")
    _add_common(p_oracle)
    p_oracle.add_argument("--arrangement", choices=("cox", "shi", "ish"), default="shi")
    p_oracle.set_defaults(func=cmd_oracle)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.n < 1:
        parser.error("--n must be at least 1")
    try:
        return args.func(args)
    except UsageError as exc:
        _progress(f"error: {exc}")
        return EXIT_USAGE
    except SkippedError as exc:
        _progress(f"skipped: {exc}")
        return EXIT_SKIPPED


if __name__ == "__main__":
    sys.exit(main())
