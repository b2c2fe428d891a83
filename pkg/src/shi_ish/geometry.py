"""Exact geometric enumeration of arrangement regions.

The rest of the package describes regions of the Shi and Ish arrangements
combinatorially, by ceiling diagrams.  This module recomputes everything
from the raw hyperplanes -- regions as sign vectors with exact rational
interior witnesses, ceilings as facet hyperplanes on the origin side,
degrees of freedom as the dimension of the recession cone -- so that the
combinatorial labellings can be validated region by region.

All arithmetic is exact: integer hyperplane data, rational witnesses, and
the simplex-based feasibility test from :mod:`shi_ish.exactlp`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .core import (
    Graph,
    Permutation,
    SetPartition,
    identity_permutation,
    partition_from_blocks,
)
from .exactlp import Row, integer_rank, strict_feasible
from .ish import ish_ceiling_pairs, ish_diagrams, ish_region_count, ish_statistics
from .shi import ceiling_hyperplane_tags, shi_diagrams, shi_statistics

#: ("cox", i, j) is x_i - x_j = 0; ("shi", i, j) is x_i - x_j = 1;
#: ("ish", i, j) is x_1 - x_j = i.  Indices are 1-based with i < j.
Tag = tuple[str, int, int]

ARRANGEMENT_KINDS = ("cox", "shi", "ish")


@dataclass(frozen=True)
class Hyperplane:
    """The affine hyperplane ``normal . x = offset`` in R^n."""

    normal: tuple[int, ...]
    offset: int
    tag: Tag

    def value_at(self, point: Sequence[Fraction]) -> Fraction:
        """``normal . point - offset`` (sign tells the side of the plane)."""
        return sum(a * x for a, x in zip(self.normal, point)) - self.offset


@dataclass(frozen=True)
class Arrangement:
    kind: str
    n: int
    graph: Graph
    hyperplanes: tuple[Hyperplane, ...]


def _difference_normal(n: int, i: int, j: int) -> tuple[int, ...]:
    normal = [0] * n
    normal[i - 1] = 1
    normal[j - 1] = -1
    return tuple(normal)


def build_arrangement(kind: str, n: int, graph: Optional[Graph] = None) -> Arrangement:
    """Hyperplanes of Cox(n), Shi(G) or Ish(G).

    The Coxeter part x_i - x_j = 0 (i < j) is always included; "shi" adds
    x_i - x_j = 1 and "ish" adds x_1 - x_j = i for every edge (i, j) of the
    graph.  ``graph=None`` means the complete graph (the empty graph for
    "cox", where the graph is irrelevant).

    >>> len(build_arrangement("shi", 3).hyperplanes)
    6
    >>> len(build_arrangement("cox", 4).hyperplanes)
    6
    >>> [h.tag for h in build_arrangement("ish", 3, Graph(3, frozenset({(1, 2)}))).hyperplanes]
    [('cox', 1, 2), ('cox', 1, 3), ('cox', 2, 3), ('ish', 1, 2)]
    """
    if kind not in ARRANGEMENT_KINDS:
        raise ValueError(f"unknown arrangement kind: {kind!r}")
    if n < 1:
        raise ValueError("n must be at least 1")
    if graph is None:
        graph = Graph.empty(n) if kind == "cox" else Graph.complete(n)
    if graph.n != n:
        raise ValueError("graph is on the wrong vertex set")
    hyperplanes = [
        Hyperplane(_difference_normal(n, i, j), 0, ("cox", i, j))
        for i, j in itertools.combinations(range(1, n + 1), 2)
    ]
    if kind == "shi":
        for i, j in graph.sorted_edges():
            hyperplanes.append(Hyperplane(_difference_normal(n, i, j), 1, ("shi", i, j)))
    elif kind == "ish":
        for i, j in graph.sorted_edges():
            hyperplanes.append(Hyperplane(_difference_normal(n, 1, j), i, ("ish", i, j)))
    return Arrangement(kind, n, graph, tuple(hyperplanes))


@dataclass(frozen=True)
class GeomRegion:
    """An open region: one sign per hyperplane plus a rational interior point.

    ``signs[k]`` is +1 or -1 and the witness satisfies
    ``signs[k] * (normal_k . x - offset_k) > 0`` strictly for every k.
    """

    signs: tuple[int, ...]
    witness: tuple[Fraction, ...]


def check_region(arrangement: Arrangement, region: GeomRegion) -> bool:
    """Recheck that the witness strictly satisfies every signed inequality."""
    if len(region.signs) != len(arrangement.hyperplanes):
        return False
    for sign, hyp in zip(region.signs, arrangement.hyperplanes):
        if sign not in (1, -1) or sign * hyp.value_at(region.witness) <= 0:
            return False
    return True


def _signed_row(hyp: Hyperplane, sign: int) -> Row:
    return (tuple(sign * a for a in hyp.normal), sign * hyp.offset, True)


def _nudged_witness(
    hyperplanes: Sequence[Hyperplane],
    signs: dict[int, int],
    witness: tuple[Fraction, ...],
    hyp: Hyperplane,
    side: int,
) -> tuple[Fraction, ...]:
    """Move a witness lying on ``hyp`` strictly to the given side.

    Walking along ``side * hyp.normal`` increases the new signed value while
    every previously strict inequality stays strict for a small enough step.
    """
    direction = hyp.normal
    step: Optional[Fraction] = None
    for k, sign in signs.items():
        other = hyperplanes[k]
        drift = side * sign * sum(a * d for a, d in zip(other.normal, direction))
        if drift >= 0:
            continue
        slack = sign * other.value_at(witness)
        bound = Fraction(slack, -drift)
        if step is None or bound < step:
            step = bound
    t = Fraction(1) if step is None else step / 2
    return tuple(x + side * t * d for x, d in zip(witness, direction))


def enumerate_regions(
    arrangement: Arrangement,
    insertion_order: Optional[Sequence[int]] = None,
) -> tuple[GeomRegion, ...]:
    """All open regions of the arrangement, with exact interior witnesses.

    Hyperplanes are inserted one at a time starting from all of R^n (witness:
    the origin).  Each region keeps the side its witness is on for free and
    runs one exact feasibility probe for the opposite side; a region splits
    exactly when both sides are nonempty.  ``insertion_order`` permutes the
    insertion sequence (the resulting region set must not depend on it).

    >>> len(enumerate_regions(build_arrangement("shi", 3)))
    16
    >>> len(enumerate_regions(build_arrangement("ish", 3)))
    16
    >>> len(enumerate_regions(build_arrangement("cox", 3)))
    6
    """
    hyperplanes = arrangement.hyperplanes
    m = len(hyperplanes)
    n = arrangement.n
    if insertion_order is None:
        order = tuple(range(m))
    else:
        order = tuple(insertion_order)
        if sorted(order) != list(range(m)):
            raise ValueError("insertion_order must be a permutation of range(#hyperplanes)")

    origin = tuple(Fraction(0) for _ in range(n))
    partial: list[tuple[dict[int, int], tuple[Fraction, ...]]] = [({}, origin)]
    row_cache: dict[tuple[int, int], Row] = {}

    def cached_row(k: int, sign: int) -> Row:
        try:
            return row_cache[(k, sign)]
        except KeyError:
            row = _signed_row(hyperplanes[k], sign)
            row_cache[(k, sign)] = row
            return row

    for idx in order:
        hyp = hyperplanes[idx]
        grown: list[tuple[dict[int, int], tuple[Fraction, ...]]] = []
        for signs, witness in partial:
            value = hyp.value_at(witness)
            if value == 0:
                # witness sits on the new hyperplane: the region is cut in
                # two and a short walk along the normal lands in either half
                for side in (1, -1):
                    moved = _nudged_witness(hyperplanes, signs, witness, hyp, side)
                    grown.append(({**signs, idx: side}, moved))
                continue
            known = 1 if value > 0 else -1
            grown.append(({**signs, idx: known}, witness))
            rows = [cached_row(k, sign) for k, sign in signs.items()]
            rows.append(cached_row(idx, -known))
            probe = strict_feasible(rows, n)
            if probe is not None:
                grown.append(({**signs, idx: -known}, probe))
        partial = grown
    return tuple(
        GeomRegion(tuple(signs[k] for k in range(m)), witness) for signs, witness in partial
    )


def enumerate_regions_sweep(arrangement: Arrangement) -> tuple[GeomRegion, ...]:
    """Regions by brute force over all 2^m sign vectors.

    Exponentially slower than :func:`enumerate_regions`; kept as an
    independent slow path for differential testing on small arrangements.

    >>> len(enumerate_regions_sweep(build_arrangement("cox", 2)))
    2
    """
    hyperplanes = arrangement.hyperplanes
    n = arrangement.n
    regions = []
    for signs in itertools.product((1, -1), repeat=len(hyperplanes)):
        rows = [_signed_row(h, s) for h, s in zip(hyperplanes, signs)]
        witness = strict_feasible(rows, n)
        if witness is not None:
            regions.append(GeomRegion(signs, witness))
    return tuple(regions)


def region_order(arrangement: Arrangement, region: GeomRegion) -> Permutation:
    """The permutation with x_{pi_1} > x_{pi_2} > ... > x_{pi_n} on the region.

    Read off the Coxeter signs: they linearly order the coordinates, so the
    i-th largest coordinate is the one beating exactly n - i others.

    >>> arr = build_arrangement("cox", 2)
    >>> [region_order(arr, r) for r in enumerate_regions(arr)]
    [(1, 2), (2, 1)]
    """
    n = arrangement.n
    wins = [0] * (n + 1)
    for sign, hyp in zip(region.signs, arrangement.hyperplanes):
        if hyp.tag[0] != "cox":
            continue
        _, i, j = hyp.tag
        wins[i if sign == 1 else j] += 1
    order = tuple(sorted(range(1, n + 1), key=lambda i: wins[i], reverse=True))
    if [wins[i] for i in order] != list(range(n - 1, -1, -1)):
        raise ValueError("Coxeter signs do not define a linear order")
    return order


def region_dominant(arrangement: Arrangement, region: GeomRegion) -> bool:
    """True when x_1 > x_2 > ... > x_n holds on the region."""
    return region_order(arrangement, region) == identity_permutation(arrangement.n)


def region_ceilings(arrangement: Arrangement, region: GeomRegion) -> tuple[Hyperplane, ...]:
    """The ceilings of a region: affine hyperplanes spanning a facet of the
    region that do not separate it from the origin.

    Every affine member has positive offset, so the origin is strictly on
    the minus side and the separation test is just ``sign == -1``; the facet
    test asks for a point on the hyperplane satisfying every other region
    inequality strictly.

    >>> arr = build_arrangement("shi", 3)
    >>> sorted({len(region_ceilings(arr, r)) for r in enumerate_regions(arr)})
    [0, 1, 2]
    """
    hyperplanes = arrangement.hyperplanes
    n = arrangement.n
    ceilings = []
    for idx, hyp in enumerate(hyperplanes):
        if hyp.offset == 0 or region.signs[idx] != -1:
            continue
        rows = [
            _signed_row(other, region.signs[k])
            for k, other in enumerate(hyperplanes)
            if k != idx
        ]
        pinned = (hyp.normal.index(1), hyp.normal.index(-1), hyp.offset)
        if strict_feasible(rows, n, equalities=(pinned,)) is not None:
            ceilings.append(hyp)
    return tuple(ceilings)


def _partition_from_pairs(n: int, pairs: Iterable[tuple[int, int]]) -> SetPartition:
    parent = list(range(n + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, j in pairs:
        parent[find(i)] = find(j)
    blocks: dict[int, list[int]] = {}
    for v in range(1, n + 1):
        blocks.setdefault(find(v), []).append(v)
    return partition_from_blocks(blocks.values())


def region_ceiling_partition(arrangement: Arrangement, region: GeomRegion) -> SetPartition:
    """Partition of [n] generated by i ~ j over the ceiling tags (i, j)."""
    pairs = [(h.tag[1], h.tag[2]) for h in region_ceilings(arrangement, region)]
    return _partition_from_pairs(arrangement.n, pairs)


def _forced_equal_pairs(arrangement: Arrangement, region: GeomRegion) -> list[list[bool]]:
    """Mutual-reachability table of the recession cone's difference order.

    The cone is {v : sign_k (normal_k . v) >= 0}; every constraint says
    v_j <= v_i for some pair, so v_i = v_j is forced exactly when i and j
    are reachable from each other in the digraph of those comparisons.
    """
    n = arrangement.n
    reach = [[False] * (n + 1) for _ in range(n + 1)]
    for v in range(1, n + 1):
        reach[v][v] = True
    for sign, hyp in zip(region.signs, arrangement.hyperplanes):
        i = hyp.normal.index(1) + 1
        j = hyp.normal.index(-1) + 1
        if sign == 1:
            reach[j][i] = True
        else:
            reach[i][j] = True
    for mid in range(1, n + 1):
        row_mid = reach[mid]
        for a in range(1, n + 1):
            if reach[a][mid]:
                row_a = reach[a]
                for b in range(1, n + 1):
                    if row_mid[b]:
                        row_a[b] = True
    return reach


def recession_dimension(arrangement: Arrangement, region: GeomRegion) -> int:
    """Dimension of the recession cone of the region (degrees of freedom).

    A hyperplane's linear form vanishes identically on the cone exactly when
    its two coordinates are forced equal; the cone's dimension is n minus
    the rank of those vanishing normals.

    >>> arr = build_arrangement("cox", 3)
    >>> {recession_dimension(arr, r) for r in enumerate_regions(arr)}
    {3}
    """
    n = arrangement.n
    reach = _forced_equal_pairs(arrangement, region)
    vanishing = []
    for hyp in arrangement.hyperplanes:
        i = hyp.normal.index(1) + 1
        j = hyp.normal.index(-1) + 1
        if reach[i][j] and reach[j][i]:
            vanishing.append(hyp.normal)
    if not vanishing:
        return n
    return n - integer_rank(vanishing)


def recession_dimension_lp(arrangement: Arrangement, region: GeomRegion) -> int:
    """Recession-cone dimension with the vanishing test done by probes.

    For each hyperplane, maximize its signed form over the cone (capped at
    1): the optimum is 0 exactly when the form vanishes identically.  Slow
    path kept for differential testing against :func:`recession_dimension`.
    """
    n = arrangement.n
    cone_rows: list[Row] = [
        (tuple(sign * a for a in hyp.normal), 0, False)
        for sign, hyp in zip(region.signs, arrangement.hyperplanes)
    ]
    vanishing = []
    for sign, hyp in zip(region.signs, arrangement.hyperplanes):
        probe: list[Row] = [(tuple(sign * a for a in hyp.normal), 0, True)]
        probe.extend(cone_rows)
        if strict_feasible(probe, n) is None:
            vanishing.append(hyp.normal)
    if not vanishing:
        return n
    return n - integer_rank(vanishing)


def _all_singletons(n: int) -> SetPartition:
    return tuple((v,) for v in range(1, n + 1))


def _combinatorial_catalog(
    kind: str, n: int, graph: Graph
) -> dict[tuple[Permutation, frozenset[tuple[int, int]]], dict]:
    """Diagram-side catalog keyed by (order, ceiling pairs).

    The key matches the geometric key: for "shi" a ceiling pair (i, j) means
    the hyperplane x_i - x_j = 1, for "ish" it means x_1 - x_j = i.  Cox
    regions are plain permutations with no ceilings and a full-dimensional
    recession cone.
    """
    catalog: dict[tuple[Permutation, frozenset[tuple[int, int]]], dict] = {}
    if kind == "shi":
        for diagram in shi_diagrams(n, graph):
            stats = shi_statistics(diagram)
            catalog[(diagram.pi, ceiling_hyperplane_tags(diagram))] = {
                "diagram": diagram,
                "ceiling_partition": stats.ceiling_partition,
                "dof": stats.dof,
                "dominant": stats.dominant,
            }
    elif kind == "ish":
        for diagram in ish_diagrams(n, graph):
            stats = ish_statistics(diagram)
            catalog[(diagram.pi, ish_ceiling_pairs(diagram))] = {
                "diagram": diagram,
                "ceiling_partition": stats.ceiling_partition,
                "dof": stats.dof,
                "dominant": stats.dominant,
            }
    else:
        for pi in itertools.permutations(range(1, n + 1)):
            catalog[(tuple(pi), frozenset())] = {
                "diagram": tuple(pi),
                "ceiling_partition": _all_singletons(n),
                "dof": n,
                "dominant": tuple(pi) == identity_permutation(n),
            }
    return catalog


def cross_validate(kind: str, n: int, graph: Optional[Graph] = None) -> dict:
    """Match every geometric region to its combinatorial diagram and compare.

    Regions and diagrams are paired up by (coordinate order, ceiling pairs);
    the report records whether the pairing is a bijection and whether the
    ceiling partition, degrees of freedom and dominance agree on every pair.

    >>> cross_validate("shi", 3)["ok"]
    True
    >>> cross_validate("ish", 3, Graph.path(3))["region_count"]
    13
    """
    arrangement = build_arrangement(kind, n, graph)
    regions = enumerate_regions(arrangement)

    geometric: dict[tuple[Permutation, frozenset[tuple[int, int]]], dict] = {}
    mismatches: list[dict] = []
    for region in regions:
        order = region_order(arrangement, region)
        pairs = frozenset(
            (h.tag[1], h.tag[2]) for h in region_ceilings(arrangement, region)
        )
        key = (order, pairs)
        if key in geometric:
            mismatches.append(
                {"reason": "two regions share a combinatorial key", "key": repr(key)}
            )
            continue
        geometric[key] = {
            "region": region,
            "ceiling_partition": _partition_from_pairs(n, pairs),
            "dof": recession_dimension(arrangement, region),
            "dominant": order == identity_permutation(n),
        }

    catalog = _combinatorial_catalog(kind, n, arrangement.graph)
    matched = 0
    for key, geo in geometric.items():
        if key not in catalog:
            mismatches.append(
                {
                    "reason": "region has no matching diagram",
                    "order": key[0],
                    "ceiling_pairs": sorted(key[1]),
                    "witness": [str(x) for x in geo["region"].witness],
                }
            )
            continue
        comb = catalog[key]
        disagreements = {
            stat: {"geometric": geo[stat], "combinatorial": comb[stat]}
            for stat in ("ceiling_partition", "dof", "dominant")
            if geo[stat] != comb[stat]
        }
        if disagreements:
            mismatches.append(
                {
                    "reason": "statistics disagree",
                    "order": key[0],
                    "ceiling_pairs": sorted(key[1]),
                    "diagram": comb["diagram"],
                    "disagreements": disagreements,
                }
            )
        else:
            matched += 1
    for key, comb in catalog.items():
        if key not in geometric:
            mismatches.append(
                {
                    "reason": "diagram has no matching region",
                    "order": key[0],
                    "ceiling_pairs": sorted(key[1]),
                    "diagram": comb["diagram"],
                }
            )

    formula = (
        ish_region_count(arrangement.graph) if kind in ("shi", "ish") else math.factorial(n)
    )
    return {
        "kind": kind,
        "n": n,
        "edges": arrangement.graph.sorted_edges(),
        "region_count": len(regions),
        "diagram_count": len(catalog),
        "formula_count": formula,
        "matched": matched,
        "mismatches": mismatches,
        "ok": not mismatches
        and matched == len(regions) == len(catalog) == formula,
    }


def _partition_key(partition: SetPartition) -> str:
    return "|".join(",".join(str(v) for v in block) for block in partition)


def oracle_report(kind: str, n: int, graph: Optional[Graph] = None) -> dict:
    """JSON-ready geometric report for one arrangement.

    Lists every region with its signs, exact witness, coordinate order,
    ceiling tags, degrees of freedom and dominance flag, plus summary
    histograms by dof, dominance and ceiling partition.
    """
    arrangement = build_arrangement(kind, n, graph)
    regions = enumerate_regions(arrangement)
    entries = []
    by_dof: dict[int, int] = {}
    by_partition: dict[str, int] = {}
    dominant_count = 0
    for region in regions:
        order = region_order(arrangement, region)
        ceilings = region_ceilings(arrangement, region)
        partition = _partition_from_pairs(n, [(h.tag[1], h.tag[2]) for h in ceilings])
        dof = recession_dimension(arrangement, region)
        dominant = order == identity_permutation(n)
        entries.append(
            {
                "signs": list(region.signs),
                "witness": [str(x) for x in region.witness],
                "order": list(order),
                "ceilings": [list(h.tag) for h in ceilings],
                "ceiling_partition": [list(block) for block in partition],
                "dof": dof,
                "dominant": dominant,
            }
        )
        by_dof[dof] = by_dof.get(dof, 0) + 1
        key = _partition_key(partition)
        by_partition[key] = by_partition.get(key, 0) + 1
        dominant_count += dominant
    return {
        "arrangement": {
            "kind": kind,
            "n": n,
            "edges": [list(e) for e in arrangement.graph.sorted_edges()],
        },
        "regions": entries,
        "summary": {
            "region_count": len(regions),
            "by_dof": {str(d): by_dof[d] for d in sorted(by_dof)},
            "by_dominance": {
                "dominant": dominant_count,
                "non_dominant": len(regions) - dominant_count,
            },
            "by_ceiling_partition": {
                key: by_partition[key] for key in sorted(by_partition)
            },
        },
    }
