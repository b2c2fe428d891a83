"""Bijections between regions of the Shi and Ish arrangements.

All four bijections factor through parking functions and rook words:

* ``basic_bijection`` restricts the rook placement of an Ish region, reads a
  word off it with rightward lasers, and parks the result.  It is a bijection
  for the complete graph but preserves no statistics.
* ``dominance_bijection`` reads rook words with downward lasers and converts
  them to parking functions by the cycle lemma.  It preserves ceiling
  partitions and dominance, and so restricts to every subgraph.
* ``bounded_bijection`` is the prime variant of the dominance map.  It
  carries relatively bounded regions to relatively bounded regions and
  preserves ceiling partitions.
* ``freedom_bijection`` goes through labeled Dyck paths, cutting them into
  prime components.  It preserves ceiling partitions and degrees of freedom.

The Dyck-path construction works with partially built words whose dotted
positions are marked by the :data:`DIAMOND` placeholder until the very last
step resolves them into dotted letters.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence, Union

from .core import SetPartition, Word, arcs, position_partition
from .ish import (
    IshCeilingDiagram,
    complete_placement,
    ish_diagram_to_placement,
    ish_statistics,
    parking_to_placement,
    placement_to_ish_diagram,
    placement_to_parking,
    placement_to_rook_word,
    restrict_placement,
    rook_word_to_placement,
)
from .parking import (
    LabeledDyckPath,
    dyck_to_word,
    is_prime_parking_function,
    prime_components,
    word_to_dyck,
)
from .rookwords import (
    parking_to_rook_word,
    prime_parking_to_rook_word,
    prime_rook_word_to_parking,
    rook_word_to_parking,
)
from .shi import ShiCeilingDiagram, parking_to_shi_diagram, shi_diagram_to_parking


class Diamond:
    """Placeholder symbol for a dotted position in a partially built word.

    The class is a singleton; use the :data:`DIAMOND` constant.
    """

    _instance = None

    def __new__(cls) -> "Diamond":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "<>"


DIAMOND = Diamond()

DiamondWord = tuple[Union[int, Diamond], ...]


# ---------------------------------------------------------------------------
# the four region bijections


def basic_bijection(diagram: IshCeilingDiagram) -> ShiCeilingDiagram:
    """Map an Ish region to a Shi region through rightward lasers.

    A bijection on regions of the complete-graph arrangements; ceiling
    partitions and degrees of freedom are generally not preserved.

    >>> d = IshCeilingDiagram((4, 1, 7, 3, 8, 5, 6, 2), (0, 0, 1, 2, 0, 3, 5, 0))
    >>> basic_bijection(d).pi
    (7, 2, 3, 1, 5, 6, 8, 4)
    """
    placement = restrict_placement(ish_diagram_to_placement(diagram))
    return parking_to_shi_diagram(placement_to_parking(placement))


def basic_bijection_inverse(diagram: ShiCeilingDiagram) -> IshCeilingDiagram:
    placement = parking_to_placement(shi_diagram_to_parking(diagram))
    return placement_to_ish_diagram(complete_placement(placement))


def dominance_bijection(diagram: IshCeilingDiagram) -> ShiCeilingDiagram:
    """Map an Ish region to a Shi region through downward lasers and the
    cycle lemma.  Preserves ceiling partitions and dominance, hence restricts
    to a bijection for every graph.

    >>> d = IshCeilingDiagram((4, 1, 7, 3, 8, 5, 6, 2), (0, 0, 1, 2, 0, 3, 5, 0))
    >>> dominance_bijection(d).pi
    (2, 3, 4, 1, 5, 7, 8, 6)
    """
    word = placement_to_rook_word(ish_diagram_to_placement(diagram))
    return parking_to_shi_diagram(rook_word_to_parking(word))


def dominance_bijection_inverse(diagram: ShiCeilingDiagram) -> IshCeilingDiagram:
    word = parking_to_rook_word(shi_diagram_to_parking(diagram))
    return placement_to_ish_diagram(rook_word_to_placement(word))


def bounded_bijection(diagram: IshCeilingDiagram) -> ShiCeilingDiagram:
    """Variant of the dominance map for relatively bounded regions, using the
    prime cycle lemma.  Preserves ceiling partitions.

    >>> bounded_bijection(IshCeilingDiagram((1, 2, 3), (0, 0, 1))).partition
    ((1, 3), (2,))
    """
    if not ish_statistics(diagram).relatively_bounded:
        raise ValueError("input region is not relatively bounded")
    word = placement_to_rook_word(ish_diagram_to_placement(diagram))
    return parking_to_shi_diagram(prime_rook_word_to_parking(word))


def bounded_bijection_inverse(diagram: ShiCeilingDiagram) -> IshCeilingDiagram:
    parking = shi_diagram_to_parking(diagram)
    if not is_prime_parking_function(parking):
        raise ValueError("input region is not relatively bounded")
    word = prime_parking_to_rook_word(parking)
    return placement_to_ish_diagram(rook_word_to_placement(word))


def freedom_bijection(diagram: IshCeilingDiagram) -> ShiCeilingDiagram:
    """Map an Ish region to a Shi region through labeled Dyck paths.
    Preserves ceiling partitions and degrees of freedom, hence restricts to
    a bijection for every graph."""
    return parking_to_shi_diagram(ish_diagram_to_parking(diagram))


def freedom_bijection_inverse(diagram: ShiCeilingDiagram) -> IshCeilingDiagram:
    return parking_to_ish_diagram(shi_diagram_to_parking(diagram))


# ---------------------------------------------------------------------------
# parking functions <-> Ish diagrams through prime Dyck components


class DyckToIshStages(NamedTuple):
    """Intermediate words of the Dyck-path-to-diagram construction, kept for
    inspection and regression tests."""

    components: tuple[LabeledDyckPath, ...]
    stage_words: tuple[DiamondWord, ...]
    after_prefix_rotation: DiamondWord
    after_global_rotation: DiamondWord
    diagram: IshCeilingDiagram


class IshToDyckStages(NamedTuple):
    """Intermediate state of the diagram-to-Dyck-path construction."""

    diamond_word: DiamondWord
    cycle_index: int
    after_cycling: DiamondWord
    after_prefix_rotation: DiamondWord
    components: tuple[LabeledDyckPath, ...]
    linear_order: tuple[int, ...]
    word: Word


def resolve_diamond_word(
    word: Sequence[Union[int, Diamond]], partition: SetPartition
) -> IshCeilingDiagram:
    """Fill the diamonds of a partial diagram word.

    There is exactly one way to dot the diamond positions so that the
    resulting diagram is valid and has the prescribed ceiling partition: the
    available relations are the arcs of the partition, and sorting them by
    left endpoint is forced by the increasing-dots condition.
    """
    pairs = sorted(arcs(partition))
    positions = [i for i, s in enumerate(word) if isinstance(s, Diamond)]
    if len(pairs) != len(positions):
        raise ValueError("diamond count does not match the partition arcs")
    pi = list(word)
    eps = [0] * len(word)
    for pos, (low, high) in zip(positions, pairs):
        pi[pos] = high
        eps[pos] = low
    diagram = IshCeilingDiagram(pi=tuple(pi), eps=tuple(eps))
    if ish_statistics(diagram).ceiling_partition != partition:
        raise ValueError("word letters are inconsistent with the partition")
    return diagram


def parking_to_ish_diagram_stages(word: Sequence[int]) -> DyckToIshStages:
    """Build the Ish diagram of a parking function, keeping every stage.

    The prime components of the labeled Dyck path are listed cyclically from
    the one containing the label 1.  That component is read cyclically from
    the column of 1, skipping its final empty column, with a diamond appended;
    each later component is read left to right and spliced in just after
    position i-1.  The first d letters then rotate left once, the whole word
    rotates left until only labels of components left of 1 precede the 1, and
    the diamonds resolve against the position partition.
    """
    dyck = word_to_dyck(word)
    comps = prime_components(dyck)
    d = len(comps)
    one_in = next(i for i, c in enumerate(comps, start=1) if 1 in c.labels())
    ordered = comps[one_in - 1 :] + comps[: one_in - 1]

    first = ordered[0].columns
    if len(first) == 1:
        working: list[Union[int, Diamond]] = [1]
    else:
        size = len(first)
        start = next(t for t, col in enumerate(first) if col and col[0] == 1)
        read = [
            first[(start + t) % size]
            for t in range(size)
            if (start + t) % size != size - 1
        ]
        working = [col[0] if col else DIAMOND for col in read]
        working.append(DIAMOND)
    stage_words = [tuple(working)]

    for i in range(2, d + 1):
        piece: list[Union[int, Diamond]] = [
            col[0] if col else DIAMOND for col in ordered[i - 1].columns
        ]
        working = working[: i - 1] + piece + working[i - 1 :]
        stage_words.append(tuple(working))

    working = working[1:d] + [working[0]] + working[d:]
    after_prefix = tuple(working)

    shift = d - one_in
    working = working[shift:] + working[:shift]
    after_global = tuple(working)

    diagram = resolve_diamond_word(after_global, position_partition(word))
    return DyckToIshStages(
        components=tuple(c.columns for c in ordered),
        stage_words=tuple(stage_words),
        after_prefix_rotation=after_prefix,
        after_global_rotation=after_global,
        diagram=diagram,
    )


def parking_to_ish_diagram(word: Sequence[int]) -> IshCeilingDiagram:
    """The Ish ceiling diagram attached to a parking function by the prime
    Dyck component construction.

    >>> parking_to_ish_diagram((3, 7, 3, 8, 2, 2, 7, 1, 2)).pi
    (8, 1, 4, 3, 7, 6, 5, 9, 2)
    >>> parking_to_ish_diagram((3, 7, 3, 8, 2, 2, 7, 1, 2)).eps
    (0, 0, 0, 1, 2, 5, 0, 6, 0)
    """
    return parking_to_ish_diagram_stages(word).diagram


def ish_diagram_to_parking_stages(diagram: IshCeilingDiagram) -> IshToDyckStages:
    """Recover the parking function of an Ish region, keeping every stage.

    With d the degrees of freedom, the diamond word cycles right until 1 sits
    in position d (the cycle index counts the steps), the first d entries
    rotate right once, and the symbols expand to Dyck-path columns: a letter
    carries its ceiling-partition block, a diamond is an empty column.
    Components peel off left to right from positions d down to 2; the
    component of 1 is the unique cyclic rotation of what remains (after
    dropping the final diamond) that stays strictly above the diagonal.  The
    cycle index then fixes the left-to-right order: the component of 1 lands
    in linear position d minus the cycle index.
    """
    stats = ish_statistics(diagram)
    d = stats.dof
    n = diagram.n
    block_of = {block[0]: block for block in stats.ceiling_partition}

    working: list[Union[int, Diamond]] = [
        DIAMOND if e > 0 else p for p, e in zip(diagram.pi, diagram.eps)
    ]
    initial = tuple(working)

    cycle_index = (d - 1 - working.index(1)) % n
    assert 0 <= cycle_index < d
    if cycle_index:
        moved = working[-cycle_index:]
        assert not any(isinstance(s, Diamond) for s in moved)
        working = moved + working[:-cycle_index]
    after_cycling = tuple(working)
    assert working[d - 1] == 1

    working = [working[d - 1]] + working[: d - 1] + working[d:]
    after_prefix = tuple(working)

    cols: list[tuple[int, ...]] = [
        () if isinstance(s, Diamond) else block_of[s] for s in working
    ]

    components: dict[int, LabeledDyckPath] = {}
    for i in range(d, 1, -1):
        start = i - 1
        end = start
        surplus = len(cols[end]) - 1
        while surplus != 0:
            assert surplus > 0
            end += 1
            surplus += len(cols[end]) - 1
        components[i] = tuple(cols[start : end + 1])
        del cols[start : end + 1]

    if len(cols) == 1:
        assert cols[0] == (1,)
        components[1] = ((1,),)
    else:
        assert cols[0] and cols[0][0] == 1 and cols[-1] == ()
        body = cols[:-1]
        good = [
            r
            for r in range(len(body))
            if all(
                sum(len(c) for c in (body[r:] + body[:r])[:s]) > s
                for s in range(1, len(body) + 1)
            )
        ]
        assert len(good) == 1
        rotated = body[good[0] :] + body[: good[0]]
        components[1] = tuple(rotated) + ((),)

    order = tuple((m + cycle_index) % d + 1 for m in range(1, d + 1))
    columns = [col for i in order for col in components[i]]
    word = dyck_to_word(columns)
    assert position_partition(word) == stats.ceiling_partition
    return IshToDyckStages(
        diamond_word=initial,
        cycle_index=cycle_index,
        after_cycling=after_cycling,
        after_prefix_rotation=after_prefix,
        components=tuple(components[i] for i in range(1, d + 1)),
        linear_order=order,
        word=word,
    )


def ish_diagram_to_parking(diagram: IshCeilingDiagram) -> Word:
    """The parking function of an Ish region, by prime Dyck components.
    Inverse of :func:`parking_to_ish_diagram`.

    >>> d = IshCeilingDiagram(
    ...     (8, 1, 4, 3, 7, 6, 5, 9, 2), (0, 0, 0, 1, 2, 5, 0, 6, 0))
    >>> ish_diagram_to_parking(d)
    (3, 7, 3, 8, 2, 2, 7, 1, 2)
    """
    return ish_diagram_to_parking_stages(diagram).word
