"""Exact rational feasibility solver."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shi_ish.exactlp import integer_rank, max_slack, strict_feasible


def slack_of(row, point):
    coeffs, rhs, _ = row
    return sum(Fraction(a) * x for a, x in zip(coeffs, point)) - rhs


def satisfies(rows, point):
    for row in rows:
        s = slack_of(row, point)
        if row[2] and s <= 0:
            return False
        if not row[2] and s < 0:
            return False
    return True


# ---------------------------------------------------------------------------
# direct cases


def test_opposite_strict_inequalities_are_infeasible():
    # x1 - x2 > 0 and x2 - x1 > 0
    rows = [((1, -1), 0, True), ((-1, 1), 0, True)]
    assert strict_feasible(rows, 2) is None


def test_dominant_shi_chamber_is_feasible():
    # x1 > x2 > x3 with both gaps below 1: the all-positive Shi(3) chamber
    rows = [
        ((1, -1, 0), 0, True),
        ((0, 1, -1), 0, True),
        ((-1, 0, 1), -1, True),
        ((-1, 1, 0), -1, True),
        ((0, -1, 1), -1, True),
        ((1, 0, -1), 0, True),
    ]
    witness = strict_feasible(rows, 3)
    assert witness is not None
    assert satisfies(rows, witness)


def test_contradictory_gap_requirements_are_infeasible():
    # x1 > x2 > x3, x1 - x3 < 1 but x1 - x2 > 1
    rows = [
        ((1, -1, 0), 1, True),
        ((0, 1, -1), 0, True),
        ((-1, 0, 1), -1, True),
    ]
    assert strict_feasible(rows, 3) is None


def test_unconstrained_origin_shortcut():
    # every strict bound negative: the origin works without any pivoting
    tau, witness = max_slack([((1, 1), -5, True)], 2)
    assert tau == 1
    assert witness == (0, 0)


def test_weak_rows_must_have_nonpositive_bounds():
    with pytest.raises(ValueError):
        max_slack([((1, 0), 1, False)], 2)
    with pytest.raises(ValueError):
        max_slack([((1, 0, 0), 0, True)], 2)  # length mismatch


def test_weak_rows_constrain_the_witness():
    rows = [((1, -1), -2, True), ((-1, 0), 0, False), ((0, 1), 0, False)]
    witness = strict_feasible(rows, 2)
    assert witness is not None
    assert witness[0] <= 0 <= witness[1]
    assert witness[0] - witness[1] > -2


def test_slack_is_capped_at_one():
    tau, _ = max_slack([((1,), 0, True)], 1)
    assert tau == Fraction(1)


# ---------------------------------------------------------------------------
# equalities


def test_equalities_substitute_before_solving():
    # x0 - x1 = 1 exactly, x0 > x2, x2 > x1: forces x2 inside a unit gap
    rows = [((1, 0, -1), 0, True), ((0, -1, 1), 0, True)]
    witness = strict_feasible(rows, 3, equalities=[(0, 1, 1)])
    assert witness is not None
    assert witness[0] - witness[1] == 1
    assert witness[1] < witness[2] < witness[0]


def test_contradictory_equalities_return_none():
    rows = [((1, -1), -10, True)]
    assert strict_feasible(rows, 2, equalities=[(0, 1, 0), (0, 1, 1)]) is None
    # cycles must be consistent too
    assert (
        strict_feasible(
            [((1, 0, 0), -10, True)],
            3,
            equalities=[(0, 1, 1), (1, 2, 1), (0, 2, 3)],
        )
        is None
    )
    assert (
        strict_feasible(
            [((1, 0, 0), -10, True)],
            3,
            equalities=[(0, 1, 1), (1, 2, 1), (0, 2, 2)],
        )
        is not None
    )


def test_equality_can_kill_a_strict_row():
    # x0 - x1 = 1 contradicts x1 - x0 > 0 outright
    rows = [((-1, 1), 0, True)]
    assert strict_feasible(rows, 2, equalities=[(0, 1, 1)]) is None
    # ... and satisfies x0 - x1 > 0 outright (constant row dropped)
    rows = [((1, -1), 0, True)]
    witness = strict_feasible(rows, 2, equalities=[(0, 1, 1)])
    assert witness is not None
    assert witness[0] - witness[1] == 1


# ---------------------------------------------------------------------------
# properties

coeff = st.integers(-4, 4)


@given(
    st.integers(1, 4).flatmap(
        lambda n: st.lists(
            st.tuples(
                st.lists(coeff, min_size=n, max_size=n),
                st.integers(-6, 6),
            ),
            min_size=1,
            max_size=6,
        )
    )
)
@settings(max_examples=200)
def test_soundness_witness_satisfies_all_rows(raw):
    rows = [(tuple(c), rhs, True) for c, rhs in raw]
    n = len(rows[0][0])
    witness = strict_feasible(rows, n)
    if witness is not None:
        assert satisfies(rows, witness)


@given(
    st.integers(1, 4).flatmap(
        lambda n: st.tuples(
            st.lists(st.fractions(min_value=-3, max_value=3), min_size=n, max_size=n),
            st.lists(st.lists(coeff, min_size=n, max_size=n), min_size=1, max_size=6),
        )
    )
)
@settings(max_examples=200)
def test_completeness_planted_point_is_found(planted_and_coeffs):
    """Plant a rational point, generate rows it strictly satisfies; the
    solver must then report feasibility."""
    planted, coeff_lists = planted_and_coeffs
    rows = []
    for coeffs in coeff_lists:
        value = sum(Fraction(a) * x for a, x in zip(coeffs, planted))
        # an integer bound strictly below the planted value
        bound = math.floor(value) - 1
        rows.append((tuple(coeffs), bound, True))
    n = len(planted)
    witness = strict_feasible(rows, n)
    assert witness is not None
    assert satisfies(rows, witness)


# ---------------------------------------------------------------------------
# integer rank


def test_integer_rank_cases():
    assert integer_rank([]) == 0
    assert integer_rank([(0, 0)]) == 0
    assert integer_rank([(1, -1, 0), (0, 1, -1), (1, 0, -1)]) == 2
    assert integer_rank([(2, 0), (0, 3), (5, 7)]) == 2
    assert integer_rank([(1, 2, 3)]) == 1


@given(
    st.lists(
        st.lists(st.integers(-5, 5), min_size=3, max_size=3),
        min_size=1,
        max_size=5,
    )
)
def test_integer_rank_matches_fraction_elimination(vectors):
    rank = integer_rank(vectors)
    # reference: Gaussian elimination over Fraction
    rows = [[Fraction(x) for x in v] for v in vectors]
    ref = 0
    for c in range(3):
        pivot_at = next((i for i in range(ref, len(rows)) if rows[i][c]), None)
        if pivot_at is None:
            continue
        rows[ref], rows[pivot_at] = rows[pivot_at], rows[ref]
        for i in range(ref + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c] / rows[ref][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[ref])]
        ref += 1
    assert rank == ref
