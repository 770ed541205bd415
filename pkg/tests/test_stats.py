import pytest
from hypothesis import given, strategies as st

from majd.paths import build_path, psi_k_d, psi_pipeline
from majd.stats import (
    Reading,
    WeightedPair,
    descent_lemma_check,
    hs_attack_assignment,
    hs_inversion_set,
    inv_hs,
    kadell_weight,
    maj_d_transform,
    maj_d_weighted,
    maj_tab,
    naive_pairs,
    naive_weighted,
    recursion_check,
    sorted_pairs,
)
from majd.tableau import StandardTableau, delete_max, enumerate_syt, partitions

from conftest import SHAPES_UP_TO_7, tableaux

P = StandardTableau.parse

S_INVERSIONS = {
    (1, 9), (2, 9), (5, 9), (6, 9), (7, 9), (2, 7), (5, 7), (2, 8), (5, 8), (6, 8),
    (7, 8), (1, 4), (2, 4), (3, 4), (1, 6), (2, 6), (5, 6), (1, 3), (2, 3),
}


def pairs_of(ws):
    return {(p.low, p.high) for p in ws}


def test_maj_tab_examples():
    assert maj_tab(P("1,2/3,4")) == 2
    assert maj_tab(P("1,3/2,4")) == 4
    assert maj_tab(P("1,2,3,4,5")) == 0


def test_attack_assignment_worked_example(S):
    by_j = {a.j: a.cell for a in hs_attack_assignment(S)}
    assert by_j[9] == (3, 3)
    assert by_j[8] == (3, 2)
    assert by_j[7] == (2, 3)
    assert by_j[6] == (1, 3)
    assert by_j[1] == S.cell_of(1)


@given(tableaux())
def test_attack_assignment_is_bijective(t):
    attacks = hs_attack_assignment(t)
    assert sorted(a.j for a in attacks) == list(range(1, t.n + 1))
    assert sorted(a.cell for a in attacks) == sorted(t.shape.cells())
    for a in attacks:
        assert a.path.start == (a.cell[0] - 1, a.cell[1] - 1)


def test_single_column_paths_cover_lower_cells():
    t = P("1/2/3/4/5")
    for a in hs_attack_assignment(t):
        assert all(a.path.is_under((1, r)) for r in range(1, a.cell[1]))


def test_hs_inversions_worked_example(S):
    assert pairs_of(hs_inversion_set(S)) == S_INVERSIONS
    assert inv_hs(S) == 19


def test_hs_inversions_22():
    assert pairs_of(hs_inversion_set(P("1,2/3,4"))) == {(1, 3), (2, 3), (2, 4), (1, 4)}
    assert pairs_of(hs_inversion_set(P("1,3/2,4"))) == {(1, 2), (3, 4)}
    assert inv_hs(P("1,2/3,4")) == 4 and inv_hs(P("1,3/2,4")) == 2
    assert inv_hs(P("1,2,3,4")) == 0


def test_maj_d_transform_examples(S):
    assert maj_d_transform(S, 8) == 19 == inv_hs(S)
    assert 24 in [maj_d_transform(t, 4) for t in enumerate_syt((3, 3, 3))]


@given(tableaux())
def test_maj_1_is_maj(t):
    assert maj_d_transform(t, 1) == maj_tab(t)


@given(tableaux(), st.integers(0, 2))
def test_maj_large_d_is_inv(t, extra):
    d = max(t.n - 1, 1) + extra
    assert maj_d_transform(t, d) == inv_hs(t)


def test_weighted_figure_pairs(ref333):
    value, pairs = maj_d_weighted(ref333, 4)
    assert value == 24
    weights = {(p.low, p.high): p.weight for p in pairs}
    assert weights[(5, 9)] == 5 and weights[(4, 7)] == 4 and weights[(2, 8)] == 2
    assert sum(1 for p in pairs if p.weight == 1) == 13


@given(tableaux(), st.integers(1, 9))
def test_weighted_matches_transform(t, d):
    value, pairs = maj_d_weighted(t, d)
    assert value == maj_d_transform(t, d)
    assert value == sum(p.weight for p in pairs)


@given(tableaux(), st.integers(1, 9))
def test_at_most_one_heavy_pair_per_stage(t, d):
    _, pairs = maj_d_weighted(t, d)
    heavy = [p for p in pairs if p.weight > 1]
    assert len({p.high for p in heavy}) == len(heavy)
    trace = psi_pipeline(t, d)
    for p in heavy:
        k = next(s.k for s in trace.stages if t[s.before.cell_of(s.k)] == p.high)
        assert p.weight == max(k - d, 1) and p.low == p.weight


@given(tableaux())
def test_weighted_large_d_is_hs(t):
    _, pairs = maj_d_weighted(t, t.n)
    assert pairs == hs_inversion_set(t)


@pytest.mark.parametrize(
    "reading, tableau, d, weighted, transform",
    [(Reading.BOUND_A, "1/2", 1, 2, 1), (Reading.BOUND_B, "1,2/3,4", 2, 3, 4)],
)
def test_minimal_counterexamples_for_rejected_readings(reading, tableau, d, weighted, transform):
    t = P(tableau)
    assert maj_d_weighted(t, d, reading)[0] == weighted
    assert maj_d_transform(t, d) == transform == maj_d_weighted(t, d, Reading.BOUND_C)[0]


def test_kadell_weight():
    assert [kadell_weight(2, j, 3) for j in (3, 4, 5, 6)] == [1, 1, 2, 0]


@given(tableaux())
def test_naive_large_d_is_inv(t):
    assert naive_weighted(t, t.n) == inv_hs(t)


def test_naive_on_figure_tableau(ref333):
    # the true HS-based value; the reference total of 21 omits (4,7), (4,5), (1,5)
    # and counts (1,6), whose gap exceeds d
    assert naive_weighted(ref333, 4) == 23
    reduced = delete_max(psi_k_d(ref333, 9, 4))
    assert pairs_of(naive_pairs(reduced, 4)) == {
        (4, 8), (4, 7), (6, 7), (2, 6), (4, 6), (1, 5), (2, 5), (3, 5), (4, 5), (1, 3), (2, 3)
    }
    assert naive_weighted(reduced, 4) == 15


def test_descent_lemma_edge_shapes():
    row = P("1,2,3,4")
    col = P("1/2/3/4")
    for d in range(1, 5):
        assert descent_lemma_check(row, d)
        assert descent_lemma_check(col, d)
        assert not build_path(row, 4).is_under(row.cell_of(max(4 - d, 1)))
        assert build_path(col, 4).is_under(col.cell_of(max(4 - d, 1)))
    with pytest.raises(ValueError):
        descent_lemma_check(P("1"), 1)


@pytest.mark.parametrize("shape", SHAPES_UP_TO_7, ids=str)
def test_descent_lemma_and_psi_recursion_exhaustive(shape):
    n = shape.size
    for t in enumerate_syt(shape):
        for d in range(1, n + 1):
            if n >= 2:
                assert descent_lemma_check(t, d)
            assert recursion_check(t, d, reduce_with="psi")


def test_recursion_trivial_size():
    assert recursion_check(P("1"), 1)
    assert recursion_check(P("1"), 3, reduce_with="psi")


def test_recursion_with_inverse_fails_on_figure_tableau(ref333):
    assert not recursion_check(ref333, 4, reduce_with="phi")
    assert recursion_check(ref333, 4, reduce_with="psi")
    with pytest.raises(ValueError):
        recursion_check(ref333, 4, reduce_with="foo")


@given(tableaux(min_n=2))
def test_hs_recursion(t):
    n = t.n
    bonus = n - 1 if build_path(t, n).is_under(t.cell_of(1)) else 0
    assert inv_hs(t) == inv_hs(delete_max(psi_k_d(t, n, n - 1))) + bonus


def test_weighted_pair_validation_and_order():
    with pytest.raises(ValueError):
        WeightedPair(3, 3)
    ps = [WeightedPair(1, 9), WeightedPair(2, 3), WeightedPair(1, 3)]
    assert [p.as_tuple() for p in sorted_pairs(ps)] == [(1, 3, 1), (2, 3, 1), (1, 9, 1)]
