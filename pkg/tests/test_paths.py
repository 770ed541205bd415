import pytest
from hypothesis import given, strategies as st

from majd.paths import (
    Side,
    SwapMode,
    blocks,
    build_path,
    cycle_blocks,
    phi_k,
    phi_k_d,
    psi_d,
    psi_k_d,
    psi_k_d_via_swaps,
    psi_pipeline,
    side_of,
    swap,
)
from majd.stats import maj_tab
from majd.tableau import StandardTableau, enumerate_syt, is_standard

from conftest import SHAPES_UP_TO_7, tableaux

P = StandardTableau.parse
PSI9_S = "1,4,5/2,6,8/3,7,9"


def under_labels(t, path):
    return {t[c] for c in t.shape.cells() if path.is_under(c)}


def test_path_from_9_in_S(S):
    path = build_path(S, 9)
    assert path.start == (2, 2)
    assert path.steps == ("L", "D", "L", "D")
    assert path.heights == (1, 2, 2)
    assert under_labels(S, path) == {1, 2, 5, 6, 7}


def test_path_from_8_in_psi9(S):
    t = P(PSI9_S)
    path = build_path(t, 8)
    assert path.heights == (0, 1, 1)
    assert under_labels(t, path) == {4, 5}
    assert {S[c] for c in t.shape.cells() if path.is_under(c)} == {2, 5}


def test_path_bottom_row_has_nothing_under():
    t = P("1,2,5/3,6/4")
    path = build_path(t, 5)
    assert path.heights == (0, 0, 0)
    assert under_labels(t, path) == set()


def test_path_out_of_range(S):
    with pytest.raises(ValueError):
        build_path(S, 10)


def test_side_of(S):
    path = build_path(S, 9)
    assert side_of(path, S.cell_of(3)) is Side.ABOVE
    assert side_of(path, S.cell_of(7)) is Side.UNDER
    assert side_of(path, S.cell_of(9)) is Side.ABOVE


@given(tableaux())
def test_path_invariants(t):
    for k in range(1, t.n + 1):
        path = build_path(t, k)
        x, y = 0, 0
        pos = list(path.start)
        for step in path.steps:
            if step == "L":
                pos[0] -= 1
            else:
                pos[1] -= 1
        assert pos == [0, 0]
        assert list(path.heights) == sorted(path.heights)
        assert all(h <= path.start[1] for h in path.heights)
        assert path.side(t.cell_of(k)) is Side.ABOVE


def test_blocks_worked_examples(S):
    assert blocks(S, build_path(S, 9), 1).blocks == ((1,), (2, 3, 4), (5,), (6,), (7, 8))
    t = P(PSI9_S)
    assert blocks(t, build_path(t, 8), 1).blocks == ((1,), (2,), (3, 4, 5), (6,), (7,))
    assert blocks(S, build_path(S, 9), 8).blocks == ((8,),)
    with pytest.raises(ValueError):
        blocks(S, build_path(S, 9), 9)


@given(tableaux(min_n=2))
def test_blocks_partition_the_range(t):
    k = t.n
    path = build_path(t, k)
    for lo in range(1, k):
        bp = blocks(t, path, lo)
        flat = [v for b in bp.blocks for v in b]
        assert flat == list(range(lo, k))
        anchor = path.is_under(t.cell_of(lo))
        for b in bp.blocks:
            assert path.is_under(t.cell_of(b[0])) == anchor
            assert all(path.is_under(t.cell_of(v)) != anchor for v in b[1:])


def test_cycle_blocks_examples(S):
    assert str(cycle_blocks(S, blocks(S, build_path(S, 9), 1))) == PSI9_S
    t = P(PSI9_S)
    assert str(cycle_blocks(t, blocks(t, build_path(t, 8), 1))) == "1,3,4/2,6,8/5,7,9"
    single = blocks(S, build_path(S, 4), 1)
    assert all(len(b) == 1 for b in single.blocks)
    assert cycle_blocks(S, single) == S


def test_swap_examples(S):
    out = swap(S, 7, 9)
    assert out.cell_of(7) == S.cell_of(8) and out.cell_of(8) == S.cell_of(7)
    assert swap(S, 1, 9) == S
    with pytest.raises(ValueError):
        swap(S, 8, 9)


@given(tableaux(min_n=3), st.data())
def test_swap_twice_with_fixed_path_is_identity(t, data):
    k = data.draw(st.integers(3, t.n))
    a = data.draw(st.integers(1, k - 2))
    path = build_path(t, k)
    once = swap(t, a, k, path)
    assert is_standard(once)
    assert swap(once, a, k, path) == t


def test_psi_examples(S):
    assert str(psi_k_d(S, 9, 8)) == PSI9_S
    assert psi_k_d(S, 4, 8) == S  # 4 is in column 1
    for k in range(1, 10):
        assert psi_k_d(S, k, 1) == S


def test_psi_via_swaps_examples(S):
    assert str(psi_k_d_via_swaps(S, 9, 8)) == PSI9_S
    assert str(psi_k_d_via_swaps(P(PSI9_S), 8, 8)) == "1,3,4/2,6,8/5,7,9"
    for mode in SwapMode:
        assert psi_k_d_via_swaps(S, 9, 1, mode) == S


@given(tableaux(), st.data())
def test_psi_is_standard_and_border_identity(t, data):
    k = data.draw(st.integers(1, t.n))
    d = data.draw(st.integers(1, t.n + 1))
    out = psi_k_d(t, k, d)
    assert is_standard(out)
    col, row = t.cell_of(k)
    if col == 1 or row == 1:
        assert out == t


@pytest.mark.parametrize("shape", [s for s in SHAPES_UP_TO_7 if s.size >= 5], ids=str)
def test_psi_bijective_and_swapchains_agree(shape):
    tabs = enumerate_syt(shape)
    n = shape.size
    for k in range(1, n + 1):
        for d in range(1, n + 1):
            images = [psi_k_d(t, k, d) for t in tabs]
            assert len(set(images)) == len(tabs)
            for t, image in zip(tabs, images):
                assert psi_k_d_via_swaps(t, k, d, SwapMode.FIXED) == image
                assert psi_k_d_via_swaps(t, k, d, SwapMode.RECOMPUTED) == image


def test_pipeline_examples(S):
    trace = psi_pipeline(S, 1)
    assert all(t == S for t in trace.tableaux)
    trace = psi_pipeline(S, 8)
    assert len(trace.tableaux) == 10
    assert maj_tab(trace.final) == 19
    assert trace.tableaux[1] == P(PSI9_S)
    assert trace.tableaux[2] == P("1,3,4/2,6,8/5,7,9")
    assert trace.final == psi_d(S, 8)


def test_pipeline_reference_trace(ref333):
    # T_2 = T_3 and T_5 = ... = T_9 for d = 4
    tabs = psi_pipeline(ref333, 4).tableaux
    assert len(set(tabs[:5])) == 4
    assert tabs[2] == tabs[3]
    assert len(set(tabs[5:])) == 1


@given(tableaux(), st.integers(1, 8))
def test_pipeline_label_stability(t, d):
    trace = psi_pipeline(t, d)
    n = t.n
    assert trace.tableaux[-2] == trace.tableaux[-1]
    for tab in trace.tableaux:
        assert tab.cell_of(1) == (1, 1)
    for k in range(d + 1, n + 1):
        assert trace.tableaux[n - k].cell_of(k - d) == t.cell_of(k - d)


def test_phi_k_examples(S):
    assert phi_k(psi_k_d(S, 9, 8), 9) == S
    assert phi_k(S, 4) == S and phi_k(S, 3) == S


@pytest.mark.parametrize("k", range(1, 10))
def test_phi_k_bijective_on_333(k):
    tabs = enumerate_syt((3, 3, 3))
    assert len({phi_k(t, k) for t in tabs}) == 42


def test_phi_k_d_reduces_to_phi_k(S):
    for k in range(1, 10):
        for d in range(max(k - 1, 1), 11):
            assert phi_k_d(S, k, d) == phi_k(S, k)


def test_phi_k_d_round_trip_221():
    tabs = enumerate_syt((2, 2, 1))
    for k in range(1, 6):
        for d in range(1, 5):
            for s in tabs:
                assert phi_k_d(psi_k_d(s, k, d), k, d) == s


def test_phi_k_d_round_trip_333_k9_d4():
    for s in enumerate_syt((3, 3, 3)):
        assert phi_k_d(psi_k_d(s, 9, 4), 9, 4) == s
        assert psi_k_d(phi_k_d(s, 9, 4), 9, 4) == s


@given(tableaux(), st.data())
def test_phi_psi_inverse_property(t, data):
    k = data.draw(st.integers(1, t.n))
    d = data.draw(st.integers(1, t.n))
    assert phi_k_d(psi_k_d(t, k, d), k, d) == t
    assert psi_k_d(phi_k_d(t, k, d), k, d) == t
