from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from majd.tableau import (
    BoundsError,
    Partition,
    StandardTableau,
    count_syt,
    delete_max,
    enumerate_syt,
    is_standard,
    partitions,
)

from conftest import tableaux


def brute_force_syt(shape):
    """Every filling of the diagram by 1..n that passes the row/column test."""
    lengths = list(shape)
    n = sum(lengths)
    out = []
    for word in permutations(range(1, n + 1)):
        rows, i = [], 0
        for part in lengths:
            rows.append(word[i:i + part])
            i += part
        if is_standard(rows):
            out.append(tuple(rows))
    return out


def test_partition_validation():
    assert Partition((3, 3, 3)).size == 9
    with pytest.raises(ValueError):
        Partition((2, 3))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert Partition.parse("5,4,4,2").parts == (5, 4, 4, 2)


def test_partition_cells_french():
    lam = Partition((5, 4, 4, 2))
    assert lam.contains((5, 1)) and lam.contains((2, 4))
    assert not lam.contains((3, 4)) and not lam.contains((1, 5))
    assert len(lam.cells()) == 15


def test_partitions_counts():
    assert [sum(1 for _ in partitions(n)) for n in range(1, 10)] == [1, 2, 3, 5, 7, 11, 15, 22, 30]


def test_enumerate_22():
    tabs = enumerate_syt((2, 2))
    assert [t.rows for t in tabs] == [((1, 2), (3, 4)), ((1, 3), (2, 4))]


def test_enumerate_32_and_single():
    assert len(enumerate_syt((3, 2))) == 5
    assert [str(t) for t in enumerate_syt((1,))] == ["1"]
    assert [t.rows for t in enumerate_syt(())] == [()]


def test_enumeration_order_is_lexicographic():
    tabs = enumerate_syt((3, 2, 1))
    words = [t.reading_word() for t in tabs]
    assert words == sorted(words)


@pytest.mark.parametrize("shape", [(3, 3, 3), (3, 2), (4, 2, 1), (2, 2, 2, 1)])
def test_enumeration_matches_brute_force(shape):
    assert sorted(t.rows for t in enumerate_syt(shape)) == sorted(brute_force_syt(shape))


def test_count_syt_values():
    assert count_syt((2, 2)) == 2
    assert count_syt((1, 1, 1)) == 1
    assert count_syt((3, 3, 3)) == 42
    assert count_syt((3, 2)) == 5


def test_count_matches_enumeration_up_to_9():
    for n in range(0, 10):
        for shape in partitions(n):
            assert len(enumerate_syt(shape)) == count_syt(shape), shape


def test_bounds():
    with pytest.raises(BoundsError):
        enumerate_syt((5, 5))
    with pytest.raises(BoundsError):
        count_syt((11, 10))
    assert count_syt((10, 10)) == 16796  # Catalan(10)


def test_is_standard_examples():
    assert is_standard([[1, 2, 5], [3, 6, 7], [4, 8, 9]])
    assert is_standard([[1, 3], [2, 4]])
    assert not is_standard([[2, 1], [3, 4]])
    assert not is_standard([[1, 2], [4, 3]])
    assert not is_standard([[1], [2, 3]])


def test_delete_max():
    assert delete_max(StandardTableau.parse("1,2/3,4")).rows == ((1, 2), (3,))
    assert delete_max(StandardTableau.parse("1")).rows == ()
    assert str(delete_max(StandardTableau.parse("1,2,5/3,6,7/4,8,9"))) == "1,2,5/3,6,7/4,8"
    with pytest.raises(ValueError):
        delete_max(StandardTableau(()))


@given(tableaux())
def test_delete_max_stays_standard(t):
    assert is_standard(delete_max(t))


@given(tableaux())
def test_text_and_record_round_trip(t):
    assert StandardTableau.parse(str(t)) == t
    assert StandardTableau.from_record(t.to_record()) == t


def test_record_format():
    t = StandardTableau.parse("1,2,5/3,6,7/4,8,9")
    assert t.to_json() == '{"shape":[3,3,3],"rows":[[1,2,5],[3,6,7],[4,8,9]]}'
    assert t.cell_of(4) == (1, 3) and t[(3, 2)] == 7


def test_enumeration_serialization_is_stable():
    a = [t.to_json() for t in enumerate_syt((3, 2, 2))]
    b = [t.to_json() for t in enumerate_syt((3, 2, 2))]
    assert a == b


@given(st.lists(st.integers(1, 5), min_size=1, max_size=4))
def test_hook_formula_positive(parts):
    shape = Partition(tuple(sorted(parts, reverse=True)))
    assert count_syt(shape) >= 1
