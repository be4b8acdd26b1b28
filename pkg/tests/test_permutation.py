from math import factorial

import pytest

from bsnet.errors import DimensionError, PermutationError
from bsnet.graph import Permutation, format_label, identity, parse, rank, swap_positions, unrank
from bsnet.graph.permutation import check_dimension


def test_parse_and_format():
    p = parse("2143")
    assert p == (2, 1, 4, 3)
    assert format_label(p) == "2143"
    assert str(p) == "2143"


@pytest.mark.parametrize("text", ["12", "1234567890", "1224", "12a4", "", "1 23"])
def test_parse_rejects_malformed_labels(text):
    with pytest.raises(PermutationError):
        parse(text)


def test_constructor_rejects_non_permutations():
    with pytest.raises(PermutationError):
        Permutation((1, 2, 2))
    with pytest.raises(PermutationError):
        Permutation((0, 1, 2))


def test_swap_positions_is_one_based():
    p = parse("1234")
    assert swap_positions(p, 1, 4) == parse("4231")
    assert swap_positions(p, 3, 4) == parse("1243")
    with pytest.raises(PermutationError):
        swap_positions(p, 2, 2)
    with pytest.raises(PermutationError):
        swap_positions(p, 0, 5)


def test_parity():
    assert identity(4).parity == 0
    assert parse("2134").parity == 1
    assert parse("2143").parity == 0
    assert parse("231").parity == 0


def test_rank_is_lexicographic():
    assert rank(identity(5)) == 0
    assert rank(parse("54321")) == factorial(5) - 1
    assert rank(parse("132")) == 1


@pytest.mark.parametrize("n", [3, 4, 5])
def test_unrank_inverts_rank(n):
    seen = [unrank(n, i) for i in range(factorial(n))]
    assert [rank(p) for p in seen] == list(range(factorial(n)))
    assert seen == sorted(seen)


def test_unrank_out_of_range():
    with pytest.raises(PermutationError):
        unrank(3, 6)


@pytest.mark.parametrize("n", [2, 10, "4"])
def test_dimension_bounds(n):
    with pytest.raises(DimensionError):
        check_dimension(n)


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        parse("112")
