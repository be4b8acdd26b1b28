"""Permutations of 1..n read as label strings x1 x2 ... xn."""

from math import factorial
from typing import Iterable

from bsnet.errors import DimensionError, PermutationError

MIN_DIMENSION = 3
MAX_DIMENSION = 9


def check_dimension(n: int) -> int:
    if not isinstance(n, int) or not MIN_DIMENSION <= n <= MAX_DIMENSION:
        raise DimensionError(f"dimension must be between {MIN_DIMENSION} and {MAX_DIMENSION}, got {n!r}")
    return n


class Permutation(tuple):
    """An arrangement of the symbols 1..n; position i (1-based) holds ``self[i - 1]``.

    Instances are plain immutable tuples underneath, so they hash and compare
    like tuples and can be used directly as graph vertices.
    """

    __slots__ = ()

    def __new__(cls, symbols: Iterable[int]):
        values = tuple(symbols)
        n = len(values)
        if not 1 <= n <= MAX_DIMENSION:
            raise PermutationError(f"length must be between 1 and {MAX_DIMENSION}, got {n}")
        if sorted(values) != list(range(1, n + 1)):
            raise PermutationError(f"{values!r} is not a permutation of 1..{n}")
        return tuple.__new__(cls, values)

    @classmethod
    def _trusted(cls, values: tuple) -> "Permutation":
        return tuple.__new__(cls, values)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def parity(self) -> int:
        """0 for even permutations, 1 for odd ones."""
        seen = [False] * len(self)
        transpositions = 0
        for start in range(len(self)):
            if seen[start]:
                continue
            length = 0
            i = start
            while not seen[i]:
                seen[i] = True
                i = self[i] - 1
                length += 1
            transpositions += length - 1
        return transpositions % 2

    def __str__(self) -> str:
        return format_label(self)

    def __repr__(self) -> str:
        return f"Permutation('{format_label(self)}')"


def identity(n: int) -> Permutation:
    check_dimension(n)
    return Permutation._trusted(tuple(range(1, n + 1)))


def swap_positions(p: Permutation, i: int, j: int) -> Permutation:
    """Return p ∘ (i, j): the symbols at positions i and j exchanged."""
    n = len(p)
    if i == j:
        raise PermutationError(f"positions must differ, got {i} twice")
    if not (1 <= i <= n and 1 <= j <= n):
        raise PermutationError(f"positions ({i}, {j}) out of range 1..{n}")
    return _swap(p, i, j)


def _swap(p: tuple, i: int, j: int) -> Permutation:
    # unchecked hot-path variant, 1-based positions
    values = list(p)
    values[i - 1], values[j - 1] = values[j - 1], values[i - 1]
    return Permutation._trusted(tuple(values))


def parse(text: str) -> Permutation:
    text = text.strip()
    if not text.isdigit():
        raise PermutationError(f"label {text!r} must be ASCII digits only")
    if not MIN_DIMENSION <= len(text) <= MAX_DIMENSION:
        raise PermutationError(f"label {text!r} must have {MIN_DIMENSION}..{MAX_DIMENSION} digits")
    symbols = [int(ch) for ch in text]
    if len(set(symbols)) != len(symbols):
        raise PermutationError(f"label {text!r} repeats a symbol")
    return Permutation(symbols)


def format_label(p: Iterable[int]) -> str:
    return "".join(str(x) for x in p)


def rank(p: Permutation) -> int:
    """Lexicographic index of p via its Lehmer code."""
    n = len(p)
    remaining = list(range(1, n + 1))
    index = 0
    for position, symbol in enumerate(p):
        digit = remaining.index(symbol)
        index += digit * factorial(n - 1 - position)
        remaining.pop(digit)
    return index


def unrank(n: int, index: int) -> Permutation:
    check_dimension(n)
    total = factorial(n)
    if not 0 <= index < total:
        raise PermutationError(f"index {index} out of range 0..{total - 1}")
    remaining = list(range(1, n + 1))
    symbols = []
    for position in range(n):
        base = factorial(n - 1 - position)
        digit, index = divmod(index, base)
        symbols.append(remaining.pop(digit))
    return Permutation._trusted(tuple(symbols))
