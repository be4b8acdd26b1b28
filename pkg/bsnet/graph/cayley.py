"""The bubble-sort star graph BS_n and restricted views of it.

Adjacency is never stored: neighbours are produced by applying the
generator transpositions to a label string, in generator-list order.
"""

import logging
from itertools import permutations
from math import factorial
from typing import Iterable, Iterator, Optional

from bsnet.errors import DimensionError, PermutationError
from bsnet.graph.permutation import Permutation, _swap, check_dimension, format_label, rank

logger = logging.getLogger(__name__)


def generators(m: int) -> tuple[tuple[int, int], ...]:
    """Transpositions of BS_m: (1,2),…,(1,m) then (2,3),…,(m−1,m)."""
    star = [(1, j) for j in range(2, m + 1)]
    bubble = [(j, j + 1) for j in range(2, m)]
    return tuple(star + bubble)


class CopyView:
    """A restriction of BS_n used by every search.

    The view lives in a *frame*: positions ``dim+1..n`` are pinned to
    ``suffix`` and only the generators of BS_dim (positions 1..dim) act.
    Inside the frame, copies are keyed by the symbol at position ``dim``;
    a vertex belongs to the view when its copy is allowed and it is not
    removed. The top-level view of a graph has ``dim == n`` and an empty suffix.
    """

    __slots__ = ("graph", "dim", "suffix", "copies", "removed", "_gens", "_symbols")

    def __init__(
        self,
        graph: "CayleyGraph",
        dim: int,
        suffix: tuple[int, ...] = (),
        copies: Optional[Iterable[int]] = None,
        removed: Iterable[Permutation] = (),
    ):
        if dim + len(suffix) != graph.n:
            raise DimensionError(f"frame of dimension {dim} with suffix {suffix} does not fit BS_{graph.n}")
        self.graph = graph
        self.dim = dim
        self.suffix = tuple(suffix)
        self._symbols = tuple(sorted(set(range(1, graph.n + 1)) - set(self.suffix)))
        self.copies = frozenset(self._symbols if copies is None else copies)
        if not self.copies:
            raise PermutationError("a view needs at least one copy")
        if not self.copies <= set(self._symbols):
            raise PermutationError(f"copies {sorted(self.copies)} not available in this frame")
        self.removed = frozenset(removed)
        self._gens = generators(dim)

    # -- membership -------------------------------------------------------

    @property
    def symbols(self) -> tuple[int, ...]:
        return self._symbols

    @property
    def is_frame(self) -> bool:
        """True when every copy is allowed and nothing is removed."""
        return len(self.copies) == len(self._symbols) and not self.removed

    def __contains__(self, v) -> bool:
        return (
            len(v) == self.graph.n
            and tuple(v[self.dim:]) == self.suffix
            and v[self.dim - 1] in self.copies
            and v not in self.removed
        )

    def vertices(self) -> Iterator[Permutation]:
        """Members in ascending rank order."""
        for head in permutations(self._symbols):
            if head[-1] in self.copies:
                v = Permutation._trusted(head + self.suffix)
                if v not in self.removed:
                    yield v

    def __len__(self) -> int:
        per_copy = factorial(self.dim - 1)
        return per_copy * len(self.copies) - sum(1 for v in self.removed if self._in_frame_copies(v))

    def _in_frame_copies(self, v) -> bool:
        return tuple(v[self.dim:]) == self.suffix and v[self.dim - 1] in self.copies

    # -- adjacency --------------------------------------------------------

    def neighbors(self, v: Permutation) -> list[Permutation]:
        result = []
        for i, j in self._gens:
            w = _swap(v, i, j)
            if w in self:
                result.append(w)
        return result

    def degree(self, v: Permutation) -> int:
        return len(self.neighbors(v))

    def adjacent(self, u, v) -> bool:
        if u not in self or v not in self:
            return False
        return self.graph.adjacent(u, v) and all(k < self.dim for k in _diff(u, v))

    # -- copy structure ---------------------------------------------------

    def copy_of(self, v) -> int:
        return v[self.dim - 1]

    def out_plus(self, v: Permutation) -> Permutation:
        return _swap(v, 1, self.dim)

    def out_minus(self, v: Permutation) -> Permutation:
        return _swap(v, self.dim - 1, self.dim)

    def outgoing(self, v: Permutation) -> tuple[Permutation, Permutation]:
        return self.out_plus(v), self.out_minus(v)

    # -- derived views ----------------------------------------------------

    def restrict(self, copies: Optional[Iterable[int]] = None, removed: Iterable = ()) -> "CopyView":
        """Same frame, fewer copies and/or more removed vertices."""
        allowed = self.copies if copies is None else frozenset(copies) & self.copies
        return CopyView(self.graph, self.dim, self.suffix, allowed, self.removed | frozenset(removed))

    def without(self, vertices: Iterable) -> "CopyView":
        return self.restrict(removed=vertices)

    def copy_view(self, symbol: int) -> "CopyView":
        """Copy ``symbol`` of this frame as a full frame of dimension dim − 1."""
        if symbol not in self.copies:
            raise PermutationError(f"copy {symbol} is not part of this view")
        suffix = (symbol,) + self.suffix
        inner = [v for v in self.removed if tuple(v[self.dim - 1:]) == suffix]
        return CopyView(self.graph, self.dim - 1, suffix, None, inner)

    def __repr__(self) -> str:
        return (
            f"CopyView(dim={self.dim}, suffix={format_label(self.suffix) or '-'}, "
            f"copies={sorted(self.copies)}, removed={len(self.removed)})"
        )


def _diff(u, v) -> list[int]:
    return [k for k in range(len(u)) if u[k] != v[k]]


class CayleyGraph:
    """BS_n: the Cayley graph on S_n generated by S, with lazy adjacency."""

    def __init__(self, n: int):
        self.n = check_dimension(n)
        self.generators = generators(n)
        self.vertex_count = factorial(n)
        self.regularity = 2 * n - 3
        self._gen_set = frozenset(self.generators)
        self.view = CopyView(self, n)

    def __repr__(self) -> str:
        return f"CayleyGraph(n={self.n})"

    def _check(self, v) -> None:
        if len(v) != self.n:
            raise DimensionError(f"vertex {format_label(v)} has dimension {len(v)}, graph has {self.n}")

    def vertices(self) -> Iterator[Permutation]:
        return self.view.vertices()

    def neighbors(self, v: Permutation) -> list[Permutation]:
        self._check(v)
        return [_swap(v, i, j) for i, j in self.generators]

    def adjacent(self, u, v) -> bool:
        if len(u) != self.n or len(v) != self.n:
            return False
        diff = _diff(u, v)
        if len(diff) != 2:
            return False
        i, j = diff[0] + 1, diff[1] + 1
        return (i, j) in self._gen_set

    def copy_of(self, v) -> int:
        return v[-1]

    def out_plus(self, v: Permutation) -> Permutation:
        return _swap(v, 1, self.n)

    def out_minus(self, v: Permutation) -> Permutation:
        return _swap(v, self.n - 1, self.n)

    def cross_edges(self, i: int, j: int) -> set[tuple[Permutation, Permutation]]:
        """E_{i,j}: pairs (u, w) with u in copy i and w in copy j."""
        if self.n < 4:
            raise DimensionError("cross edges are defined for n >= 4")
        if i == j:
            raise PermutationError("cross edges need two different copies")
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise PermutationError(f"copies ({i}, {j}) out of range 1..{self.n}")
        edges = set()
        for u in self.view.restrict(copies=[i]).vertices():
            for w in (self.out_plus(u), self.out_minus(u)):
                if w[-1] == j:
                    edges.add((u, w))
        return edges

    def common_neighbors(self, vs: Iterable[Permutation]) -> set[Permutation]:
        vs = list(vs)
        if not 2 <= len(vs) <= 3:
            raise PermutationError(f"common neighbours are defined for 2 or 3 vertices, got {len(vs)}")
        if len(set(vs)) != len(vs):
            raise PermutationError("common neighbours need distinct vertices")
        result = set(self.neighbors(vs[0]))
        for v in vs[1:]:
            result &= set(self.neighbors(v))
        return result

    def induced(self, copies: Iterable[int], removed: Iterable[Permutation] = ()) -> CopyView:
        copies = frozenset(copies)
        if not copies:
            raise PermutationError("induced view needs a nonempty copy set")
        return CopyView(self, self.n, (), copies, removed)

    # -- export -----------------------------------------------------------

    def edges(self) -> Iterator[tuple[Permutation, Permutation]]:
        """Every edge once, as (u, w) with rank(u) < rank(w), ordered by rank of u."""
        for u in self.vertices():
            ru = rank(u)
            for w in sorted(self.neighbors(u), key=rank):
                if ru < rank(w):
                    yield u, w

    def to_edge_list(self) -> str:
        return "".join(f"{format_label(u)} {format_label(w)}\n" for u, w in self.edges())

    def to_dot(self) -> str:
        lines = [f"graph BS{self.n} {{"]
        lines += [f'  "{format_label(v)}";' for v in self.vertices()]
        lines += [f'  "{format_label(u)}" -- "{format_label(w)}";' for u, w in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


def build(n: int) -> CayleyGraph:
    graph = CayleyGraph(n)
    logger.debug("Built BS_%d with %d vertices, degree %d", n, graph.vertex_count, graph.regularity)
    return graph

