"""Search-based webs for configurations the case builders reject.

Three strategies, tried in order:

1. hub flows: one terminal sends its two families at once through a single
   flow, then the remaining pair is joined in what is left;
2. for frames of at most 24 vertices whose terminals share three
   neighbours, one two-edge path per pair through them, the other paths
   routed around them;
3. for frames of at most 24 vertices, backtracking over enumerated simple
   paths within a node budget.
"""

import logging
from itertools import combinations, islice, permutations
from typing import Iterable, Iterator, Optional

from bsnet.builders.base import copy_groups, frame_of
from bsnet.config import Settings
from bsnet.errors import FallbackExhaustedError, InfeasibleError
from bsnet.graph.cayley import CopyView
from bsnet.graph.menger import hub_paths, pair_paths
from bsnet.graph.permutation import Permutation, format_label, rank
from bsnet.models import PAIR_NAMES, Path, PairwiseWeb, TerminalTriple

logger = logging.getLogger(__name__)

SMALL_FRAME = 24
ROUTE_CAP = 7


def required_spares(m: int) -> int:
    return 2 if m % 2 and m >= 5 else 0


def fingerprint(frame: CopyView, triple: TerminalTriple, counts: tuple[int, int, int]) -> str:
    pattern = sorted(len(g) for g in copy_groups(frame, triple).values())
    labels = ",".join(format_label(v) for v in triple.vertices)
    return f"n={frame.dim} suffix={format_label(frame.suffix) or '-'} copies={pattern} T={labels} counts={counts}"


def spare_choices(frame: CopyView, triple: TerminalTriple, limit: int) -> list[tuple[Permutation, ...]]:
    """Spare sets to try, b's outgoing neighbours first."""
    b = triple.b
    outgoing = [w for w in frame.outgoing(b) if w in frame]
    inside = sorted((w for w in frame.neighbors(b) if w not in outgoing), key=rank)
    candidates = [w for w in outgoing + inside if w not in triple]
    if frame.dim == 3:
        sizes: Iterable[int] = (2, 1, 0)
    else:
        sizes = (required_spares(frame.dim),)
    choices: list[tuple[Permutation, ...]] = []
    for size in sizes:
        choices += islice(combinations(candidates, size), limit)
    return choices


class SearchBudget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise BudgetExhausted


class BudgetExhausted(Exception):
    pass


def _hub_web(view: CopyView, triple: TerminalTriple, need: dict[str, int], hub: Permutation) -> list[Path]:
    p, q = [t for t in triple.vertices if t != hub]
    demands = {p: need[triple.pair_name(hub, p)], q: need[triple.pair_name(hub, q)]}
    paths: list[Path] = []
    if sum(demands.values()):
        for group in hub_paths(view, hub, demands).values():
            paths += group
    used = {v for path in paths for v in path[1:-1]}
    rest = need[triple.pair_name(p, q)]
    if rest:
        paths += pair_paths(view.without(used | {hub}), p, q, rest).paths
    return paths


def simple_paths(view: CopyView, start, end, blocked: set, cap: int, budget: SearchBudget) -> Iterator[Path]:
    """Simple start–end paths of length ≤ cap with no interior vertex in ``blocked``, shortest first."""
    for length in range(1, cap + 1):
        stack = [(start, (start,))]
        while stack:
            v, path = stack.pop()
            budget.spend()
            if len(path) == length:
                if view.adjacent(v, end):
                    yield path + (end,)
                continue
            for w in reversed(view.neighbors(v)):
                if w not in path and w not in blocked and w != end:
                    stack.append((w, path + (w,)))


def shared_neighbours(frame: CopyView, triple: TerminalTriple) -> list[Permutation]:
    a, b, c = triple.vertices
    common = set(frame.neighbors(a)) & set(frame.neighbors(b)) & set(frame.neighbors(c))
    return sorted(common, key=rank)


def route_pairs(
    view: CopyView,
    pairs: list[tuple[Permutation, Permutation]],
    terminals: set,
    budget: SearchBudget,
    used: frozenset = frozenset(),
) -> Optional[list[Path]]:
    """One path per pair, pairwise internally disjoint; the last pair takes a shortest path."""
    (s, t), rest = pairs[0], pairs[1:]
    blocked = terminals | used
    if not rest:
        budget.spend()
        try:
            return [pair_paths(view.without(blocked - {s, t}), s, t, 1).paths[0]]
        except InfeasibleError:
            return None
    for path in simple_paths(view, s, t, blocked, ROUTE_CAP, budget):
        found = route_pairs(view, rest, terminals, budget, used | frozenset(path[1:-1]))
        if found is not None:
            return [path, *found]
    return None


def seeded_paths(
    frame: CopyView,
    triple: TerminalTriple,
    need: dict[str, int],
    budget: SearchBudget,
) -> Optional[list[Path]]:
    """Three common neighbours x, y, z seed a–x–b, b–y–c and a–z–c; the rest is routed around them."""
    shared = shared_neighbours(frame, triple)
    if len(shared) != 3 or not all(need.values()):
        return None
    x, y, z = shared
    a, b, c = triple.vertices
    seeds: list[Path] = [(a, x, b), (b, y, c), (a, z, c)]
    rest = [triple.pair_ends(name) for name in PAIR_NAMES for _ in range(need[name] - 1)]
    if not rest:
        return seeds
    view = frame.without(shared)
    for pairs in dict.fromkeys(permutations(rest)):
        routed = route_pairs(view, list(pairs), set(triple.vertices), budget)
        if routed is not None:
            return seeds + routed
    return None


def _backtrack(
    view: CopyView,
    triple: TerminalTriple,
    need: dict[str, int],
    spares_needed: int,
    budget: SearchBudget,
) -> Optional[tuple[list[Path], list[Permutation]]]:
    cap = len(view) - 1 if len(view) <= 8 else 7
    terminals = set(triple.vertices)
    candidates = {
        name: list(simple_paths(view, *triple.pair_ends(name), terminals, cap, budget))
        for name in PAIR_NAMES
        if need[name]
    }
    slots = [name for name in PAIR_NAMES for _ in range(need[name])]
    chosen: list[Path] = []
    b_options = [w for w in view.neighbors(triple.b) if w not in terminals]

    def extend(slot: int, start: int, interior: set, edges: set):
        if slot == len(slots):
            free = [w for w in b_options if w not in interior]
            if len(free) < spares_needed:
                return None
            keep = 2 if view.dim == 3 else spares_needed
            return list(chosen), free[:keep]
        name = slots[slot]
        options = candidates[name]
        for index in range(start, len(options)):
            budget.spend()
            path = options[index]
            inner = set(path[1:-1])
            edge = frozenset(path) if len(path) == 2 else None
            if inner & interior or (edge is not None and edge in edges):
                continue
            chosen.append(path)
            nxt = slot + 1
            following = index + 1 if nxt < len(slots) and slots[nxt] == name else 0
            found = extend(nxt, following, interior | inner, edges | ({edge} if edge else set()))
            if found is not None:
                return found
            chosen.pop()
        return None

    return extend(0, 0, set(), set())


def search_web(
    frame: CopyView,
    triple: TerminalTriple,
    counts: tuple[int, int, int],
    settings: Optional[Settings] = None,
) -> PairwiseWeb:
    """Realize ``counts`` = (|ab|, |bc|, |ac|) by flow search, then seeded routing, then bounded backtracking."""
    settings = settings or Settings()
    need = dict(zip(PAIR_NAMES, counts))
    case = fingerprint(frame, triple, counts)
    spares_needed = required_spares(frame.dim)
    for t in triple.vertices:
        load = sum(need[name] for name in PAIR_NAMES if t in triple.pair_ends(name))
        if t == triple.b:
            load += spares_needed
        if load > frame.degree(t):
            raise FallbackExhaustedError(f"terminal {format_label(t)} needs {load} incident paths", case)

    budget = SearchBudget(settings.fallback_node_budget)
    try:
        for hub in (triple.b, triple.a, triple.c):
            for spares in spare_choices(frame, triple, settings.fallback_spare_choices):
                budget.spend()
                try:
                    paths = _hub_web(frame.without(spares), triple, need, hub)
                except InfeasibleError as e:
                    logger.debug("Hub %s with spares %s failed: %s", format_label(hub), spares, e)
                    continue
                trace = [f"fallback:hub {format_label(hub)}"]
                return PairwiseWeb.from_paths(frame.dim, triple, paths, spares, trace)
        if len(frame) <= SMALL_FRAME:
            if not spares_needed:
                seeded = seeded_paths(frame, triple, need, budget)
                if seeded is not None:
                    return PairwiseWeb.from_paths(frame.dim, triple, seeded, (), ["fallback:seeded"])
            found = _backtrack(frame, triple, need, spares_needed, budget)
            if found is not None:
                paths, spares = found
                return PairwiseWeb.from_paths(frame.dim, triple, paths, spares, ["fallback:search"])
    except BudgetExhausted:
        raise FallbackExhaustedError(f"search budget of {budget.limit} nodes exhausted", case) from None
    raise FallbackExhaustedError("no strategy realizes the requested counts", case)


def fallback_web(g, T: TerminalTriple, counts: tuple[int, int, int], settings: Optional[Settings] = None) -> PairwiseWeb:
    frame = frame_of(g)
    logger.warning("Falling back to search for %s", fingerprint(frame, T, counts))
    return search_web(frame, T, counts, settings)
