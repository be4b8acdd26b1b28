import logging
from itertools import combinations
from typing import Optional

from bsnet.builders.base import BaseWebBuilder, copy_groups, frame_of
from bsnet.builders.fallback import BudgetExhausted, SearchBudget, search_web, seeded_paths, shared_neighbours
from bsnet.builders.three_copies import ThreeCopyPlan
from bsnet.config import Settings
from bsnet.errors import ConstructionError, DimensionError, InfeasibleError
from bsnet.graph.cayley import CopyView
from bsnet.graph.menger import pair_paths
from bsnet.graph.permutation import format_label, rank
from bsnet.models import PAIR_NAMES, PairwiseWeb, TerminalTriple, target_counts

logger = logging.getLogger(__name__)


def base_web_n3(frame: CopyView, triple: TerminalTriple) -> PairwiseWeb:
    """Two (a, c)-paths avoiding b, keeping as many neighbours of b unused as BS_3 allows."""
    a, b, c = triple.vertices
    candidates = sorted((w for w in frame.neighbors(b) if w not in triple), key=rank)
    for size in (2, 1, 0):
        for spares in combinations(candidates, size):
            view = frame.without((b, *spares))
            try:
                found = pair_paths(view, a, c, 2)
            except InfeasibleError:
                continue
            if size < 2:
                logger.warning(
                    "BS_3 web for %s keeps %d spare neighbour(s) of b",
                    format_label(b),
                    size,
                )
            return PairwiseWeb.from_paths(3, triple, found.paths, spares, [f"base:n3 spares={size}"])
    raise ConstructionError(f"no two (a, c)-paths avoid b = {format_label(b)}")


def base_three_copies_n4(g, T: TerminalTriple, settings: Optional[Settings] = None) -> PairwiseWeb:
    """BS_4 with the terminals in three copies: fans in the copies, then bounded search."""
    frame = frame_of(g)
    if frame.dim != 4:
        raise DimensionError(f"the three-copy base case is for dimension 4, got {frame.dim}")
    if len(copy_groups(frame, T)) != 3:
        raise ConstructionError("the three-copy base case needs the terminals in three copies")
    try:
        return ThreeCopyPlan(frame, T).realize()
    except (ConstructionError, InfeasibleError) as e:
        logger.debug("Fan recipe failed for %s: %s", T.vertices, e)
    web = search_web(frame, T, target_counts(4), settings)
    web.trace.insert(0, "base:n4 three-copy search")
    return web


def base_common_neighbours_n4(g, T: TerminalTriple, settings: Optional[Settings] = None) -> PairwiseWeb:
    """BS_4 terminals with three common neighbours x, y, z.

    a–x–b, b–y–c and a–z–c use three of the five neighbours of every
    terminal. One more path per pair then runs through the two neighbours
    each terminal has left, with x, y and z removed.
    """
    frame = frame_of(g)
    if frame.dim != 4:
        raise DimensionError(f"the common-neighbour base case is for dimension 4, got {frame.dim}")
    shared = shared_neighbours(frame, T)
    if len(shared) != 3:
        raise ConstructionError(f"the terminals share {len(shared)} neighbours, the base case needs 3")
    budget = SearchBudget((settings or Settings()).fallback_node_budget)
    try:
        paths = seeded_paths(frame, T, dict(zip(PAIR_NAMES, target_counts(4))), budget)
    except BudgetExhausted:
        raise ConstructionError(f"routing budget of {budget.limit} nodes exhausted") from None
    if paths is None:
        raise ConstructionError("no disjoint routing through the free neighbours")
    return PairwiseWeb.from_paths(4, T, paths, (), ["base:n4 common-neighbours"])


class BaseN3Builder(BaseWebBuilder):
    name = "BS_3 base"

    def supports(self, frame: CopyView, triple: TerminalTriple) -> bool:
        return frame.dim == 3

    def build(self, frame: CopyView, triple: TerminalTriple) -> PairwiseWeb:
        return base_web_n3(frame, triple)


class CommonNeighboursN4Builder(BaseWebBuilder):
    name = "BS_4 common-neighbour base"

    def supports(self, frame: CopyView, triple: TerminalTriple) -> bool:
        return frame.dim == 4 and len(shared_neighbours(frame, triple)) == 3

    def build(self, frame: CopyView, triple: TerminalTriple) -> PairwiseWeb:
        return base_common_neighbours_n4(frame, triple, self.service.settings)


class ThreeCopiesN4Builder(BaseWebBuilder):
    name = "BS_4 three-copy base"

    def supports(self, frame: CopyView, triple: TerminalTriple) -> bool:
        return frame.dim == 4 and len(copy_groups(frame, triple)) == 3

    def build(self, frame: CopyView, triple: TerminalTriple) -> PairwiseWeb:
        return base_three_copies_n4(frame, triple, self.service.settings)
