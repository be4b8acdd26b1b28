"""Two terminals p, q share a copy, the third r sits in another.

Both parities follow one recipe. Inside the shared copy, take as many
(p, q)-paths as its connectivity allows. Some of them, all of length ≥ 3,
are split: p keeps its first edge p–u, q keeps its last edge v–q, and the
middle is dropped. The vertices u⁺, v⁺, plus one outgoing neighbour each of
p and q, are then reached by a fan from r outside the shared copy.
"""

import logging
from typing import Optional

from bsnet.builders.base import BaseWebBuilder, copy_groups, reverse
from bsnet.errors import ConstructionError, InfeasibleError
from bsnet.graph.cayley import CopyView
from bsnet.graph.menger import fan, pair_paths
from bsnet.graph.permutation import Permutation, rank
from bsnet.models import Path, PairwiseWeb, TerminalTriple

logger = logging.getLogger(__name__)


def _pick_exit(frame: CopyView, v: Permutation, r: Permutation) -> Permutation:
    plus, minus = frame.outgoing(v)
    return r if r in (plus, minus) else plus


class _TwoCopySplit:
    def __init__(self, builder: BaseWebBuilder, frame: CopyView, triple: TerminalTriple):
        self.builder = builder
        self.frame = frame
        self.triple = triple
        groups = copy_groups(frame, triple)
        self.home = next(c for c, members in groups.items() if len(members) == 2)
        self.p, self.q = groups[self.home]
        self.r = next(v for v in triple.vertices if v not in (self.p, self.q))

    def run(self, split: int, spares_wanted: int, label: str) -> PairwiseWeb:
        frame, p, q, r = self.frame, self.p, self.q, self.r
        copy = frame.copy_view(self.home)
        available = 2 * copy.dim - 3
        inside = pair_paths(copy, p, q, available).paths
        long_paths = [path for path in inside if len(path) >= 4][:split]
        if len(long_paths) < split:
            raise ConstructionError(f"only {len(long_paths)} (p, q)-paths of length >= 3 in the shared copy, {split} needed")
        kept = [path for path in inside if path not in long_paths]

        # target -> path already walked from p or q, ending next to the target
        heads: dict[Permutation, Path] = {}
        for path in long_paths:
            heads[frame.out_plus(path[1])] = path[:2]
            heads[frame.out_plus(path[-2])] = reverse(path[-2:])
        heads[_pick_exit(frame, p, r)] = (p,)
        heads[_pick_exit(frame, q, r)] = (q,)

        region = frame.restrict(copies=[s for s in frame.symbols if s != self.home])
        spares = self._spares(region, set(heads), spares_wanted)
        targets = [x for x in heads if x != r]
        view = region.without(spares)
        self.builder.fan_budget(view, len(targets), view.degree(r))
        try:
            reached = fan(view, r, targets).paths
        except InfeasibleError as e:
            raise ConstructionError(f"fan from r: {e}") from e

        paths: list[Path] = list(kept)
        if r in heads:
            paths.append(heads[r] + (r,))
        for target, path in zip(targets, reached):
            paths.append(heads[target] + reverse(path))
        lengths = sorted(len(path) - 1 for path in long_paths)
        return PairwiseWeb.from_paths(frame.dim, self.triple, paths, spares, [f"{label} split-lengths={lengths}"])

    def _spares(self, region: CopyView, taken: set, wanted: int) -> list[Permutation]:
        if not wanted:
            return []
        b = self.r
        outgoing = [w for w in self.frame.outgoing(b) if w in region]
        inside = sorted((w for w in region.neighbors(b) if w not in outgoing), key=rank)
        chosen = [w for w in outgoing + inside if w not in taken and w not in self.triple][:wanted]
        if len(chosen) < wanted:
            raise ConstructionError(f"b has {len(chosen)} free neighbours outside the shared copy")
        return chosen


class TwoCopiesEvenBuilder(BaseWebBuilder):
    name = "two-copy (even)"

    def supports(self, frame: CopyView, triple: TerminalTriple) -> bool:
        return frame.dim % 2 == 0 and len(copy_groups(frame, triple)) == 2

    def build(self, frame: CopyView, triple: TerminalTriple) -> PairwiseWeb:
        k = (frame.dim - 2) // 2
        try:
            return _TwoCopySplit(self, frame, triple).run(2 * k - 1, 0, "two-copy:even")
        except InfeasibleError as e:
            raise ConstructionError(f"{self.name}: {e}") from e


class TwoCopiesOddBuilder(BaseWebBuilder):
    """Odd frame: a and c share the copy, the lone b also keeps two spares."""

    name = "two-copy (odd)"

    def supports(self, frame: CopyView, triple: TerminalTriple) -> bool:
        if frame.dim % 2 == 0 or frame.dim < 5:
            return False
        groups = copy_groups(frame, triple)
        return len(groups) == 2 and [triple.b] in groups.values()

    def build(self, frame: CopyView, triple: TerminalTriple) -> PairwiseWeb:
        k = (frame.dim - 1) // 2
        try:
            return _TwoCopySplit(self, frame, triple).run(2 * k - 3, 2, "two-copy:odd")
        except InfeasibleError as e:
            raise ConstructionError(f"{self.name}: {e}") from e


def split_lengths(web: PairwiseWeb) -> Optional[list[int]]:
    """In-copy path lengths a two-copy case split, read back from the trace."""
    for entry in web.trace:
        if entry.startswith("two-copy:") and "split-lengths=" in entry:
            raw = entry.split("split-lengths=", 1)[1].strip("[]")
            return [int(x) for x in raw.split(",") if x.strip()]
    return None
