"""All three terminals in one copy: recurse into it, then add paths through the other copies.

The copies other than the home copy together form a (2m − 4)-connected region.
"""

import logging

from bsnet.builders.base import BaseWebBuilder, assign_roles, copy_groups
from bsnet.errors import ConstructionError, InfeasibleError
from bsnet.graph.cayley import CopyView
from bsnet.graph.menger import disjoint_set_paths
from bsnet.models import Path, PairwiseWeb, TerminalTriple

logger = logging.getLogger(__name__)


class SameCopyOddBuilder(BaseWebBuilder):
    """Odd frame: the even sub-web lacks two (a, c)-paths; b⁺ and b⁻ become the spares."""

    name = "same-copy (odd)"

    def supports(self, frame: CopyView, triple: TerminalTriple) -> bool:
        return frame.dim % 2 == 1 and frame.dim >= 5 and len(copy_groups(frame, triple)) == 1

    def build(self, frame: CopyView, triple: TerminalTriple) -> PairwiseWeb:
        home = frame.copy_of(triple.a)
        sub = self.service.build_frame_web(frame.copy_view(home), triple)
        spares = list(frame.outgoing(triple.b))
        outside = frame.restrict(copies=[s for s in frame.symbols if s != home]).without(spares)
        self.fan_budget(outside, 2, 2 * frame.dim - 4 - len(spares))
        try:
            found = disjoint_set_paths(outside, frame.outgoing(triple.a), frame.outgoing(triple.c), 2)
        except InfeasibleError as e:
            raise ConstructionError(f"{self.name}: {e}") from e
        extra = [(triple.a,) + path + (triple.c,) for path in found.paths]
        return PairwiseWeb.from_paths(
            frame.dim, triple, sub.all_paths() + extra, spares, ["same-copy:odd", *sub.trace]
        )


class SameCopyEvenBuilder(BaseWebBuilder):
    """Even frame: an odd sub-web with two spares, then four (X, Y)-paths outside the copy.

    Roles are re-assigned inside the copy; even counts do not depend on them.
    """

    name = "same-copy (even)"

    def supports(self, frame: CopyView, triple: TerminalTriple) -> bool:
        return frame.dim % 2 == 0 and len(copy_groups(frame, triple)) == 1

    def build(self, frame: CopyView, triple: TerminalTriple) -> PairwiseWeb:
        home = frame.copy_of(triple.a)
        inner_frame = frame.copy_view(home)
        inner = assign_roles(inner_frame, triple.vertices)
        sub = self.service.build_frame_web(inner_frame, inner)
        self.guard(len(sub.spares) == 2, f"sub-web of dimension {inner_frame.dim} has {len(sub.spares)} spares")

        alpha, beta, gamma = inner.vertices
        b1, b2 = sub.spares
        X = [*frame.outgoing(alpha), *frame.outgoing(gamma)]
        landing = {frame.out_plus(beta): (beta,), frame.out_minus(beta): (beta,)}
        landing[frame.out_plus(b1)] = (b1, beta)
        landing[frame.out_plus(b2)] = (b2, beta)
        outside = frame.restrict(copies=[s for s in frame.symbols if s != home])
        self.fan_budget(outside, len(X), 2 * frame.dim - 4)
        try:
            found = disjoint_set_paths(outside, X, list(landing), 4)
        except InfeasibleError as e:
            raise ConstructionError(f"{self.name}: {e}") from e

        extra: list[Path] = []
        for path in found.paths:
            start = alpha if path[0] in frame.outgoing(alpha) else gamma
            extra.append((start,) + path + landing[path[-1]])
        return PairwiseWeb.from_paths(
            frame.dim, triple, sub.all_paths() + extra, (), ["same-copy:even", *sub.trace]
        )
