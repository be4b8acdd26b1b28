import logging
from typing import Iterable, Optional, Union

from cachetools import LRUCache

from bsnet.builders import (
    BaseN3Builder,
    BaseWebBuilder,
    CommonNeighboursN4Builder,
    SameCopyEvenBuilder,
    SameCopyOddBuilder,
    ThreeCopiesBuilder,
    ThreeCopiesN4Builder,
    TwoCopiesEvenBuilder,
    TwoCopiesOddBuilder,
    assign_roles,
    fallback_web,
    frame_of,
)
from bsnet.config import Settings
from bsnet.errors import BsnetError, ConstructionError
from bsnet.graph.cayley import CayleyGraph, CopyView, build
from bsnet.graph.permutation import MAX_DIMENSION, Permutation, format_label
from bsnet.models import PairwiseWeb, TerminalTriple, target_counts
from bsnet.services.verification import verify_web

logger = logging.getLogger(__name__)

BASE_DIMENSION = 4


def describe(frame: CopyView, triple: TerminalTriple) -> str:
    labels = " ".join(format_label(v) for v in triple.vertices)
    suffix = format_label(frame.suffix)
    return f"BS_{frame.dim}{'/' + suffix if suffix else ''} [{labels}]"


class WebService:
    """Builds pairwise webs: case builders in order, each result verified, search as the last resort."""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or Settings()
        # Ordered by preference; supports() picks the case, the first verified result wins
        self.builders: list[BaseWebBuilder] = [
            BaseN3Builder(self),
            CommonNeighboursN4Builder(self),
            ThreeCopiesN4Builder(self),
            SameCopyOddBuilder(self),
            SameCopyEvenBuilder(self),
            TwoCopiesOddBuilder(self),
            TwoCopiesEvenBuilder(self),
            ThreeCopiesBuilder(self),
        ]
        self._cache: Optional[LRUCache] = (
            LRUCache(maxsize=self.settings.base_cache_size) if self.settings.base_cache_size else None
        )
        self._graphs: LRUCache = LRUCache(maxsize=MAX_DIMENSION)

    def graph(self, n: int) -> CayleyGraph:
        if n not in self._graphs:
            self._graphs[n] = build(n)
        return self._graphs[n]

    def build_web(
        self,
        g: Union[CayleyGraph, CopyView],
        T: Union[TerminalTriple, Iterable[Permutation]],
    ) -> PairwiseWeb:
        """
        Build the pairwise web of ``g`` for the terminals ``T``.

        Args:
            g: The graph, or a frame of it.
            T: A triple with roles, or three vertices to assign roles to.

        Returns:
            A PairwiseWeb that passed verify_web.
        """
        frame = frame_of(g)
        triple = T if isinstance(T, TerminalTriple) else assign_roles(frame, T)
        return self.build_frame_web(frame, triple)

    def build_frame_web(self, frame: CopyView, triple: TerminalTriple) -> PairwiseWeb:
        key = (frame.dim, frame.suffix, triple.vertices)
        cacheable = self._cache is not None and frame.dim <= BASE_DIMENSION
        if cacheable and key in self._cache:
            return self._cache[key]

        web = self._run_builders(frame, triple)
        if web is None:
            web = self._fallback(frame, triple)

        if cacheable:
            self._cache[key] = web
        return web

    def _run_builders(self, frame: CopyView, triple: TerminalTriple) -> Optional[PairwiseWeb]:
        for builder in self.builders:
            if not builder.supports(frame, triple):
                continue
            try:
                logger.info("Trying %s for %s...", builder.name, describe(frame, triple))
                web = builder.build(frame, triple)
                report = verify_web(frame, triple, web)
                if report.passed:
                    logger.info("Success! %s built %s", builder.name, describe(frame, triple))
                    return web
                logger.warning("%s produced an invalid web: %s", builder.name, report.failure)
            except BsnetError as e:
                logger.warning("Error with %s: %s", builder.name, e)
                continue
        return None

    def _fallback(self, frame: CopyView, triple: TerminalTriple) -> PairwiseWeb:
        web = fallback_web(frame, triple, target_counts(frame.dim), self.settings)
        report = verify_web(frame, triple, web)
        if not report.passed:
            raise ConstructionError(f"fallback web for {describe(frame, triple)} failed verification: {report.failure}")
        return web

    def clear_cache(self) -> None:
        """Drop cached base webs and graphs."""
        if self._cache is not None:
            self._cache.clear()
        self._graphs.clear()
