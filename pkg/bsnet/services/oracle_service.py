"""Exact π₃ for tiny graphs by enumerating T-paths and packing them with branch and bound.

A maximum family can always be trimmed so both ends of every T-path are
terminals, so only such paths are enumerated. Two T-paths are compatible
when their vertex sets meet exactly in T and they share no edge; with
vertex sets meeting in T only terminal-incident edges can collide, so
each path is stored as two bitmasks: interior vertices and terminal
incidences (a terminal with one of its edges). Every T-path uses four
incidences, so 3r/4 bounds any family.
"""

import logging
from typing import Optional

from bsnet.config import Settings
from bsnet.errors import DimensionError, OracleBudgetError
from bsnet.graph.cayley import CayleyGraph
from bsnet.graph.permutation import format_label
from bsnet.models import OracleResult, TerminalTriple

logger = logging.getLogger(__name__)

ORACLE_LIMIT = 24
COMPLETE_LIMIT = 8


class _Candidate:
    __slots__ = ("path", "inner", "edges")

    def __init__(self, path: tuple, inner: int, edges: int):
        self.path = path
        self.inner = inner
        self.edges = edges


class OracleService:
    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or Settings()

    def brute_force_pi3(self, g: CayleyGraph, T: TerminalTriple) -> OracleResult:
        if g.vertex_count > ORACLE_LIMIT:
            raise DimensionError(f"the oracle handles at most {ORACLE_LIMIT} vertices, BS_{g.n} has {g.vertex_count}")
        vertices = list(g.vertices())
        index = {v: i for i, v in enumerate(vertices)}
        terminals = list(T.vertices)
        complete = len(vertices) <= COMPLETE_LIMIT
        cap = len(vertices) - 1 if complete else self.settings.oracle_max_length

        incident = {}
        for t in terminals:
            for w in g.neighbors(t):
                incident[(t, w)] = len(incident)
        candidates = self._enumerate(g, terminals, cap, index, incident)
        candidates.sort(key=lambda c: len(c.path))
        bound = 3 * g.regularity // 4
        logger.info("Oracle: %d T-paths of length <= %d, incidence bound %d", len(candidates), cap, bound)

        search = _PackingSearch(candidates, len(incident), bound, self.settings.oracle_node_budget)
        finished = search.run()
        labels = [format_label(v) for v in terminals]
        if not finished:
            raise OracleBudgetError(
                f"oracle budget of {self.settings.oracle_node_budget} nodes exhausted for {labels}",
                best=search.best,
            )
        exact = complete or search.best == bound
        return OracleResult(
            n=g.n,
            terminals=labels,
            value=search.best,
            exact=exact,
            upper_bound=bound,
            candidates=len(candidates),
            nodes=search.nodes,
            max_length=None if complete else cap,
        )

    def _enumerate(self, g: CayleyGraph, terminals: list, cap: int, index: dict, incident: dict) -> list[_Candidate]:
        result = []
        for middle in terminals:
            start, end = [t for t in terminals if t != middle]
            stack = [(start, (start,))]
            while stack:
                v, path = stack.pop()
                if len(path) > cap:
                    continue
                for w in g.neighbors(v):
                    if w in path:
                        continue
                    if w == end:
                        if middle in path:
                            result.append(self._candidate(path + (w,), terminals, index, incident))
                        continue
                    stack.append((w, path + (w,)))
        return result

    @staticmethod
    def _candidate(path: tuple, terminals: list, index: dict, incident: dict) -> _Candidate:
        inner = 0
        for v in path:
            if v not in terminals:
                inner |= 1 << index[v]
        edges = 0
        for x, y in zip(path, path[1:]):
            for key in ((x, y), (y, x)):
                if key in incident:
                    edges |= 1 << incident[key]
        return _Candidate(path, inner, edges)


class _PackingSearch:
    """Largest pairwise-compatible subfamily, pruned by free terminal edges / 4."""

    def __init__(self, candidates: list[_Candidate], edge_count: int, bound: int, budget: int):
        self.candidates = candidates
        self.edge_count = edge_count
        self.bound = bound
        self.budget = budget
        self.best = 0
        self.nodes = 0

    def run(self) -> bool:
        try:
            self._extend(0, 0, 0, 0)
        except _Stop:
            return self.best >= self.bound
        return True

    def _extend(self, start: int, size: int, inner: int, edges: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _Stop
        if size > self.best:
            self.best = size
            if size >= self.bound:
                raise _Stop
        free = self.edge_count - bin(edges).count("1")
        if size + free // 4 <= self.best:
            return
        for i in range(start, len(self.candidates)):
            c = self.candidates[i]
            if c.inner & inner or c.edges & edges:
                continue
            self._extend(i + 1, size + 1, inner | c.inner, edges | c.edges)


class _Stop(Exception):
    pass


def brute_force_pi3(g: CayleyGraph, T: TerminalTriple, settings: Optional[Settings] = None) -> OracleResult:
    return OracleService(settings).brute_force_pi3(g, T)
