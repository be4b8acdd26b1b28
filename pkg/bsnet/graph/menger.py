"""Vertex-disjoint path families by unit-capacity augmenting paths.

Every internal vertex is split into an in-half and an out-half joined by a
unit arc; each graph edge becomes two unit arcs (u_out -> w_in, w_out -> u_in).
Terminals (sources and sinks) are not split and never carry a path through.
Augmenting paths are found breadth-first in generator order, so the same
query always returns the same paths.
"""

import logging
from collections import deque
from enum import Enum
from itertools import combinations
from typing import Iterable, Optional

from pydantic import BaseModel, ConfigDict, Field

from bsnet.errors import InfeasibleError, PermutationError
from bsnet.graph.cayley import CopyView
from bsnet.graph.permutation import Permutation, format_label

logger = logging.getLogger(__name__)

IN, OUT, TERM = 0, 1, 2
_SOURCE = ("S",)
_SINK = ("T",)


class PathKind(str, Enum):
    SET_TO_SET = "set-to-set"
    FAN = "fan"
    PAIR = "pair"


class DisjointPathSet(BaseModel):
    """Paths found by one search, with the view they were searched in."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    paths: list[tuple[Permutation, ...]] = Field(default_factory=list)
    kind: PathKind
    context: CopyView

    def __len__(self) -> int:
        return len(self.paths)

    def ends(self) -> list[Permutation]:
        return [p[-1] for p in self.paths]


class _UnitFlow:
    """Residual bookkeeping for one search; caps of ``None`` mean unlimited."""

    def __init__(self, view: CopyView, sources: dict, sinks: dict):
        overlap = set(sources) & set(sinks)
        if overlap:
            raise PermutationError(f"terminal {format_label(next(iter(overlap)))} is both source and sink")
        self.view = view
        self.sources = sources
        self.sinks = sinks
        self.flow_out: dict = {}
        self.flow_in: dict = {}
        self.through: set = set()
        self.src_used = {s: 0 for s in sources}
        self.sink_used = {t: 0 for t in sinks}
        self.value = 0
        self._reached: dict = {}

    def _has_room(self, caps: dict, used: dict, v) -> bool:
        cap = caps[v]
        return cap is None or used[v] < cap

    def _state_of(self, w) -> Optional[tuple]:
        if w in self.sinks:
            return (w, TERM)
        if w in self.sources:
            return None
        return (w, IN)

    def _back_state(self, u) -> tuple:
        return (u, TERM) if (u in self.sources or u in self.sinks) else (u, OUT)

    def _search(self) -> Optional[list]:
        parent: dict = {_SOURCE: None}
        queue = deque()
        for s in self.sources:
            if self._has_room(self.sources, self.src_used, s):
                state = (s, TERM)
                parent[state] = (_SOURCE, "src")
                queue.append(state)
        while queue:
            state = queue.popleft()
            v, side = state
            steps = []
            if side == TERM:
                if v in self.sinks:
                    if self._has_room(self.sinks, self.sink_used, v):
                        parent[_SINK] = (state, "sink")
                        self._reached = parent
                        return self._unwind(parent)
                else:
                    steps += self._forward(v)
                steps += [(self._back_state(u), "rev") for u in self.flow_in.get(v, ())]
            elif side == IN:
                if v not in self.through:
                    steps.append(((v, OUT), "split"))
                steps += [(self._back_state(u), "rev") for u in self.flow_in.get(v, ())]
            else:
                steps += self._forward(v)
                if v in self.through:
                    steps.append(((v, IN), "unsplit"))
            for nxt, op in steps:
                if nxt not in parent:
                    parent[nxt] = (state, op)
                    queue.append(nxt)
        self._reached = parent
        return None

    def _forward(self, v) -> list:
        steps = []
        used = self.flow_out.get(v, {})
        for w in self.view.neighbors(v):
            if w in used:
                continue
            nxt = self._state_of(w)
            if nxt is not None:
                steps.append((nxt, "fwd"))
        return steps

    def _unwind(self, parent: dict) -> list:
        chain = []
        state = _SINK
        while parent[state] is not None:
            prev, op = parent[state]
            chain.append((prev, op, state))
            state = prev
        chain.reverse()
        return chain

    def _augment(self, chain: list) -> None:
        for prev, op, state in chain:
            if op == "src":
                self.src_used[state[0]] += 1
            elif op == "sink":
                self.sink_used[prev[0]] += 1
            elif op == "fwd":
                u, w = prev[0], state[0]
                self.flow_out.setdefault(u, {})[w] = None
                self.flow_in.setdefault(w, {})[u] = None
            elif op == "rev":
                y, u = prev[0], state[0]
                del self.flow_out[u][y]
                del self.flow_in[y][u]
            elif op == "split":
                self.through.add(state[0])
            elif op == "unsplit":
                self.through.discard(state[0])
        self.value += 1

    def run(self, limit: Optional[int] = None) -> int:
        while limit is None or self.value < limit:
            chain = self._search()
            if chain is None:
                break
            self._augment(chain)
        return self.value

    def paths(self) -> list[tuple[Permutation, ...]]:
        arcs = {u: list(ws) for u, ws in self.flow_out.items()}
        result = []
        for s in self.sources:
            for w in list(arcs.get(s, [])):
                path = [s, w]
                arcs[s].remove(w)
                current = w
                while current not in self.sinks:
                    nxt = arcs[current].pop(0)
                    path.append(nxt)
                    current = nxt
                result.append(tuple(path))
        return result

    def cut(self) -> frozenset:
        """Vertex separator read off the last (failed) search."""
        reached = self._reached
        cut = set()
        for s in self.sources:
            if (s, TERM) not in reached:
                cut.add(s)
            elif self.sources[s] is None:
                # an unlimited source's saturated arcs cross the cut at their heads
                for w in self.flow_out.get(s, {}):
                    if self._state_of(w) not in reached:
                        cut.add(w)
        for t in self.sinks:
            if (t, TERM) in reached:
                cut.add(t)
        for v in self.through:
            if (v, IN) in reached and (v, OUT) not in reached:
                cut.add(v)
        return frozenset(cut)


def _require_members(view: CopyView, vertices: Iterable, label: str) -> None:
    for v in vertices:
        if v not in view:
            raise PermutationError(f"{label} vertex {format_label(v)} is not in {view!r}")


def disjoint_set_paths(view: CopyView, X: Iterable, Y: Iterable, k: int) -> DisjointPathSet:
    """k pairwise vertex-disjoint (X, Y)-paths with no internal vertex in X ∪ Y."""
    X, Y = list(dict.fromkeys(X)), list(dict.fromkeys(Y))
    _require_members(view, X, "source")
    _require_members(view, Y, "target")
    if len(X) < k or len(Y) < k:
        raise PermutationError(f"need |X|, |Y| >= {k}, got {len(X)} and {len(Y)}")
    shared = [v for v in X if v in set(Y)][:k]
    paths = [(v,) for v in shared]
    need = k - len(paths)
    if need == 0:
        return DisjointPathSet(paths=paths, kind=PathKind.SET_TO_SET, context=view)
    both = set(X) & set(Y)
    inner = view.without(both)
    flow = _UnitFlow(inner, {x: 1 for x in X if x not in both}, {y: 1 for y in Y if y not in both})
    found = flow.run(need)
    if found < need:
        cut = flow.cut() | frozenset(both)
        raise InfeasibleError(
            f"only {found + len(shared)} of {k} disjoint (X, Y)-paths exist in {view!r}",
            found=found + len(shared),
            cut=cut,
        )
    return DisjointPathSet(paths=paths + flow.paths(), kind=PathKind.SET_TO_SET, context=view)


def fan(view: CopyView, v: Permutation, X: Iterable) -> DisjointPathSet:
    """|X| paths from v, disjoint apart from v, ending at distinct members of X."""
    X = list(dict.fromkeys(X))
    if v in set(X):
        raise PermutationError(f"fan source {format_label(v)} lies in its target set")
    _require_members(view, [v], "source")
    _require_members(view, X, "target")
    if not X:
        return DisjointPathSet(paths=[], kind=PathKind.FAN, context=view)
    flow = _UnitFlow(view, {v: None}, {x: 1 for x in X})
    found = flow.run(len(X))
    if found < len(X):
        raise InfeasibleError(f"fan from {format_label(v)} reaches {found} of {len(X)} targets", found, flow.cut())
    by_end = {p[-1]: p for p in flow.paths()}
    return DisjointPathSet(paths=[by_end[x] for x in X], kind=PathKind.FAN, context=view)


def pair_paths(view: CopyView, u: Permutation, v: Permutation, k: Optional[int] = None) -> DisjointPathSet:
    """Internally disjoint (u, v)-paths: exactly k of them, or as many as exist."""
    if u == v:
        raise PermutationError("pair paths need two different vertices")
    _require_members(view, [u, v], "endpoint")
    flow = _UnitFlow(view, {u: None}, {v: None})
    found = flow.run(k)
    if k is not None and found < k:
        raise InfeasibleError(
            f"only {found} of {k} internally disjoint paths between {format_label(u)} and {format_label(v)}",
            found,
            flow.cut(),
        )
    return DisjointPathSet(paths=flow.paths(), kind=PathKind.PAIR, context=view)


def hub_paths(view: CopyView, hub: Permutation, demands: dict) -> dict:
    """Paths from ``hub`` to each key of ``demands``, that many per key, all internally disjoint."""
    _require_members(view, [hub, *demands], "endpoint")
    wanted = sum(demands.values())
    flow = _UnitFlow(view, {hub: None}, dict(demands))
    found = flow.run(wanted)
    if found < wanted:
        raise InfeasibleError(f"hub {format_label(hub)} reaches {found} of {wanted} demanded paths", found, flow.cut())
    grouped = {t: [] for t in demands}
    for path in flow.paths():
        grouped[path[-1]].append(path)
    return grouped


def local_connectivity(view: CopyView, u: Permutation, v: Permutation, limit: Optional[int] = None) -> int:
    if u == v:
        raise PermutationError("local connectivity needs two different vertices")
    _require_members(view, [u, v], "endpoint")
    return _UnitFlow(view, {u: None}, {v: None}).run(limit)


def is_connected(view: CopyView) -> bool:
    vertices = iter(view.vertices())
    start = next(vertices, None)
    if start is None:
        return True
    seen = {start}
    queue = deque([start])
    while queue:
        for w in view.neighbors(queue.popleft()):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(view)


def kappa(view: CopyView) -> int:
    """Exact vertex connectivity of the view (0 when disconnected)."""
    vertices = list(view.vertices())
    if len(vertices) < 2:
        raise PermutationError("connectivity needs at least two vertices")
    if not is_connected(view):
        logger.warning("View %r is disconnected", view)
        return 0
    degrees = {v: view.degree(v) for v in vertices}
    pivot = min(vertices, key=lambda v: degrees[v])
    best = degrees[pivot]
    if all(d == len(vertices) - 1 for d in degrees.values()):
        return len(vertices) - 1
    around = view.neighbors(pivot)
    ring = set(around)
    for w in vertices:
        if w != pivot and w not in ring:
            best = min(best, local_connectivity(view, pivot, w, best))
    for x, y in combinations(around, 2):
        if not view.adjacent(x, y):
            best = min(best, local_connectivity(view, x, y, best))
    return best


def check_path_set(view: CopyView, paths: DisjointPathSet) -> Optional[str]:
    """Independent check of a path family; returns the first violation or None."""
    for path in paths.paths:
        if len(set(path)) != len(path):
            return f"path {_show(path)} repeats a vertex"
        for x, y in zip(path, path[1:]):
            if not view.adjacent(x, y):
                return f"non-adjacent consecutive vertices {format_label(x)} {format_label(y)}"
        for v in path:
            if v not in view:
                return f"vertex {format_label(v)} outside the view"
    if paths.kind == PathKind.SET_TO_SET:
        seen: set = set()
        for path in paths.paths:
            if seen & set(path):
                return "set-to-set paths intersect"
            seen |= set(path)
    else:
        origins = {p[0] for p in paths.paths}
        if len(origins) > 1:
            return "paths do not share a common source"
        seen = set()
        for path in paths.paths:
            rest = set(path[1:]) if paths.kind == PathKind.FAN else set(path[1:-1])
            if seen & rest:
                return "paths meet outside their shared endpoints"
            seen |= rest
    return None


def verify_separator(view: CopyView, X: Iterable, Y: Iterable, cut: Iterable) -> bool:
    """True when no X-vertex reaches a Y-vertex once ``cut`` is deleted."""
    cut = set(cut)
    targets = set(Y) - cut
    seen = {x for x in X if x not in cut}
    queue = deque(seen)
    if seen & targets:
        return False
    while queue:
        for w in view.neighbors(queue.popleft()):
            if w in cut or w in seen:
                continue
            if w in targets:
                return False
            seen.add(w)
            queue.append(w)
    return True


def _show(path) -> str:
    return "-".join(format_label(v) for v in path)
