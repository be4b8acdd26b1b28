"""Webs for terminals lying in three different copies of the frame.

Every (x, y)-path is one of four shapes:

* a direct edge when x and y are adjacent;
* x, x', then y's in-copy fan back to y, when x's outgoing neighbour x'
  lands in y's copy;
* through the outside region (copies holding no terminal), entered either
  by a terminal's own outgoing neighbour or by a port vertex g of its copy
  whose outgoing neighbour lies outside;
* through a border edge v–w with v in x's copy and w in y's copy.

Each terminal finishes its paths with one fan inside its own copy, so the
plan is feasible exactly when every fan fits the copy's connectivity.
"""

import logging
from typing import Optional

from bsnet.builders.base import BaseWebBuilder, check_fan, copy_groups, join, reverse
from bsnet.errors import ConstructionError, InfeasibleError
from bsnet.graph.cayley import CopyView
from bsnet.graph.menger import disjoint_set_paths, fan
from bsnet.graph.permutation import Permutation, format_label
from bsnet.models import BorderSets, Path, PairwiseWeb, TerminalTriple, target_counts

logger = logging.getLogger(__name__)

BORDER_PAIRS = ("ab", "ac", "bc")


def border_candidates(frame: CopyView, s: Permutation, t: Permutation) -> list[Permutation]:
    """H for the ordered pair (s, t): v in s's copy, v ≠ s, v⁺ in t's copy, t ∉ {v⁺, v⁻}."""
    home_t = frame.copy_of(t)
    result = []
    for v in frame.restrict(copies=[frame.copy_of(s)]).vertices():
        if v == s or v[0] != home_t:
            continue
        if t in frame.outgoing(v):
            continue
        result.append(v)
    return result


def select_border_sets(
    frame: CopyView,
    triple: TerminalTriple,
    sizes: dict[str, int],
    reserved: Optional[set] = None,
) -> BorderSets:
    """Pick M_i ⊆ H_i of the requested sizes, smallest by rank, avoiding ``reserved``.

    ``sizes`` is keyed by pair name ("ab", "ac", "bc"); the first role of the
    name owns H. When H runs short the pool continues with v⁻-type border edges.
    Chosen vertices and their images are added to ``reserved``.
    """
    reserved = reserved if reserved is not None else set(triple.vertices)
    borders = BorderSets()
    for name in BORDER_PAIRS:
        s, t = triple.pair_ends(name)
        H = border_candidates(frame, s, t)
        borders.H[name] = H
        borders.M[name], borders.M_out[name] = [], []
        need = sizes.get(name, 0)
        if need == 0:
            continue
        pool = [(v, frame.out_plus(v)) for v in H]
        if len(pool) < need + len(reserved & set(H)):
            pool += _minus_pool(frame, s, t)
        for v, w in pool:
            if len(borders.M[name]) == need:
                break
            if v in reserved or w in reserved:
                continue
            borders.M[name].append(v)
            borders.M_out[name].append(w)
            reserved.update((v, w))
        if len(borders.M[name]) < need:
            raise ConstructionError(
                f"border set {name} holds {len(borders.M[name])} usable members, {need} needed"
            )
    return borders


def _minus_pool(frame: CopyView, s: Permutation, t: Permutation) -> list[tuple[Permutation, Permutation]]:
    home_t = frame.copy_of(t)
    pool = []
    for v in frame.restrict(copies=[frame.copy_of(s)]).vertices():
        if v == s or v[frame.dim - 2] != home_t:
            continue
        w = frame.out_minus(v)
        if w != t:
            pool.append((v, w))
    return pool


class _Exit:
    """Where a path leaves its terminal's copy towards the outside region."""

    __slots__ = ("terminal", "vertex", "port")

    def __init__(self, terminal: Permutation, vertex: Permutation, port: Optional[Permutation] = None):
        self.terminal = terminal
        self.vertex = vertex
        self.port = port


class ThreeCopyPlan:
    def __init__(self, frame: CopyView, triple: TerminalTriple):
        self.frame = frame
        self.triple = triple
        self.m = frame.dim
        self.odd = self.m % 2 == 1
        self.T = list(triple.vertices)
        self.home = {t: frame.copy_of(t) for t in self.T}
        self.owner = {frame.copy_of(t): t for t in self.T}
        counts = dict(zip(("ab", "bc", "ac"), target_counts(self.m)))
        self.demand = counts
        self.reserved: set = set(self.T)
        for t in self.T:
            self.reserved.update(frame.outgoing(t))
        self.used_out: set = set()
        self.ports: dict = {t: [] for t in self.T}
        self.jobs: list = []
        self.spares: list[Permutation] = []
        self.in_copy_spares: list[Permutation] = []
        self.borders: Optional[BorderSets] = None

    def _name(self, x, y) -> str:
        return self.triple.pair_name(x, y)

    def _outside(self, v) -> bool:
        return self.frame.copy_of(v) not in self.owner

    def case_label(self) -> str:
        if any(y in self.frame.outgoing(x) for x in self.T for y in self.T if x != y):
            return "three-copy:adjacent"
        leaving = sum(1 for t in self.T if any(self._outside(o) for o in self.frame.outgoing(t)))
        return f"three-copy:outside-exits={leaving}"

    # -- allocation ---------------------------------------------------------

    def _direct(self) -> None:
        for name in ("ab", "bc", "ac"):
            x, y = self.triple.pair_ends(name)
            if y in self.frame.outgoing(x) and self.demand[name] > 0:
                self.jobs.append(("direct", x, y))
                self.demand[name] -= 1

    def _into(self) -> None:
        a, b, c = self.T
        order = [b, a, c] if self.odd else [a, b, c]
        for t in order:
            for o in self.frame.outgoing(t):
                if o in self.triple or o in self.used_out or self._outside(o):
                    continue
                s = self.owner[self.frame.copy_of(o)]
                name = self._name(t, s)
                if self.demand[name] > 0:
                    self.jobs.append(("into", t, o, s))
                    self.ports[s].append(o)
                    self.used_out.add(o)
                    self.demand[name] -= 1

    def _spares(self) -> None:
        b = self.triple.b
        for o in self.frame.outgoing(b):
            if o not in self.triple and o not in self.used_out and self._outside(o) and len(self.spares) < 2:
                self.spares.append(o)
                self.used_out.add(o)
        inside = [w for w in self.frame.neighbors(b) if self.frame.copy_of(w) == self.home[b]]
        for w in inside:
            if len(self.spares) == 2:
                break
            if w not in self.reserved:
                self.spares.append(w)
                self.in_copy_spares.append(w)
                self.reserved.add(w)
        if len(self.spares) < 2:
            raise ConstructionError("b has fewer than two spare neighbours")

    def _port(self, s: Permutation) -> tuple[Permutation, Permutation]:
        """Smallest vertex of s's copy with an unreserved outgoing neighbour outside."""
        for g in self.frame.restrict(copies=[self.home[s]]).vertices():
            if g in self.reserved:
                continue
            for w in self.frame.outgoing(g):
                if self._outside(w) and w not in self.reserved:
                    self.reserved.update((g, w))
                    return g, w
        raise ConstructionError(f"no outside port left in the copy of {format_label(s)}")

    def _outside_exits(self) -> None:
        skip = self.triple.b if self.odd else None
        exits = []
        for t in self.T:
            if t == skip:
                continue
            for o in self.frame.outgoing(t):
                if o not in self.triple and o not in self.used_out and self._outside(o):
                    exits.append(_Exit(t, o))
        exits = self._pair_shared(exits)
        while exits:
            first = exits.pop(0)
            t = first.terminal
            partners = [e for e in exits if e.terminal != t and self.demand[self._name(t, e.terminal)] > 0]
            if partners:
                partner = max(partners, key=lambda e: self.demand[self._name(t, e.terminal)])
                exits.remove(partner)
                self._take_outside(first, partner)
                continue
            others = [s for s in self.T if s != t and self.demand[self._name(t, s)] > 0]
            if not others:
                continue
            s = max(others, key=lambda x: self.demand[self._name(t, x)])
            g, w = self._port(s)
            self.ports[s].append(g)
            self._take_outside(first, _Exit(s, w, port=g))

    def _pair_shared(self, exits: list) -> list:
        """A vertex that is an outgoing neighbour of two terminals serves one path only."""
        kept = []
        for e in exits:
            twin = next((k for k in kept if k.vertex == e.vertex), None)
            if twin is None:
                kept.append(e)
            elif self.demand[self._name(twin.terminal, e.terminal)] > 0:
                kept.remove(twin)
                self._take_outside(twin, e)
        return kept

    def _take_outside(self, x: _Exit, y: _Exit) -> None:
        self.jobs.append(("outside", x, y))
        self.used_out.update((x.vertex, y.vertex))
        self.demand[self._name(x.terminal, y.terminal)] -= 1

    def _borders(self) -> None:
        self.borders = select_border_sets(self.frame, self.triple, dict(self.demand), self.reserved)
        for name in BORDER_PAIRS:
            s, t = self.triple.pair_ends(name)
            for v, w in zip(self.borders.M[name], self.borders.M_out[name]):
                self.jobs.append(("border", s, v, t, w))
                self.ports[s].append(v)
                self.ports[t].append(w)
            self.demand[name] -= len(self.borders.M[name])

    # -- realization ----------------------------------------------------------

    def _fans(self) -> dict:
        reach = {}
        capacity = 2 * (self.m - 1) - 3
        for t in self.T:
            removed = self.in_copy_spares if t == self.triple.b else []
            view = self.frame.copy_view(self.home[t]).without(removed)
            targets = self.ports[t]
            check_fan(view, len(targets), capacity - len(removed), f"fan from {format_label(t)}")
            paths = fan(view, t, targets)
            reach[t] = {p[-1]: p for p in paths.paths}
        return reach

    def _outside_paths(self) -> dict:
        region = self.frame.restrict(copies=[s for s in self.frame.symbols if s not in self.owner])
        gates = {e.vertex for job in self.jobs if job[0] == "outside" for e in job[1:]}
        blocked = set(self.spares)
        found = {}
        for index, job in enumerate(self.jobs):
            if job[0] != "outside":
                continue
            x, y = job[1].vertex, job[2].vertex
            if x == y:
                found[index] = (x,)
                continue
            view = region.without((gates - {x, y}) | blocked)
            path = disjoint_set_paths(view, [x], [y], 1).paths[0]
            blocked.update(path)
            found[index] = path
        return found

    def realize(self) -> PairwiseWeb:
        self._direct()
        self._into()
        if self.odd:
            self._spares()
        self._outside_exits()
        self._borders()
        if any(self.demand.values()):
            raise ConstructionError(f"unmet demand {self.demand}")
        reach = self._fans()
        outside = self._outside_paths()
        paths: list[Path] = []
        for index, job in enumerate(self.jobs):
            kind = job[0]
            if kind == "direct":
                paths.append((job[1], job[2]))
            elif kind == "into":
                _, t, o, s = job
                paths.append((t,) + reverse(reach[s][o]))
            elif kind == "border":
                _, s, v, t, w = job
                paths.append(join(reach[s][v], reverse(reach[t][w])))
            else:
                x, y = job[1], job[2]
                head = reach[x.terminal][x.port] if x.port is not None else (x.terminal,)
                tail = reach[y.terminal][y.port] if y.port is not None else (y.terminal,)
                paths.append(head + outside[index] + reverse(tail))
        return PairwiseWeb.from_paths(self.m, self.triple, paths, self.spares, [self.case_label()])


class ThreeCopiesBuilder(BaseWebBuilder):
    name = "three-copy construction"

    def supports(self, frame: CopyView, triple: TerminalTriple) -> bool:
        return frame.dim >= 5 and len(copy_groups(frame, triple)) == 3

    def build(self, frame: CopyView, triple: TerminalTriple) -> PairwiseWeb:
        try:
            return ThreeCopyPlan(frame, triple).realize()
        except InfeasibleError as e:
            raise ConstructionError(f"{self.name}: {e}") from e
