from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Iterable

from bsnet.errors import ConstructionError, TerminalError
from bsnet.graph.cayley import CayleyGraph, CopyView
from bsnet.graph.permutation import Permutation, format_label, rank
from bsnet.models import Path, PairwiseWeb, TerminalTriple

if TYPE_CHECKING:
    from bsnet.services.web_service import WebService


def check_fan(view: CopyView, targets: int, capacity: int, owner: str = "fan") -> None:
    """Targets of a fan or set-to-set call may not exceed the connectivity the case relies on."""
    if targets > capacity:
        raise ConstructionError(f"{owner}: {targets} targets exceed connectivity {capacity} in {view!r}")


def frame_of(g) -> CopyView:
    return g.view if isinstance(g, CayleyGraph) else g


def assign_roles(g, raw: Iterable[Permutation]) -> TerminalTriple:
    """Fix roles a, b, c for three distinct vertices.

    When exactly two of them share a copy the third becomes b; otherwise
    the roles follow ascending rank.
    """
    frame = frame_of(g)
    vertices = list(raw)
    if len(vertices) != 3 or len(set(vertices)) != 3:
        raise TerminalError(f"need three distinct vertices, got {[format_label(v) for v in vertices]}")
    for v in vertices:
        if v not in frame:
            raise TerminalError(f"vertex {format_label(v)} is not in {frame!r}")
    ordered = sorted(vertices, key=rank)
    copies = [frame.copy_of(v) for v in ordered]
    if len(set(copies)) == 2:
        lone = next(v for v, c in zip(ordered, copies) if copies.count(c) == 1)
        a, c = [v for v in ordered if v != lone]
        return TerminalTriple(a=a, b=lone, c=c, note="lone vertex of the two-copy split is b")
    return TerminalTriple(a=ordered[0], b=ordered[1], c=ordered[2], note="ascending rank")


def copy_groups(frame: CopyView, triple: TerminalTriple) -> dict[int, list[Permutation]]:
    groups: dict[int, list[Permutation]] = {}
    for v in triple.vertices:
        groups.setdefault(frame.copy_of(v), []).append(v)
    return groups


def reverse(path: Path) -> Path:
    return tuple(reversed(path))


def join(*segments: Path) -> Path:
    """Concatenate segments that share their boundary vertices."""
    result: list[Permutation] = list(segments[0])
    for segment in segments[1:]:
        if result[-1] == segment[0]:
            result.extend(segment[1:])
        else:
            result.extend(segment)
    return tuple(result)


class BaseWebBuilder(ABC):
    """One construction strategy for the pairwise web of a frame."""

    name: str = "Base Builder"

    def __init__(self, service: "WebService"):
        self.service = service

    @abstractmethod
    def supports(self, frame: CopyView, triple: TerminalTriple) -> bool:
        """Whether the terminal configuration is one this builder handles."""

    @abstractmethod
    def build(self, frame: CopyView, triple: TerminalTriple) -> PairwiseWeb:
        """Build the web, raising ConstructionError when a guard fails."""

    def guard(self, condition: bool, message: str) -> None:
        if not condition:
            raise ConstructionError(f"{self.name}: {message}")

    def fan_budget(self, view: CopyView, targets: int, capacity: int) -> None:
        check_fan(view, targets, capacity, self.name)
