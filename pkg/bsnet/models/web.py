from typing import Iterable

from pydantic import BaseModel, ConfigDict, Field

from bsnet.graph.permutation import Permutation

Path = tuple[Permutation, ...]

PAIR_NAMES = ("ab", "bc", "ac")


def target_counts(n: int) -> tuple[int, int, int]:
    """(|ab|, |bc|, |ac|) a web of dimension n must carry."""
    if n % 2:
        k = (n - 1) // 2
        return 2 * k - 2, 2 * k - 2, 2 * k
    k = (n - 2) // 2
    return 2 * k, 2 * k, 2 * k


class TerminalTriple(BaseModel):
    """The terminal set T = {a, b, c} with fixed roles."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    a: Permutation
    b: Permutation
    c: Permutation
    note: str = Field(default="", description="How the roles were assigned")

    @property
    def vertices(self) -> tuple[Permutation, Permutation, Permutation]:
        return self.a, self.b, self.c

    def roles(self) -> dict[str, Permutation]:
        return {"a": self.a, "b": self.b, "c": self.c}

    def pair_ends(self, name: str) -> tuple[Permutation, Permutation]:
        roles = self.roles()
        return roles[name[0]], roles[name[1]]

    def pair_name(self, x: Permutation, y: Permutation) -> str:
        for name in PAIR_NAMES:
            if {x, y} == set(self.pair_ends(name)):
                return name
        raise KeyError(f"{x} and {y} are not two terminals of {self}")

    def __contains__(self, v) -> bool:
        return v == self.a or v == self.b or v == self.c


class PairwiseWeb(BaseModel):
    """Three families of internally disjoint pairwise paths plus spare neighbours of b."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    n: int
    triple: TerminalTriple
    ab: list[Path] = Field(default_factory=list)
    bc: list[Path] = Field(default_factory=list)
    ac: list[Path] = Field(default_factory=list)
    spares: list[Permutation] = Field(default_factory=list)
    trace: list[str] = Field(default_factory=list, description="Construction cases, outermost first")

    def counts(self) -> tuple[int, int, int]:
        return len(self.ab), len(self.bc), len(self.ac)

    def family(self, name: str) -> list[Path]:
        return getattr(self, name)

    def all_paths(self) -> list[Path]:
        return [*self.ab, *self.bc, *self.ac]

    @classmethod
    def from_paths(
        cls,
        n: int,
        triple: TerminalTriple,
        paths: Iterable[Path],
        spares: Iterable[Permutation] = (),
        trace: Iterable[str] = (),
    ) -> "PairwiseWeb":
        """Sort loose paths into families by their end vertices, oriented a→b, b→c, a→c."""
        families: dict[str, list[Path]] = {name: [] for name in PAIR_NAMES}
        for path in paths:
            name = triple.pair_name(path[0], path[-1])
            start, _ = triple.pair_ends(name)
            families[name].append(tuple(path) if path[0] == start else tuple(reversed(path)))
        return cls(n=n, triple=triple, spares=list(spares), trace=list(trace), **families)


class BorderSets(BaseModel):
    """Border candidates H_i and the chosen subsets M_i with their outgoing images."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    H: dict[str, list[Permutation]] = Field(default_factory=dict)
    M: dict[str, list[Permutation]] = Field(default_factory=dict)
    M_out: dict[str, list[Permutation]] = Field(default_factory=dict)
