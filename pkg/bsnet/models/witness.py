from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from bsnet.errors import PermutationError, WitnessFormatError
from bsnet.graph.permutation import format_label, parse
from bsnet.models.web import Path, PairwiseWeb, TerminalTriple


class TPathWitness(BaseModel):
    """A family of internally disjoint T-paths and how each was paired."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    n: int
    terminals: TerminalTriple
    t_paths: list[Path] = Field(default_factory=list)
    provenance: list[str] = Field(default_factory=list, description="Per path: the two web paths joined, e.g. 'ab[0]+bc[0]'")
    web: Optional[PairwiseWeb] = None


class AuditMode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    SAMPLED = "sampled"


class BoundReport(BaseModel):
    n: int
    regularity: int
    cmax: int = Field(description="Largest common-neighbour count over the audited triples")
    upper_bound: int
    mode: AuditMode
    triples_checked: int


class VerificationReport(BaseModel):
    passed: bool
    failure: Optional[str] = None
    checked: list[str] = Field(default_factory=list)

    @classmethod
    def ok(cls, checked: list[str]) -> "VerificationReport":
        return cls(passed=True, checked=checked)

    @classmethod
    def fail(cls, failure: str, checked: list[str]) -> "VerificationReport":
        return cls(passed=False, failure=failure, checked=checked)


class WebDocument(BaseModel):
    ab: list[list[str]]
    bc: list[list[str]]
    ac: list[list[str]]
    spares: list[str]


class WitnessDocument(BaseModel):
    """The on-disk witness format; field names are part of the file contract."""

    n: int
    terminals: list[str] = Field(min_length=3, max_length=3)
    roles: dict[str, str]
    web: WebDocument
    t_paths: list[list[str]]
    formula: int
    verified: bool

    @classmethod
    def from_witness(cls, witness: TPathWitness, formula: int, verified: bool, raw: Optional[list] = None) -> "WitnessDocument":
        triple = witness.terminals
        web = witness.web
        return cls(
            n=witness.n,
            terminals=[format_label(v) for v in (raw or triple.vertices)],
            roles={role: format_label(v) for role, v in triple.roles().items()},
            web=WebDocument(
                ab=_labels(web.ab) if web else [],
                bc=_labels(web.bc) if web else [],
                ac=_labels(web.ac) if web else [],
                spares=[format_label(v) for v in web.spares] if web else [],
            ),
            t_paths=_labels(witness.t_paths),
            formula=formula,
            verified=verified,
        )

    def to_witness(self) -> TPathWitness:
        try:
            roles = {role: parse(self.roles[role]) for role in ("a", "b", "c")}
            triple = TerminalTriple(**roles, note="read from witness file")
            web = PairwiseWeb(
                n=self.n,
                triple=triple,
                ab=_paths(self.web.ab),
                bc=_paths(self.web.bc),
                ac=_paths(self.web.ac),
                spares=[parse(v) for v in self.web.spares],
            )
            t_paths = _paths(self.t_paths)
            listed = {parse(v) for v in self.terminals}
        except (KeyError, PermutationError) as e:
            raise WitnessFormatError(f"malformed witness: {e}") from e
        if listed != set(triple.vertices):
            raise WitnessFormatError(f"terminals {self.terminals} do not match roles {self.roles}")
        return TPathWitness(n=self.n, terminals=triple, t_paths=t_paths, web=web)


def _labels(paths: list[Path]) -> list[list[str]]:
    return [[format_label(v) for v in path] for path in paths]


def _paths(rows: list[list[str]]) -> list[Path]:
    return [tuple(parse(v) for v in row) for row in rows]


__all__ = [
    "TPathWitness",
    "AuditMode",
    "BoundReport",
    "VerificationReport",
    "WebDocument",
    "WitnessDocument",
]
