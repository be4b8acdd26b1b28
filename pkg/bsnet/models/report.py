from typing import Optional

from pydantic import BaseModel, Field


class AuditClause(BaseModel):
    """One machine-checked structural property."""

    name: str
    description: str
    passed: bool
    detail: str = ""


class AuditReport(BaseModel):
    n: int
    clauses: list[AuditClause] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.clauses)


class OracleResult(BaseModel):
    n: int
    terminals: list[str]
    value: int = Field(description="Largest family of internally disjoint T-paths found")
    exact: bool
    upper_bound: int = Field(description="Terminal-incidence bound used for pruning")
    candidates: int = Field(description="T-paths enumerated")
    nodes: int = Field(description="Branch-and-bound nodes expanded")
    max_length: Optional[int] = Field(default=None, description="Length cap on enumerated T-paths, None when complete")


class BenchRow(BaseModel):
    n: int
    vertices: int
    t_paths: int
    build_seconds: float
    assemble_seconds: float
    verify_seconds: float
    verified: bool
