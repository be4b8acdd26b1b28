from .web import PAIR_NAMES, BorderSets, PairwiseWeb, Path, TerminalTriple, target_counts
from .witness import AuditMode, BoundReport, TPathWitness, VerificationReport, WebDocument, WitnessDocument
from .report import AuditClause, AuditReport, BenchRow, OracleResult

__all__ = [
    "PAIR_NAMES",
    "BorderSets",
    "PairwiseWeb",
    "Path",
    "TerminalTriple",
    "target_counts",
    "AuditMode",
    "BoundReport",
    "TPathWitness",
    "VerificationReport",
    "WebDocument",
    "WitnessDocument",
    "AuditClause",
    "AuditReport",
    "BenchRow",
    "OracleResult",
]
