from .verification import pi3_formula, verify_web, verify_witness
from .web_service import WebService
from .tpath_service import TPathService, assemble, random_triples, upper_bound
from .audit_service import AuditService, structural_audit
from .oracle_service import OracleService, brute_force_pi3

__all__ = [
    "pi3_formula",
    "verify_web",
    "verify_witness",
    "WebService",
    "TPathService",
    "assemble",
    "random_triples",
    "upper_bound",
    "AuditService",
    "structural_audit",
    "OracleService",
    "brute_force_pi3",
]
