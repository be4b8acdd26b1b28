"""Machine checks of the structural properties the web construction relies on."""

import logging
from collections.abc import Callable
from itertools import combinations
from math import factorial
from typing import Optional

from bsnet.config import Settings
from bsnet.errors import DimensionError
from bsnet.graph.cayley import CayleyGraph
from bsnet.graph.menger import kappa
from bsnet.graph.permutation import format_label, identity
from bsnet.models import AuditClause, AuditMode, AuditReport
from bsnet.services.tpath_service import upper_bound

logger = logging.getLogger(__name__)

AUDIT_LIMIT = 5


def _clause(name: str, description: str, check: Callable[[], tuple[bool, str]]) -> AuditClause:
    passed, detail = check()
    logger.info("%s: %s (%s)", name, "pass" if passed else "FAIL", detail)
    return AuditClause(name=name, description=description, passed=passed, detail=detail)


class AuditService:
    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or Settings()

    def structural_audit(self, g: CayleyGraph) -> AuditReport:
        if g.n > AUDIT_LIMIT:
            raise DimensionError(f"the structural audit is exhaustive and limited to n <= {AUDIT_LIMIT}")
        n = g.n
        clauses = [
            _clause("degree", f"every vertex has 2n-3 = {g.regularity} distinct neighbours", lambda: self._degree(g)),
            _clause("bipartite", "every edge joins permutations of opposite parity", lambda: self._bipartite(g)),
        ]
        if n >= 4:
            clauses.append(
                _clause(
                    "cross-edges",
                    f"every pair of copies is joined by 2(n-2)! = {2 * factorial(n - 2)} edges",
                    lambda: self._cross_edges(g),
                )
            )
        clauses += [
            _clause(
                "outgoing-disjoint",
                "distinct vertices of one copy have disjoint outgoing neighbours",
                lambda: self._outgoing_disjoint(g),
            ),
            _clause(
                "outgoing-copies",
                "v+ and v- lie in two different copies, both other than v's",
                lambda: self._outgoing_copies(g),
            ),
            _clause("pair-common-neighbours", "two vertices share at most 3 neighbours", lambda: self._pairs(g)),
            _clause("connectivity", f"the graph is {g.regularity}-connected", lambda: self._kappa(g)),
        ]
        if n <= 4:
            clauses.append(
                _clause("triple-common-neighbours", "the largest common neighbourhood of three vertices has 3 members", lambda: self._triples(g))
            )
        if n >= 4:
            clauses.append(
                _clause("copy-unions", "connectivity of unions of copies", lambda: self._copy_unions(g))
            )
        return AuditReport(n=n, clauses=clauses)

    def _degree(self, g: CayleyGraph) -> tuple[bool, str]:
        for v in g.vertices():
            if len(set(g.neighbors(v))) != g.regularity:
                return False, f"{format_label(v)} has {len(set(g.neighbors(v)))} neighbours"
        return True, f"{g.vertex_count} vertices checked"

    def _bipartite(self, g: CayleyGraph) -> tuple[bool, str]:
        count = 0
        for u, w in g.edges():
            count += 1
            if u.parity == w.parity:
                return False, f"edge {format_label(u)}-{format_label(w)} joins equal parities"
        return True, f"{count} edges checked"

    def _cross_edges(self, g: CayleyGraph) -> tuple[bool, str]:
        expected = 2 * factorial(g.n - 2)
        for i, j in combinations(range(1, g.n + 1), 2):
            found = len(g.cross_edges(i, j))
            if found != expected:
                return False, f"copies {i}, {j} share {found} edges"
        return True, f"all {g.n * (g.n - 1) // 2} copy pairs have {expected}"

    def _outgoing_disjoint(self, g: CayleyGraph) -> tuple[bool, str]:
        for copy in range(1, g.n + 1):
            owner = {}
            for v in g.view.restrict(copies=[copy]).vertices():
                for w in (g.out_plus(v), g.out_minus(v)):
                    if w in owner and owner[w] != v:
                        return False, f"{format_label(v)} and {format_label(owner[w])} share {format_label(w)}"
                    owner[w] = v
        return True, f"{g.n} copies checked"

    def _outgoing_copies(self, g: CayleyGraph) -> tuple[bool, str]:
        for v in g.vertices():
            home, plus, minus = g.copy_of(v), g.copy_of(g.out_plus(v)), g.copy_of(g.out_minus(v))
            if len({home, plus, minus}) != 3:
                return False, f"{format_label(v)}: copies {home}, {plus}, {minus}"
        return True, f"{g.vertex_count} vertices checked"

    def _pairs(self, g: CayleyGraph) -> tuple[bool, str]:
        if g.n <= 4:
            pairs = combinations(g.vertices(), 2)
            scope = "all pairs"
        else:
            # vertex-transitive: pairs through the identity cover every pair up to automorphism
            e = identity(g.n)
            pairs = ((e, v) for v in g.vertices() if v != e)
            scope = "pairs through the identity"
        largest = max(len(g.common_neighbors(pair)) for pair in pairs)
        return largest <= 3, f"largest {largest} over {scope}"

    def _kappa(self, g: CayleyGraph) -> tuple[bool, str]:
        value = kappa(g.view)
        return value == g.regularity, f"kappa = {value}"

    def _triples(self, g: CayleyGraph) -> tuple[bool, str]:
        report = upper_bound(g, AuditMode.EXHAUSTIVE, self.settings)
        return report.cmax == 3, f"cmax = {report.cmax} over {report.triples_checked} triples"

    def _copy_unions(self, g: CayleyGraph) -> tuple[bool, str]:
        """k copies: 2n-5 for 1 <= k <= n-2, 2n-4 for k = n-1 (all subsets at n = 4, single copies above)."""
        sizes = range(1, g.n) if g.n == 4 else [1]
        checked = 0
        for k in sizes:
            expected = 2 * g.n - 5 if k <= g.n - 2 else 2 * g.n - 4
            for copies in combinations(range(1, g.n + 1), k):
                value = kappa(g.view.restrict(copies=copies))
                checked += 1
                if value != expected:
                    return False, f"copies {list(copies)}: kappa {value}, expected {expected}"
        return True, f"{checked} copy unions checked"


def structural_audit(g: CayleyGraph, settings: Optional[Settings] = None) -> AuditReport:
    return AuditService(settings).structural_audit(g)
