"""Pairing webs into T-paths, the common-neighbour upper bound, and the end-to-end pipeline."""

import logging
import random
from itertools import combinations
from math import comb, factorial
from typing import Iterable, Optional, Union

from bsnet.builders import assign_roles
from bsnet.config import Settings
from bsnet.errors import ConstructionError, DimensionError, InfeasibleError
from bsnet.graph.cayley import CayleyGraph, CopyView
from bsnet.graph.menger import hub_paths
from bsnet.graph.permutation import Permutation, format_label, unrank
from bsnet.models import AuditMode, BoundReport, PairwiseWeb, Path, TerminalTriple, TPathWitness
from bsnet.services.verification import verify_web, verify_witness
from bsnet.services.web_service import WebService

logger = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 4


def pairing_counts(web: PairwiseWeb) -> tuple[int, int, int]:
    """(x, y, z): pairs joined through b, through a and through c."""
    ab, bc, ac = web.counts()
    doubled = (ab + bc - ac, ab + ac - bc, bc + ac - ab)
    if any(v < 0 or v % 2 for v in doubled):
        raise ConstructionError(f"web counts {web.counts()} admit no pairing")
    x, y, z = (v // 2 for v in doubled)
    return x, y, z


def _direct_t_path(g: Union[CayleyGraph, CopyView], triple: TerminalTriple) -> tuple[Path, str]:
    view = g.view if isinstance(g, CayleyGraph) else g
    for middle in (triple.b, triple.a, triple.c):
        left, right = [t for t in triple.vertices if t != middle]
        try:
            found = hub_paths(view, middle, {left: 1, right: 1})
        except InfeasibleError as e:
            logger.debug("No T-path through %s: %s", format_label(middle), e)
            continue
        return tuple(reversed(found[left][0])) + found[right][0][1:], f"direct via {format_label(middle)}"
    raise ConstructionError("no T-path exists for the terminal triple")


def assemble(web: PairwiseWeb, g: Optional[CayleyGraph] = None) -> TPathWitness:
    """Join pairwise paths at a shared terminal into internally disjoint T-paths."""
    triple = web.triple
    if web.n == 3:
        graph = g if g is not None else CayleyGraph(3)
        path, origin = _direct_t_path(graph, triple)
        return TPathWitness(n=3, terminals=triple, t_paths=[path], provenance=[origin], web=web)

    x, y, z = pairing_counts(web)
    t_paths: list[Path] = []
    provenance: list[str] = []
    for i in range(x):
        t_paths.append(web.ab[i] + web.bc[i][1:])
        provenance.append(f"ab[{i}]+bc[{i}]")
    for j in range(y):
        i = x + j
        t_paths.append(tuple(reversed(web.ab[i])) + web.ac[j][1:])
        provenance.append(f"ab[{i}]+ac[{j}]")
    for t in range(z):
        i, j = x + t, y + t
        t_paths.append(web.bc[i] + tuple(reversed(web.ac[j]))[1:])
        provenance.append(f"bc[{i}]+ac[{j}]")
    return TPathWitness(n=web.n, terminals=triple, t_paths=t_paths, provenance=provenance, web=web)


def random_triples(n: int, count: int, seed: int) -> list[tuple[Permutation, Permutation, Permutation]]:
    """``count`` distinct triples drawn uniformly in rank space, without replacement."""
    total = factorial(n)
    count = min(count, comb(total, 3))
    rng = random.Random(seed)
    seen: set = set()
    result = []
    while len(result) < count:
        key = tuple(sorted(rng.sample(range(total), 3)))
        if key in seen:
            continue
        seen.add(key)
        result.append(tuple(unrank(n, i) for i in key))
    return result


def embedded_triple(g: CayleyGraph) -> tuple[Permutation, Permutation, Permutation]:
    """One side of the BS_3 fixing positions 4..n; its three vertices share three neighbours."""
    inner = CopyView(g, 3, tuple(range(4, g.n + 1)))
    return tuple(v for v in inner.vertices() if v.parity == 0)


def upper_bound(
    g: CayleyGraph,
    mode: AuditMode = AuditMode.SAMPLED,
    settings: Optional[Settings] = None,
) -> BoundReport:
    """⌊(3r − cmax)/4⌋ with cmax the largest common-neighbour count over the audited triples."""
    settings = settings or Settings()
    if mode == AuditMode.EXHAUSTIVE:
        if g.n > EXHAUSTIVE_LIMIT:
            raise DimensionError(f"exhaustive triple enumeration is limited to n <= {EXHAUSTIVE_LIMIT}")
        triples: Iterable = combinations(g.vertices(), 3)
    else:
        triples = [embedded_triple(g), *random_triples(g.n, settings.sample_triples, settings.seed)]

    cmax, checked = 0, 0
    for triple in triples:
        cmax = max(cmax, len(g.common_neighbors(triple)))
        checked += 1
    bound = (3 * g.regularity - cmax) // 4
    logger.info("BS_%d: cmax = %d over %d triples, bound %d", g.n, cmax, checked, bound)
    return BoundReport(
        n=g.n,
        regularity=g.regularity,
        cmax=cmax,
        upper_bound=bound,
        mode=mode,
        triples_checked=checked,
    )


class TPathService:
    """Web construction, pairing and verification for one terminal set at a time."""

    def __init__(self, settings: Optional[Settings] = None, webs: Optional[WebService] = None):
        self.settings = settings or Settings()
        self.webs = webs or WebService(self.settings)

    def witness(self, g: CayleyGraph, raw: Iterable[Permutation]) -> tuple[TPathWitness, bool]:
        """Build, assemble and verify; the flag is the verifier's verdict."""
        triple = assign_roles(g, raw)
        web = self.webs.build_web(g, triple)
        web_report = verify_web(g, triple, web)
        if not web_report.passed:
            logger.error("Web for %s failed verification: %s", triple.vertices, web_report.failure)
            return TPathWitness(n=g.n, terminals=triple, web=web), False
        witness = assemble(web, g)
        report = verify_witness(g, triple, witness)
        if not report.passed:
            logger.error("Witness for %s failed verification: %s", triple.vertices, report.failure)
        return witness, report.passed
