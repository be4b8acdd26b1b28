"""Independent checkers for webs and witnesses.

Nothing here reuses builder or assembler bookkeeping: adjacency is asked of
the graph and everything else is plain set arithmetic on the paths.
"""

from typing import Optional

from bsnet.graph.cayley import CayleyGraph, CopyView
from bsnet.graph.permutation import format_label
from bsnet.models import PAIR_NAMES, PairwiseWeb, TerminalTriple, TPathWitness, VerificationReport, target_counts


def pi3_formula(n: int) -> int:
    if n < 3:
        raise ValueError(f"the formula holds for n >= 3, got {n}")
    return 3 * n // 2 - 3


def _show(path) -> str:
    return "-".join(format_label(v) for v in path)


def _edges(path) -> set:
    return {frozenset(e) for e in zip(path, path[1:])}


def verify_web(g, triple: TerminalTriple, web: PairwiseWeb, view: Optional[CopyView] = None) -> VerificationReport:
    """Check every PairwiseWeb invariant; ``view`` defaults to the whole graph."""
    view = view if view is not None else (g.view if isinstance(g, CayleyGraph) else g)
    checked: list[str] = []
    T = set(triple.vertices)

    if len(T) != 3 or any(v not in view for v in T):
        return VerificationReport.fail("terminals are not three distinct vertices of the graph", checked)
    if web.n != view.dim:
        return VerificationReport.fail(f"web dimension {web.n} differs from graph dimension {view.dim}", checked)
    if set(web.triple.vertices) != T or web.triple.roles() != triple.roles():
        return VerificationReport.fail("web roles differ from the terminal triple", checked)
    checked.append("terminals")

    if web.counts() != target_counts(web.n):
        return VerificationReport.fail(f"path counts {web.counts()} differ from {target_counts(web.n)}", checked)
    checked.append("counts")

    interior: set = set()
    edges: set = set()
    for name in PAIR_NAMES:
        start, end = triple.pair_ends(name)
        for path in web.family(name):
            if len(path) < 2 or path[0] != start or path[-1] != end:
                return VerificationReport.fail(f"{name} path {_show(path)} has wrong endpoints", checked)
            if len(set(path)) != len(path):
                return VerificationReport.fail(f"path {_show(path)} is not simple", checked)
            for x, y in zip(path, path[1:]):
                if not view.adjacent(x, y):
                    return VerificationReport.fail(
                        f"non-adjacent consecutive vertices {format_label(x)} {format_label(y)}", checked
                    )
            inner = set(path[1:-1])
            if inner & T:
                return VerificationReport.fail(f"path {_show(path)} passes through a terminal", checked)
            if inner & interior:
                return VerificationReport.fail(f"path {_show(path)} shares an internal vertex", checked)
            if _edges(path) & edges:
                return VerificationReport.fail(f"path {_show(path)} reuses an edge", checked)
            interior |= inner
            edges |= _edges(path)
    checked += ["endpoints", "simplicity", "adjacency", "internal disjointness", "terminal avoidance"]

    spares = list(web.spares)
    if web.n % 2 == 0:
        expected_ok = not spares
    elif web.n == 3:
        expected_ok = len(spares) <= 2
    else:
        expected_ok = len(spares) == 2
    if not expected_ok:
        return VerificationReport.fail(f"spare count {len(spares)} is wrong for n = {web.n}", checked)
    if len(set(spares)) != len(spares):
        return VerificationReport.fail("spare count: repeated spare", checked)
    for s in spares:
        if s in T:
            return VerificationReport.fail(f"spare {format_label(s)} is a terminal", checked)
        if not view.adjacent(s, triple.b):
            return VerificationReport.fail(f"spare {format_label(s)} is not a neighbour of b", checked)
        if s in interior:
            return VerificationReport.fail(f"spare appears on path: {format_label(s)}", checked)
    checked.append("spares")
    return VerificationReport.ok(checked)


def verify_witness(g: CayleyGraph, triple: TerminalTriple, witness: TPathWitness) -> VerificationReport:
    """Check a T-path family against the definition, from scratch."""
    checked: list[str] = []
    T = set(triple.vertices)
    if witness.n != g.n:
        return VerificationReport.fail(f"witness dimension {witness.n} differs from graph dimension {g.n}", checked)
    if set(witness.terminals.vertices) != T:
        return VerificationReport.fail("witness terminals differ from the triple", checked)
    for v in T:
        if len(v) != g.n:
            return VerificationReport.fail(f"terminal {format_label(v)} has the wrong dimension", checked)
    checked.append("terminals")

    expected = pi3_formula(g.n)
    if len(witness.t_paths) != expected:
        return VerificationReport.fail(f"T-path count {len(witness.t_paths)} differs from {expected}", checked)
    checked.append("count")

    for path in witness.t_paths:
        if len(set(path)) != len(path):
            return VerificationReport.fail(f"T-path {_show(path)} is not simple", checked)
        if not T <= set(path):
            return VerificationReport.fail(f"T-path {_show(path)} misses a terminal", checked)
        for x, y in zip(path, path[1:]):
            if not g.adjacent(x, y):
                return VerificationReport.fail(f"non-adjacent consecutive vertices {format_label(x)} {format_label(y)}", checked)
    checked += ["simplicity", "covers T", "adjacency"]

    for i, p in enumerate(witness.t_paths):
        for q in witness.t_paths[i + 1:]:
            if set(p) & set(q) != T:
                return VerificationReport.fail(f"vertex intersection exceeds T: {_show(p)} / {_show(q)}", checked)
            if _edges(p) & _edges(q):
                return VerificationReport.fail(f"edge intersection nonempty: {_show(p)} / {_show(q)}", checked)
    checked.append("pairwise disjointness")
    return VerificationReport.ok(checked)
