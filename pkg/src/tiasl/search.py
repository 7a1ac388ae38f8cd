"""Exhaustive TIASL search over bounded ground sets.

``find_tiasl`` enumerates candidate ground sets X in (|X|, lexicographic)
order and, for each, streams the topologies on X with exactly n+1 opens
(n = graph order) through a backtracking vertex/open bijection.  The first
hit is returned with a certificate of work done; "exhausted" means no TIASL
exists *within the given bounds*, never unconditional nonexistence.

Identical inputs and bounds always yield identical outcomes and certificates,
for any ``threads`` value: workers each exhaust one ground set and results
are consumed in the serial order.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from multiprocessing import get_context

from .constructive import label_any_pendant
from .graph import Graph, connected_graph_catalog, emit_graph6, pendant_vertices
from .intset import DomainError, GroundSet, IntSet, sumset_mask
from .labeling import SetLabeling, format_labeling, verify_tiasl
from .topology import (
    GROUND_SIZE_GUARD,
    OPEN_COUNT_GUARD,
    Topology,
    _abstract_open_masks,
    _topology_from_masks,
    discrete_topology,
    format_topology,
    translate_masks,
)

__all__ = [
    "SearchBounds",
    "Certificate",
    "SearchWitness",
    "SearchOutcome",
    "AdmissibilityVerdict",
    "SweepEntry",
    "SweepReport",
    "default_bounds",
    "bijection_match",
    "find_tiasl",
    "topological_set_indexing_number",
    "discrete_admissibility",
    "theorem_sweep",
    "format_search_outcome",
    "outcome_to_dict",
    "format_sweep_report",
    "sweep_report_to_dict",
]


@dataclass(frozen=True)
class SearchBounds:
    """Finite search window: ground sets X ⊆ {0..max_element} with
    |X| <= max_ground_size, containing 0 unless require_zero is off.
    A window with max_element = -1 or max_ground_size = 0 is empty."""

    max_element: int
    max_ground_size: int
    require_zero: bool = True

    def __post_init__(self):
        if self.max_element < -1:
            raise DomainError(f"max_element must be >= -1, got {self.max_element}")
        if self.max_ground_size < 0:
            raise DomainError(
                f"max_ground_size must be >= 0, got {self.max_ground_size}"
            )


def default_bounds(g: Graph) -> SearchBounds:
    """The window that suffices for every pendant construction on n vertices:
    elements up to 2n-3 and ground sets of size up to 2n-2 (clamped so that
    the one-vertex graph still gets the {0} window)."""
    n = g.order
    return SearchBounds(max(2 * n - 3, 0), max(2 * n - 2, 1))


@dataclass
class Certificate:
    """Work counters: every enumerated ground set, every streamed topology,
    and every vertex assignment made inside the bijection backtracker."""

    ground_sets_tried: int = 0
    topologies_tried: int = 0
    bijection_nodes: int = 0


@dataclass(frozen=True)
class SearchWitness:
    topology: Topology
    labeling: SetLabeling


@dataclass(frozen=True)
class SearchOutcome:
    status: str  # "found" | "exhausted" | "pruned-by-theorem"
    witness: SearchWitness | None
    certificate: Certificate
    bounds: SearchBounds

    @property
    def found(self) -> bool:
        return self.status == "found"


@dataclass(frozen=True)
class AdmissibilityVerdict:
    """Outcome of the discrete-topology admissibility chain; ``reason`` names
    the first necessary condition that failed."""

    admissible: bool
    reason: str | None
    labeling: SetLabeling | None

    def __bool__(self) -> bool:
        return self.admissible


def bijection_match(g: Graph, t: Topology, *, _nodes: list[int] | None = None) -> SetLabeling | None:
    """First vertex/open bijection under canonical ordering — vertices visited
    by descending degree (ties by index), opens tried in canonical order — such
    that every edge's sumset stays in the ground set, or None.  Requires
    exactly g.order non-empty opens.  Prunes by degree: a vertex of degree d
    can only take an open compatible with at least d others, and whenever more
    vertices demand degree >= d than there are opens offering it, no bijection
    exists (candidate sets are nested by threshold, so counting is exact)."""
    n = g.order
    opens = t.nonempty_opens
    if len(opens) != n:
        raise DomainError(
            f"bijection needs {n} non-empty opens, topology has {len(opens)}"
        )
    if n == 0:
        return None
    full = t.ground.members.mask
    compat = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            ok = sumset_mask(opens[i].mask, opens[j].mask) & ~full == 0
            compat[i][j] = compat[j][i] = ok
    cdeg = [sum(row) for row in compat]
    degs = g.degrees()
    cdeg_sorted = sorted(cdeg)
    for d in set(degs):
        need = sum(1 for x in degs if x >= d)
        have = n - bisect_left(cdeg_sorted, d)
        if have < need:
            return None
    adj = g.adjacency()
    order = sorted(range(n), key=lambda v: (-degs[v], v))
    assignment = [-1] * n
    used = [False] * n
    nodes = _nodes if _nodes is not None else [0]

    def backtrack(pos: int) -> bool:
        v = order[pos]
        for i in range(n):
            if used[i] or cdeg[i] < degs[v]:
                continue
            if any(
                assignment[u] != -1 and not compat[i][assignment[u]]
                for u in adj[v]
            ):
                continue
            assignment[v] = i
            used[i] = True
            nodes[0] += 1
            if pos + 1 == n or backtrack(pos + 1):
                return True
            assignment[v] = -1
            used[i] = False
        return False

    if not backtrack(0):
        return None
    return SetLabeling(g, t.ground, tuple(opens[assignment[v]] for v in range(n)))


def _ground_candidates(bounds: SearchBounds) -> list[tuple[int, ...]]:
    """Candidate ground sets as sorted element tuples, ordered by size then
    lexicographically."""
    out: list[tuple[int, ...]] = []
    top = bounds.max_element
    for size in range(1, bounds.max_ground_size + 1):
        if bounds.require_zero:
            if top < 0:
                break
            for rest in itertools.combinations(range(1, top + 1), size - 1):
                out.append((0, *rest))
        else:
            for elems in itertools.combinations(range(top + 1), size):
                out.append(elems)
    return out


def _search_one_ground(args: tuple[Graph, tuple[int, ...], int, int]):
    """Exhaust one ground set: returns (witness or None, topologies tried,
    bijection nodes)."""
    g, elems, k, min_deg = args
    s = len(elems)
    if 2**s < k:
        return None, 0, 0
    x = GroundSet(IntSet(elems))
    zero_first = elems[0] == 0
    topologies = 0
    nodes = [0]
    for abstract in _abstract_open_masks(s, k):
        topologies += 1
        # The ground-set open's only possible compatibility partner is {0},
        # so unless {0} is open no vertex of degree >= 1 can take it.  This
        # is the degree prune applied to one open, hoisted above the mask
        # translation; it is definitional, not the pendant theorem.
        x_compat = 1 if zero_first and 1 in abstract else 0
        if min_deg > x_compat:
            continue
        t = _topology_from_masks(x, translate_masks(abstract, x))
        lab = bijection_match(g, t, _nodes=nodes)
        if lab is not None:
            if not verify_tiasl(lab).is_tiasl:
                raise RuntimeError(
                    "internal error: search witness failed verification"
                )
            return SearchWitness(t, lab), topologies, nodes[0]
    return None, topologies, nodes[0]


def find_tiasl(
    g: Graph,
    bounds: SearchBounds | None = None,
    *,
    pendant_prune: bool = True,
    threads: int = 1,
) -> SearchOutcome:
    """Search the bounded window for a TIASL of ``g``.

    With ``pendant_prune`` on, a graph of minimum degree >= 2 (no pendant
    and no isolated vertex) is refused outright: any TIASL would put the
    ground set on a vertex of degree <= 1.  Disable it to make exhaustion
    checks definitional.
    """
    if bounds is None:
        bounds = default_bounds(g)
    n = g.order
    k = n + 1
    if k > OPEN_COUNT_GUARD:
        raise DomainError(
            f"search covers graphs of order <= {OPEN_COUNT_GUARD - 1}, got {n}"
        )
    if min(bounds.max_ground_size, bounds.max_element + 1) > GROUND_SIZE_GUARD:
        raise DomainError(
            f"search covers ground sets of size <= {GROUND_SIZE_GUARD}"
        )
    cert = Certificate()
    degs = g.degrees()
    if pendant_prune and n > 0 and min(degs) >= 2:
        return SearchOutcome("pruned-by-theorem", None, cert, bounds)
    min_deg = min(degs) if n else 0
    candidates = _ground_candidates(bounds)
    tasks = [(g, elems, k, min_deg) for elems in candidates]

    if threads > 1 and len(tasks) > 1:
        ctx = get_context("fork")
        with ProcessPoolExecutor(max_workers=threads, mp_context=ctx) as pool:
            for witness, topologies, nodes in pool.map(_search_one_ground, tasks):
                cert.ground_sets_tried += 1
                cert.topologies_tried += topologies
                cert.bijection_nodes += nodes
                if witness is not None:
                    return SearchOutcome("found", witness, cert, bounds)
    else:
        for task in tasks:
            witness, topologies, nodes = _search_one_ground(task)
            cert.ground_sets_tried += 1
            cert.topologies_tried += topologies
            cert.bijection_nodes += nodes
            if witness is not None:
                return SearchOutcome("found", witness, cert, bounds)
    return SearchOutcome("exhausted", None, cert, bounds)


def topological_set_indexing_number(
    g: Graph,
    bounds: SearchBounds | None = None,
    *,
    pendant_prune: bool = True,
    threads: int = 1,
) -> tuple[int | None, SearchOutcome]:
    """Minimum ground set size over the window (ground sets are tried in
    ascending size, so the first hit is minimal), with the full outcome."""
    outcome = find_tiasl(g, bounds, pendant_prune=pendant_prune, threads=threads)
    if outcome.found:
        return len(outcome.witness.topology.ground), outcome
    return None, outcome


def discrete_admissibility(g: Graph, x: GroundSet) -> AdmissibilityVerdict:
    """Can ``g`` carry the discrete topology on ``x``?  Checks the necessary
    conditions in order — the order must be 2^|x|-1 (an odd number, so even
    orders fail on parity), some vertex must have at least 2^(|x|-1) pendant
    neighbors — and then settles the question with a bijection search."""
    s = len(x)
    if g.order != 2**s - 1:
        reason = "order parity" if g.order % 2 == 0 else "order mismatch"
        return AdmissibilityVerdict(False, reason, None)
    degs = g.degrees()
    best = 0
    for v in range(g.order):
        best = max(best, sum(1 for u in g.neighbors(v) if degs[u] == 1))
    if best < 2 ** (s - 1):
        return AdmissibilityVerdict(False, "pendant deficiency", None)
    lab = bijection_match(g, discrete_topology(x))
    if lab is None:
        return AdmissibilityVerdict(False, "no bijection", None)
    return AdmissibilityVerdict(True, None, lab)


# ---------------------------------------------------------------------------
# theorem sweep


@dataclass(frozen=True)
class SweepEntry:
    graph6: str
    order: int
    size: int
    pendants: int
    disposition: str  # "constructed" | "exhausted" | "found" | "construction-failed"
    consistent: bool
    note: str = ""


@dataclass(frozen=True)
class SweepReport:
    max_n: int
    entries: tuple[SweepEntry, ...]

    @property
    def graphs_processed(self) -> int:
        return len(self.entries)

    @property
    def inconsistencies(self) -> tuple[SweepEntry, ...]:
        return tuple(e for e in self.entries if not e.consistent)


def _sweep_one(args: tuple[Graph, int | None, int | None]) -> SweepEntry:
    """Check one graph against the pendant characterization: pendant graphs
    must accept the explicit construction; pendant-free graphs must exhaust
    an unpruned search over elements up to 2n-3 (or the given overrides)."""
    g, max_element, max_ground_size = args
    g6 = emit_graph6(g)
    pendants = len(pendant_vertices(g))
    if pendants:
        lab = label_any_pendant(g)
        ok = verify_tiasl(lab).is_tiasl
        return SweepEntry(
            g6,
            g.order,
            g.size,
            pendants,
            "constructed" if ok else "construction-failed",
            ok,
            f"ground {lab.ground}" if ok else "",
        )
    n = g.order
    me = max_element if max_element is not None else 2 * n - 3
    mg = max_ground_size if max_ground_size is not None else max(2 * n - 2, 0)
    bounds = SearchBounds(max(me, -1), max(mg, 0))
    outcome = find_tiasl(g, bounds, pendant_prune=False)
    if outcome.found:
        return SweepEntry(
            g6, g.order, g.size, 0, "found", False,
            f"TIASL found despite no pendant: ground {outcome.witness.topology.ground}",
        )
    note = (
        f"ground_sets={outcome.certificate.ground_sets_tried} "
        f"topologies={outcome.certificate.topologies_tried}"
    )
    if not _ground_candidates(bounds):
        note += " (empty search window)"
    return SweepEntry(g6, g.order, g.size, 0, "exhausted", True, note)


def theorem_sweep(
    max_n: int,
    *,
    max_element: int | None = None,
    max_ground_size: int | None = None,
    threads: int = 1,
) -> SweepReport:
    """Exercise the pendant characterization over every connected graph of
    order 1..max_n (max_n <= 6): each entry records whether the graph was
    labeled by the explicit construction or exhausted by the unpruned search.
    Any other disposition is an inconsistency."""
    if not 1 <= max_n <= OPEN_COUNT_GUARD - 1:
        raise DomainError(
            f"sweep covers orders 1..{OPEN_COUNT_GUARD - 1}, got {max_n}"
        )
    graphs = list(connected_graph_catalog(max_n))
    tasks = [(g, max_element, max_ground_size) for g in graphs]
    if threads > 1 and len(tasks) > 1:
        ctx = get_context("fork")
        with ProcessPoolExecutor(max_workers=threads, mp_context=ctx) as pool:
            entries = list(pool.map(_sweep_one, tasks))
    else:
        entries = [_sweep_one(t) for t in tasks]
    return SweepReport(max_n, tuple(entries))


# ---------------------------------------------------------------------------
# text and JSON forms


def format_search_outcome(o: SearchOutcome) -> str:
    b = o.bounds
    lines = [
        f"status: {o.status}",
        f"bounds: max_element={b.max_element} max_ground_size={b.max_ground_size} "
        f"require_zero={str(b.require_zero).lower()}",
        f"certificate: ground_sets_tried={o.certificate.ground_sets_tried} "
        f"topologies_tried={o.certificate.topologies_tried} "
        f"bijection_nodes={o.certificate.bijection_nodes}",
    ]
    if o.witness is not None:
        lines.append("--- labeling ---")
        lines.append(format_labeling(o.witness.labeling).rstrip("\n"))
        lines.append("--- topology ---")
        lines.append(format_topology(o.witness.topology).rstrip("\n"))
    return "\n".join(lines) + "\n"


def outcome_to_dict(o: SearchOutcome) -> dict:
    out = {
        "status": o.status,
        "bounds": {
            "max_element": o.bounds.max_element,
            "max_ground_size": o.bounds.max_ground_size,
            "require_zero": o.bounds.require_zero,
        },
        "certificate": {
            "ground_sets_tried": o.certificate.ground_sets_tried,
            "topologies_tried": o.certificate.topologies_tried,
            "bijection_nodes": o.certificate.bijection_nodes,
        },
        "witness": None,
    }
    if o.witness is not None:
        out["witness"] = {
            "ground": str(o.witness.topology.ground),
            "labels": [str(s) for s in o.witness.labeling.vertex_labels],
            "opens": [str(s) for s in o.witness.topology.opens],
        }
    return out


def format_sweep_report(r: SweepReport) -> str:
    lines = []
    for e in r.entries:
        line = (
            f"{e.graph6}  order={e.order} size={e.size} pendants={e.pendants} "
            f"{e.disposition}"
        )
        if e.note:
            line += f"  [{e.note}]"
        if not e.consistent:
            line += "  INCONSISTENT"
        lines.append(line)
    bad = len(r.inconsistencies)
    lines.append(
        f"swept {r.graphs_processed} connected graphs up to order {r.max_n}: "
        + ("all consistent" if bad == 0 else f"{bad} INCONSISTENT")
    )
    return "\n".join(lines) + "\n"


def sweep_report_to_dict(r: SweepReport) -> dict:
    return {
        "max_n": r.max_n,
        "graphs_processed": r.graphs_processed,
        "inconsistent": len(r.inconsistencies),
        "entries": [
            {
                "graph6": e.graph6,
                "order": e.order,
                "size": e.size,
                "pendants": e.pendants,
                "disposition": e.disposition,
                "consistent": e.consistent,
                "note": e.note,
            }
            for e in r.entries
        ],
    }
