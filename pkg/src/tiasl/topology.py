"""Finite topologies on small ground sets.

A topology is kept as its tuple of open sets in canonical order (cardinality,
then element tuple).  Two enumeration routes are provided:

* :func:`enumerate_topologies` — direct include/exclude search over all
  subset families, exact but limited to ``|X| <= 5``.
* :func:`topologies_with_open_count` — generates only topologies with a fixed
  number of opens via the correspondence between topologies on X and pairs
  (partition of X, labeled poset on the blocks); the opens are the unions of
  blocks over up-closed class sets, so a poset with exactly k up-sets yields a
  topology with exactly k opens.  This is the bounded route the searcher uses.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .intset import (
    DomainError,
    GroundSet,
    IntSet,
    ParseError,
    canonical_key,
    format_set,
    parse_set_text,
    sumset_mask,
)

#: Guards for the bounded (fixed open count) route: poset tables are built by
#: a 3^C(c,2) relation scan for c <= 5 classes and by direct chain generation
#: for c = 6, which covers every open count k <= 7.
OPEN_COUNT_GUARD = 7
GROUND_SIZE_GUARD = 10

#: Guard for the unrestricted enumeration.
ENUMERATE_GUARD = 5


@dataclass(frozen=True)
class Violation:
    """A single failed requirement, with the witnessing objects."""

    kind: str
    witness: tuple

    def __str__(self) -> str:
        parts = ", ".join(str(w) for w in self.witness)
        return f"{self.kind}: {parts}" if self.witness else self.kind


@dataclass(frozen=True)
class TopologyCheck:
    ok: bool
    violations: tuple[Violation, ...]

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class Topology:
    """A topology on a ground set; ``opens`` is canonically ordered and
    includes the empty set.

    Instances produced by the generators and parsers in this module satisfy
    the axioms; raw construction is trusted and does not re-verify (use
    :func:`check_topology` or :meth:`from_family` for untrusted input).
    """

    ground: GroundSet
    opens: tuple[IntSet, ...]

    @classmethod
    def from_family(cls, family: Iterable[IntSet], ground: GroundSet) -> "Topology":
        family = list(family)
        check = check_topology(family, ground)
        if not check.ok:
            first = check.violations[0]
            raise DomainError(
                f"not a topology of {ground}: {first}"
                + (f" (+{len(check.violations) - 1} more)" if len(check.violations) > 1 else "")
            )
        opens = sorted({s.mask for s in family} | {0}, key=lambda m: canonical_key(IntSet.from_mask(m)))
        return cls(ground, tuple(IntSet.from_mask(m) for m in opens))

    @property
    def open_count(self) -> int:
        return len(self.opens)

    @property
    def nonempty_opens(self) -> tuple[IntSet, ...]:
        return tuple(o for o in self.opens if o)

    def is_discrete(self) -> bool:
        return self.open_count == 2 ** len(self.ground)

    def __str__(self) -> str:
        return "{" + ", ".join(format_set(o) for o in self.opens) + "} on " + str(self.ground)


def check_topology(family: Iterable[IntSet], ground: GroundSet) -> TopologyCheck:
    """Verdict on whether ``family`` (implicitly together with the sets it
    already contains) is a topology of ``ground``: contains the empty set and
    the ground set, every member is a subset of the ground set, and the family
    is closed under pairwise union and intersection.  Violations name the
    failing axiom and a witnessing set or pair.
    """
    family = list(family)
    violations: list[Violation] = []

    seen: set[int] = set()
    for s in family:
        if s.mask in seen:
            violations.append(Violation("duplicate-open", (s,)))
        seen.add(s.mask)

    full = ground.members.mask
    masks = sorted(seen)
    if 0 not in seen:
        violations.append(Violation("missing-empty", ()))
    if full not in seen:
        violations.append(Violation("missing-ground", (ground.members,)))
    for m in masks:
        if m & ~full:
            violations.append(Violation("open-not-subset", (IntSet.from_mask(m),)))
    for i, a in enumerate(masks):
        for b in masks[i + 1 :]:
            if a | b not in seen:
                violations.append(
                    Violation("union-not-open", (IntSet.from_mask(a), IntSet.from_mask(b)))
                )
            if a & b not in seen:
                violations.append(
                    Violation("intersection-not-open", (IntSet.from_mask(a), IntSet.from_mask(b)))
                )
    return TopologyCheck(not violations, tuple(violations))


def _topology_from_masks(ground: GroundSet, masks: Iterable[int]) -> Topology:
    all_masks = set(masks) | {0, ground.members.mask}
    opens = sorted((IntSet.from_mask(m) for m in all_masks), key=canonical_key)
    return Topology(ground, tuple(opens))


# ---------------------------------------------------------------------------
# stock topologies


def discrete_topology(x: GroundSet) -> Topology:
    """All subsets of ``x`` open (2^|x| opens)."""
    full = x.members.mask
    masks = []
    m = full
    while True:
        masks.append(m)
        if m == 0:
            break
        m = (m - 1) & full
    return _topology_from_masks(x, masks)


def indiscrete_topology(x: GroundSet) -> Topology:
    """Only the empty set and ``x`` itself are open."""
    return _topology_from_masks(x, ())


def sierpinski_topology(x: GroundSet) -> Topology:
    """The three-open topology {∅, {0}, x} on a two-element ground set
    containing 0 — the only Sierpinski variant that can label an edge."""
    if len(x) != 2 or 0 not in x:
        raise DomainError(f"Sierpinski topology requires |x| = 2 with 0 in x, got {x}")
    return _topology_from_masks(x, (1,))


def chain_topology(k: int, x: GroundSet) -> Topology:
    """Opens ∅ ⊂ {0} ⊂ {0,1} ⊂ … ⊂ {0..k-1} ⊂ x on an interval ground set
    x = {0..l}, k <= l."""
    l = x.max_element
    if x.members.mask != (1 << (l + 1)) - 1:
        raise DomainError(f"chain topology requires an interval ground set, got {x}")
    if not 0 <= k <= l:
        raise DomainError(f"chain length {k} must satisfy 0 <= k <= {l}")
    return _topology_from_masks(x, ((1 << (i + 1)) - 1 for i in range(k)))


# ---------------------------------------------------------------------------
# unrestricted enumeration (small ground sets)


def enumerate_topologies(
    x: GroundSet, open_count_filter: int | None = None
) -> Iterator[Topology]:
    """All topologies on ``x`` (optionally only those with a given number of
    opens), in a fixed order.  Exponential in 2^|x|; guarded at |x| <= 5 —
    for larger ground sets with a known open count use
    :func:`topologies_with_open_count`.
    """
    s = len(x)
    if s > ENUMERATE_GUARD:
        raise DomainError(
            f"enumerate_topologies is limited to ground sets of size {ENUMERATE_GUARD}; "
            "for a fixed open count use topologies_with_open_count instead"
        )
    full = x.members.mask
    subs = []
    m = (full - 1) & full
    while m:
        subs.append(m)
        m = (m - 1) & full
    subs.sort()

    def close(included: set[int], seed: int) -> set[int]:
        added = {seed}
        work = [seed]
        while work:
            a = work.pop()
            for b in list(included) + list(added):
                for r in (a | b, a & b):
                    if r and r != full and r not in included and r not in added:
                        added.add(r)
                        work.append(r)
        return added

    def dfs(pos: int, included: set[int], excluded: set[int]) -> Iterator[Topology]:
        if open_count_filter is not None and len(included) + 2 > open_count_filter:
            return
        if pos == len(subs):
            if open_count_filter is None or len(included) + 2 == open_count_filter:
                yield _topology_from_masks(x, included)
            return
        m = subs[pos]
        if m in included:
            yield from dfs(pos + 1, included, excluded)
            return
        excluded.add(m)
        yield from dfs(pos + 1, included, excluded)
        excluded.remove(m)
        added = close(included, m)
        if not added & excluded:
            included |= added
            yield from dfs(pos + 1, included, excluded)
            included -= added

    yield from dfs(0, set(), set())


# ---------------------------------------------------------------------------
# bounded route: fixed open count via partitions and labeled posets


def _bit_indices(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@lru_cache(maxsize=None)
def _all_labeled_posets(c: int) -> tuple[tuple[int, ...], ...]:
    """Every labeled poset on c elements, each given by its tuple of up-closed
    subsets (as bit masks over the c elements).  Scans the 3^C(c,2) orientation
    assignments and keeps the transitive ones."""
    pairs = list(itertools.combinations(range(c), 2))
    posets = []
    for assign in itertools.product((0, 1, 2), repeat=len(pairs)):
        succ = [0] * c
        for (i, j), a in zip(pairs, assign):
            if a == 1:
                succ[i] |= 1 << j
            elif a == 2:
                succ[j] |= 1 << i
        ok = True
        for i in range(c):
            si = succ[i]
            for j in _bit_indices(si):
                if succ[j] & ~si:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        ups = tuple(
            u
            for u in range(1 << c)
            if all(succ[i] & ~u == 0 for i in _bit_indices(u))
        )
        posets.append(ups)
    return tuple(posets)


@lru_cache(maxsize=None)
def _posets_with_up_set_count(c: int, k: int) -> tuple[tuple[int, ...], ...]:
    if c <= 5:
        return tuple(ups for ups in _all_labeled_posets(c) if len(ups) == k)
    if k == c + 1:
        # Only total orders have exactly c+1 up-sets; generate them directly.
        chains = []
        for perm in itertools.permutations(range(c)):
            ups = [0]
            m = 0
            for i in range(c - 1, -1, -1):
                m |= 1 << perm[i]
                ups.append(m)
            chains.append(tuple(ups))
        return tuple(chains)
    raise DomainError(
        f"poset tables cover at most 5 classes (or chains); got {c} classes, {k} up-sets"
    )


def _partitions_into_blocks(s: int, c: int) -> Iterator[tuple[int, ...]]:
    """Partitions of {0..s-1} into exactly c blocks, as bit masks, blocks
    ordered by least member."""

    blocks: list[int] = []

    def rec(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if s - i < c - used:
            return
        if i == s:
            if used == c:
                yield tuple(blocks)
            return
        bit = 1 << i
        for b in range(used):
            blocks[b] |= bit
            yield from rec(i + 1, used)
            blocks[b] &= ~bit
        if used < c:
            blocks.append(bit)
            yield from rec(i + 1, used + 1)
            blocks.pop()

    yield from rec(0, 0)


def _abstract_open_masks(s: int, k: int) -> Iterator[tuple[int, ...]]:
    """Open families (as tuples of bit masks over positions 0..s-1) of every
    topology on an s-element set with exactly k opens.  Each topology appears
    exactly once: partition blocks and the induced class poset are recoverable
    from the family."""
    if k < 2 or k > 2**s:
        return
    for c in range(1, s + 1):
        if c + 1 > k or 2**c < k:
            continue
        posets = _posets_with_up_set_count(c, k)
        if not posets:
            continue
        for blocks in _partitions_into_blocks(s, c):
            for ups in posets:
                yield tuple(
                    _or_blocks(u, blocks) for u in ups
                )


def _or_blocks(class_mask: int, blocks: tuple[int, ...]) -> int:
    m = 0
    while class_mask:
        low = class_mask & -class_mask
        m |= blocks[low.bit_length() - 1]
        class_mask ^= low
    return m


def translate_masks(position_masks: Iterable[int], x: GroundSet) -> list[int]:
    """Map bit masks over positions 0..|x|-1 to masks over x's elements."""
    bits = [1 << e for e in x.members]
    out = []
    for pm in position_masks:
        m = 0
        while pm:
            low = pm & -pm
            m |= bits[low.bit_length() - 1]
            pm ^= low
        out.append(m)
    return out


def topologies_with_open_count(x: GroundSet, open_count: int) -> Iterator[Topology]:
    """Topologies on ``x`` with exactly ``open_count`` opens, in a fixed
    order, without enumerating the rest.  Output-linear; guarded at
    open_count <= 7 and |x| <= 10."""
    s = len(x)
    if open_count > OPEN_COUNT_GUARD:
        raise DomainError(
            f"open counts above {OPEN_COUNT_GUARD} are beyond the bounded route"
        )
    if s > GROUND_SIZE_GUARD:
        raise DomainError(
            f"ground sets above size {GROUND_SIZE_GUARD} are beyond the bounded route"
        )
    for abstract in _abstract_open_masks(s, open_count):
        yield _topology_from_masks(x, translate_masks(abstract, x))


# ---------------------------------------------------------------------------
# compatibility graph and pendant lower bounds


@dataclass(frozen=True)
class CompatibilityGraph:
    """Non-empty opens as nodes; an edge joins two distinct opens whose sumset
    stays inside the ground set.  Self-pairs are ignored."""

    nodes: tuple[IntSet, ...]
    edges: frozenset[tuple[int, int]]

    def degree(self, i: int) -> int:
        return sum(1 for e in self.edges if i in e)

    def degrees(self) -> tuple[int, ...]:
        d = [0] * len(self.nodes)
        for i, j in self.edges:
            d[i] += 1
            d[j] += 1
        return tuple(d)

    def degree_of(self, open_set: IntSet) -> int:
        return self.degree(self.nodes.index(open_set))

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(
            sorted(j for e in self.edges if i in e for j in e if j != i)
        )


def compatibility_graph(t: Topology) -> CompatibilityGraph:
    nodes = t.nonempty_opens
    full = t.ground.members.mask
    edges = set()
    for i, a in enumerate(nodes):
        for j in range(i + 1, len(nodes)):
            if sumset_mask(a.mask, nodes[j].mask) & ~full == 0:
                edges.add((i, j))
    return CompatibilityGraph(nodes, frozenset(edges))


class MinPendantRequirements(NamedTuple):
    edges_on_zero_vertex: int
    pendant_vertices: int


def min_pendant_requirements(t: Topology) -> MinPendantRequirements:
    """Lower bounds forced on any graph that carries ``t`` via a TIASL:
    the number of pendant edges incident on the {0}-labeled vertex (opens
    containing max of the ground set) and the number of pendant vertices
    (opens compatible with at most one other open)."""
    if IntSet((0,)) not in t.opens:
        raise DomainError(
            "{0} is not open, so no graph carries this topology via a TIASL"
        )
    l = t.ground.max_element
    cg = compatibility_graph(t)
    degrees = cg.degrees()
    edges_on_zero = sum(1 for o in cg.nodes if l in o)
    pendants = sum(1 for d in degrees if d <= 1)
    return MinPendantRequirements(edges_on_zero, pendants)


# ---------------------------------------------------------------------------
# text format


def format_topology(t: Topology) -> str:
    """One line ``ground: {…}`` then one open per line in canonical order
    (the empty set written ``{}``)."""
    lines = [f"ground: {format_set(t.ground.members)}"]
    lines.extend(format_set(o) for o in t.opens)
    return "\n".join(lines) + "\n"


def parse_topology_text(text: str) -> Topology:
    """Inverse of :func:`format_topology`; validates the axioms."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines or not lines[0].startswith("ground:"):
        raise ParseError("topology file must start with a 'ground:' line", 1)
    try:
        ground = GroundSet(parse_set_text(lines[0][len("ground:") :]))
    except (ParseError, DomainError) as exc:
        raise ParseError(f"bad ground set: {exc}", 1) from exc
    opens = []
    saw_empty = False
    for lineno, ln in enumerate(lines[1:], start=2):
        try:
            s = parse_set_text(ln)
        except ParseError as exc:
            raise ParseError(f"bad open set: {exc}", lineno) from exc
        saw_empty = saw_empty or not s
        opens.append(s)
    if not saw_empty:
        raise ParseError("topology file must list the empty set '{}'", len(lines))
    return Topology.from_family(opens, ground)
