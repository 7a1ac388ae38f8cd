"""Finite simple graphs on vertices 0..n-1, plus family constructors,
graph6 and edge-list text forms, and a small isomorphism-free catalog of
connected graphs."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

import numpy as np

from .intset import DomainError, ParseError

#: The catalog marks whole permutation orbits, so n! times the number of
#: isomorphism classes must stay desk-sized.
CATALOG_GUARD = 7


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; edges are stored as (u, v) pairs with u < v."""

    order: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.order < 0:
            raise DomainError("graph order must be non-negative")
        for u, v in self.edges:
            if not (0 <= u < v < self.order):
                raise DomainError(f"edge ({u}, {v}) is not a valid pair of distinct vertices")

    @classmethod
    def from_edges(cls, order: int, pairs) -> "Graph":
        edges = set()
        for u, v in pairs:
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            edges.add((u, v) if u < v else (v, u))
        return cls(order, frozenset(edges))

    @property
    def size(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        out = [b if a == v else a for a, b in self.edges if v in (a, b)]
        return tuple(sorted(out))

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for row in adj:
            row.sort()
        return adj

    def degree(self, v: int) -> int:
        if not 0 <= v < self.order:
            raise DomainError(f"vertex {v} out of range")
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> tuple[int, ...]:
        d = [0] * self.order
        for u, v in self.edges:
            d[u] += 1
            d[v] += 1
        return tuple(d)


def pendant_vertices(g: Graph) -> tuple[int, ...]:
    """Vertices of degree exactly 1, ascending."""
    return tuple(v for v, d in enumerate(g.degrees()) if d == 1)


def isolated_vertices(g: Graph) -> tuple[int, ...]:
    return tuple(v for v, d in enumerate(g.degrees()) if d == 0)


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return False
    adj = g.adjacency()
    seen = {0}
    queue = deque((0,))
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == g.order


# ---------------------------------------------------------------------------
# families


def path(m: int) -> Graph:
    """Path on m >= 1 vertices (m-1 edges)."""
    if m < 1:
        raise DomainError(f"path needs at least one vertex, got {m}")
    return Graph.from_edges(m, ((i, i + 1) for i in range(m - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise DomainError(f"cycle needs at least three vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(r: int) -> Graph:
    """K_{1,r}: center 0 joined to leaves 1..r, r >= 1."""
    if r < 1:
        raise DomainError(f"star needs at least one leaf, got {r}")
    return Graph.from_edges(r + 1, ((0, i) for i in range(1, r + 1)))


def complete(n: int) -> Graph:
    if n < 1:
        raise DomainError(f"complete graph needs at least one vertex, got {n}")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise DomainError(f"complete bipartite parts must be non-empty, got {m}, {n}")
    return Graph.from_edges(
        m + n, ((i, m + j) for i in range(m) for j in range(n))
    )


def ladle(g: Graph, attach: int, m: int) -> Graph:
    """``g`` with a path of m >= 1 new vertices appended at vertex ``attach``.
    New vertices are numbered g.order .. g.order+m-1; the last one is the
    pendant end of the handle."""
    if not 0 <= attach < g.order:
        raise DomainError(f"attach vertex {attach} out of range")
    if m < 1:
        raise DomainError(f"handle needs at least one vertex, got {m}")
    edges = set(g.edges)
    prev = attach
    for i in range(m):
        new = g.order + i
        edges.add((prev, new) if prev < new else (new, prev))
        prev = new
    return Graph(g.order + m, frozenset(edges))


def tadpole(n: int, m: int) -> Graph:
    """Cycle on n >= 3 vertices with a handle of m >= 1 path vertices at vertex 0."""
    if n < 3:
        raise DomainError(f"tadpole cycle needs at least three vertices, got {n}")
    return ladle(cycle(n), 0, m)


def pan(n: int) -> Graph:
    """Cycle on n vertices with one pendant vertex: tadpole(n, 1)."""
    return tadpole(n, 1)


def shovel(n: int, m: int) -> Graph:
    """Complete graph on n >= 3 vertices with a handle of m >= 1 path vertices."""
    if n < 3:
        raise DomainError(f"shovel clique needs at least three vertices, got {n}")
    return ladle(complete(n), 0, m)


# ---------------------------------------------------------------------------
# graph6 (short form, n <= 62)


def emit_graph6(g: Graph) -> str:
    """Canonical short-form graph6: size byte, then the upper triangle of the
    adjacency matrix column by column, packed big-endian six bits per byte."""
    n = g.order
    if n > 62:
        raise DomainError(f"short-form graph6 covers orders up to 62, got {n}")
    out = [chr(63 + n)]
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in g.edges else 0)
    while len(bits) % 6:
        bits.append(0)
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = val << 1 | b
        out.append(chr(63 + val))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Parse one short-form graph6 string; rejects the extended size forms,
    out-of-range bytes, wrong lengths and non-zero padding, with the byte
    offset of the defect."""
    s = text.strip()
    if not s:
        raise ParseError("empty graph6 string", 0)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ord(ch)} outside the graph6 range 63..126", pos)
    if ord(s[0]) == 126:
        raise ParseError("extended graph6 size forms are not supported", 0)
    n = ord(s[0]) - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(s) - 1 != need:
        raise ParseError(
            f"graph6 body for order {n} needs {need} bytes, got {len(s) - 1}",
            min(len(s), need + 1),
        )
    bits = []
    for ch in s[1:]:
        val = ord(ch) - 63
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    for pos in range(nbits, len(bits)):
        if bits[pos]:
            raise ParseError("non-zero padding bits", 1 + pos // 6)
    edges = []
    b = 0
    for j in range(1, n):
        for i in range(j):
            if bits[b]:
                edges.append((i, j))
            b += 1
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# edge-list text form


def format_edge_list(g: Graph) -> str:
    """First line ``n m``, then one ``u v`` line per edge, sorted."""
    lines = [f"{g.order} {g.size}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ParseError("empty edge list", 1)
    head = lines[0].split()
    if len(head) != 2 or not all(w.isdigit() for w in head):
        raise ParseError("first line must be 'n m' with two non-negative integers", 1)
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, got {len(lines) - 1}", len(lines))
    edges = set()
    for lineno, ln in enumerate(lines[1:], start=2):
        words = ln.split()
        if len(words) != 2 or not all(w.isdigit() for w in words):
            raise ParseError("edge line must be 'u v' with two non-negative integers", lineno)
        u, v = int(words[0]), int(words[1])
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if u >= n or v >= n:
            raise ParseError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}", lineno)
        e = (u, v) if u < v else (v, u)
        if e in edges:
            raise ParseError(f"duplicate edge ({e[0]}, {e[1]})", lineno)
        edges.add(e)
    return Graph(n, frozenset(edges))


# ---------------------------------------------------------------------------
# connected catalog


def _mask_connected(mask: int, n: int, pairs: list[tuple[int, int]]) -> bool:
    adj: list[list[int]] = [[] for _ in range(n)]
    b = 0
    m = mask
    while m:
        if m & 1:
            u, v = pairs[b]
            adj[u].append(v)
            adj[v].append(u)
        m >>= 1
        b += 1
    seen = 1
    queue = deque((0,))
    marked = {0}
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u not in marked:
                marked.add(u)
                seen += 1
                queue.append(u)
    return seen == n


def _connected_graphs_of_order(n: int):
    if n == 1:
        yield Graph(1, frozenset())
        return
    pairs = list(itertools.combinations(range(n), 2))
    num_pairs = len(pairs)
    index = {p: b for b, p in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    # shift[p, b] = the image, as a one-bit mask, of edge slot b under
    # permutation p; OR-ing the rows over a graph's edge slots gives the
    # whole orbit of edge masks.
    shift = np.empty((len(perms), num_pairs), dtype=np.int64)
    for pi, p in enumerate(perms):
        for b, (i, j) in enumerate(pairs):
            q = (p[i], p[j]) if p[i] < p[j] else (p[j], p[i])
            shift[pi, b] = 1 << index[q]
    seen = bytearray(1 << num_pairs)
    seen_view = np.frombuffer(seen, dtype=np.uint8)
    m = 0
    while m != -1:
        slots = [b for b in range(num_pairs) if m >> b & 1]
        if slots:
            imgs = shift[:, slots[0]].copy()
            for b in slots[1:]:
                imgs |= shift[:, b]
            seen_view[imgs] = 1
        else:
            seen[0] = 1
        if _mask_connected(m, n, pairs):
            yield Graph.from_edges(n, (pairs[b] for b in slots))
        m = seen.find(0, m)


def connected_graph_catalog(max_n: int):
    """One representative per isomorphism class of connected graphs of each
    order 1..max_n, in a fixed order (ascending order, then ascending minimal
    edge mask).  Each class is found by scanning edge masks and marking whole
    permutation orbits; guarded at max_n <= 7."""
    if not 1 <= max_n <= CATALOG_GUARD:
        raise DomainError(f"catalog covers orders 1..{CATALOG_GUARD}, got {max_n}")
    for n in range(1, max_n + 1):
        yield from _connected_graphs_of_order(n)
