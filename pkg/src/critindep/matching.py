"""Maximum matchings: bipartite (layered augmenting paths), general
(blossom contraction), a brute-force oracle, and matching predicates.

Witness matchings are valid and maximum but not canonical; callers must
assert only size and validity.  Tie-breaking everywhere is lowest-vertex
first so repeated runs are reproducible.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache

from .errors import LimitExceededError, PartitionError, PreconditionError
from .graphs import Graph, VertexSet, bits

BRUTE_FORCE_LIMIT = 12


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges of a graph."""

    edges: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    def covered(self) -> VertexSet:
        return frozenset(v for e in self.edges for v in e)

    def is_valid_for(self, g: Graph) -> bool:
        seen = set()
        for u, v in self.edges:
            if not g.has_edge(u, v) or u in seen or v in seen:
                return False
            seen.update((u, v))
        return True


def _matching_from_array(match: list[int]) -> Matching:
    edges = sorted((u, v) for u, v in enumerate(match) if v > u)
    return Matching(tuple(edges))


def max_matching_bipartite(g: Graph, left: Iterable[int],
                           right: Iterable[int]) -> Matching:
    """Maximum matching of a bipartite graph via Hopcroft-Karp."""
    lmask = g.mask_of(left)
    rmask = g.mask_of(right)
    if lmask & rmask or (lmask | rmask) != g.full_mask:
        raise PartitionError("left/right do not partition the vertex set")
    for u, v in g.edges:
        if bool(lmask >> u & 1) == bool(lmask >> v & 1):
            raise PartitionError(f"edge ({u},{v}) does not cross the partition")
    match = _hopcroft_karp(g.n, [list(bits(g.adj[v])) for v in range(g.n)],
                           sorted(bits(lmask)))
    return _matching_from_array(match)


def _hopcroft_karp(n: int, adj: list[list[int]], left: list[int]) -> list[int]:
    """Match array over all n vertices; -1 means unmatched."""
    INF = n + 1
    match = [-1] * n
    dist = [0] * n
    while True:
        queue = deque()
        for u in left:
            if match[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INF
        found = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = match[v]
                if w == -1:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if not found:
            break

        def dfs(u: int) -> bool:
            for v in adj[u]:
                w = match[v]
                if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                    match[u] = v
                    match[v] = u
                    return True
            dist[u] = INF
            return False

        for u in left:
            if match[u] == -1:
                dfs(u)
    return match


def max_matching_general(g: Graph) -> Matching:
    """Maximum matching of an arbitrary graph via blossom contraction."""
    n = g.n
    adj = [list(bits(g.adj[v])) for v in range(n)]
    match = [-1] * n
    # Greedy warm start.
    for u in range(n):
        if match[u] == -1:
            for v in adj[u]:
                if match[v] == -1:
                    match[u] = v
                    match[v] = u
                    break
    p = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        used = [False] * n
        while True:
            a = base[a]
            used[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if used[b]:
                return b
            b = p[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_path(root: int) -> bool:
        for i in range(n):
            p[i] = -1
            base[i] = i
        used = [False] * n
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        u = to
                        while u != -1:
                            pv = p[u]
                            nxt = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = nxt
                        return True
                    if not used[match[to]]:
                        used[match[to]] = True
                        queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_path(v)
    return _matching_from_array(match)


def mu(g: Graph) -> int:
    """Matching number of g."""
    return max_matching_general(g).size


def max_matching_bruteforce(g: Graph, limit: int = BRUTE_FORCE_LIMIT) -> int:
    """Exhaustive matching number; independent oracle for the blossom code."""
    if g.n > limit:
        raise LimitExceededError(f"n={g.n} exceeds brute-force limit {limit}")
    adj = g.adj

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if mask == 0:
            return 0
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        res = best(rest)
        for w in bits(adj[v] & rest):
            res = max(res, 1 + best(rest ^ (1 << w)))
        return res

    result = best(g.full_mask)
    best.cache_clear()
    return result


def matching_from_into(g: Graph, a: Iterable[int],
                       b: Iterable[int]) -> Matching | None:
    """A matching saturating a, using only a-b edges, or None if impossible.

    The empty matching (a = empty set) is returned as a Matching, not None.
    """
    amask = g.mask_of(a)
    bmask = g.mask_of(b)
    if amask & bmask:
        raise PreconditionError("a and b must be disjoint")
    avs = sorted(bits(amask))
    bvs = sorted(bits(bmask))
    aindex = {v: i for i, v in enumerate(avs)}
    bindex = {v: len(avs) + i for i, v in enumerate(bvs)}
    size = len(avs) + len(bvs)
    adj: list[list[int]] = [[] for _ in range(size)]
    for u in avs:
        for w in bits(g.adj[u] & bmask):
            adj[aindex[u]].append(bindex[w])
            adj[bindex[w]].append(aindex[u])
    match = _hopcroft_karp(size, adj, list(range(len(avs))))
    if any(match[i] == -1 for i in range(len(avs))):
        return None
    labels = avs + bvs
    edges = sorted(
        tuple(sorted((labels[i], labels[match[i]]))) for i in range(len(avs)))
    return Matching(tuple(edges))


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and mu(g) == g.n // 2


def is_factor_critical(g: Graph) -> bool:
    """True iff deleting any single vertex leaves a perfect matching."""
    if g.n % 2 == 0:
        return g.n == 0
    from .graphs import delete_vertices

    for v in range(g.n):
        h, _ = delete_vertices(g, [v])
        if not has_perfect_matching(h):
            return False
    return True
