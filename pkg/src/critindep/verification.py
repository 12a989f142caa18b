"""Property-verification sweeps: corpora, a per-graph check registry, and
a deterministic sweep runner that emits counterexample certificates.

Every check returns True (pass), False (fail) or None (skipped: the
precondition is absent or an exact-computation limit was exceeded).  All
polynomial algorithms are held against independent exhaustive oracles.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

import numpy as np

from . import critical as cr
from . import gallai_edmonds as ge
from . import independence as ind
from . import matching as mt
from . import unicyclic as uc
from .graphs import (Graph, bits, connected_components, delete_vertices,
                     set_of, to_graph6)


@dataclass(frozen=True)
class Limits:
    enumeration: int = 16       # full 2^n subset tables
    omega: int = 20             # maximum-independent-set enumeration
    alpha_exact: int = 40       # branch-and-bound independence number
    matching_brute: int = 12    # brute-force matching oracle
    pair_subsets: int = 10      # all-pairs checks over critical sets
    ge_oracle: int = 10         # all-maximum-matchings enumeration
    supermod_pairs: int = 10_000


DEFAULT_LIMITS = Limits()


class GraphContext:
    """Shared per-graph artifacts, computed lazily and at most once."""

    def __init__(self, g: Graph, limits: Limits = DEFAULT_LIMITS,
                 seed: int = 0, colored: uc.ColoredUnicyclic | None = None,
                 script: uc.BuildScript | None = None):
        self.g = g
        self.limits = limits
        self.seed = seed
        self.colored = colored
        self.script = script

    @cached_property
    def dtab(self) -> list[int] | None:
        if self.g.n > self.limits.enumeration:
            return None
        return cr.difference_table(self.g, self.limits.enumeration)

    @cached_property
    def dc(self) -> int:
        return cr.critical_difference(self.g)

    @cached_property
    def ker(self):
        return cr.ker(self.g)

    @cached_property
    def diadem(self):
        return cr.diadem(self.g)

    @cached_property
    def critical_sets(self):
        if self.dtab is None:
            return None
        return cr.enumerate_critical_sets(self.g, limit=self.limits.enumeration)

    @cached_property
    def critical_independent_sets(self):
        if self.dtab is None:
            return None
        return cr.enumerate_critical_sets(self.g, independent_only=True,
                                          limit=self.limits.enumeration)

    @cached_property
    def minimal_positive_sets(self):
        if self.dtab is None:
            return None
        return cr.enumerate_minimal_positive_sets(self.g,
                                                  self.limits.enumeration)

    @cached_property
    def alpha(self) -> int | None:
        if self.g.n > self.limits.alpha_exact:
            return None
        return ind.alpha(self.g, self.limits.alpha_exact)

    @cached_property
    def mu(self) -> int:
        return mt.mu(self.g)

    @cached_property
    def core(self):
        if self.g.n > self.limits.omega:
            return None
        return ind.core(self.g, self.limits.omega)

    @cached_property
    def is_bipartite(self) -> bool:
        color = [-1] * self.g.n
        for start in range(self.g.n):
            if color[start] != -1:
                continue
            color[start] = 0
            stack = [start]
            while stack:
                v = stack.pop()
                for w in bits(self.g.adj[v]):
                    if color[w] == -1:
                        color[w] = color[v] ^ 1
                        stack.append(w)
                    elif color[w] == color[v]:
                        return False
        return True


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------

_SUPERMOD_TABLES: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _supermod_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    if n not in _SUPERMOD_TABLES:
        idx = np.arange(1 << n)
        _SUPERMOD_TABLES[n] = (idx[:, None] | idx[None, :],
                               idx[:, None] & idx[None, :])
    return _SUPERMOD_TABLES[n]


def check_dc_oracle_agreement(ctx: GraphContext):
    if ctx.dtab is None:
        return None
    return ctx.dc == max(ctx.dtab)


def check_ker_is_intersection(ctx: GraphContext):
    if ctx.critical_sets is None:
        return None
    inter = set(range(ctx.g.n))
    for s in ctx.critical_sets:
        inter &= s
    return ctx.ker == frozenset(inter)


def check_diadem_is_union(ctx: GraphContext):
    if ctx.critical_independent_sets is None:
        return None
    union: set[int] = set()
    for s in ctx.critical_independent_sets:
        union |= s
    return ctx.diadem == frozenset(union)


def check_matching_oracle_agreement(ctx: GraphContext):
    if ctx.g.n > ctx.limits.matching_brute:
        return None
    return ctx.mu == mt.max_matching_bruteforce(ctx.g,
                                                ctx.limits.matching_brute)


def check_theorem_2_1(ctx: GraphContext):
    """Matching from N(S) into S for every critical independent set S."""
    if ctx.critical_independent_sets is None:
        return None
    from .graphs import neighborhood
    for s in ctx.critical_independent_sets:
        if mt.matching_from_into(ctx.g, neighborhood(ctx.g, s), s) is None:
            return False
    return True


def check_theorem_2_2(ctx: GraphContext):
    """ker is independent and critical; ker lies inside core."""
    g = ctx.g
    if not ind.is_independent(g, ctx.ker):
        return False
    if g.difference_mask(g.mask_of(ctx.ker)) != ctx.dc:
        return False
    if ctx.core is not None and not ctx.ker <= ctx.core:
        return False
    return True


def check_supermodularity(ctx: GraphContext):
    if ctx.dtab is None:
        return None
    d = np.asarray(ctx.dtab)
    if ctx.g.n <= 6:
        union, inter = _supermod_tables(ctx.g.n)
        return bool((d[union] + d[inter] >= d[:, None] + d[None, :]).all())
    rng = np.random.default_rng(ctx.seed)
    xs = rng.integers(0, len(d), ctx.limits.supermod_pairs)
    ys = rng.integers(0, len(d), ctx.limits.supermod_pairs)
    return bool((d[xs | ys] + d[xs & ys] >= d[xs] + d[ys]).all())


def check_bipartite_ker_equals_core(ctx: GraphContext):
    if not ctx.is_bipartite or ctx.core is None:
        return None
    return ctx.ker == ctx.core


def check_theorem_2_5ii(ctx: GraphContext):
    """Deleting a ker vertex shrinks ker inside the old ker minus it."""
    for v in ctx.ker:
        h, labels = delete_vertices(ctx.g, [v])
        sub_ker = {labels[u] for u in cr.ker(h)}
        if not sub_ker <= ctx.ker - {v}:
            return False
    return True


def check_theorem_2_6(ctx: GraphContext):
    """ker equals the union of the inclusion-minimal positive sets."""
    if ctx.minimal_positive_sets is None:
        return None
    union: set[int] = set()
    for s in ctx.minimal_positive_sets:
        union |= s
    return ctx.ker == frozenset(union)


def check_corollary_2_11(ctx: GraphContext):
    if ctx.minimal_positive_sets is None:
        return None
    g = ctx.g
    return all(g.difference_mask(g.mask_of(s)) == 1
               for s in ctx.minimal_positive_sets)


def check_conjecture_1_1(ctx: GraphContext):
    if ctx.minimal_positive_sets is None:
        return None
    return len(ctx.minimal_positive_sets) >= ctx.dc


def check_hx_ker(ctx: GraphContext):
    """ker of the gadget built on ker(g) is exactly ker(g)."""
    if ctx.dc == 0:
        return None
    if len(ctx.ker) > ctx.limits.enumeration:
        return None
    return cr.verify_hx_ker(ctx.g, ctx.ker)


def check_theorem_2_12(ctx: GraphContext):
    if ctx.dc == 0:
        return None
    if len(ctx.ker) > ctx.limits.enumeration:
        return None
    dec = cr.decompose_minimal(ctx.g, ctx.ker)
    if dec.k != ctx.dc or len(dec.parts) != ctx.dc:
        return False
    if len(set(dec.parts)) != len(dec.parts):
        return False
    g = ctx.g
    union: set[int] = set()
    for i, part in enumerate(dec.parts):
        if g.difference_mask(g.mask_of(part)) != 1:
            return False
        if ctx.minimal_positive_sets is not None \
                and part not in ctx.minimal_positive_sets:
            return False
        if dec.representatives[i] not in part:
            return False
        for j in range(i + 1, len(dec.parts)):
            if dec.representatives[i] in dec.parts[j]:
                return False
        union |= part
    return frozenset(union) == ctx.ker


def check_theorem_2_14(ctx: GraphContext):
    """Any union of inclusion-minimal positive sets is independent, has
    positive difference, and dominates every proper subset strictly."""
    if ctx.minimal_positive_sets is None or ctx.dtab is None:
        return None
    g = ctx.g
    masks = [g.mask_of(s) for s in ctx.minimal_positive_sets]
    unions: set[int] = set()
    # All unions of the minimal sets (they live inside ker, so few vertices).
    frontier = {0}
    while frontier:
        m = frontier.pop()
        for pm in masks:
            u = m | pm
            if u not in unions:
                unions.add(u)
                frontier.add(u)
    for x in unions:
        if g.neighborhood_mask(x) & x:
            return False
        dx = ctx.dtab[x]
        if dx <= 0:
            return False
        sub = (x - 1) & x
        while True:
            if ctx.dtab[sub] >= dx:
                return False
            if sub == 0:
                break
            sub = (sub - 1) & x
    return True


def check_theorem_2_15(ctx: GraphContext):
    """Independent supersets of ker admitting a matching from their
    neighborhood are critical."""
    if ctx.dtab is None:
        return None
    g = ctx.g
    kmask = g.mask_of(ctx.ker)
    for x in range(1 << g.n):
        if x & kmask != kmask:
            continue
        if g.neighborhood_mask(x) & x:
            continue
        nb = set_of(g.neighborhood_mask(x))
        if mt.matching_from_into(g, nb, set_of(x)) is not None:
            if ctx.dtab[x] != ctx.dc:
                return False
    return True


def check_lemma_3_1(ctx: GraphContext):
    if ctx.critical_independent_sets is None \
            or ctx.g.n > ctx.limits.pair_subsets:
        return None
    for x, y in combinations(ctx.critical_independent_sets, 2):
        if not cr.check_lemma_31(ctx.g, x, y):
            return False
    return True


def check_theorem_3_2(ctx: GraphContext):
    if ctx.dtab is None:
        return None
    return cr.check_theorem_32(ctx.g, ctx.limits.enumeration)


def check_ker_diadem_inequality(ctx: GraphContext):
    if ctx.alpha is None:
        return None
    return len(ctx.ker) + len(ctx.diadem) <= 2 * ctx.alpha


def check_diadem_avoids_ker_neighborhood(ctx: GraphContext):
    from .graphs import neighborhood
    return not (ctx.diadem & neighborhood(ctx.g, ctx.ker))


# ----- unicyclic checks (need a coloring context) ---------------------------

def check_unicyclic_formulas(ctx: GraphContext):
    cu = ctx.colored
    if cu is None or ctx.alpha is None:
        return None
    m = cu.m
    n = cu.graph.n
    return (ctx.alpha == len(cu.black) + m
            and ctx.mu == len(cu.red) + m
            and ctx.dc == len(cu.black) - len(cu.red)
            and ctx.dc == ctx.alpha - ctx.mu
            and ctx.alpha + ctx.mu == n - 1)


def check_unicyclic_roundtrip(ctx: GraphContext):
    cu = ctx.colored
    if cu is None:
        return None
    got = uc.recognize(cu.graph)
    if got is None:
        return False
    if (got.blue, got.red, got.black) != (cu.blue, cu.red, cu.black):
        return False
    shuffled = uc.recognize(cu.graph, order_seed=ctx.seed)
    if shuffled is None:
        return False
    return (shuffled.blue, shuffled.red, shuffled.black) == (
        cu.blue, cu.red, cu.black)


def check_black_in_some_mis(ctx: GraphContext):
    """Some maximum independent set contains every black vertex."""
    cu = ctx.colored
    if cu is None or ctx.alpha is None:
        return None
    g = cu.graph
    closed = set(cu.black)
    for v in cu.black:
        closed |= g.neighbors(v)
    rest, _ = delete_vertices(g, closed)
    return len(cu.black) + ind.alpha(rest, ctx.limits.alpha_exact) == ctx.alpha


def check_red_saturated(ctx: GraphContext):
    """Every maximum matching covers all red vertices (checked on the
    deterministic matching plus randomized-relabeling restarts)."""
    cu = ctx.colored
    if cu is None:
        return None
    g = cu.graph
    rng = random.Random(ctx.seed)
    for attempt in range(4):
        if attempt == 0:
            matching = mt.max_matching_general(g)
        else:
            perm = list(range(g.n))
            rng.shuffle(perm)
            relabeled = Graph.build(
                g.n, [(perm[u], perm[v]) for u, v in g.edges])
            inv = [0] * g.n
            for i, p in enumerate(perm):
                inv[p] = i
            m = mt.max_matching_general(relabeled)
            back = [tuple(sorted((inv[u], inv[v]))) for u, v in m.edges]
            matching = mt.Matching(tuple(sorted(back)))
        if not cu.red <= matching.covered():
            return False
    return True


def check_red_black_matching(ctx: GraphContext):
    """A maximum matching exists whose red-covering edges are red-black:
    match each red vertex to a black child, plus alternating cycle edges."""
    cu = ctx.colored
    if cu is None:
        return None
    g = cu.graph
    children: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for child, par in cu.parent.items():
        children[par].append(child)
    edges = []
    for r in sorted(cu.red):
        blacks = [c for c in children[r] if c in cu.black]
        if not blacks:
            return False
        edges.append(tuple(sorted((r, min(blacks)))))
    cyc = cu.cycle
    for i in range(cu.m):
        edges.append(tuple(sorted((cyc[2 * i + 1], cyc[2 * i + 2]))))
    matching = mt.Matching(tuple(sorted(edges)))
    return matching.is_valid_for(g) and matching.size == ctx.mu


def check_black_is_critical(ctx: GraphContext):
    cu = ctx.colored
    if cu is None:
        return None
    g = cu.graph
    if not cr.is_critical_by_matching(g, cu.black):
        return False
    return g.difference_mask(g.mask_of(cu.black)) == ctx.dc


def check_core_in_black(ctx: GraphContext):
    cu = ctx.colored
    if cu is None or ctx.core is None:
        return None
    return ctx.core <= cu.black


def check_leaf_step_count(ctx: GraphContext):
    """The critical difference counts the leaf-attachment steps."""
    if ctx.script is None or ctx.colored is None:
        return None
    leaf_steps = sum(1 for kind, _ in ctx.script.steps if kind == "leaf")
    return ctx.dc == leaf_steps


def check_conjecture_1_3(ctx: GraphContext):
    """Disconnected unicyclic: d_c = alpha - mu, additively over parts."""
    comps = connected_components(ctx.g)
    if len(comps) < 2:
        return None
    from .graphs import cycle_space_dimension
    if cycle_space_dimension(ctx.g) != 1:
        return None
    if uc.is_ke(ctx.g):
        return None
    report = uc.disconnected_invariants(ctx.g)
    return all(report["checks"].values())


# ----- matching-structure checks --------------------------------------------

def check_ge_oracle_agreement(ctx: GraphContext):
    if ctx.g.n > ctx.limits.ge_oracle:
        return None
    p = ge.gallai_edmonds(ctx.g)
    return p.d_set == ge.missed_vertices_oracle(ctx.g, ctx.limits.ge_oracle)


def check_theorem_5_3(ctx: GraphContext):
    p = ge.gallai_edmonds(ctx.g)
    report = ge.check_theorem_53(ctx.g, p)
    # no edge may join D and C
    for u, v in ctx.g.edges:
        if (u in p.d_set and v in p.c_set) or (v in p.d_set and u in p.c_set):
            return False
    return all(v for v in report.values() if v is not None)


def check_lemma_5_4(ctx: GraphContext):
    """Negative difference of independent sets inside the non-singleton
    factor-critical components of G[D]."""
    p = ge.gallai_edmonds(ctx.g)
    big = [comp for comp, _ in p.d_components if len(comp) > 1]
    if not big:
        return None
    vertices: set[int] = set()
    for comp in big:
        vertices |= comp
    from .graphs import induced_subgraph
    sub, _ = induced_subgraph(ctx.g, vertices)
    if sub.n > ctx.limits.enumeration:
        return None
    return ge.check_lemma_54(sub, ctx.limits.enumeration)


def check_corollary_5_6(ctx: GraphContext):
    return ge.check_corollary_56(ctx.g, ctx.limits.enumeration)


CHECKS = {
    "dc_oracle_agreement": check_dc_oracle_agreement,
    "ker_is_intersection": check_ker_is_intersection,
    "diadem_is_union": check_diadem_is_union,
    "matching_oracle_agreement": check_matching_oracle_agreement,
    "theorem_2_1": check_theorem_2_1,
    "theorem_2_2": check_theorem_2_2,
    "theorem_2_3": check_supermodularity,
    "theorem_2_4": check_bipartite_ker_equals_core,
    "theorem_2_5ii": check_theorem_2_5ii,
    "theorem_2_6": check_theorem_2_6,
    "corollary_2_11": check_corollary_2_11,
    "conjecture_1_1": check_conjecture_1_1,
    "theorem_2_7": check_hx_ker,
    "theorem_2_12": check_theorem_2_12,
    "theorem_2_14": check_theorem_2_14,
    "theorem_2_15": check_theorem_2_15,
    "lemma_3_1": check_lemma_3_1,
    "theorem_3_2": check_theorem_3_2,
    "ker_diadem_inequality": check_ker_diadem_inequality,
    "diadem_avoids_ker_neighborhood": check_diadem_avoids_ker_neighborhood,
    "unicyclic_formulas": check_unicyclic_formulas,
    "unicyclic_roundtrip": check_unicyclic_roundtrip,
    "theorem_4_3": check_black_in_some_mis,
    "theorem_4_4": check_red_saturated,
    "lemma_4_12": check_red_black_matching,
    "theorem_4_14": check_black_is_critical,
    "core_in_black": check_core_in_black,
    "corollary_4_17": check_leaf_step_count,
    "conjecture_1_3": check_conjecture_1_3,
    "ge_oracle_agreement": check_ge_oracle_agreement,
    "theorem_5_3": check_theorem_5_3,
    "lemma_5_4": check_lemma_5_4,
    "corollary_5_6": check_corollary_5_6,
}


def run_graph_checks(ctx: GraphContext,
                     check_ids: list[str] | None = None) -> dict[str, str]:
    ids = check_ids if check_ids is not None else sorted(CHECKS)
    out = {}
    for cid in ids:
        result = CHECKS[cid](ctx)
        out[cid] = ("skipped" if result is None
                    else "pass" if result else "fail")
    return out


# ---------------------------------------------------------------------------
# Corpora
# ---------------------------------------------------------------------------

def all_labeled_graphs(n: int):
    """Every labeled simple graph on n vertices."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph.build(n, [pairs[i] for i in range(len(pairs))
                              if code >> i & 1])


def random_gnp(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2)
             if rng.random() < p]
    return Graph.build(n, edges)


def random_bipartite(n: int, p: float, rng: random.Random) -> Graph:
    left = {v for v in range(n) if rng.random() < 0.5}
    edges = [(u, v) for u, v in combinations(range(n), 2)
             if ((u in left) != (v in left)) and rng.random() < p]
    return Graph.build(n, edges)


def random_unicyclic(rng: random.Random, max_cycle: int = 9,
                     max_added: int = 30):
    cyc = rng.randrange(3, max_cycle + 1, 2)
    budget = rng.randint(0, max_added)
    n_p2 = rng.randint(1, max(1, budget // 2)) if budget >= 2 else 0
    n_leaf = max(0, budget - 2 * n_p2) if n_p2 else 0
    return uc.generate_random(cyc, n_p2, n_leaf, seed=rng.randrange(2 ** 30))


def random_forest(n: int, rng: random.Random) -> Graph:
    """Uniform-ish random forest: each vertex picks an earlier parent or none."""
    edges = []
    for v in range(1, n):
        parent = rng.randint(-1, v - 1)
        if parent >= 0:
            edges.append((parent, v))
    return Graph.build(n, edges)


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------

FAMILIES = ("exhaustive-labeled", "random-gnp", "random-bipartite",
            "unicyclic-generated", "unicyclic-disconnected")


@dataclass
class SweepConfig:
    family: str
    min_n: int = 1
    max_n: int = 6
    samples: int = 100
    seed: int = 0
    checks: list[str] | None = None
    limits: Limits = field(default_factory=Limits)
    inject_failure: bool = False


@dataclass
class SweepResult:
    graphs: int
    counts: dict[str, dict[str, int]]
    certificates: list[tuple[str, str]]  # (graph6, check id)

    @property
    def failed(self) -> bool:
        return any(c["fail"] for c in self.counts.values())


def _iter_contexts(config: SweepConfig):
    rng = random.Random(config.seed)
    lim = config.limits
    if config.family == "exhaustive-labeled":
        if config.max_n > 7:
            raise ValueError("exhaustive family supports n <= 7")
        for n in range(config.min_n, config.max_n + 1):
            for g in all_labeled_graphs(n):
                yield GraphContext(g, lim, seed=rng.randrange(2 ** 30))
    elif config.family == "random-gnp":
        for _ in range(config.samples):
            n = rng.randint(config.min_n, config.max_n)
            g = random_gnp(n, rng.uniform(0.05, 0.6), rng)
            yield GraphContext(g, lim, seed=rng.randrange(2 ** 30))
    elif config.family == "random-bipartite":
        for _ in range(config.samples):
            n = rng.randint(config.min_n, config.max_n)
            g = random_bipartite(n, rng.uniform(0.1, 0.6), rng)
            yield GraphContext(g, lim, seed=rng.randrange(2 ** 30))
    elif config.family == "unicyclic-generated":
        for _ in range(config.samples):
            script, cu = random_unicyclic(rng)
            yield GraphContext(cu.graph, lim, seed=rng.randrange(2 ** 30),
                               colored=cu, script=script)
    elif config.family == "unicyclic-disconnected":
        for _ in range(config.samples):
            _, cu = random_unicyclic(rng, max_added=12)
            forest = random_forest(rng.randint(1, 8), rng)
            shift = cu.graph.n
            edges = list(cu.graph.edges) + [
                (u + shift, v + shift) for u, v in forest.edges]
            g = Graph.build(shift + forest.n, edges)
            yield GraphContext(g, lim, seed=rng.randrange(2 ** 30))
    else:
        raise ValueError(f"unknown family {config.family!r}")


def run_sweep(config: SweepConfig) -> SweepResult:
    check_ids = (sorted(CHECKS) if config.checks is None
                 else list(config.checks))
    for cid in check_ids:
        if cid not in CHECKS:
            raise ValueError(f"unknown check {cid!r}")
    counts = {cid: {"pass": 0, "fail": 0, "skipped": 0} for cid in check_ids}
    certificates: list[tuple[str, str]] = []
    graphs = 0
    for ctx in _iter_contexts(config):
        graphs += 1
        results = run_graph_checks(ctx, check_ids)
        if config.inject_failure and graphs == 1 and check_ids:
            results[check_ids[0]] = "fail"
        for cid, status in results.items():
            counts[cid][status] += 1
            if status == "fail":
                certificates.append((to_graph6(ctx.g), cid))
    return SweepResult(graphs=graphs, counts=counts,
                       certificates=certificates)
