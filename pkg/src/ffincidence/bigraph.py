"""Bipartite graphs with exact combinatorial detectors.

Neighbor sets are bitmasks (arbitrary-precision ints), which keeps the
common-neighborhood operations used by every detector to single AND/popcount
steps. All searches are exhaustive within explicit desk-scale guards and are
pure functions of immutable graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ScaleGuardError
from .util import check_grid, iter_bits

PATTERN_SIDE_CAP = 6
SEARCH_SIDE_CAP = 64
RS_SIDE_CAP = 20
H_VERTEX_CAP = 10**5


class BipartiteGraph:
    """A bipartite graph on parts A (size a_size) and B (size b_size)."""

    __slots__ = ("a_size", "b_size", "adj", "radj")

    def __init__(self, a_size: int, b_size: int, edges):
        adj = [0] * a_size
        radj = [0] * b_size
        for a, b in edges:
            if not (0 <= a < a_size and 0 <= b < b_size):
                raise ValueError(f"edge ({a}, {b}) out of range")
            adj[a] |= 1 << b
            radj[b] |= 1 << a
        self.a_size = a_size
        self.b_size = b_size
        self.adj = tuple(adj)
        self.radj = tuple(radj)

    @classmethod
    def from_masks(cls, a_size: int, b_size: int, adj_masks) -> "BipartiteGraph":
        g = cls.__new__(cls)
        g.a_size = a_size
        g.b_size = b_size
        g.adj = tuple(adj_masks)
        radj = [0] * b_size
        for a, mask in enumerate(g.adj):
            for b in iter_bits(mask):
                radj[b] |= 1 << a
        g.radj = tuple(radj)
        return g

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adj[a] >> b & 1)

    def degree_a(self, a: int) -> int:
        return self.adj[a].bit_count()

    def degree_b(self, b: int) -> int:
        return self.radj[b].bit_count()

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj)

    def edges(self):
        return [(a, b) for a in range(self.a_size) for b in iter_bits(self.adj[a])]

    def transpose(self) -> "BipartiteGraph":
        g = BipartiteGraph.__new__(BipartiteGraph)
        g.a_size, g.b_size = self.b_size, self.a_size
        g.adj, g.radj = self.radj, self.adj
        return g

    def common_neighborhood_a(self, a_vertices) -> int:
        """Bitmask over B of the common neighborhood of the given A-vertices."""
        mask = (1 << self.b_size) - 1
        for a in a_vertices:
            mask &= self.adj[a]
        return mask

    def __eq__(self, other):
        return (
            isinstance(other, BipartiteGraph)
            and other.a_size == self.a_size
            and other.b_size == self.b_size
            and other.adj == self.adj
        )

    def __hash__(self):
        return hash((self.a_size, self.b_size, self.adj))

    def __repr__(self):
        return f"BipartiteGraph({self.a_size}+{self.b_size}, e={self.edge_count()})"


def incidence_count(graph: BipartiteGraph) -> int:
    return graph.edge_count()


def graph_to_dict(graph: BipartiteGraph) -> dict:
    """Wire format: 0-based edge list sorted lexicographically."""
    return {
        "a_size": graph.a_size,
        "b_size": graph.b_size,
        "edges": [[a, b] for a, b in sorted(graph.edges())],
    }


def graph_from_dict(data: dict) -> BipartiteGraph:
    return BipartiteGraph(data["a_size"], data["b_size"], [tuple(e) for e in data["edges"]])


@dataclass(frozen=True)
class Pattern:
    """An edge labeling of a complete bipartite graph with labels 0, 1, or *.

    ones[i] / zeros[i] are bitmasks over the b-side giving the cells labeled
    1 / 0 in row i; the remaining cells are *. Indices are 0-based.
    """

    a_size: int
    b_size: int
    ones: tuple
    zeros: tuple

    def label(self, i: int, j: int) -> str:
        if self.ones[i] >> j & 1:
            return "1"
        if self.zeros[i] >> j & 1:
            return "0"
        return "*"

    def transpose(self) -> "Pattern":
        ones = [0] * self.b_size
        zeros = [0] * self.b_size
        for i in range(self.a_size):
            for j in range(self.b_size):
                if self.ones[i] >> j & 1:
                    ones[j] |= 1 << i
                if self.zeros[i] >> j & 1:
                    zeros[j] |= 1 << i
        return Pattern(self.b_size, self.a_size, tuple(ones), tuple(zeros))


def make_pi_d(d: int) -> Pattern:
    """The staircase pattern on d + d vertices whose absence characterizes
    point-hyperplane incidence graphs.

    Cell (i, j) is labeled 1 when i >= j - 1 and 0 when j = i + 2 (1-based),
    all other cells are *; stored 0-based.
    """
    if d < 3:
        raise ValueError("the staircase pattern needs d >= 3")
    ones = [0] * d
    zeros = [0] * d
    for i in range(d):
        for j in range(d):
            if i >= j - 1:
                ones[i] |= 1 << j
        if i + 2 < d:
            zeros[i] |= 1 << (i + 2)
    return Pattern(d, d, tuple(ones), tuple(zeros))


@dataclass(frozen=True)
class PatternWitness:
    """Injective realization of a pattern inside a graph.

    a_vertices[i] is the graph vertex playing pattern row i, b_vertices[j] the
    vertex playing pattern column j. When swapped is True the pattern rows were
    matched into the graph's B side (and columns into A).
    """

    a_vertices: tuple
    b_vertices: tuple
    swapped: bool


def _match_pattern(graph: BipartiteGraph, pattern: Pattern):
    """Backtracking search for an assignment realizing all 0/1 labels.

    Pattern rows map into graph A, columns into graph B, injectively per side.
    Vertex order is chosen dynamically: always extend the most constrained
    unassigned pattern vertex.
    """
    pa, pb = pattern.a_size, pattern.b_size
    if pa > graph.a_size or pb > graph.b_size:
        return None
    full_a = (1 << graph.a_size) - 1
    full_b = (1 << graph.b_size) - 1
    a_assign = [None] * pa
    b_assign = [None] * pb
    used_a = 0
    used_b = 0
    # Precompute per-row / per-column constraint masks in pattern space.
    col_ones = pattern.transpose().ones
    col_zeros = pattern.transpose().zeros

    def candidates(side, idx):
        if side == 0:
            mask = full_a & ~used_a
            ones, zeros = pattern.ones[idx], pattern.zeros[idx]
            for j in iter_bits(ones):
                if b_assign[j] is not None:
                    mask &= graph.radj[b_assign[j]]
            for j in iter_bits(zeros):
                if b_assign[j] is not None:
                    mask &= full_a & ~graph.radj[b_assign[j]]
        else:
            mask = full_b & ~used_b
            ones, zeros = col_ones[idx], col_zeros[idx]
            for i in iter_bits(ones):
                if a_assign[i] is not None:
                    mask &= graph.adj[a_assign[i]]
            for i in iter_bits(zeros):
                if a_assign[i] is not None:
                    mask &= full_b & ~graph.adj[a_assign[i]]
        return mask

    def pick():
        best = None
        for side, count, assign in ((0, pa, a_assign), (1, pb, b_assign)):
            for idx in range(count):
                if assign[idx] is not None:
                    continue
                mask = candidates(side, idx)
                n = mask.bit_count()
                if best is None or n < best[0]:
                    best = (n, side, idx, mask)
                    if n == 0:
                        return best
        return best

    def dfs(remaining):
        nonlocal used_a, used_b
        if remaining == 0:
            return True
        choice = pick()
        if choice is None:
            return True
        n, side, idx, mask = choice
        if n == 0:
            return False
        for v in iter_bits(mask):
            if side == 0:
                a_assign[idx] = v
                used_a |= 1 << v
                if dfs(remaining - 1):
                    return True
                a_assign[idx] = None
                used_a &= ~(1 << v)
            else:
                b_assign[idx] = v
                used_b |= 1 << v
                if dfs(remaining - 1):
                    return True
                b_assign[idx] = None
                used_b &= ~(1 << v)
        return False

    if dfs(pa + pb):
        return tuple(a_assign), tuple(b_assign)
    return None


def find_pattern(graph: BipartiteGraph, pattern: Pattern):
    """Exhaustive orientation-aware pattern search; None when the pattern is absent.

    Both orientations are tried: rows into A, and rows into B (the swap).
    """
    if pattern.a_size > PATTERN_SIDE_CAP or pattern.b_size > PATTERN_SIDE_CAP:
        raise ScaleGuardError("pattern side", max(pattern.a_size, pattern.b_size), PATTERN_SIDE_CAP)
    if graph.a_size > SEARCH_SIDE_CAP or graph.b_size > SEARCH_SIDE_CAP:
        raise ScaleGuardError("pattern search side", max(graph.a_size, graph.b_size), SEARCH_SIDE_CAP)
    hit = _match_pattern(graph, pattern)
    if hit is not None:
        return PatternWitness(hit[0], hit[1], swapped=False)
    hit = _match_pattern(graph.transpose(), pattern)
    if hit is not None:
        return PatternWitness(hit[0], hit[1], swapped=True)
    return None


def witness_is_valid(graph: BipartiteGraph, pattern: Pattern, w: PatternWitness) -> bool:
    g = graph.transpose() if w.swapped else graph
    if len(set(w.a_vertices)) != pattern.a_size or len(set(w.b_vertices)) != pattern.b_size:
        return False
    for i in range(pattern.a_size):
        for j in range(pattern.b_size):
            lab = pattern.label(i, j)
            edge = g.has_edge(w.a_vertices[i], w.b_vertices[j])
            if lab == "1" and not edge:
                return False
            if lab == "0" and edge:
                return False
    return True


def contains_kss(graph: BipartiteGraph, s: int):
    """A complete bipartite K_{s,s} witness (S, T) with S in A and T in B, or None.

    Enumerates s-subsets of the smaller side depth-first, pruning on the size
    of the running common neighborhood; exact.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    swap = graph.a_size > graph.b_size
    g = graph.transpose() if swap else graph
    if g.a_size < s:
        return None
    full_b = (1 << g.b_size) - 1

    chosen = []

    def dfs(start: int, common: int):
        if len(chosen) == s:
            return True
        if common.bit_count() < s:
            return False
        for v in range(start, g.a_size - (s - len(chosen)) + 1):
            nxt = common & g.adj[v]
            if nxt.bit_count() < s:
                continue
            chosen.append(v)
            if dfs(v + 1, nxt):
                return True
            chosen.pop()
        return False

    if not dfs(0, full_b):
        return None
    common = g.common_neighborhood_a(chosen)
    t_side = []
    for b in iter_bits(common):
        t_side.append(b)
        if len(t_side) == s:
            break
    S, T = tuple(chosen), tuple(t_side)
    if swap:
        S, T = T, S
    return (S, T)


def rs(graph: BipartiteGraph) -> int:
    """Maximum of r*s over complete bipartite subgraphs K_{r,s} of the graph.

    Exact via depth-first subset enumeration of the smaller side with an
    upper-bound prune; the smaller side is capped at 20 vertices.
    """
    small = min(graph.a_size, graph.b_size)
    if small > RS_SIDE_CAP:
        raise ScaleGuardError("rs smaller side", small, RS_SIDE_CAP)
    g = graph if graph.a_size <= graph.b_size else graph.transpose()
    full_b = (1 << g.b_size) - 1
    best = 0

    def dfs(start: int, size: int, common: int):
        nonlocal best
        cn = common.bit_count()
        if size and cn:
            best = max(best, size * cn)
        # Even taking every remaining vertex cannot shrink the bound below this.
        if (size + (g.a_size - start)) * cn <= best:
            return
        for v in range(start, g.a_size):
            nxt = common & g.adj[v]
            if nxt == 0:
                continue
            if (size + 1 + (g.a_size - v - 1)) * nxt.bit_count() <= best:
                continue
            dfs(v + 1, size + 1, nxt)

    dfs(0, 0, full_b)
    return best


def find_good_tuple(graph: BipartiteGraph, t: int):
    """An ordered tuple (v_1, ..., v_t) of distinct A-vertices whose iterated
    common neighborhoods strictly shrink from step 2 on and end with size >= 2,
    or None.

    Backtracking with chain pruning: a partial tuple at position i needs at
    least 2 + (t - i) common neighbors left to admit a strict completion.
    """
    if t < 2:
        raise ValueError("t must be >= 2")
    if graph.a_size > SEARCH_SIDE_CAP:
        raise ScaleGuardError("good-tuple side", graph.a_size, SEARCH_SIDE_CAP)
    full_b = (1 << graph.b_size) - 1
    chosen = []

    def dfs(common: int):
        i = len(chosen)
        if i == t:
            return common.bit_count() >= 2
        # After placing vertex i+1 there remain t - max(i+1, 2) strict shrinks.
        need = 2 + (t - max(i + 1, 2))
        for v in range(graph.a_size):
            if v in chosen:
                continue
            nxt = common & graph.adj[v]
            if i >= 2 and nxt == common:
                continue  # chain must strictly decrease after the second vertex
            if nxt.bit_count() < need:
                continue
            chosen.append(v)
            if dfs(nxt):
                return True
            chosen.pop()
        return False

    if dfs(full_b):
        return tuple(chosen)
    return None


def h_layer_sequences(d: int, delta: int):
    """Index sequences labeling the deep side of the layered forbidden graph.

    Returns (k, sequences) with k = 2^(delta^d) + 1; the first two sequences
    are empty (the two root vertices), followed by every tuple in [k]^(l-2)
    for layers l = 3..d+1 in order. A pair of deep-side vertices shares a
    neighbor iff one sequence is a prefix of the other.
    """
    from itertools import product as iproduct

    k = 2 ** (delta**d) + 1
    seqs = [(), ()]
    for layer in range(3, d + 2):
        seqs.extend(iproduct(range(1, k + 1), repeat=layer - 2))
    return k, seqs


def generate_H_d_Delta(d: int, delta: int) -> BipartiteGraph:
    """The layered forbidden bipartite graph avoided by point-variety incidences.

    Side B holds two root vertices plus one vertex per index sequence
    (i_3, ..., i_l) for every layer l in 3..d+1; for each sequence, k fresh
    A-vertices are attached to the roots and the whole chain of prefixes.
    Every A-vertex has degree at most d + 1.
    """
    if d < 1 or delta < 1:
        raise ValueError("d and delta must be positive")
    k, seqs = h_layer_sequences(d, delta)
    b_size = len(seqs)
    layer_seqs = seqs[2:]
    # Index B: roots at 0 and 1, layered vertices in sequence order after them.
    b_index = {seq: 2 + i for i, seq in enumerate(layer_seqs)}
    a_size = k * len(layer_seqs)
    if a_size + b_size > H_VERTEX_CAP:
        raise ScaleGuardError("layered forbidden graph vertices", a_size + b_size, H_VERTEX_CAP)
    edges = []
    a = 0
    for seq in layer_seqs:
        targets = [0, 1] + [b_index[seq[:pref]] for pref in range(1, len(seq) + 1)]
        for _ in range(k):
            for b in targets:
                edges.append((a, b))
            a += 1
    return BipartiteGraph(a_size, b_size, edges)


def random_bipartite(a_size: int, b_size: int, edge_prob: float, rng) -> BipartiteGraph:
    edges = [
        (a, b)
        for a in range(a_size)
        for b in range(b_size)
        if rng.random() < edge_prob
    ]
    return BipartiteGraph(a_size, b_size, edges)
