"""Small graph decision procedures.

* packing colourings of the integer line from a finite colour budget
  (colour s may repeat only at distance >= s+1),
* in-degree-bounded orientations versus the subset counting condition
  (max-flow certificate on one side, exhaustive subsets on the other),
* the doubly-covered-neighbourhood cycle hypothesis in bipartite graphs,
* verification of locally-flipped regular edge colourings.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from random import Random
from typing import Iterable, Mapping, Sequence

from .errors import CapExceeded

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            norm.add((min(u, v), max(u, v)))
        return cls(n, frozenset(norm))

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.edges)


def parse_graph(text: str) -> tuple[Graph, list[int] | None]:
    """Edge-list format: "n m" header, then m lines "u v".  An optional
    line "A v1 v2 ..." directly after the header declares a bipartite part."""
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    n, m = map(int, lines[0].split())
    part = None
    body = lines[1:]
    if body and body[0].split()[0] == "A":
        part = [int(tok) for tok in body[0].split()[1:]]
        body = body[1:]
    if len(body) != m:
        raise ValueError(f"expected {m} edge lines, got {len(body)}")
    return Graph.from_edges(n, (tuple(map(int, ln.split())) for ln in body)), part


def format_graph(g: Graph, part: Sequence[int] | None = None) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    if part is not None:
        lines.append("A " + " ".join(map(str, sorted(part))))
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# packing colourings of the integer line
# ---------------------------------------------------------------------------

def density(budget: Iterable[int]) -> Fraction:
    """Exact sum of 1/(s+1) over the colour budget.

    >>> density({1, 2, 3})
    Fraction(13, 12)
    """
    s = sorted(set(budget))
    if not s or s[0] < 1:
        raise ValueError("budget must be a nonempty set of positive integers")
    return sum((Fraction(1, c + 1) for c in s), Fraction(0))


def check_certificate(budget: Iterable[int], word: Sequence[int]) -> bool:
    """Validate a periodic colour word: every position coloured from the
    budget, and cyclically consecutive uses of colour s at distance >= s+1
    (checked on a tiling of three periods)."""
    budget = set(budget)
    if not word or any(c not in budget for c in word):
        return False
    period = len(word)
    tiled = list(word) * 3
    last: dict[int, int] = {}
    for i, c in enumerate(tiled):
        if c in last and i - last[c] < c + 1:
            return False
        last[c] = i
    return True


def _dyadic_certificate(budget: Sequence[int]) -> list[int] | None:
    """Constructive fast path: give colour s the period 2^ceil(log2(s+1))
    and pack the dyadic residue classes greedily.  Succeeds whenever the
    rounded rates sum to at least 1; in particular whenever the exact
    density is >= 2."""
    periods = sorted((1 << max(0, (s + 1 - 1).bit_length()), s) for s in budget)
    free: list[tuple[int, int]] = [(1, 0)]  # (modulus, residue), smallest modulus first
    assigned: list[tuple[int, int, int]] = []  # (modulus, residue, colour)
    for p, colour in periods:
        free.sort()
        if not free or free[0][0] > p:
            continue  # colour cannot be placed; skipping is always safe
        mod, res = free.pop(0)
        while mod < p:
            free.append((mod * 2, res + mod))
            mod *= 2
        assigned.append((mod, res, colour))
        if not free:
            break
    if free:
        return None
    period = max(mod for mod, _, _ in assigned)
    word = [0] * period
    for mod, res, colour in assigned:
        for pos in range(res, period, mod):
            word[pos] = colour
    return word


def state_count(budget: Sequence[int]) -> int:
    """Size of the cooldown-state graph: per colour a counter in 0..s+1."""
    out = 1
    for s in budget:
        out *= s + 2
    return out


@dataclass
class ColouringResult:
    colourable: bool
    certificate: list[int] | None
    method: str  # "dyadic" | "cycle-search"


def colours_line(budget: Iterable[int], state_limit: int = 2_000_000) -> ColouringResult:
    """Decide whether the budget colours the integer line.

    The budget colours the line iff the cooldown-state graph (one counter
    per colour, capped at s+1, an edge per legal next colour) has a
    directed cycle: a cycle tiles periodically, and any line colouring
    walks the finite graph forever so revisits a state.  A constructive
    power-of-two packing is tried first; it settles every budget of
    density >= 2 without touching the state space, whose size is refused
    above state_limit otherwise.
    """
    s = sorted(set(budget))
    if not s or s[0] < 1:
        raise ValueError("budget must be a nonempty set of positive integers")
    word = _dyadic_certificate(s)
    if word is not None:
        assert check_certificate(s, word)
        return ColouringResult(True, word, "dyadic")
    if state_count(s) > state_limit:
        raise CapExceeded(
            f"cooldown-state graph has {state_count(s)} states (> {state_limit}) "
            f"and the constructive packing failed")
    word = _find_state_cycle(s)
    if word is not None:
        assert check_certificate(s, word)
        return ColouringResult(True, word, "cycle-search")
    return ColouringResult(False, None, "cycle-search")


def _find_state_cycle(budget: list[int]) -> list[int] | None:
    """A directed cycle in the cooldown-state graph, as its colour word;
    None when the graph is acyclic.

    States are tuples of per-colour counters c in 0..s+1 (steps since last
    use, capped); colour s is usable iff c >= s, using it resets the
    counter to 0 and advances all others.  Searching only from the fresh
    (all-saturated) state loses nothing: replaying a cycle's colour word
    from the fresh state is legal (first uses are always legal, later gaps
    match the cycle's) and re-enters the cycle within two periods.
    """
    k = len(budget)
    caps = [s + 1 for s in budget]
    fresh = tuple(caps)

    def successors(state: tuple[int, ...]):
        for idx, s in enumerate(budget):
            if state[idx] >= s:
                yield s, tuple(0 if j == idx else min(state[j] + 1, caps[j])
                               for j in range(k))

    on_stack: dict[tuple[int, ...], int] = {fresh: 0}  # state -> path position
    visited = {fresh}
    path_colours: list[int] = []
    stack = [(fresh, successors(fresh))]
    while stack:
        state, succ = stack[-1]
        advanced = False
        for colour, nxt in succ:
            if nxt in on_stack:
                return path_colours[on_stack[nxt]:] + [colour]
            if nxt not in visited:
                visited.add(nxt)
                on_stack[nxt] = len(path_colours) + 1
                path_colours.append(colour)
                stack.append((nxt, successors(nxt)))
                advanced = True
                break
        if not advanced:
            stack.pop()
            del on_stack[state]
            if path_colours:
                path_colours.pop()
    return None


@dataclass
class InfimumReport:
    samples: int
    decided: int
    skipped: int
    best_noncolouring_density: Fraction | None
    best_noncolouring_budget: list[int] | None
    least_colouring_density: Fraction | None
    least_colouring_budget: list[int] | None


def infimum_probe(budget_count: int = 200, seed: int = 0,
                  state_limit: int = 300_000) -> InfimumReport:
    """Sample finite budgets with density < 2 and record the largest density
    among budgets that fail to colour the line (a lower bound for the
    threshold) plus the smallest density among successes (context only)."""
    rng = Random(f"infimum|{seed}")
    best_nc: tuple[Fraction, list[int]] | None = None
    best_c: tuple[Fraction, list[int]] | None = None
    decided = skipped = 0
    for _ in range(budget_count):
        size = rng.randrange(1, 5)
        budget = sorted(rng.sample(range(1, 10), size))
        if density(budget) >= 2:
            continue
        if state_count(budget) > state_limit:
            skipped += 1
            continue
        res = colours_line(budget, state_limit)
        decided += 1
        d = density(budget)
        if not res.colourable:
            if best_nc is None or d > best_nc[0]:
                best_nc = (d, budget)
        else:
            if best_c is None or d < best_c[0]:
                best_c = (d, budget)
    return InfimumReport(
        budget_count, decided, skipped,
        best_nc[0] if best_nc else None, best_nc[1] if best_nc else None,
        best_c[0] if best_c else None, best_c[1] if best_c else None)


# ---------------------------------------------------------------------------
# in-degree-bounded orientations
# ---------------------------------------------------------------------------

def hall_condition(g: Graph, lam: Sequence[int]) -> tuple[bool, set[int] | None]:
    """Exhaustive check of sum(lam over A) >= induced edge count for every
    vertex subset A; returns the smallest violating subset if any."""
    if g.n > 24:
        raise CapExceeded("subset enumeration capped at 24 vertices")
    if len(lam) != g.n:
        raise ValueError("lambda must assign every vertex a value")
    edge_masks = [(1 << u) | (1 << v) for u, v in g.edges]
    worst: int | None = None
    for mask in range(1, 1 << g.n):
        lam_sum = sum(lam[v] for v in range(g.n) if mask >> v & 1)
        internal = sum((mask & em) == em for em in edge_masks)
        if lam_sum < internal:
            if worst is None or mask.bit_count() < worst.bit_count():
                worst = mask
    if worst is None:
        return True, None
    return False, {v for v in range(g.n) if worst >> v & 1}


def _max_flow(num_nodes: int, arcs: list[tuple[int, int, int]], s: int, t: int
              ) -> tuple[int, list[int]]:
    """Dinic's algorithm; returns (flow value, flow per arc)."""
    graph: list[list[int]] = [[] for _ in range(num_nodes)]
    cap: list[int] = []
    to: list[int] = []
    for u, v, c in arcs:
        graph[u].append(len(cap))
        to.append(v)
        cap.append(c)
        graph[v].append(len(cap))
        to.append(u)
        cap.append(0)
    flow = 0
    while True:
        level = [-1] * num_nodes
        level[s] = 0
        queue = [s]
        for u in queue:
            for e in graph[u]:
                if cap[e] > 0 and level[to[e]] < 0:
                    level[to[e]] = level[u] + 1
                    queue.append(to[e])
        if level[t] < 0:
            break
        it = [0] * num_nodes

        def dfs(u: int, pushed: int) -> int:
            if u == t:
                return pushed
            while it[u] < len(graph[u]):
                e = graph[u][it[u]]
                v = to[e]
                if cap[e] > 0 and level[v] == level[u] + 1:
                    d = dfs(v, min(pushed, cap[e]))
                    if d > 0:
                        cap[e] -= d
                        cap[e ^ 1] += d
                        return d
                it[u] += 1
            return 0

        while True:
            pushed = dfs(s, 1 << 60)
            if not pushed:
                break
            flow += pushed
    used = [cap[2 * i + 1] for i in range(len(arcs))]  # residual of reverse = flow
    return flow, used


def orientation_exists(g: Graph, lam: Sequence[int]) -> tuple[bool, dict[Edge, Edge] | None]:
    """Max-flow formulation: source -> edge node (1), edge node -> its two
    endpoints (1), vertex -> sink (lam).  An orientation with in-degrees
    <= lam exists iff the flow saturates all edges; the saturated endpoint
    arc names each edge's head."""
    if len(lam) != g.n:
        raise ValueError("lambda must assign every vertex a value")
    edges = sorted(g.edges)
    m = len(edges)
    source, sink = m + g.n, m + g.n + 1
    arcs: list[tuple[int, int, int]] = []
    for i, (u, v) in enumerate(edges):
        arcs.append((source, i, 1))
        arcs.append((i, m + u, 1))
        arcs.append((i, m + v, 1))
    for v in range(g.n):
        arcs.append((m + v, sink, lam[v]))
    value, used = _max_flow(m + g.n + 2, arcs, source, sink)
    if value != m:
        return False, None
    orientation: dict[Edge, Edge] = {}
    for i, (u, v) in enumerate(edges):
        to_u = used[3 * i + 1]
        head = u if to_u else v
        tail = v if to_u else u
        orientation[(u, v)] = (tail, head)
    return True, orientation


def orientation_indegrees(g: Graph, orientation: Mapping[Edge, Edge]) -> list[int]:
    indeg = [0] * g.n
    for _, head in orientation.values():
        indeg[head] += 1
    return indeg


# ---------------------------------------------------------------------------
# bipartite cycles through one side
# ---------------------------------------------------------------------------

def hat_n(g: Graph, part_a: Sequence[int], d: Iterable[int]) -> set[int]:
    """Vertices with at least two neighbours inside D (D must lie in A)."""
    dset = set(d)
    if not dset <= set(part_a):
        raise ValueError("D must be a subset of the declared part")
    adj = g.adjacency()
    return {v for v in range(g.n) if len(adj[v] & dset) >= 2}


@dataclass
class CycleCheckResult:
    status: str  # "hypothesis_fails" | "conjecture_holds" | "COUNTEREXAMPLE"
    witness_subset: list[int] | None = None
    cycle: list[int] | None = None


def bipartite_cycle_check(g: Graph, part_a: Sequence[int]) -> CycleCheckResult:
    """Test the expansion hypothesis |hat_n(D)| >= |D| for all D in A with
    |D| >= 2, then search exactly for a cycle of length 2|A| (alternating,
    visiting all of A and as many distinct B vertices).  A graph passing
    the hypothesis with no such cycle is a counterexample and is returned
    as such, never raised."""
    a = sorted(set(part_a))
    if len(a) < 2:
        raise ValueError("need |A| >= 2")
    if len(a) > 12:
        raise CapExceeded("exact cycle search capped at |A| = 12")
    aset = set(a)
    adj = g.adjacency()
    for u, v in g.edges:
        if (u in aset) == (v in aset):
            raise ValueError("graph is not bipartite with the declared part")
    for size in range(2, len(a) + 1):
        for d in itertools.combinations(a, size):
            if len(hat_n(g, a, d)) < len(d):
                return CycleCheckResult("hypothesis_fails", witness_subset=list(d))
    cycle = _find_alternating_cycle(adj, a)
    if cycle is not None:
        return CycleCheckResult("conjecture_holds", cycle=cycle)
    return CycleCheckResult("COUNTEREXAMPLE")


def _find_alternating_cycle(adj: list[set[int]], part_a: list[int]) -> list[int] | None:
    """Backtracking search for a cycle a_0 b_0 a_1 b_1 ... using every
    vertex of A exactly once and pairwise distinct b's."""
    k = len(part_a)
    start = part_a[0]
    used_a = {start}
    used_b: set[int] = set()
    path = [start]

    def rec(current_a: int) -> bool:
        if len(used_a) == k:
            for b in sorted(adj[current_a]):
                if b not in used_b and start in adj[b]:
                    path.append(b)
                    return True
            return False
        for b in sorted(adj[current_a]):
            if b in used_b:
                continue
            for nxt in sorted(adj[b]):
                if nxt in used_a or nxt not in part_a_set:
                    continue
                used_b.add(b)
                used_a.add(nxt)
                path.extend((b, nxt))
                if rec(nxt):
                    return True
                path.pop()
                path.pop()
                used_a.remove(nxt)
                used_b.remove(b)
        return False

    part_a_set = set(part_a)
    return path if rec(start) else None


# ---------------------------------------------------------------------------
# flipped regular colourings
# ---------------------------------------------------------------------------

@dataclass
class FlipVerdict:
    ok: bool
    failure: str | None = None


def flip_verify(g: Graph, colours: Mapping[Edge, int], a: Sequence[int],
                mode: str = "induced") -> FlipVerdict:
    """Check an edge colouring against the flipped-majority conditions.

    (i) the colour-j edges form an a_j-regular subgraph;
    (ii) at every vertex the neighbourhood counts e_j strictly decrease in
    j, where e_j counts colour-j edges with both endpoints in the closed
    neighbourhood ("induced", default) or at least one endpoint in it
    ("incident").
    """
    if mode not in ("induced", "incident"):
        raise ValueError("mode must be induced or incident")
    k = len(a)
    if list(a) != sorted(a) or len(set(a)) != k or any(x < 1 for x in a):
        raise ValueError("a must be strictly increasing positive")
    d = sum(a)
    if any(g.degree(v) != d for v in range(g.n)):
        raise ValueError(f"graph is not {d}-regular")
    if set(colours) != set(g.edges):
        raise ValueError("colouring must cover exactly the edge set")
    if any(c < 1 or c > k for c in colours.values()):
        raise ValueError("colours must lie in 1..k")
    deg = [[0] * g.n for _ in range(k + 1)]
    for (u, v), c in colours.items():
        deg[c][u] += 1
        deg[c][v] += 1
    for j in range(1, k + 1):
        for v in range(g.n):
            if deg[j][v] != a[j - 1]:
                return FlipVerdict(False, f"colour {j} is not {a[j-1]}-regular at vertex {v}")
    adj = g.adjacency()
    for v in range(g.n):
        closed = adj[v] | {v}
        counts = [0] * (k + 1)
        for (x, y), c in colours.items():
            inside = (x in closed) + (y in closed)
            if inside == 2 or (mode == "incident" and inside == 1):
                counts[c] += 1
        for j in range(1, k):
            if not counts[j] > counts[j + 1]:
                return FlipVerdict(
                    False, f"e_{j}[{v}] = {counts[j]} not above e_{j+1}[{v}] = {counts[j+1]}")
    return FlipVerdict(True)


def flip_search(g: Graph, a: Sequence[int], budget: int = 200, seed: int = 0,
                mode: str = "induced") -> dict[Edge, int] | None:
    """Best-effort randomized backtracking for a colouring passing
    flip_verify: edges are coloured in random order under the per-vertex
    degree quotas, then the local condition is verified.  None after the
    budget is evidence, not proof."""
    k = len(a)
    if list(a) != sorted(a) or len(set(a)) != k or any(x < 1 for x in a):
        raise ValueError("a must be strictly increasing positive")
    d = sum(a)
    if any(g.degree(v) != d for v in range(g.n)):
        return None
    rng = Random(f"flip|{seed}")
    edges = sorted(g.edges)
    for _ in range(budget):
        order = edges[:]
        rng.shuffle(order)
        quota = [[a[j] for j in range(k)] for _ in range(g.n)]
        colours: dict[Edge, int] = {}

        def backtrack(i: int) -> bool:
            if i == len(order):
                return True
            u, v = order[i]
            cs = list(range(1, k + 1))
            rng.shuffle(cs)
            for c in cs:
                if quota[u][c - 1] > 0 and quota[v][c - 1] > 0:
                    quota[u][c - 1] -= 1
                    quota[v][c - 1] -= 1
                    colours[(u, v)] = c
                    if backtrack(i + 1):
                        return True
                    del colours[(u, v)]
                    quota[u][c - 1] += 1
                    quota[v][c - 1] += 1
            return False

        if backtrack(0) and flip_verify(g, colours, a, mode).ok:
            return colours
    return None
