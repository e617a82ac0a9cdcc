"""Parity game solvers: tree lifting plus two independent references.

`solve` labels every vertex with a leaf of a working ordered tree or the
sentinel TOP above all leaves.  The working tree is the compact
universal tree sized by eta = min(#odd-priority, #even-priority)
vertices (<= n // 2) at height d/2, with a leftmost "stop" branch padded
below every internal node (`trees.with_stop_branches`).  Padding keeps
the tree universal for the same width while giving every ancestor
prefix its own least leaf, which is what lets unconstrained vertices
rest low instead of being dragged upward; without it the eta-sized tree
is too small in games where both players win somewhere.

One side is the measured player: Even when odd-priority vertices are no
more numerous than even-priority ones, Odd otherwise.  A vertex label
must dominate its successors' labels on the leaf-path prefix determined
by each edge's priority, strictly so at priorities of the opponent's
parity.  An edge carries the priority of the vertex it *enters* (the
standard reduction from vertex priorities to edge priorities redirects
every edge into a copy of its target, so the target's priority is the
one seen when the edge is traversed).  Keying the comparison by the
entered vertex is essential for the eta bound: every strict update over
a vertex w computes the same "least leaf strictly above mu(w) at w's
prefix length", so at most one fresh branch circulates per
opponent-parity vertex.

Prefix lengths are anchored at the opponent-parity priorities actually
present in the game: an absent priority would add a comparison level
that nothing ever resets, skewing the labelling.  The tree is still
built at the standard height d/2; comparisons simply never reach the
trailing coordinates.

Labels start at the least leaf and only ever increase toward TOP, so
iterating the local repair `lift` to a fixpoint yields the least
solution; the measured player wins exactly the vertices that end below
TOP.  The fixpoint is independent of the worklist policy, which is
therefore configurable for testing.

`zielonka` (recursive attractor decomposition) and `brute_force_solve`
(positional strategy enumeration) are independent oracles used to
cross-validate `solve`.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass

from .game import EVEN, ODD, GameError, GameGraph, priority_counts
from .trees import (
    TOP,
    OrderedTree,
    leaf_count,
    min_leaf_geq,
    universal_tree,
    with_stop_branches,
)

WORKLIST_POLICIES = ("fifo", "lifo", "random")


@dataclass(frozen=True)
class WinningRegions:
    even: frozenset
    odd: frozenset

    def __post_init__(self):
        if self.even & self.odd:
            raise ValueError("winning regions must be disjoint")


@dataclass
class SolveStats:
    player: int          # measured player
    eta: int             # min(#odd-priority, #even-priority) vertices
    tree_width: int      # leaves of the tree actually used
    lifts: int           # lift applications (worklist pops)
    changes: int         # lifts that increased a value


@dataclass
class SolveResult:
    regions: WinningRegions
    stats: SolveStats
    measure: "Measure"   # final labelling, for inspection and tests


def prefix_length(p: int, player: int, d: int) -> int:
    """Comparison prefix for priority p under the given measured player.

    Counts the priorities of the opponent's parity in p..d: odd ones for
    the Even measure (levels d-1, d-3, ..., 1 top-down), even ones for
    the Odd measure (levels d, d-2, ..., 2).
    """
    if d < 2 or d % 2 != 0:
        raise ValueError("d must be a positive even number")
    if not 1 <= p <= d:
        raise ValueError(f"priority {p} outside 1..{d}")
    if player == EVEN:
        return (d - p + 1) // 2
    return (d - p) // 2 + 1


def live_levels(g: GameGraph, player: int) -> list[int]:
    """Distinct opponent-parity priorities present in g, ascending.

    Only these can force progress: a priority of the opponent's parity
    that labels no vertex would add a measure level that nothing ever
    resets, skewing the labelling, so such levels are dropped.
    """
    opp_parity = 1 if player == EVEN else 0
    return sorted({p for p in g.priority if p % 2 == opp_parity})


class Measure:
    """Per-vertex leaf values plus the fixed context of one lifting run.

    ``values[v]`` is a leaf path of ``tree`` or TOP, starting at the
    least leaf.  ``k[w]`` and ``strict[w]`` describe the comparison an
    edge *into* w imposes.  The tree may be taller than the number of
    live levels (the standard sizing uses height d/2); comparisons then
    never reach the trailing coordinates, and a truncated universal tree
    is still universal, so the extra height is harmless.
    """

    __slots__ = ("values", "player", "tree", "d", "k", "strict")

    def __init__(self, g: GameGraph, player: int, tree: OrderedTree):
        levels = live_levels(g, player)
        if tree.height < len(levels):
            raise ValueError(
                f"tree height {tree.height} below the {len(levels)} live levels"
            )
        opp_parity = 1 if player == EVEN else 0
        # k(p) = number of live levels with priority >= p
        k = []
        for p in g.priority:
            lo, hi = 0, len(levels)
            while lo < hi:
                mid = (lo + hi) // 2
                if levels[mid] < p:
                    lo = mid + 1
                else:
                    hi = mid
            k.append(len(levels) - lo)
        self.values: list = [(0,) * tree.height] * g.n
        self.player = player
        self.tree = tree
        self.d = g.d
        self.k = tuple(k)
        self.strict = tuple(p % 2 == opp_parity for p in g.priority)


def initial_measure(g: GameGraph, player: int, tree: OrderedTree) -> Measure:
    """Least-leaf measure for a lifting run of the given player over tree."""
    return Measure(g, player, tree)


def edge_consistent(g: GameGraph, mu: Measure, v: int, w: int) -> bool:
    """Does the edge (v, w) satisfy the local progress condition?

    True when mu(v) is TOP; otherwise mu(w) must not be TOP and the
    length-k prefix of mu(v) must be >= that of mu(w), strictly when the
    edge enters a vertex of the opponent's parity.  k is the prefix
    length of the entered vertex's priority.  Prefixes shorter than k
    (values higher up the tree) compare below their extensions, which is
    exactly tuple order; length-0 prefixes all compare equal.
    """
    a = mu.values[v]
    if a is TOP:
        return True
    b = mu.values[w]
    if b is TOP:
        return False
    k = mu.k[w]
    if mu.strict[w]:
        return a[:k] > b[:k]
    return a[:k] >= b[:k]


def lift(g: GameGraph, mu: Measure, v: int) -> object:
    """Least value >= mu(v) restoring v's local consistency; never smaller.

    Per edge (v, w) the cheapest admissible value is TOP if mu(w) is TOP
    and otherwise `min_leaf_geq` of mu(w) at w's prefix length (strict at
    opponent-parity targets).  Measured vertices need one admissible edge
    (min over targets), opponent vertices all of them (max).
    """
    values = mu.values
    ks = mu.k
    stricts = mu.strict
    tree = mu.tree
    measured = g.owner[v] == mu.player
    best = None
    for w in g.succ[v]:
        mw = values[w]
        if mw is TOP:
            target = TOP
        else:
            target = min_leaf_geq(tree, mw, ks[w], stricts[w])
        if best is None:
            best = target
        elif measured:
            if target < best:
                best = target
        elif target > best:
            best = target
        if not measured and best is TOP:
            break
    old = values[v]
    return best if best > old else old


def _run_worklist(g: GameGraph, mu: Measure, policy: str, seed: int) -> tuple[int, int]:
    n = g.n
    preds = g.preds
    values = mu.values
    queued = [True] * n
    lifts = changes = 0
    if policy == "fifo":
        queue = deque(range(n))
        pop = queue.popleft
        push = queue.append
    elif policy == "lifo":
        queue = list(range(n))
        pop = queue.pop
        push = queue.append
    elif policy == "random":
        rng = random.Random(seed)
        queue = list(range(n))

        def pop():
            i = rng.randrange(len(queue))
            queue[i], queue[-1] = queue[-1], queue[i]
            return queue.pop()

        push = queue.append
    else:
        raise ValueError(
            f"unknown worklist policy {policy!r}; expected one of {WORKLIST_POLICIES}"
        )
    while queue:
        v = pop()
        queued[v] = False
        lifts += 1
        new = lift(g, mu, v)
        old = values[v]
        if new != old:
            if not old < new:
                raise AssertionError("lift tried to decrease a value")
            values[v] = new
            changes += 1
            for u in preds[v]:
                if not queued[u]:
                    queued[u] = True
                    push(u)
    return lifts, changes


def solve(
    g: GameGraph,
    *,
    full_tree: bool = False,
    worklist: str = "fifo",
    seed: int = 0,
) -> SolveResult:
    """Winning regions by lifting over the compact universal tree.

    The measured player is Even when eta_odd <= eta_even, Odd otherwise
    (ties to Even), so the tree size parameter is eta = min of the two
    counts.  ``full_tree=True`` sizes the tree by n instead, for
    cross-checking that the smaller tree loses nothing.  ``worklist``
    picks the fixpoint scheduling policy; the result is the same for all
    of them, only the lift counts differ.
    """
    counts = priority_counts(g)
    player = EVEN if counts.odd <= counts.even else ODD
    eta = min(counts.odd, counts.even)
    size = g.n if full_tree else max(eta, 1)
    tree = with_stop_branches(universal_tree(size, g.d // 2))
    mu = initial_measure(g, player, tree)
    lifts, changes = _run_worklist(g, mu, worklist, seed)
    won = frozenset(v for v in range(g.n) if mu.values[v] is not TOP)
    lost = frozenset(range(g.n)) - won
    regions = (
        WinningRegions(even=won, odd=lost)
        if player == EVEN
        else WinningRegions(even=lost, odd=won)
    )
    stats = SolveStats(
        player=player,
        eta=eta,
        tree_width=leaf_count(tree),
        lifts=lifts,
        changes=changes,
    )
    return SolveResult(regions=regions, stats=stats, measure=mu)


def vertex_consistent(g: GameGraph, mu: Measure, v: int) -> bool:
    """Fixpoint condition at v: measured vertices need one admissible
    successor edge, opponent vertices need all of them."""
    edges_ok = (edge_consistent(g, mu, v, w) for w in g.succ[v])
    return any(edges_ok) if g.owner[v] == mu.player else all(edges_ok)


# ---------------------------------------------------------------------------
# reference solvers


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def zielonka(g: GameGraph) -> WinningRegions:
    """Classical recursive solver: peel the attractor of the top priority,
    recurse, and flip on an opponent counterexample region."""
    n = g.n
    owner = g.owner
    priority = g.priority
    preds = g.preds
    succ_mask = [0] * n
    for v in range(n):
        for w in g.succ[v]:
            succ_mask[v] |= 1 << w

    def attract(target: int, player: int, alive: int) -> int:
        attr = target
        stack = list(_bits(target))
        while stack:
            w = stack.pop()
            for u in preds[w]:
                bit = 1 << u
                if not alive & bit or attr & bit:
                    continue
                if owner[u] == player or not succ_mask[u] & alive & ~attr:
                    attr |= bit
                    stack.append(u)
        return attr

    def win(alive: int) -> tuple[int, int]:
        if not alive:
            return 0, 0
        top = max(priority[v] for v in _bits(alive))
        player = EVEN if top % 2 == 0 else ODD
        tops = 0
        for v in _bits(alive):
            if priority[v] == top:
                tops |= 1 << v
        region = attract(tops, player, alive)
        w_even, w_odd = win(alive & ~region)
        w_opp = w_odd if player == EVEN else w_even
        if not w_opp:
            return (alive, 0) if player == EVEN else (0, alive)
        counter = attract(w_opp, 1 - player, alive)
        w_even, w_odd = win(alive & ~counter)
        if player == EVEN:
            return w_even, w_odd | counter
        return w_even | counter, w_odd

    w_even, w_odd = win((1 << n) - 1)
    return WinningRegions(
        even=frozenset(_bits(w_even)), odd=frozenset(_bits(w_odd))
    )


def brute_force_solve(g: GameGraph, max_strategies: int = 10**6) -> WinningRegions:
    """Enumerate Even's positional strategies; Even wins from v iff some
    strategy leaves no odd-dominated cycle reachable from v.

    Positional determinacy licenses both the enumeration and reading the
    Odd region as the complement.  Guarded: the product of Even-vertex
    out-degrees must not exceed ``max_strategies``.
    """
    n = g.n
    even_vertices = [v for v in range(n) if g.owner[v] == EVEN]
    total = 1
    for v in even_vertices:
        total *= len(g.succ[v])
        if total > max_strategies:
            raise GameError(
                f"too many positional strategies (> {max_strategies}); "
                "brute force is limited to small instances"
            )
    odd_priorities = sorted({p for p in g.priority if p % 2 == 1})
    even_wins: set[int] = set()
    for choice in itertools.product(*(g.succ[v] for v in even_vertices)):
        sub = [list(g.succ[v]) for v in range(n)]
        for v, w in zip(even_vertices, choice):
            sub[v] = [w]
        # vertices of priority p lying on a cycle within priorities <= p
        seeds = set()
        for p in odd_priorities:
            allowed = [v for v in range(n) if g.priority[v] <= p]
            allowed_set = set(allowed)
            for u in allowed:
                if g.priority[u] != p:
                    continue
                stack = [w for w in sub[u] if w in allowed_set]
                seen = set(stack)
                hit = False
                while stack:
                    x = stack.pop()
                    if x == u:
                        hit = True
                        break
                    for y in sub[x]:
                        if y in allowed_set and y not in seen:
                            seen.add(y)
                            stack.append(y)
                if hit:
                    seeds.add(u)
        # everything that can reach a seed loses for Even under this strategy
        bad = set(seeds)
        grew = True
        while grew:
            grew = False
            for v in range(n):
                if v not in bad and any(w in bad for w in sub[v]):
                    bad.add(v)
                    grew = True
        even_wins.update(set(range(n)) - bad)
    return WinningRegions(
        even=frozenset(even_wins), odd=frozenset(range(n)) - frozenset(even_wins)
    )


def format_regions(regions: WinningRegions, stats: SolveStats | None = None) -> str:
    """Two-line text form, plus a stats line when given."""
    lines = [
        "EVEN:" + "".join(f" {v}" for v in sorted(regions.even)),
        "ODD:" + "".join(f" {v}" for v in sorted(regions.odd)),
    ]
    if stats is not None:
        name = "EVEN" if stats.player == EVEN else "ODD"
        lines.append(
            f"stats: player={name} eta={stats.eta} "
            f"tree_width={stats.tree_width} lifts={stats.lifts} "
            f"changes={stats.changes}"
        )
    return "\n".join(lines) + "\n"
