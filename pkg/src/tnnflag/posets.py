"""Face posets of totally nonnegative strata and Bjorner-style regularity checks.

A stratum label is a pair (v, wbar) with v below the Demazure product of
wbar; its rank is the total factor length minus the length of v.  The
order is (v', wbar') <= (v, wbar) iff v <= v' and wbar' <= wbar
componentwise.  Posets are finite, carry an explicit synthetic bottom,
and are immutable after construction.

Checks: purity (all maximal chains between comparable pairs have equal
length), thinness (length-2 intervals are diamonds), Mobius/Eulerian, and
shellability of the order complex by backtracking search.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .weyl import WeylElt, WeylGroup

DEFAULT_NODE_CAP = 20_000
DEFAULT_SHELLING_BUDGET = 2_000_000


class CapExceededError(RuntimeError):
    """A configurable size or budget cap was hit."""


class _Sentinel:
    __slots__ = ("name",)

    def __init__(self, name):
        self.name = name

    def __repr__(self):
        return self.name


BOTTOM = _Sentinel("0^")
TOP = _Sentinel("1^")


@dataclass(frozen=True)
class QNode:
    """Stratum label (v, wbar) with its rank."""

    v: WeylElt
    wbar: tuple[WeylElt, ...]
    rank: int

    def describe(self) -> str:
        ws = ",".join(w.describe() for w in self.wbar)
        return f"({self.v.describe()} ; {ws})"


def make_qnode(v: WeylElt, wbar) -> QNode:
    """Validated node: requires v <= m_star(wbar)."""
    wbar = tuple(wbar)
    group = v.group
    group.check_same(v, *wbar)
    if not group.bruhat_leq(v, group.m_star(wbar)):
        raise ValueError(f"empty stratum: {v.describe()} not below the Demazure product")
    rank = sum(w.length for w in wbar) - v.length
    return QNode(v, wbar, rank)


def qnode_leq(a: QNode, b: QNode) -> bool:
    """Closure order: b.v <= a.v and a.wbar <= b.wbar componentwise."""
    group = a.v.group
    if len(a.wbar) != len(b.wbar):
        raise ValueError("tuples of different lengths are incomparable")
    if not group.bruhat_leq(b.v, a.v):
        return False
    return all(group.bruhat_leq(x, y) for x, y in zip(a.wbar, b.wbar))


class FacePoset:
    """Finite poset with an explicit rank function and synthetic bottom.

    ``nodes[0]`` is the BOTTOM sentinel when ``has_bottom`` is set; ranks
    are arbitrary integers that strictly increase along the order.
    """

    def __init__(self, nodes, ranks, below, has_bottom: bool):
        self.nodes: tuple = tuple(nodes)
        self.ranks: tuple[int, ...] = tuple(ranks)
        # below[i]: frozenset of indices strictly below i
        self.below: tuple[frozenset, ...] = tuple(frozenset(b) for b in below)
        self.has_bottom = has_bottom
        n = len(self.nodes)
        above = [set() for _ in range(n)]
        for i in range(n):
            for j in self.below[i]:
                above[j].add(i)
        self.above: tuple[frozenset, ...] = tuple(frozenset(a) for a in above)
        self._covers = None
        self._mobius_cache: dict[tuple[int, int], int] = {}
        self._chain_bounds = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_elements(cls, elements, leq, rank, add_bottom=True, node_cap=DEFAULT_NODE_CAP):
        elements = list(elements)
        if len(elements) + 1 > node_cap:
            raise CapExceededError(f"poset would have {len(elements) + 1} nodes (cap {node_cap})")
        elements.sort(key=rank)
        nodes: list = []
        ranks: list[int] = []
        if add_bottom:
            nodes.append(BOTTOM)
            ranks.append(min((rank(e) for e in elements), default=0) - 1)
        offset = len(nodes)
        nodes.extend(elements)
        ranks.extend(rank(e) for e in elements)
        n = len(nodes)
        below = [set() for _ in range(n)]
        for i in range(offset, n):
            if add_bottom:
                below[i].add(0)
            for j in range(offset, n):
                if i != j and ranks[j] < ranks[i] and leq(nodes[j], nodes[i]):
                    below[i].add(j)
        return cls(nodes, ranks, below, add_bottom)

    @classmethod
    def from_covers(cls, elements, cover_pairs):
        """Test helper: poset generated by explicit cover pairs (lo, hi)."""
        elements = list(elements)
        index = {e: i for i, e in enumerate(elements)}
        n = len(elements)
        up = [set() for _ in range(n)]
        for lo, hi in cover_pairs:
            up[index[lo]].add(index[hi])
        below = [set() for _ in range(n)]
        changed = True
        reach = [set(u) for u in up]
        while changed:
            changed = False
            for i in range(n):
                extra = set()
                for j in reach[i]:
                    extra |= reach[j]
                if not extra <= reach[i]:
                    reach[i] |= extra
                    changed = True
        for i in range(n):
            for j in reach[i]:
                below[j].add(i)
        heights = [0] * n
        for i in sorted(range(n), key=lambda i: len(below[i])):
            heights[i] = max((heights[j] + 1 for j in below[i]), default=0)
        return cls(elements, heights, below, has_bottom=False)

    # -- basic structure -----------------------------------------------------

    def __len__(self):
        return len(self.nodes)

    def index(self, node) -> int:
        return self.nodes.index(node)

    def leq(self, i: int, j: int) -> bool:
        return i == j or i in self.below[j]

    @property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Cover pairs (lo, hi): lo < hi with nothing strictly between."""
        if self._covers is None:
            out = [
                (lo, hi)
                for hi in range(len(self.nodes))
                for lo in self.below[hi]
                if not any(lo in self.below[mid] for mid in self.below[hi])
            ]
            self._covers = tuple(sorted(out))
        return self._covers

    def up_covers(self) -> list[list[int]]:
        ups = [[] for _ in self.nodes]
        for lo, hi in self.covers:
            ups[lo].append(hi)
        return ups

    def maximal_indices(self) -> list[int]:
        return [i for i in range(len(self.nodes)) if not self.above[i]]

    def minimal_indices(self, skip_bottom=True) -> list[int]:
        start = 1 if (self.has_bottom and skip_bottom) else 0
        return [
            i
            for i in range(start, len(self.nodes))
            if not (self.below[i] - ({0} if (self.has_bottom and skip_bottom) else set()))
        ]

    def f_vector(self) -> tuple[int, ...]:
        """Node counts per rank, bottom excluded."""
        start = 1 if self.has_bottom else 0
        if len(self.nodes) == start:
            return ()
        ranks = self.ranks[start:]
        lo, hi = min(ranks), max(ranks)
        out = [0] * (hi - lo + 1)
        for r in ranks:
            out[r - lo] += 1
        return tuple(out)

    def restrict(self, keep, ranks=None, add_bottom=True) -> "FacePoset":
        """Induced subposet on the given indices (bottom re-attached)."""
        keep = [i for i in keep if not (self.has_bottom and i == 0)]
        keep.sort(key=lambda i: self.ranks[i])
        pos = {old: new for new, old in enumerate(keep)}
        nodes = [self.nodes[i] for i in keep]
        if ranks is None:
            newranks = [self.ranks[i] for i in keep]
        else:
            newranks = [ranks(self.nodes[i]) for i in keep]
        below = [
            {pos[j] for j in self.below[i] if j in pos}
            for i in keep
        ]
        if add_bottom:
            nodes = [BOTTOM] + nodes
            newranks = [min(newranks, default=0) - 1] + newranks
            below = [set()] + [{0} | {b + 1 for b in bs} for bs in below]
        return FacePoset(nodes, newranks, below, add_bottom)

    # -- chain-length bookkeeping ---------------------------------------------

    def _chain_length_bounds(self):
        """(minlen, maxlen) dicts keyed by (lo, hi) over comparable pairs."""
        if self._chain_bounds is None:
            n = len(self.nodes)
            ups = self.up_covers()
            order = sorted(range(n), key=lambda i: self.ranks[i])
            minlen: dict[tuple[int, int], int] = {}
            maxlen: dict[tuple[int, int], int] = {}
            for x in range(n):
                minlen[(x, x)] = maxlen[(x, x)] = 0
                for z in order:
                    if z != x and not self.leq(x, z):
                        continue
                    if (x, z) not in minlen:
                        continue
                    for y in ups[z]:
                        key = (x, y)
                        cand = minlen[(x, z)] + 1
                        if key not in minlen or cand < minlen[key]:
                            minlen[key] = cand
                        cand = maxlen[(x, z)] + 1
                        if key not in maxlen or cand > maxlen[key]:
                            maxlen[key] = cand
            self._chain_bounds = (minlen, maxlen)
        return self._chain_bounds


# -- builders ------------------------------------------------------------------


def build_interval(top: QNode, node_cap: int = DEFAULT_NODE_CAP) -> FacePoset:
    """Closed interval [0^, top]: all labels weakly below top, plus a bottom.

    Membership: v <= v', wbar' <= wbar componentwise, and v' below the
    Demazure product of wbar'.
    """
    group = top.v.group
    factor_lowers = [group.lower_interval(w) for w in top.wbar]
    elements = []
    for combo in product(*factor_lowers):
        m = group.m_star(combo)
        for v2 in group.lower_interval(m):
            if group.bruhat_leq(top.v, v2):
                elements.append(make_qnode(v2, combo))
                if len(elements) > node_cap:
                    raise CapExceededError(f"interval exceeds node cap {node_cap}")
    return FacePoset.from_elements(
        elements, qnode_leq, lambda q: q.rank, add_bottom=True, node_cap=node_cap
    )


def braid_poset(group: WeylGroup, letters) -> FacePoset:
    """Augmented poset of subwords whose Demazure product stays maximal.

    ``letters`` lists simple reflections as 0-based vertex positions; nodes
    are pairs (w, sbar') with sbar' a componentwise subword and
    m_star(sbar') = w = m_star(sbar).
    """
    letters = tuple(letters)
    if not letters:
        raise ValueError("empty word")
    sbar = tuple(group.simple(t) for t in letters)
    w = group.m_star(sbar)
    elements = []
    for mask in range(1 << len(letters)):
        combo = tuple(
            sbar[i] if mask & (1 << i) else group.identity for i in range(len(letters))
        )
        if group.m_star(combo) == w:
            elements.append(make_qnode(w, combo))
    return FacePoset.from_elements(elements, qnode_leq, lambda q: q.rank, add_bottom=True)


def link_poset(bottom: QNode, top: QNode, node_cap: int = DEFAULT_NODE_CAP) -> FacePoset:
    """Face poset of the link: strata strictly above bottom, up to top."""
    if bottom == top or not qnode_leq(bottom, top):
        raise ValueError("bottom must be strictly below top")
    interval = build_interval(top, node_cap=node_cap)
    b_idx = interval.index(bottom)
    keep = [i for i in interval.above[b_idx]]
    shift = bottom.rank + 1
    return interval.restrict(keep, ranks=lambda q: q.rank - shift, add_bottom=True)


# -- regularity checks -----------------------------------------------------------


def is_pure(poset: FacePoset) -> bool:
    """All maximal chains between comparable pairs have equal length."""
    minlen, maxlen = poset._chain_length_bounds()
    for x in range(len(poset.nodes)):
        for y in poset.above[x]:
            key = (x, y)
            if key not in minlen:
                raise AssertionError("comparable pair with no cover path")
            if minlen[key] != maxlen[key]:
                return False
    return True


def is_thin(poset: FacePoset) -> bool:
    """Every interval of length 2 has exactly two intermediate elements."""
    minlen, maxlen = poset._chain_length_bounds()
    for (x, y), mx in maxlen.items():
        if mx == 2 and minlen[(x, y)] == 2:
            between = poset.above[x] & poset.below[y]
            if len(between) != 2:
                return False
    return True


def mobius(poset: FacePoset, x: int, y: int) -> int:
    """Mobius function of the interval [x, y], by the standard recursion."""
    if not poset.leq(x, y):
        raise ValueError("x is not below y")
    if x == y:
        return 1
    key = (x, y)
    cached = poset._mobius_cache.get(key)
    if cached is not None:
        return cached
    total = 1  # mu(x, x)
    for z in poset.above[x] & poset.below[y]:
        total += mobius(poset, x, z)
    out = -total
    poset._mobius_cache[key] = out
    return out


def is_eulerian(poset: FacePoset) -> bool:
    """mu(x, y) == (-1)^(rank difference) on every interval."""
    for x in range(len(poset.nodes)):
        for y in poset.above[x]:
            if mobius(poset, x, y) != (-1) ** (poset.ranks[y] - poset.ranks[x]):
                return False
    return True


def maximal_chains(poset: FacePoset, skip_bottom: bool = True) -> list[tuple[int, ...]]:
    """Maximal chains (as index tuples), optionally with the bottom removed."""
    ups = poset.up_covers()
    start = poset.minimal_indices(skip_bottom=skip_bottom)
    if not skip_bottom and poset.has_bottom:
        start = [0]
    chains: list[tuple[int, ...]] = []

    def walk(i, acc):
        if not ups[i]:
            chains.append(tuple(acc))
            return
        for j in ups[i]:
            acc.append(j)
            walk(j, acc)
            acc.pop()

    for i in start:
        walk(i, [i])
    return chains


@dataclass
class ShellingResult:
    status: str  # "shellable" | "not_shellable" | "inconclusive"
    order: list[tuple[int, ...]] | None
    facets: int
    attempts: int
    budget: int

    @property
    def shellable(self):
        return self.status == "shellable"


def _facet_masks(facets) -> tuple[list[int], list[tuple[int, ...]], dict]:
    universe: dict = {}
    members = []
    masks = []
    for f in facets:
        try:
            mem = tuple(sorted(f))
        except TypeError:
            mem = tuple(sorted(f, key=repr))
        bits = 0
        for x in mem:
            if x not in universe:
                universe[x] = 1 << len(universe)
            bits |= universe[x]
        members.append(mem)
        masks.append(bits)
    return masks, members, universe


def shelling_of_facets(
    facets,
    budget: int = DEFAULT_SHELLING_BUDGET,
    search: bool = True,
) -> ShellingResult:
    """Shelling search over explicit facets (any hashable vertices).

    With ``search`` off, the given order itself is validated.  Returns a
    definitive negative only when the whole search tree was exhausted
    within budget.
    """
    facets = list(facets)
    masks, members, universe = _facet_masks(facets)
    n = len(facets)
    if n <= 1:
        return ShellingResult("shellable", [tuple(m) for m in members], n, 0, budget)

    attempts = 0

    def valid(used: list[int], mask: int, member: tuple) -> bool:
        nonlocal attempts
        attempts += 1
        walls = []
        for x in member:
            c = mask & ~universe[x]
            if any(c & ~u == 0 for u in used):
                walls.append(c)
        if not walls:
            return False
        for u in used:
            it = mask & u
            if it and not any(it & ~c == 0 for c in walls):
                return False
        return True

    if not search:
        used = [masks[0]]
        for idx in range(1, n):
            if not valid(used, masks[idx], members[idx]):
                return ShellingResult("not_shellable", None, n, attempts, budget)
            used.append(masks[idx])
        return ShellingResult("shellable", [tuple(m) for m in members], n, attempts, budget)

    order_hint = sorted(range(n), key=lambda idx: members[idx])
    failed_states: set[frozenset] = set()
    exhausted = True
    used_idx: list[int] = []
    used_masks: list[int] = []
    iter_stack = [iter(order_hint)]
    while iter_stack:
        if attempts > budget:
            exhausted = False
            break
        it = iter_stack[-1]
        advanced = False
        for cand in it:
            if cand in used_idx:
                continue
            if used_idx and not valid(used_masks, masks[cand], members[cand]):
                continue
            trial = frozenset(used_idx) | {cand}
            if trial in failed_states:
                continue
            used_idx.append(cand)
            used_masks.append(masks[cand])
            iter_stack.append(iter(order_hint))
            advanced = True
            break
        if advanced:
            if len(used_idx) == n:
                return ShellingResult(
                    "shellable", [members[i] for i in used_idx], n, attempts, budget
                )
            continue
        # dead end: record the failed state and backtrack
        if len(failed_states) < (1 << 18):
            failed_states.add(frozenset(used_idx))
        iter_stack.pop()
        if used_idx:
            used_idx.pop()
            used_masks.pop()
    if exhausted:
        return ShellingResult("not_shellable", None, n, attempts, budget)
    return ShellingResult("inconclusive", None, n, attempts, budget)


def find_shelling(poset: FacePoset, budget: int = DEFAULT_SHELLING_BUDGET) -> ShellingResult:
    """Search for a shelling of the order complex of the poset minus bottom.

    Facets are the maximal chains.
    """
    chains = maximal_chains(poset, skip_bottom=True)
    return shelling_of_facets([frozenset(c) for c in chains], budget=budget)


def open_boundary_euler(poset: FacePoset) -> int:
    """Euler characteristic of the order complex of the proper part.

    Proper part: all nodes strictly below the unique maximum, bottom
    excluded.  Chains are counted with alternating signs.
    """
    maxima = poset.maximal_indices()
    if len(maxima) != 1:
        raise ValueError("poset has no unique maximum")
    top = maxima[0]
    keep = [
        i
        for i in range(len(poset.nodes))
        if i != top and not (poset.has_bottom and i == 0)
    ]
    # g(x) = sum over chains with minimum x of (-1)^(size+1); chi = sum g
    order = sorted(keep, key=lambda i: -poset.ranks[i])
    g: dict[int, int] = {}
    for x in order:
        acc = 1
        for y in poset.above[x]:
            if y in g:
                acc -= g[y]
        g[x] = acc
    return sum(g.values())


def check_regular_ball(
    top: QNode,
    node_cap: int = DEFAULT_NODE_CAP,
    budget: int = DEFAULT_SHELLING_BUDGET,
) -> dict:
    """Aggregate regularity report for the closed interval below a stratum.

    Combines purity, thinness, Eulerian-ness, shelling search, and the
    sphere Euler characteristic of the open boundary.
    """
    poset = build_interval(top, node_cap=node_cap)
    checks: list[dict] = []

    def record(name, status, witness=None):
        entry = {"check": name, "status": status}
        if witness is not None:
            entry["witness"] = witness
        checks.append(entry)

    record("pure", "pass" if is_pure(poset) else "fail")
    record("thin", "pass" if is_thin(poset) else "fail")
    record("eulerian", "pass" if is_eulerian(poset) else "fail")
    shelling = find_shelling(poset, budget=budget)
    status = {
        "shellable": "pass",
        "not_shellable": "fail",
        "inconclusive": "inconclusive",
    }[shelling.status]
    record("shelling", status, {"facets": shelling.facets, "attempts": shelling.attempts})
    chi = open_boundary_euler(poset)
    expected = 1 + (-1) ** (top.rank - 1)
    record(
        "boundary_sphere_euler",
        "pass" if chi == expected else "fail",
        {"chi": chi, "expected": expected},
    )
    overall = "pass"
    if any(c["status"] == "fail" for c in checks):
        overall = "fail"
    elif any(c["status"] == "inconclusive" for c in checks):
        overall = "inconclusive"
    return {
        "top": top.describe(),
        "rank": top.rank,
        "nodes": len(poset.nodes),
        "f_vector": list(poset.f_vector()),
        "checks": checks,
        "status": overall,
    }


# -- export ----------------------------------------------------------------------


def to_dot(poset: FacePoset, name: str = "face_poset") -> str:
    """Hasse diagram in DOT format, one node per poset element."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, node in enumerate(poset.nodes):
        if isinstance(node, _Sentinel):
            label = node.name
        else:
            ws = ",".join(w.describe() for w in node.wbar)
            label = f"{node.v.describe()} | {ws} | {node.rank}"
        lines.append(f'  n{i} [label="{label}"];')
    for lo, hi in poset.covers:
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines)
