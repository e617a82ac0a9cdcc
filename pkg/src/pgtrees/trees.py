"""Ordered trees of uniform leaf depth and the compact universal family.

A tree of height h has every leaf at depth exactly h; its width is its
number of leaves.  Leaves are addressed by root-to-leaf child-index paths
(tuples of ints) and ordered lexicographically, leftmost child least.
``BOT`` and ``TOP`` are sentinels comparing below and above every path.

`universal_tree(n, h)` builds a tree of height h into which every ordered
tree of height h and width at most n embeds; its width is exactly
`widths.width_recursive(n, h)`.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

LeafPath = tuple  # tuple of child indices, one per level


class _Extreme:
    """Totally ordered sentinel sitting below (BOT) or above (TOP) all paths."""

    __slots__ = ("_name", "_above")

    def __init__(self, name: str, above: bool):
        self._name = name
        self._above = above

    def __repr__(self):
        return self._name

    def __lt__(self, other):
        return (not self._above) and other is not self

    def __le__(self, other):
        return other is self or not self._above

    def __gt__(self, other):
        return self._above and other is not self

    def __ge__(self, other):
        return other is self or self._above


TOP = _Extreme("TOP", above=True)
BOT = _Extreme("BOT", above=False)


class OrderedTree:
    """Immutable ordered tree; a node with no children is a single leaf.

    All children of a node must share one height so leaves stay at a
    uniform depth.  Structural equality and hashing are by shape.
    """

    __slots__ = ("children", "height", "width", "_hash")

    def __init__(self, children: tuple["OrderedTree", ...] | list = ()):
        children = tuple(children)
        if children:
            h = children[0].height
            for c in children[1:]:
                if c.height != h:
                    raise ValueError("children must all have the same height")
            self.height = h + 1
            self.width = sum(c.width for c in children)
        else:
            self.height = 0
            self.width = 1
        self.children = children
        self._hash = hash(children)

    @property
    def arity(self) -> int:
        return len(self.children)

    def node_at(self, prefix: LeafPath) -> "OrderedTree":
        node = self
        for i in prefix:
            node = node.children[i]
        return node

    def leaf_paths(self) -> Iterator[LeafPath]:
        """All leaf paths in increasing (lexicographic) order."""
        if not self.children:
            yield ()
            return
        for i, child in enumerate(self.children):
            for rest in child.leaf_paths():
                yield (i,) + rest

    def is_leaf_path(self, path: LeafPath) -> bool:
        if len(path) != self.height:
            return False
        node = self
        for i in path:
            if not 0 <= i < len(node.children):
                return False
            node = node.children[i]
        return True

    def to_text(self) -> str:
        if not self.children:
            return "."
        return "(" + "".join(c.to_text() for c in self.children) + ")"

    @classmethod
    def from_text(cls, text: str) -> "OrderedTree":
        tree, pos = cls._parse(text, 0)
        if pos != len(text):
            raise ValueError(f"trailing characters at position {pos}: {text[pos:]!r}")
        return tree

    @classmethod
    def _parse(cls, text: str, pos: int) -> tuple["OrderedTree", int]:
        if pos >= len(text):
            raise ValueError("unexpected end of tree text")
        if text[pos] == ".":
            return cls(), pos + 1
        if text[pos] != "(":
            raise ValueError(f"expected '(' or '.' at position {pos}")
        pos += 1
        children = []
        while pos < len(text) and text[pos] != ")":
            child, pos = cls._parse(text, pos)
            children.append(child)
        if pos >= len(text):
            raise ValueError("unbalanced '(' in tree text")
        if not children:
            raise ValueError("internal node with no children")
        return cls(children), pos + 1

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, OrderedTree):
            return NotImplemented
        if self._hash != other._hash or self.width != other.width:
            return False
        return self.children == other.children

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"OrderedTree.from_text({self.to_text()!r})"


def leaf_count(t: OrderedTree | None) -> int:
    """Number of leaves; the empty tree (None) has none."""
    return 0 if t is None else t.width


@lru_cache(maxsize=None)
def universal_tree(n: int, h: int) -> OrderedTree | None:
    """Tree of height h embedding every ordered tree of height h, width <= n.

    Recursive shape: the root's children are, left to right, the root
    children of universal_tree(n//2, h), one fresh child carrying
    universal_tree(n, h-1), and the root children of
    universal_tree(n-1-n//2, h).  n=0 gives the empty tree (None), which
    contributes no children when grafted; h=0 gives a single leaf node.
    Subtrees are shared, so the result must be treated as read-only.
    """
    if n < 0 or h < 0:
        raise ValueError("n and h must be nonnegative")
    if n == 0:
        return None
    if h == 0:
        return OrderedTree()
    left = universal_tree(n // 2, h)
    mid = universal_tree(n, h - 1)
    right = universal_tree(n - 1 - n // 2, h)
    children = (left.children if left else ()) + (mid,) + (right.children if right else ())
    return OrderedTree(children)


@lru_cache(maxsize=None)
def _blank_path(h: int) -> OrderedTree:
    t = OrderedTree()
    for _ in range(h):
        t = OrderedTree((t,))
    return t


@lru_cache(maxsize=None)
def with_stop_branches(t: OrderedTree) -> OrderedTree:
    """Insert a leftmost single-path branch below every internal node.

    The result's leaves correspond one-to-one with the nodes of ``t``
    (follow the copy of a node, then drop into its blank branch), laid
    out so that a node's image precedes the images of its descendants.
    ``t`` embeds into the result, so padding a tree that embeds every
    width-w tree of its height yields another such tree.
    """
    if not t.children:
        return t
    children = (_blank_path(t.height - 1),)
    children += tuple(with_stop_branches(c) for c in t.children)
    return OrderedTree(children)


def enumerate_trees(h: int, max_width: int) -> Iterator[OrderedTree]:
    """Every ordered tree of height exactly h and width <= max_width, once.

    Canonical order: lexicographic on the preorder arity sequence, so the
    single-path tree comes first and trees with fewer root children come
    before wider roots.
    """
    if max_width < 1:
        return
    if h == 0:
        yield OrderedTree()
        return
    for k in range(1, max_width + 1):
        for children in _child_tuples(k, h - 1, max_width):
            yield OrderedTree(children)


def _child_tuples(k: int, h: int, budget: int) -> Iterator[tuple]:
    # k-tuples of height-h trees with total width <= budget, in canonical order
    if k == 1:
        for t in enumerate_trees(h, budget):
            yield (t,)
        return
    for first in enumerate_trees(h, budget - (k - 1)):
        for rest in _child_tuples(k - 1, h, budget - first.width):
            yield (first,) + rest


def embeds(t1: OrderedTree, t2: OrderedTree) -> bool:
    """Does t1 embed into t2 (same height)?

    An embedding maps nodes injectively, children to children, preserving
    each node's left-to-right child order.  Decided recursively: a node u
    fits at v iff u's child sequence admits an order-preserving injective
    assignment to v's children with each child fitting its target, which
    is a two-index dynamic program over the child lists.
    """
    if t1.height != t2.height:
        raise ValueError(f"height mismatch: {t1.height} vs {t2.height}")
    memo: dict[tuple[int, int], bool] = {}

    def fits(u: OrderedTree, v: OrderedTree) -> bool:
        if not u.children:
            return True
        if u.width > v.width or len(u.children) > len(v.children):
            return False
        key = (id(u), id(v))
        cached = memo.get(key)
        if cached is None:
            cached = _assign(u.children, v.children)
            memo[key] = cached
        return cached

    def _assign(us: tuple, vs: tuple) -> bool:
        # prev[i]: us[:i] assignable into the vs prefix scanned so far
        prev = [True] + [False] * len(us)
        for v in vs:
            cur = [True]
            for i in range(1, len(us) + 1):
                cur.append(prev[i] or (prev[i - 1] and fits(us[i - 1], v)))
            if cur[-1]:
                return True
            prev = cur
        return prev[-1]

    return fits(t1, t2)


def find_counterexample(t: OrderedTree, n: int) -> OrderedTree | None:
    """First tree (canonical order) of height(t), width <= n, not embedding in t."""
    for s in enumerate_trees(t.height, n):
        if not embeds(s, t):
            return s
    return None


def verify_universal(t: OrderedTree, n: int) -> bool:
    """Exhaustively check that every height-h tree of width <= n embeds in t.

    Feasible only for small n and h; the number of candidate trees grows
    super-exponentially.
    """
    return find_counterexample(t, n) is None


def min_leaf_geq(tree: OrderedTree, current, k: int, strict: bool):
    """Least leaf whose length-k path prefix is >= (or >) current's prefix.

    ``current`` is a leaf path of ``tree`` or BOT, which compares below
    every leaf (so the least leaf is returned even under strict).  Returns
    TOP when no leaf qualifies.  Prefixes compare lexicographically; k = 0
    prefixes are all equal, so strict fails and non-strict yields the
    overall least leaf.
    """
    if not 0 <= k <= tree.height:
        raise ValueError(f"prefix length {k} outside 0..{tree.height}")
    h = tree.height
    if current is BOT:
        return (0,) * h
    if not isinstance(current, tuple) or len(current) != h:
        raise ValueError(f"{current!r} is not a leaf path of a height-{h} tree")
    # walk the full path once: validates it and records the prefix nodes
    nodes = [tree]
    node = tree
    for i, idx in enumerate(current):
        if not 0 <= idx < len(node.children):
            raise ValueError(f"{current!r} is not a leaf path of this tree")
        node = node.children[idx]
        if i < k:
            nodes.append(node)
    if k == 0:
        return TOP if strict else (0,) * h
    if not strict:
        # leftmost completion of the same prefix; always exists
        return current[:k] + (0,) * (h - k)
    for j in range(k - 1, -1, -1):
        nxt = current[j] + 1
        if nxt < len(nodes[j].children):
            return current[:j] + (nxt,) + (0,) * (h - j - 1)
    return TOP
