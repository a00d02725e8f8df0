"""Ordered vertex sequences with O(1) pred/succ and O(log n) rank surgery.

A PathSeq threads three views over the same nodes: a height-balanced
search tree keyed by path position (with subtree sizes) for half/split/
concat, a doubly linked list for constant-time pred/succ and traversal,
and a locator map vertex -> node.  The locator is shared by every
PathSeq split off the same family, so split/concat stay O(log n);
membership resolves the node's current root through parent pointers.

The balance scheme is a join-based AVL: split and concatenate are built
on a height-balanced join, so every operation keeps |bf| <= 1 at every
node and the classic AVL height bound 1.4405 * log2(size + 2) holds.

split_before and concat consume their inputs; a consumed PathSeq raises
on further use when debug checks are on.
"""

from __future__ import annotations

from .errors import InvalidArgumentError

__all__ = ["PathSeq", "ArrayPathSeq"]

# module-wide debug switch: audits balance, order agreement and the
# locator bijection after every mutation (tests flip this on)
DEBUG_AUDIT = False


class _Node:
    __slots__ = ("vertex", "left", "right", "parent", "height", "size", "prev", "next")

    def __init__(self, vertex):
        self.vertex = vertex
        self.left = None
        self.right = None
        self.parent = None
        self.height = 1
        self.size = 1
        self.prev = None
        self.next = None


def _h(t):
    return t.height if t is not None else 0


def _sz(t):
    return t.size if t is not None else 0


def _mk(x, a, b):
    """Reattach node x with children a, b; x becomes a detached subtree root."""
    x.left = a
    x.right = b
    if a is not None:
        a.parent = x
    if b is not None:
        b.parent = x
    x.parent = None
    ha = a.height if a is not None else 0
    hb = b.height if b is not None else 0
    x.height = (ha if ha > hb else hb) + 1
    x.size = (a.size if a is not None else 0) + (b.size if b is not None else 0) + 1
    return x


def _rot_left(x):
    r = x.right
    return _mk(r, _mk(x, x.left, r.left), r.right)


def _rot_right(x):
    l = x.left
    return _mk(l, l.left, _mk(x, l.right, x.right))


def _join_right(tl, k, tr):
    # invariant: h(tl) > h(tr) + 1
    l, c = tl.left, tl.right
    if _h(c) <= _h(tr) + 1:
        t = _mk(k, c, tr)
        if t.height <= _h(l) + 1:
            return _mk(tl, l, t)
        return _rot_left(_mk(tl, l, _rot_right(t)))
    t = _join_right(c, k, tr)
    t2 = _mk(tl, l, t)
    if t.height <= _h(l) + 1:
        return t2
    return _rot_left(t2)


def _join_left(tl, k, tr):
    # invariant: h(tr) > h(tl) + 1
    c, r = tr.left, tr.right
    if _h(c) <= _h(tl) + 1:
        t = _mk(k, tl, c)
        if t.height <= _h(r) + 1:
            return _mk(tr, t, r)
        return _rot_right(_mk(tr, _rot_left(t), r))
    t = _join_left(tl, k, c)
    t2 = _mk(tr, t, r)
    if t.height <= _h(r) + 1:
        return t2
    return _rot_right(t2)


def _join(tl, k, tr):
    """Join tl + [k] + tr into one balanced tree; k must be detached."""
    hl, hr = _h(tl), _h(tr)
    if hl > hr + 1:
        return _join_right(tl, k, tr)
    if hr > hl + 1:
        return _join_left(tl, k, tr)
    return _mk(k, tl, tr)


def _split(t, k):
    """Split into (first k nodes, rest); both results are detached roots."""
    if t is None:
        return None, None
    l, r = t.left, t.right
    if l is not None:
        l.parent = None
    if r is not None:
        r.parent = None
    ls = _sz(l)
    if k <= ls:
        a, b = _split(l, k)
        return a, _join(b, t, r)
    a, b = _split(r, k - ls - 1)
    return _join(l, t, a), b


def _root_of(nd):
    while nd.parent is not None:
        nd = nd.parent
    return nd


def _build(vertices, lo, hi):
    """Perfectly balanced tree over vertices[lo:hi), O(k)."""
    if lo >= hi:
        return None
    mid = (lo + hi) // 2
    node = vertices[mid]
    return _mk(node, _build(vertices, lo, mid), _build(vertices, mid + 1, hi))


class PathSeq:
    """An ordered sequence of distinct vertices (a path, or a cut cycle)."""

    def __init__(self, vertices):
        """Build from a nonempty iterable of distinct vertices, O(k)."""
        vs = list(vertices)
        if not vs:
            raise InvalidArgumentError("PathSeq requires at least one vertex")
        nodes = [_Node(v) for v in vs]
        self._loc = {}
        for nd in nodes:
            if nd.vertex in self._loc:
                raise InvalidArgumentError(f"duplicate vertex {nd.vertex}")
            self._loc[nd.vertex] = nd
        for a, b in zip(nodes, nodes[1:]):
            a.next = b
            b.prev = a
        self._root = _build(nodes, 0, len(nodes))
        self._head = nodes[0]
        self._tail = nodes[-1]
        self._alive = True
        if DEBUG_AUDIT:
            self._audit()

    # -- construction helpers --------------------------------------------

    @classmethod
    def _wrap(cls, root, head, tail, loc):
        p = cls.__new__(cls)
        p._root = root
        p._head = head
        p._tail = tail
        p._loc = loc
        p._alive = True
        return p

    def _check_alive(self):
        if not self._alive:
            raise InvalidArgumentError("PathSeq was consumed by split/concat")

    # -- O(1) queries ------------------------------------------------------

    def __len__(self):
        return self._root.size

    def start(self):
        return self._head.vertex

    def end(self):
        return self._tail.vertex

    def contains(self, v) -> bool:
        """Membership on this path, O(log n).

        The locator is family-shared, so a hit there only says v belongs
        to some path split off the same material; the root walk settles
        which one.
        """
        nd = self._loc.get(v)
        return nd is not None and _root_of(nd) is self._root

    def __contains__(self, v):
        return self.contains(v)

    def pred(self, v):
        """Vertex before v on the path, None at the start. O(1)."""
        nd = self._loc.get(v)
        if nd is None:
            raise InvalidArgumentError(f"vertex {v} not on this path")
        return nd.prev.vertex if nd.prev is not None else None

    def succ(self, v):
        """Vertex after v on the path, None at the end. O(1)."""
        nd = self._loc.get(v)
        if nd is None:
            raise InvalidArgumentError(f"vertex {v} not on this path")
        return nd.next.vertex if nd.next is not None else None

    # -- O(log n) queries --------------------------------------------------

    def rank(self, v) -> int:
        """1-based position of v on the path, O(log n) via subtree sizes."""
        nd = self._loc.get(v)
        if nd is None:
            raise InvalidArgumentError(f"vertex {v} not on this path")
        r = _sz(nd.left) + 1
        while nd.parent is not None:
            p = nd.parent
            if nd is p.right:
                r += _sz(p.left) + 1
            nd = p
        return r

    def half(self, v) -> bool:
        """True iff v sits in the first half: rank(v) <= ceil(|P| / 2)."""
        return self.rank(v) <= (self._root.size + 1) // 2

    # -- structural operations ---------------------------------------------

    def split_before(self, v):
        """Split into (prefix ending at pred(v), suffix starting at v).

        Consumes self; O(log n).  Both halves keep the shared family
        locator.
        """
        self._check_alive()
        nd = self._loc.get(v)
        if nd is None:
            raise InvalidArgumentError(f"vertex {v} not on this path")
        if nd is self._head:
            raise InvalidArgumentError("cannot split before the start vertex")
        k = self.rank(v) - 1
        left_root, right_root = _split(self._root, k)
        lhead, ltail = self._head, nd.prev
        rhead, rtail = nd, self._tail
        ltail.next = None
        nd.prev = None
        self._alive = False
        left = PathSeq._wrap(left_root, lhead, ltail, self._loc)
        right = PathSeq._wrap(right_root, rhead, rtail, self._loc)
        if DEBUG_AUDIT:
            left._audit()
            right._audit()
        return left, right

    def concat(self, other: "PathSeq") -> "PathSeq":
        """Sequence self followed by other; consumes both. O(log n).

        Vertex-set disjointness is the caller's obligation; it is checked
        only under debug audits to keep the production cost logarithmic.
        """
        self._check_alive()
        other._check_alive()
        if DEBUG_AUDIT and self._loc is not other._loc \
                and (set(self.to_list()) & set(other.to_list())):
            raise InvalidArgumentError("concat requires disjoint vertex sets")
        # detach the last node of self as the join pivot
        if self._root.size == 1:
            pivot = self._root
            pivot.left = pivot.right = pivot.parent = None
            pivot.size, pivot.height = 1, 1
            root = _join(None, pivot, other._root)
        else:
            lrest, pivot_tree = _split(self._root, self._root.size - 1)
            root = _join(lrest, pivot_tree, other._root)
        self._tail.next = other._head
        other._head.prev = self._tail
        if self._loc is other._loc:
            # same family: the shared locator already covers both halves
            loc = self._loc
        else:
            # adopt the smaller family's entries; costs O(new material) once,
            # since a family is only ever merged in whole
            if len(self._loc) >= len(other._loc):
                loc, add = self._loc, other._loc
            else:
                loc, add = other._loc, self._loc
            loc.update(add)
        self._alive = other._alive = False
        out = PathSeq._wrap(root, self._head, other._tail, loc)
        if DEBUG_AUDIT:
            out._audit()
        return out

    # -- linear exports ------------------------------------------------------

    def to_list(self):
        out = []
        cur = self._head
        while cur is not None:
            out.append(cur.vertex)
            cur = cur.next
        return out

    def to_list_reversed(self):
        out = []
        cur = self._tail
        while cur is not None:
            out.append(cur.vertex)
            cur = cur.prev
        return out

    # -- debug -----------------------------------------------------------

    def _audit(self):
        """Full structural audit: balance, sizes, order agreement, locator."""
        import math

        order = []

        def rec(t, parent):
            if t is None:
                return 0, 0
            assert t.parent is parent, "broken parent pointer"
            hl, sl = rec(t.left, t)
            order.append(t)
            hr, sr = rec(t.right, t)
            assert abs(hl - hr) <= 1, "AVL balance violated"
            assert t.height == max(hl, hr) + 1, "stale height"
            assert t.size == sl + sr + 1, "stale size"
            return t.height, t.size

        h, s = rec(self._root, None)
        assert h <= 1.4405 * math.log2(s + 2), "height exceeds AVL bound"
        linked = []
        cur = self._head
        while cur is not None:
            linked.append(cur)
            cur = cur.next
        assert order == linked, "tree in-order differs from linked-list order"
        for nd in linked:
            assert self._loc.get(nd.vertex) is nd, "locator misses a member"
        assert self._tail is linked[-1] and self._head is linked[0]


class ArrayPathSeq:
    """Naive list-backed reference implementation used as a test oracle."""

    def __init__(self, vertices):
        self.items = list(vertices)
        if not self.items:
            raise InvalidArgumentError("empty sequence")
        if len(set(self.items)) != len(self.items):
            raise InvalidArgumentError("duplicate vertex")

    def __len__(self):
        return len(self.items)

    def start(self):
        return self.items[0]

    def end(self):
        return self.items[-1]

    def contains(self, v):
        return v in self.items

    def pred(self, v):
        i = self.items.index(v)
        return self.items[i - 1] if i > 0 else None

    def succ(self, v):
        i = self.items.index(v)
        return self.items[i + 1] if i + 1 < len(self.items) else None

    def rank(self, v):
        return self.items.index(v) + 1

    def half(self, v):
        return self.rank(v) <= (len(self.items) + 1) // 2

    def split_before(self, v):
        i = self.items.index(v)
        if i == 0:
            raise InvalidArgumentError("cannot split before the start vertex")
        return ArrayPathSeq(self.items[:i]), ArrayPathSeq(self.items[i:])

    def concat(self, other):
        return ArrayPathSeq(self.items + other.items)

    def __contains__(self, v):
        return v in self.items

    def to_list(self):
        return list(self.items)

    def to_list_reversed(self):
        return list(reversed(self.items))
