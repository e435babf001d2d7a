"""Exact lattice geometry on N^n: points, finite point sets and boxes.

A point is a plain tuple of positive integers.  Distances are always kept
squared so that every comparison is an integer comparison.
"""
from functools import lru_cache
from itertools import product

from .errors import DimensionError, RangeError

Point = tuple


def make_point(coords):
    """Validate ``coords`` and return it as a tuple."""
    p = tuple(coords)
    if len(p) < 2:
        raise DimensionError(f"points need at least 2 coordinates, got {len(p)}")
    for c in p:
        if not isinstance(c, int) or isinstance(c, bool) or c < 1:
            raise ValueError(f"coordinates must be positive integers, got {c!r}")
    return p


def squared_distance(p, q):
    if len(p) != len(q):
        raise DimensionError(f"dimension mismatch: {len(p)} vs {len(q)}")
    return sum((a - b) * (a - b) for a, b in zip(p, q))


class FinPointSet:
    """A finite set of points of one fixed dimension, kept in lexicographic order.

    The dimension is stored explicitly so that the empty set still knows where
    it lives.  Instances are immutable and hashable.
    """

    __slots__ = ("n", "points", "_members", "_hash")

    def __init__(self, points=(), n=None):
        pts = [tuple(p) for p in points]
        if n is None:
            if not pts:
                raise DimensionError("the dimension of an empty point set must be given")
            n = len(pts[0])
        for p in pts:
            if len(p) != n:
                raise DimensionError(f"point {p} does not have dimension {n}")
        self.n = n
        self._members = frozenset(pts)
        self.points = tuple(sorted(self._members))
        self._hash = None

    @classmethod
    def _trusted(cls, members, n):
        # members are known to be valid tuples of dimension n
        self = cls.__new__(cls)
        self.n = n
        self._members = frozenset(members)
        self.points = tuple(sorted(self._members))
        self._hash = None
        return self

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __contains__(self, p):
        return p in self._members

    def __eq__(self, other):
        if not isinstance(other, FinPointSet):
            return NotImplemented
        return self.n == other.n and self.points == other.points

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.points))
        return self._hash

    def __or__(self, other):
        return set_union(self, other)

    def __repr__(self):
        return f"FinPointSet({list(self.points)!r}, n={self.n})"

    def __str__(self):
        return format_point_set(self)

    @property
    def members(self):
        return self._members

    def issubset(self, other):
        return self._members <= other._members

    def issuperset(self, other):
        return self._members >= other._members


def empty_set(n):
    return FinPointSet((), n)


def set_union(a, b):
    if a.n != b.n:
        raise DimensionError(f"dimension mismatch: {a.n} vs {b.n}")
    return FinPointSet._trusted(a.members | b.members, a.n)


@lru_cache(maxsize=64)
def box_points(n, m):
    """All m**n points of the cube {1..m}^n, in canonical order."""
    if n < 2:
        raise DimensionError(f"boxes need n >= 2, got {n}")
    if m < 1:
        raise RangeError(f"box side must be >= 1, got {m}")
    return FinPointSet._trusted(product(range(1, m + 1), repeat=n), n)


def in_box(p, m):
    return all(1 <= c <= m for c in p)


def format_point(p):
    return "(" + ",".join(str(c) for c in p) + ")"


def format_point_set(s):
    return "{" + ";".join(format_point(p) for p in s.points) + "}"
