"""The symmetric group S_n acting on the right of N^n by moving coordinates.

Permutations are 1-based: ``Perm((2, 3, 1))`` sends 1 to 2, 2 to 3 and 3 to 1.
Maps act on the right, so ``compose(s, t)`` means "first s, then t".
"""
from functools import lru_cache
from itertools import permutations as _itertools_permutations

from .core import FinPointSet
from .errors import DimensionError, RangeError

MAX_ENUMERATION_DEGREE = 8


class Perm:
    __slots__ = ("images", "_inv0")

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"{list(images)} is not a permutation of 1..{n}")
        self.images = images
        # zero-based preimage table, used by act()
        inv0 = [0] * n
        for i, j in enumerate(images):
            inv0[j - 1] = i
        self._inv0 = tuple(inv0)

    @property
    def n(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def __eq__(self, other):
        if not isinstance(other, Perm):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm({self.images!r})"

    def __str__(self):
        return format_perm(self)

    def is_identity(self):
        return all(j == i for i, j in enumerate(self.images, 1))


def identity(n):
    return Perm(range(1, n + 1))


def _check(a, b):
    if a.n != b.n:
        raise DimensionError(f"dimension mismatch: {a.n} vs {b.n}")


def compose(s, t):
    """The permutation i -> ((i)s)t."""
    _check(s, t)
    return Perm(t.images[j - 1] for j in s.images)


def invert(s):
    return Perm(i + 1 for i in s._inv0)


def act(p, s):
    """Move coordinate i of ``p`` to position (i)s.

    Position j of the result therefore holds coordinate (j)s^-1 of ``p``, and
    act(act(p, s), t) == act(p, compose(s, t)).
    """
    if len(p) != len(s.images):
        raise DimensionError(f"dimension mismatch: point {len(p)} vs perm {len(s.images)}")
    return tuple([p[k] for k in s._inv0])


def set_image(points, s):
    if points.n != s.n:
        raise DimensionError(f"dimension mismatch: set {points.n} vs perm {s.n}")
    if not points:
        return points
    inv0 = s._inv0
    return FinPointSet._trusted((tuple([p[k] for k in inv0]) for p in points), points.n)


@lru_cache(maxsize=None)
def all_perms(n):
    """Every element of S_n, in lexicographic order of image lists."""
    if not 2 <= n <= MAX_ENUMERATION_DEGREE:
        raise RangeError(f"enumeration of S_n supports 2 <= n <= {MAX_ENUMERATION_DEGREE}, got {n}")
    return tuple(Perm(p) for p in _itertools_permutations(range(1, n + 1)))


def format_perm(s):
    return "[" + ",".join(str(i) for i in s.images) + "]"
