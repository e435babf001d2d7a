"""Cofinite partial isometries of N^n in normal form.

Every element is a coordinate permutation ``sigma`` restricted to the
complement of a finite set ``excluded``.  The pair is unique, so equality of
elements is equality of pairs.  The range complement is
``set_image(excluded, sigma)``.
"""
from collections import namedtuple
from itertools import combinations

from .core import FinPointSet, box_points, empty_set, set_union
from .errors import DimensionError, NotIdempotentError, RangeError
from .permutations import Perm, all_perms, compose, format_perm, identity, invert, set_image


class Element:
    __slots__ = ("sigma", "excluded", "_hash")

    def __init__(self, sigma, excluded):
        self.sigma = sigma
        self.excluded = excluded
        self._hash = None

    @property
    def n(self):
        return self.sigma.n

    @property
    def range_complement(self):
        """N^n minus the range; the excluded set moved by sigma."""
        return set_image(self.excluded, self.sigma)

    def is_unit(self):
        return not self.excluded

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.sigma == other.sigma and self.excluded == other.excluded

    def __lt__(self, other):
        return (self.sigma.images, self.excluded.points) < (other.sigma.images, other.excluded.points)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.sigma, self.excluded))
        return self._hash

    def __mul__(self, other):
        return multiply(self, other)

    def __repr__(self):
        return f"Element({self.sigma!r}, {self.excluded!r})"

    def __str__(self):
        return format_element(self)


def make_element(sigma, excluded=None):
    """Build a validated element.

    ``sigma`` may be a Perm or a sequence of images; ``excluded`` may be a
    FinPointSet or an iterable of points (default: nothing excluded).
    """
    if not isinstance(sigma, Perm):
        sigma = Perm(sigma)
    n = sigma.n
    if n < 2:
        raise RangeError(f"n must be at least 2, got {n}")
    if excluded is None:
        excluded = empty_set(n)
    elif not isinstance(excluded, FinPointSet):
        excluded = FinPointSet(excluded, n)
    if excluded.n != n:
        raise DimensionError(f"permutation has degree {n} but excluded set has dimension {excluded.n}")
    for p in excluded:
        if any(c < 1 for c in p):
            raise ValueError(f"{p} is not a point of N^{n}")
    return Element(sigma, excluded)


def unit_element(n):
    return make_element(identity(n))


def unit_of(sigma):
    """The group unit induced by ``sigma``."""
    return Element(sigma, empty_set(sigma.n))


def idempotent(excluded):
    """The identity map restricted to the complement of ``excluded``."""
    return Element(identity(excluded.n), excluded)


def _check(a, b):
    if a.n != b.n:
        raise DimensionError(f"dimension mismatch: {a.n} vs {b.n}")


def multiply(a, b):
    """Composition "first a, then b".

    x is in the domain of ab iff x avoids a's excluded set and x.sigma_a
    avoids b's excluded set, i.e. x avoids excluded_b moved back by sigma_a.
    """
    _check(a, b)
    moved_back = set_image(b.excluded, invert(a.sigma))
    return Element(compose(a.sigma, b.sigma), set_union(a.excluded, moved_back))


def inverse(a):
    return Element(invert(a.sigma), set_image(a.excluded, a.sigma))


def is_idempotent(a):
    return a.sigma.is_identity()


def natural_leq(a, b):
    """a <= b iff a is a restriction of b: same permutation, smaller domain."""
    _check(a, b)
    return a.sigma == b.sigma and a.excluded.issuperset(b.excluded)


Factorization = namedtuple("Factorization", "unit left_idem right_idem")


def factorize(a):
    """Split ``a`` as unit * left_idem == right_idem * unit.

    left_idem is a^-1 a and right_idem is a a^-1.
    """
    return Factorization(
        unit_of(a.sigma),
        idempotent(a.range_complement),
        idempotent(a.excluded),
    )


def _require_idempotent(*elements):
    for e in elements:
        if not is_idempotent(e):
            raise NotIdempotentError(f"{format_element(e)} is not an idempotent")


def semilattice_iso(e):
    """Send an idempotent to the finite set it excludes.

    Products of idempotents go to unions.
    """
    _require_idempotent(e)
    return e.excluded


def covers(e, i):
    """True iff ``i`` covers ``e`` in the semilattice of idempotents."""
    _require_idempotent(e, i)
    _check(e, i)
    return e.excluded.issuperset(i.excluded) and len(e.excluded) == len(i.excluded) + 1


def max_above(a):
    return unit_of(a.sigma)


def subsets(points):
    """All subsets of a FinPointSet, smallest first."""
    pts = points.points
    for r in range(len(pts) + 1):
        for combo in combinations(pts, r):
            yield FinPointSet._trusted(combo, points.n)


def slice_elements(points, n=None):
    """All elements (sigma, D) with D a subset of ``points``, in sorted order."""
    n = points.n if n is None else n
    perms = all_perms(n)
    return [Element(s, d) for s in perms for d in subsets(points)]


def box_submonoid(n, m):
    """The finite inverse submonoid of elements whose excluded set lies in C_m."""
    return slice_elements(box_points(n, m), n)


def format_element(a):
    return "(" + format_perm(a.sigma) + "|" + str(a.excluded) + ")"
