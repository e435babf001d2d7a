"""Brute-force model on finite boxes.

A ``WindowMap`` is an explicit partial injection of the cube C_m = {1..m}^n.
Because C_m is invariant under every coordinate permutation, restricting
symbolic elements to C_m loses nothing when composing, so this module can
check the symbolic multiplication pointwise.
"""
import random
from collections import namedtuple
from itertools import combinations, product
from math import isqrt

from .core import FinPointSet, box_points, in_box, squared_distance
from .errors import (
    EmptyDomain,
    ExcludedSetOutsideBox,
    NotCoordinatePermutation,
    RangeError,
    TooCloseToUpperBoundary,
)
from .monoid import Element, format_element, multiply
from .permutations import act, all_perms


class WindowMap:
    """Finite partial injection of C_m, stored as a source -> target dict."""

    __slots__ = ("n", "m", "pairs")

    def __init__(self, n, m, pairs):
        pairs = dict(pairs)
        if len(set(pairs.values())) != len(pairs):
            raise ValueError("window map is not injective")
        for x, y in pairs.items():
            if len(x) != n or len(y) != n or not (in_box(x, m) and in_box(y, m)):
                raise ValueError(f"pair {x} -> {y} does not lie in C_{m} of dimension {n}")
        self.n = n
        self.m = m
        self.pairs = pairs

    @classmethod
    def _trusted(cls, n, m, pairs):
        self = cls.__new__(cls)
        self.n, self.m, self.pairs = n, m, pairs
        return self

    @property
    def domain(self):
        return FinPointSet._trusted(self.pairs, self.n)

    def __eq__(self, other):
        if not isinstance(other, WindowMap):
            return NotImplemented
        return (self.n, self.m, self.pairs) == (other.n, other.m, other.pairs)

    def __len__(self):
        return len(self.pairs)

    def __repr__(self):
        return f"WindowMap(n={self.n}, m={self.m}, {len(self.pairs)} pairs)"


def identity_window(n, m):
    return WindowMap._trusted(n, m, {x: x for x in box_points(n, m)})


def empty_window(n, m):
    return WindowMap._trusted(n, m, {})


def is_partial_isometry(w):
    items = list(w.pairs.items())
    for (x1, y1), (x2, y2) in combinations(items, 2):
        if squared_distance(x1, x2) != squared_distance(y1, y2):
            return False
    return True


def compose_windows(w1, w2):
    """First w1, then w2; defined where w1 is defined and lands in dom w2."""
    if (w1.n, w1.m) != (w2.n, w2.m):
        raise RangeError(f"box mismatch: C_{w1.m}^{w1.n} vs C_{w2.m}^{w2.n}")
    second = w2.pairs
    pairs = {x: second[y] for x, y in w1.pairs.items() if y in second}
    return WindowMap._trusted(w1.n, w1.m, pairs)


def render(a, m):
    """Restrict ``a`` to the box C_m."""
    if not all(in_box(p, m) for p in a.excluded):
        raise ExcludedSetOutsideBox(f"{format_element(a)} excludes points outside C_{m}")
    excluded = a.excluded
    sigma = a.sigma
    pairs = {x: act(x, sigma) for x in box_points(a.n, m) if x not in excluded}
    return WindowMap._trusted(a.n, m, pairs)


Recognition = namedtuple("Recognition", "element ambiguous")


def recognize(w):
    """Recover the normal form of a window map.

    Finds every coordinate permutation consistent with all pairs; picks the
    lexicographically least and flags the result ambiguous if more than one
    fits.  Excluded set is the part of C_m outside the domain.
    """
    if not w.pairs:
        raise EmptyDomain("cannot recognize a window map with empty domain")
    fits = [s for s in all_perms(w.n) if all(act(x, s) == y for x, y in w.pairs.items())]
    if not fits:
        raise NotCoordinatePermutation("window map is not a restricted coordinate permutation")
    box = box_points(w.n, w.m)
    excluded = FinPointSet._trusted(box.members.difference(w.pairs), w.n)
    return Recognition(Element(fits[0], excluded), len(fits) > 1)


def _near_cube(x):
    return product(*[range(max(1, c - 1), c + 2) for c in x])


def count_unit_neighbors(x, m):
    """Number of points of C_m at distance exactly 1 from ``x``."""
    if not in_box(x, m):
        raise RangeError(f"{x} is not in C_{m}")
    if any(c + 1 > m for c in x):
        raise TooCloseToUpperBoundary(f"C_{m} truncates the unit sphere around {x}")
    # every lattice neighbour at distance 1 lies in the 3^n cube around x
    return sum(1 for y in _near_cube(x) if squared_distance(x, y) == 1)


def integer_terms_scan(x, y, bound):
    """Indices i in [0, bound] for which (x+i)^2 + y is a perfect square."""
    hits = []
    for i in range(bound + 1):
        v = (x + i) * (x + i) + y
        if isqrt(v) ** 2 == v:
            hits.append(i)
    return hits


def random_element(rng, n, m, max_excluded=6):
    """A random element whose excluded set lies in C_m."""
    box = box_points(n, m).points
    k = rng.randint(0, min(max_excluded, len(box)))
    return Element(rng.choice(all_perms(n)), FinPointSet._trusted(rng.sample(box, k), n))


SweepReport = namedtuple("SweepReport", "name checked skipped failures")


def oracle_sweep(n, m, cases, rng, max_excluded=6):
    """Compare symbolic multiplication with pointwise window composition."""
    failures = []
    for _ in range(cases):
        a = random_element(rng, n, m, max_excluded)
        b = random_element(rng, n, m, max_excluded)
        if compose_windows(render(a, m), render(b, m)) != render(multiply(a, b), m):
            failures.append(f"{format_element(a)} * {format_element(b)}")
    return SweepReport("oracle-equivalence", cases, 0, failures)


def round_trip_sweep(n, m, cases, rng, max_excluded=6):
    """recognize(render(a)) == a, skipping windows that do not pin sigma."""
    failures = []
    skipped = 0
    for _ in range(cases):
        a = random_element(rng, n, m, max_excluded)
        w = render(a, m)
        if not w.pairs:
            skipped += 1
            continue
        got = recognize(w)
        if got.ambiguous:
            skipped += 1
        elif got.element != a:
            failures.append(format_element(a))
    return SweepReport("round-trip", cases - skipped, skipped, failures)


def run_sweeps(n, m, cases, seed=0, max_excluded=6):
    rng = random.Random(seed)
    return [
        oracle_sweep(n, m, cases, rng, max_excluded),
        round_trip_sweep(n, m, cases, rng, max_excluded),
    ]
