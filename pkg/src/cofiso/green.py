"""Green's relations, D-classes and S_n-orbit canonicalization."""
import enum

from .errors import DimensionError
from .monoid import Element
from .permutations import all_perms, set_image


class GreenRelation(enum.Enum):
    R = "R"
    L = "L"
    H = "H"
    D = "D"
    J = "J"


def orbit(points):
    """The distinct images of ``points`` under S_n."""
    return {set_image(points, t) for t in all_perms(points.n)}


def orbit_canonical(points):
    """Lexicographically least member of the S_n-orbit of ``points``.

    Sets are compared as their sorted point sequences.
    """
    return min(orbit(points), key=lambda s: s.points)


def related(rel, a, b):
    if a.n != b.n:
        raise DimensionError(f"dimension mismatch: {a.n} vs {b.n}")
    rel = GreenRelation(rel)
    if rel is GreenRelation.R:
        return a.excluded == b.excluded
    if rel is GreenRelation.L:
        return a.range_complement == b.range_complement
    if rel is GreenRelation.H:
        return a.excluded == b.excluded and a.range_complement == b.range_complement
    # D and J coincide; a = s1 b s2 moves b's excluded set by one permutation
    if len(a.excluded) != len(b.excluded):
        return False
    return orbit_canonical(a.excluded) == orbit_canonical(b.excluded)


def d_class(a):
    """Every element D-related to ``a``: any permutation, any orbit image."""
    return {Element(s, d) for d in orbit(a.excluded) for s in all_perms(a.n)}
