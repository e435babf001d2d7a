"""Minimum group congruence and the semidirect-product picture.

Elements correspond to pairs (sigma, F) with F the range complement.  Pairs
multiply by (s1, F1)(s2, F2) = (s1 s2, F1.s2 | F2).
"""
from dataclasses import dataclass

from .core import FinPointSet, set_union
from .errors import DimensionError, NotIdempotentError, NotMaximalError
from .monoid import (
    Element,
    format_element,
    inverse,
    is_idempotent,
    max_above,
    multiply,
    natural_leq,
)
from .permutations import Perm, compose, format_perm, invert, set_image


def cmg_related(a, b):
    if a.n != b.n:
        raise DimensionError(f"dimension mismatch: {a.n} vs {b.n}")
    return a.sigma == b.sigma


def quotient_project(a):
    return a.sigma


def _require_maximal(*elements):
    for t in elements:
        if t.excluded:
            raise NotMaximalError(f"{format_element(t)} is not a maximal element")


def _require_idempotent(e):
    if not is_idempotent(e):
        raise NotIdempotentError(f"{format_element(e)} is not an idempotent")


def star_mult(u, v):
    """Group product on the maximal elements: the maximum above uv."""
    _require_maximal(u, v)
    return max_above(multiply(u, v))


def f_map(t, e):
    """Conjugate the idempotent ``e`` by the maximal element ``t``: t e t^-1."""
    _require_maximal(t)
    _require_idempotent(e)
    return multiply(multiply(t, e), inverse(t))


def h_map(s, e):
    """The semilattice automorphism e -> s^-1 e s, for a unit ``s``."""
    _require_maximal(s)
    _require_idempotent(e)
    return multiply(multiply(inverse(s), e), s)


def e_unitary_check(e, s):
    """If e <= s then s must be idempotent; returns that verdict.

    Returns True when e is not below s (nothing to check).
    """
    _require_idempotent(e)
    if natural_leq(e, s):
        return is_idempotent(s)
    return True


@dataclass(frozen=True)
class SemidirectPair:
    group_part: Perm
    lattice_part: FinPointSet

    def __post_init__(self):
        if self.group_part.n != self.lattice_part.n:
            raise DimensionError("group part and lattice part differ in dimension")

    def __str__(self):
        return "<" + format_perm(self.group_part) + "|" + str(self.lattice_part) + ">"


def encode(a):
    return SemidirectPair(a.sigma, a.range_complement)


def decode(p):
    return Element(p.group_part, set_image(p.lattice_part, invert(p.group_part)))


def semidirect_multiply(p, q):
    return SemidirectPair(
        compose(p.group_part, q.group_part),
        set_union(set_image(p.lattice_part, q.group_part), q.lattice_part),
    )
