"""Cofinite partial isometries of N^n (n >= 2) in normal form.

An element is a coordinate permutation restricted to the complement of a
finite set.  The package provides multiplication, inversion, the natural
order, Green's relations, the minimum group congruence and the
semidirect-product encoding, together with a brute-force model on finite
boxes used to check all of it.
"""
from .core import FinPointSet, box_points, empty_set, make_point, set_union, squared_distance
from .errors import (
    CofisoError,
    DimensionError,
    EmptyDomain,
    ExcludedSetOutsideBox,
    NotCoordinatePermutation,
    NotIdempotentError,
    NotMaximalError,
    ParseError,
    RangeError,
    SliceTooLarge,
    TooCloseToUpperBoundary,
)
from .permutations import Perm, act, all_perms, compose, identity, invert, set_image
from .monoid import (
    Element,
    box_submonoid,
    covers,
    factorize,
    idempotent,
    inverse,
    is_idempotent,
    make_element,
    max_above,
    multiply,
    natural_leq,
    semilattice_iso,
    slice_elements,
    unit_element,
    unit_of,
)
from .green import GreenRelation, d_class, orbit_canonical, related
from .congruence import (
    SemidirectPair,
    cmg_related,
    decode,
    e_unitary_check,
    encode,
    f_map,
    h_map,
    quotient_project,
    semidirect_multiply,
    star_mult,
)
from .window import (
    WindowMap,
    compose_windows,
    count_unit_neighbors,
    integer_terms_scan,
    is_partial_isometry,
    recognize,
    render,
)
from .syntax import format_element, parse_element

__version__ = "0.1.0"
