import pytest
from hypothesis import given, strategies as st

from cofiso import (
    DimensionError,
    FinPointSet,
    NotIdempotentError,
    Perm,
    RangeError,
    box_points,
    box_submonoid,
    covers,
    empty_set,
    factorize,
    idempotent,
    identity,
    inverse,
    is_idempotent,
    make_element,
    max_above,
    multiply,
    natural_leq,
    semilattice_iso,
    set_image,
    slice_elements,
    unit_element,
    unit_of,
)
from cofiso.monoid import subsets
import pointwise
from conftest import element_tuples, elements

SWAP = Perm([2, 1])
ID2 = identity(2)


def el(images, points=()):
    return make_element(images, FinPointSet(points, len(images)))


def test_make_element_examples():
    assert el([1, 2]) == unit_element(2)
    a = el([2, 1], [(1, 2)])
    assert a.sigma == SWAP and a.excluded.points == ((1, 2),)
    whole = make_element(ID2, box_points(2, 2))
    assert len(whole.excluded) == 4


def test_make_element_errors():
    with pytest.raises(RangeError):
        make_element([1])
    with pytest.raises(DimensionError):
        make_element([2, 1], FinPointSet([(1, 1, 1)]))


def test_unit_laws():
    a = el([2, 1], [(1, 2), (3, 3)])
    u = unit_element(2)
    assert multiply(u, a) == a
    assert multiply(a, u) == a


def test_idempotent_square():
    e = el([1, 2], [(1, 1)])
    assert multiply(e, e) == e


def test_multiply_example_against_pointwise_composition():
    a = el([2, 1], [(1, 2)])
    b = el([1, 2], [(3, 1)])
    # frozen from the pointwise model on C_4
    t = pointwise.compose(pointwise.table((2, 1), {(1, 2)}, 4), pointwise.table((1, 2), {(3, 1)}, 4))
    assert pointwise.from_table(t, 2, 4) == ((2, 1), frozenset({(1, 2), (1, 3)}))
    assert multiply(a, b) == el([2, 1], [(1, 2), (1, 3)])


def test_multiply_dimension_mismatch():
    with pytest.raises(DimensionError):
        multiply(unit_element(2), unit_element(3))


def test_inverse_examples():
    d = FinPointSet([(1, 3), (2, 2)])
    assert inverse(idempotent(d)) == idempotent(d)
    a = el([2, 1], [(1, 2)])
    ai = inverse(a)
    assert ai == el([2, 1], [(2, 1)])
    assert multiply(multiply(a, ai), a) == a
    assert multiply(multiply(ai, a), ai) == ai
    s = Perm([2, 3, 1])
    assert inverse(unit_of(s)) == unit_of(Perm([3, 1, 2]))


def test_is_idempotent_examples():
    assert is_idempotent(el([1, 2], [(5, 7)]))
    assert not is_idempotent(el([2, 1]))
    assert is_idempotent(unit_element(2))


def test_natural_leq_examples():
    p, q = (1, 2), (4, 1)
    s = Perm([2, 3, 1])
    assert natural_leq(make_element(s, FinPointSet([(1, 2, 1), (4, 1, 1)])), make_element(s, FinPointSet([(1, 2, 1)])))
    assert natural_leq(el([2, 1], [p, q]), el([2, 1], [p]))
    assert not natural_leq(el([2, 1], [p]), el([1, 2], [p]))
    a = el([2, 1], [p])
    assert natural_leq(a, a)


def test_natural_leq_matches_definition_on_s22():
    # natural order: a <= b iff a = b e for some idempotent e
    elems = box_submonoid(2, 2)
    idems = [e for e in elems if is_idempotent(e)]
    for a in elems:
        for b in elems:
            assert natural_leq(a, b) == any(multiply(b, e) == a for e in idems)


def test_factorize_examples():
    a = el([2, 1], [(1, 2)])
    f = factorize(a)
    assert f.unit == el([2, 1])
    assert f.left_idem == el([1, 2], [(2, 1)])
    assert f.right_idem == el([1, 2], [(1, 2)])
    assert multiply(f.unit, f.left_idem) == a
    assert multiply(f.right_idem, f.unit) == a

    u = unit_element(2)
    assert tuple(factorize(u)) == (u, u, u)

    e = el([1, 2], [(2, 3), (1, 1)])
    assert tuple(factorize(e)) == (u, e, e)


@given(elements())
def test_factorization_identities(a):
    f = factorize(a)
    assert multiply(f.unit, f.left_idem) == a == multiply(f.right_idem, f.unit)
    assert f.left_idem == multiply(inverse(a), a)
    assert f.right_idem == multiply(a, inverse(a))
    # sigma_l a is idempotent and equals a^-1 a
    assert multiply(inverse(f.unit), a) == f.left_idem


def test_factorization_unique_in_slice_s22():
    elems = box_submonoid(2, 2)
    units = [a for a in elems if a.is_unit()]
    idems = [a for a in elems if is_idempotent(a)]
    for a in elems:
        left = [(u, e) for u in units for e in idems if multiply(u, e) == a]
        right = [(e, u) for u in units for e in idems if multiply(e, u) == a]
        f = factorize(a)
        assert left == [(f.unit, f.left_idem)]
        assert right == [(f.right_idem, f.unit)]


def test_semilattice_iso_examples():
    assert semilattice_iso(unit_element(2)) == empty_set(2)
    assert semilattice_iso(el([1, 2], [(1, 2)])) == FinPointSet([(1, 2)])
    p, q = (1, 2), (3, 3)
    assert semilattice_iso(multiply(el([1, 2], [p]), el([1, 2], [q]))) == FinPointSet([p, q])
    with pytest.raises(NotIdempotentError):
        semilattice_iso(el([2, 1]))


@given(st.sampled_from([2, 3]).flatmap(lambda n: st.tuples(elements(n), elements(n))))
def test_semilattice_iso_is_a_homomorphism(pair):
    e, i = (idempotent(x.excluded) for x in pair)
    assert multiply(e, i) == multiply(i, e)
    assert semilattice_iso(multiply(e, i)) == semilattice_iso(e) | semilattice_iso(i)


def test_covers_examples():
    p, q, r = (1, 2), (2, 1), (3, 3)
    assert covers(el([1, 2], [p, q]), el([1, 2], [p]))
    assert not covers(el([1, 2], [p]), el([1, 2], [p]))
    assert not covers(el([1, 2], [p, q, r]), el([1, 2], [p]))
    assert not covers(el([1, 2], [q, r]), el([1, 2], [p]))
    with pytest.raises(NotIdempotentError):
        covers(el([2, 1], [p]), el([1, 2]))


def test_saturated_chains_drop_one_point_per_step():
    # omega-chain restatement: inside the idempotents excluding subsets of P,
    # covering pairs are exactly the one-point extensions
    P = FinPointSet([(1, 2), (2, 1), (3, 3)])
    idems = [idempotent(d) for d in subsets(P)]
    for e in idems:
        for i in idems:
            strictly_below = natural_leq(e, i) and e != i
            no_between = not any(
                natural_leq(e, k) and natural_leq(k, i) and k not in (e, i) for k in idems
            )
            assert covers(e, i) == (strictly_below and no_between)


def test_max_above_examples():
    a = el([2, 1], [(1, 2)])
    assert max_above(a) == el([2, 1])
    assert natural_leq(a, max_above(a))
    # brute force: all b >= a with excluded set inside a's
    above = [b for b in slice_elements(a.excluded) if natural_leq(a, b)]
    maximal = [b for b in above if not any(natural_leq(b, c) and c != b for c in above)]
    assert maximal == [max_above(a)]
    assert max_above(unit_element(2)) == unit_element(2)
    u = unit_of(Perm([3, 1, 2]))
    assert max_above(u) == u


@given(element_tuples(3))
def test_associativity(triple):
    a, b, c = triple
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


@given(element_tuples(2))
def test_inverse_semigroup_axioms(pair):
    a, b = pair
    ai = inverse(a)
    assert multiply(multiply(a, ai), a) == a
    assert multiply(multiply(ai, a), ai) == ai
    assert inverse(multiply(a, b)) == multiply(inverse(b), ai)
    e, f = multiply(a, ai), multiply(b, inverse(b))
    assert multiply(e, f) == multiply(f, e)


@given(element_tuples(2, m=3, max_size=4))
def test_multiply_agrees_with_pointwise_model(pair):
    a, b = pair
    m = 3
    ta = pointwise.table(a.sigma.images, a.excluded.members, m)
    tb = pointwise.table(b.sigma.images, b.excluded.members, m)
    ab = multiply(a, b)
    assert pointwise.compose(ta, tb) == pointwise.table(ab.sigma.images, ab.excluded.members, m)


@pytest.mark.parametrize("n, m", [(2, 2), (3, 1)])
def test_box_submonoid_closed(n, m):
    elems = set(box_submonoid(n, m))
    for a in elems:
        assert inverse(a) in elems
        for b in elems:
            assert multiply(a, b) in elems


def test_generated_by_units_and_idempotents():
    elems = box_submonoid(2, 2)
    for a in elems:
        f = factorize(a)
        assert f.unit.is_unit() and is_idempotent(f.left_idem)
        assert multiply(f.unit, f.left_idem) == a


def test_element_equality_and_operator():
    a = el([2, 1], [(1, 2)])
    assert a == el([2, 1], [(1, 2)])
    assert hash(a) == hash(el([2, 1], [(1, 2)]))
    assert a * inverse(a) == el([1, 2], [(1, 2)])
    assert a.range_complement == set_image(a.excluded, a.sigma)
