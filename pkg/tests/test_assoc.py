from itertools import product

import pytest

from polyassoc import (
    MultilinearPoly,
    Ring,
    SlotWindows,
    SparsePoly,
    XorShift64Star,
    associated_value,
    associative_multilinear,
    compose_closed_form,
    compose_substitution,
    is_associative,
    parse_poly,
)

CUBIC_EXAMPLE = "9*x1*x2*x3 + 3*(x1*x2 + x2*x3 + x3*x1) + x1 + x2 + x3"


def test_slot_windows_partition():
    for n in range(2, 7):
        full = (1 << (2 * n - 1)) - 1
        for slot in range(1, n + 1):
            w = SlotWindows(n, slot)
            assert w.prefix_mask & w.window_mask == 0
            assert w.window_mask & w.suffix_mask == 0
            assert w.prefix_mask | w.window_mask | w.suffix_mask == full
        assert SlotWindows(n, 1).prefix_mask == 0
        assert SlotWindows(n, n).suffix_mask == 0
    with pytest.raises(ValueError):
        SlotWindows(3, 4)


def test_compose_substitution_binary_examples():
    plus = parse_poly("x1 + x2", 2, Ring.Z)
    assert compose_substitution(plus, 1) == parse_poly("x1 + x2 + x3", 3, Ring.Z)
    times = parse_poly("x1*x2", 2, Ring.Z)
    assert compose_substitution(times, 1) == parse_poly("x1*x2*x3", 3, Ring.Z)
    skewed = parse_poly("2*x1*x2 + x1", 2, Ring.Z)
    assert compose_substitution(skewed, 1) == parse_poly(
        "4*x1*x2*x3 + 2*x1*x3 + 2*x1*x2 + x1", 3, Ring.Z
    )
    assert compose_substitution(skewed, 2) == parse_poly(
        "4*x1*x2*x3 + 2*x1*x2 + x1", 3, Ring.Z
    )


def test_compose_closed_form_single_coefficients():
    times = parse_poly("x1*x2", 2, Ring.Z).to_multilinear()
    composed = compose_closed_form(times, 1)
    assert composed.coeff(0b111) == 1
    assert sum(1 for v in composed.coeffs.values() if v) == 1

    const = SparsePoly.constant(Ring.Z, 2, 5).to_multilinear()
    for slot in (1, 2):
        table = compose_closed_form(const, slot)
        assert table.coeff(0) == 5
        assert table.degree() == 0

    cubic = parse_poly(CUBIC_EXAMPLE, 3, Ring.Z).to_multilinear()
    assert compose_closed_form(cubic, 1).coeff((1 << 5) - 1) == 81


def test_closed_form_matches_substitution_exhaustive_binary():
    for c0, c1, c2, c12 in product((-1, 0, 1), repeat=4):
        ml = MultilinearPoly(Ring.Z, 2, {0: c0, 1: c1, 2: c2, 3: c12})
        sparse = ml.to_sparse()
        for slot in (1, 2):
            assert compose_closed_form(ml, slot).to_sparse() == compose_substitution(
                sparse, slot
            )


def test_closed_form_matches_substitution_random():
    rng = XorShift64Star(97)
    for ring in (Ring.Z, Ring.ZI):
        for n in (3, 4):
            for _ in range(60):
                ml = MultilinearPoly(
                    ring, n, {m: rng.element(ring, 3) for m in range(1 << n)}
                )
                sparse = ml.to_sparse()
                for slot in range(1, n + 1):
                    assert compose_closed_form(ml, slot).to_sparse() == compose_substitution(
                        sparse, slot
                    )


def test_is_associative_positive_fixtures():
    assert is_associative(parse_poly(CUBIC_EXAMPLE, 3, Ring.Z)).associative
    assert is_associative(parse_poly("x1 - x2 + x3", 3, Ring.Z)).associative
    assert is_associative(SparsePoly.constant(Ring.Z, 4, 7)).associative
    assert is_associative(parse_poly("x1", 2, Ring.Z)).associative
    assert is_associative(parse_poly("x1*x2*x3*x4", 4, Ring.Z)).associative


def test_is_associative_witness_fixture():
    verdict = is_associative(parse_poly("2*x1*x2 + x1", 2, Ring.Z))
    assert not verdict.associative
    w = verdict.witness
    assert (w.slot, w.subset, w.lhs, w.rhs) == (2, (1, 3), 2, 0)
    assert w.monomial == (1, 0, 1)
    assert w.monomial_str() == "x1*x3"


def test_witness_indicator_point_distinguishes():
    rng = XorShift64Star(101)
    found = 0
    for _ in range(300):
        ml = MultilinearPoly(Ring.Z, 3, {m: rng.element(Ring.Z, 2) for m in range(8)})
        verdict = associative_multilinear(ml)
        if verdict.associative:
            continue
        found += 1
        w = verdict.witness
        point = w.indicator_point
        sparse = ml.to_sparse()
        assert associated_value(sparse, 1, point) != associated_value(sparse, w.slot, point)
    assert found > 100


def test_non_multilinear_inputs_disprove_by_expansion():
    square = SparsePoly(Ring.Z, 2, {(2, 0): 1})  # x1^2
    verdict = is_associative(square)
    assert not verdict.associative
    w = verdict.witness
    assert w.subset is None
    base = compose_substitution(square, 1)
    other = compose_substitution(square, w.slot)
    zero = Ring.Z.zero
    assert base.terms.get(w.monomial, zero) == w.lhs
    assert other.terms.get(w.monomial, zero) == w.rhs
    assert w.lhs != w.rhs

    cube_plus = parse_poly("x1^2*x2 + x2", 2, Ring.Z)
    assert not is_associative(cube_plus).associative


def test_symmetric_shortcut_agrees_with_full_check():
    rng = XorShift64Star(103)
    for _ in range(120):
        c = [rng.element(Ring.Z, 2) for _ in range(4)]
        ml = MultilinearPoly(
            Ring.Z, 3, {m: c[m.bit_count()] for m in range(8)}
        )
        assert ml.is_symmetric()
        base = compose_closed_form(ml, 1)
        full = all(
            compose_closed_form(ml, i).coeffs == base.coeffs for i in range(2, 4)
        )
        assert associative_multilinear(ml).associative == full


def test_degree_consequences_for_associative_operations():
    seen_nonlinear = 0
    for values in product((-1, 0, 1), repeat=8):
        ml = MultilinearPoly(Ring.Z, 3, dict(enumerate(values)))
        if not associative_multilinear(ml).associative:
            continue
        if ml.degree() > 1:
            seen_nonlinear += 1
            assert ml.coeff((1 << 3) - 1) != 0
            assert ml.is_symmetric()
    assert seen_nonlinear == 4


def test_witness_is_minimal_in_mask_order():
    rng = XorShift64Star(109)
    for _ in range(150):
        ml = MultilinearPoly(Ring.Z, 2, {m: rng.element(Ring.Z, 2) for m in range(4)})
        verdict = associative_multilinear(ml)
        if verdict.associative:
            continue
        w = verdict.witness
        base = compose_closed_form(ml, 1)
        other = compose_closed_form(ml, w.slot)
        witness_mask = sum(1 << (j - 1) for j in w.subset)
        for mask in range(witness_mask):
            assert base.coeff(mask) == other.coeff(mask)
        # every slot before the witness slot agrees everywhere
        for slot in range(2, w.slot):
            assert compose_closed_form(ml, slot).coeffs == base.coeffs


def test_arity_below_two_rejected():
    with pytest.raises(ValueError):
        is_associative(SparsePoly(Ring.Z, 1, {(1,): 1}))
