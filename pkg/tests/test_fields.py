import itertools

import pytest

from finlat import (
    CapExceeded,
    FieldMismatch,
    NonPrimeCharacteristic,
    ReduciblePolynomial,
    ZeroInverse,
    make_field,
)

SMALL_QS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)]


# ---------------------------------------------------------------------------
# construction and default modulus selection
# ---------------------------------------------------------------------------

def _eval_poly(coeffs, t, p):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * t + c) % p
    return acc


def test_default_modulus_gf9_is_lex_smallest_irreducible():
    # oracle: root test decides irreducibility for monic quadratics
    irreducible = []
    for c0, c1 in itertools.product(range(3), repeat=2):
        cand = (c0, c1, 1)
        if all(_eval_poly(cand, t, 3) != 0 for t in range(3)):
            irreducible.append(cand)
    assert len(irreducible) == 3
    assert min(irreducible) == (1, 0, 1)  # x^2 + 1
    assert make_field(3, 2).modulus == (1, 0, 1)


def test_default_modulus_gf16_is_lex_smallest_irreducible():
    # oracle: mark every product of two lower-degree monic polynomials
    def mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                out[i + j] ^= ai & bj
        return tuple(out)

    monic = {
        d: [tuple(low) + (1,) for low in itertools.product(range(2), repeat=d)]
        for d in range(1, 4)
    }
    reducible = set()
    for d1, d2 in ((1, 3), (2, 2)):
        for a in monic[d1]:
            for b in monic[d2]:
                reducible.add(mul(a, b))
    quartics = [tuple(low) + (1,) for low in itertools.product(range(2), repeat=4)]
    irreducible = [c for c in quartics if c not in reducible]
    gf16 = make_field(2, 4)
    assert gf16.modulus == min(irreducible)
    assert gf16.q == 16
    assert len(gf16.all_elements()) == 16


def test_prime_field_modulus_is_x():
    assert make_field(5).modulus == (0, 1)
    assert make_field(5, 1).q == 5


def test_composite_characteristic_rejected():
    with pytest.raises(NonPrimeCharacteristic):
        make_field(4)
    with pytest.raises(NonPrimeCharacteristic):
        make_field(1)


def test_reducible_modulus_rejected():
    with pytest.raises(ReduciblePolynomial):
        make_field(3, 2, (0, 0, 1))  # x^2
    with pytest.raises(ReduciblePolynomial):
        make_field(2, 2, (1, 0, 1))  # x^2 + 1 = (x+1)^2 over Z_2


def test_modulus_shape_validated():
    with pytest.raises(ValueError):
        make_field(3, 2, (1, 0, 2))  # not monic
    with pytest.raises(ValueError):
        make_field(3, 2, (1, 1))  # wrong degree


def test_field_size_cap():
    with pytest.raises(CapExceeded):
        make_field(2, 17)


# ---------------------------------------------------------------------------
# arithmetic examples
# ---------------------------------------------------------------------------

def test_add_examples():
    gf2 = make_field(2)
    assert (gf2.one + gf2.one).index == 0
    gf9 = make_field(3, 2)
    x = gf9.element(3)
    x_plus_2 = gf9.element(5)
    assert (x + x_plus_2).index == 8  # 2x + 2
    gf5 = make_field(5)
    assert (gf5.element(2) + gf5.element(3)).index == 0


def test_mul_examples():
    gf9 = make_field(3, 2)
    x = gf9.element(3)
    assert (x * x).index == 2  # x^2 = -1 = 2
    gf5 = make_field(5)
    assert (gf5.element(2) * gf5.element(3)).index == 1
    for p, n in SMALL_QS:
        gf = make_field(p, n)
        for a in gf.all_elements():
            assert a * gf.one == a


def test_inv_examples():
    gf5 = make_field(5)
    assert gf5.element(2).inverse().index == 3
    gf9 = make_field(3, 2)
    x = gf9.element(3)
    # oracle: exhaustive search over the 8 nonzero elements
    expected = [b for b in gf9.all_elements() if b.index and (x * b).index == 1]
    assert len(expected) == 1
    assert x.inverse() == expected[0]
    assert expected[0].index == 6  # 2x
    assert gf9.one.inverse() == gf9.one
    with pytest.raises(ZeroInverse):
        gf9.zero.inverse()


def test_all_elements():
    gf2 = make_field(2)
    assert [e.index for e in gf2.all_elements()] == [0, 1]
    gf4 = make_field(2, 2)
    assert len(gf4.all_elements()) == 4
    gf9 = make_field(3, 2)
    elems = gf9.all_elements()
    assert len(elems) == 9
    assert elems[0].index == 0
    assert elems[3].coeffs == (0, 1)  # the generator x sits at index 3
    assert str(elems[3]) == "x"


# ---------------------------------------------------------------------------
# field axioms, exhaustively for q <= 16
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("p,n", SMALL_QS)
def test_field_axioms_exhaustive(p, n):
    gf = make_field(p, n)
    q = gf.q
    els = range(q)
    for a in els:
        assert gf.add(a, 0) == a
        assert gf.mul(a, 1) == a
        assert gf.mul(a, 0) == 0
        assert gf.add(a, gf.neg(a)) == 0
    for a in els:
        for b in els:
            assert gf.add(a, b) == gf.add(b, a)
            assert gf.mul(a, b) == gf.mul(b, a)
    for a in els:
        for b in els:
            for c in els:
                assert gf.add(gf.add(a, b), c) == gf.add(a, gf.add(b, c))
                assert gf.mul(gf.mul(a, b), c) == gf.mul(a, gf.mul(b, c))
                assert gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c))
    # unique multiplicative inverses
    for a in range(1, q):
        inverses = [b for b in range(1, q) if gf.mul(a, b) == 1]
        assert inverses == [gf.inv(a)]


@pytest.mark.parametrize("p,n", SMALL_QS)
def test_fermat_for_nonzero_elements(p, n):
    gf = make_field(p, n)
    for a in range(1, gf.q):
        assert gf.pow(a, gf.q - 1) == 1


@pytest.mark.parametrize("p,n", SMALL_QS)
def test_characteristic_p_sum(p, n):
    gf = make_field(p, n)
    acc = 0
    for _ in range(p):
        acc = gf.add(acc, 1)
    assert acc == 0


# ---------------------------------------------------------------------------
# value semantics
# ---------------------------------------------------------------------------

def test_elements_from_equal_presentations_interoperate():
    a = make_field(3, 2).element(3)
    b = make_field(3, 2).element(5)
    assert (a + b).index == 8


def test_elements_of_distinct_fields_never_mix():
    gf3 = make_field(3)
    gf5 = make_field(5)
    with pytest.raises(FieldMismatch):
        gf3.element(1) + gf5.element(1)
    alt9 = make_field(3, 2, (2, 1, 1))  # x^2 + x + 2
    std9 = make_field(3, 2)
    assert alt9 != std9
    with pytest.raises(FieldMismatch):
        alt9.element(3) * std9.element(3)


def test_of_int_is_the_canonical_image():
    gf9 = make_field(3, 2)
    assert gf9.of_int(3).index == 0
    assert gf9.of_int(7).index == 1
    gf7 = make_field(7)
    assert gf7.of_int(9).index == 2


def test_element_operator_sugar():
    gf7 = make_field(7)
    a, b = gf7.element(3), gf7.element(5)
    assert (a - b).index == 5
    assert (-a).index == 4
    assert (a / b) * b == a
    assert (a ** 6).index == 1
    assert (a ** 0).index == 1
    assert bool(a) and not bool(gf7.zero)
    gf9 = make_field(3, 2)
    assert str(gf9.element(5)) == "x+2"
    assert str(gf9.element(8)) == "2x+2"
    assert str(gf9.zero) == "0"
