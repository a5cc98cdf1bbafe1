import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tameblocks.polyq import (
    ALL_Q,
    DEGREE_TABLES,
    Coincidence,
    IntPoly,
    Q,
    cauchy_bound,
    cyclotomic,
    degree_coincides,
    evaluate,
    is_cyclotomic,
    load_poly_table,
    parse_poly,
    positive_integer_roots,
    root_bound,
    two_part,
    v2,
)

P = parse_poly


def test_trimmed_and_zero():
    assert IntPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert IntPoly((0, 0)).is_zero()
    assert IntPoly().degree == -1


@pytest.mark.parametrize("text, coeffs", [
    ("q^2+q-1", (-1, 1, 1)),
    ("2*q^3 - 7q + 3", (3, -7, 0, 2)),
    ("(q-1)*(q+1)", (-1, 0, 1)),
    ("-q", (0, -1)),
    ("-(q+1)^2", (-1, -2, -1)),
    ("12", (12,)),
    ("q q", (0, 0, 1)),
    ("100*q^10", (0,) * 10 + (100,)),
])
def test_parse(text, coeffs):
    assert P(text).coeffs == coeffs


@pytest.mark.parametrize("bad", ["", "q^", "q^-1", "(q+1", "q+1)", "x", "q**2"])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        P(bad)


def test_str_roundtrip():
    for text in ["q^2+q-1", "2*q^2-7*q+3", "-q^4+1", "q", "0", "-5"]:
        assert str(P(text)) == text


def test_arithmetic_and_eval():
    p = (Q - 1) * (Q + 1)
    assert p == P("q^2-1")
    assert (Q + 1) ** 3 == P("q^3+3q^2+3q+1")
    assert p(10**20) == 10**40 - 1
    assert evaluate(cyclotomic(12), 2) == 13
    assert 3 - Q == P("3-q")


def test_exact_division():
    assert P("q^3-1") // (Q - 1) == P("q^2+q+1")
    with pytest.raises(ValueError):
        P("q^2+1") // (Q - 1)
    with pytest.raises(ValueError):
        P("q^2") .divmod_exact(2 * Q)


@pytest.mark.parametrize("d, text", [(1, "q-1"), (2, "q+1"), (3, "q^2+q+1"), (4, "q^2+1"),
                                     (6, "q^2-q+1"), (12, "q^4-q^2+1"), (15, "q^8-q^7+q^5-q^4+q^3-q+1")])
def test_cyclotomic_values(d, text):
    assert cyclotomic(d) == P(text)


def test_cyclotomic_product_identity():
    for n in range(1, 61):
        prod = IntPoly((1,))
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic(d)
        assert prod == Q**n - 1, n


def test_is_cyclotomic():
    assert is_cyclotomic(P("q^2+q-1")) is None
    assert is_cyclotomic(P("q+1")) == 2
    assert is_cyclotomic(P("q^2+q+1")) == 3
    assert is_cyclotomic(P("q^2+1")) == 4
    assert is_cyclotomic(P("5")) is None
    for d in range(1, 40):
        assert is_cyclotomic(cyclotomic(d)) == d
    with pytest.raises(ValueError):
        is_cyclotomic(IntPoly())


def test_root_bound_examples():
    assert root_bound(P("q^2+q-1")) == 2
    assert root_bound(P("q-10")) == 20
    assert root_bound(P("2q^2-7q+3")) == 7
    assert root_bound(P("-q+10")) == 20
    for bad in (IntPoly(), P("4")):
        with pytest.raises(ValueError):
            root_bound(bad)


def test_positive_integer_roots_examples():
    assert positive_integer_roots(P("q^2-3q+2")) == [1, 2]
    assert positive_integer_roots(P("q^2+q-1")) == []
    assert positive_integer_roots(P("q^3-8")) == [2]
    assert positive_integer_roots(P("7")) == []
    with pytest.raises(ValueError):
        positive_integer_roots(IntPoly())


def _random_poly(rng):
    deg = rng.randint(1, 6)
    coeffs = [rng.randint(-20, 20) for _ in range(deg)] + [rng.choice([c for c in range(-20, 21) if c])]
    return IntPoly(tuple(coeffs))


def test_bounds_against_naive_scan():
    rng = random.Random(20261016)
    for _ in range(2000):
        p = _random_poly(rng)
        bound = root_bound(p)
        # the stated bound is never below the classical one
        assert bound >= cauchy_bound(p)
        scan = [r for r in range(1, 10 * math.ceil(bound) + 1) if p(r) == 0]
        assert positive_integer_roots(p) == scan


def test_roots_enumerated_from_factors():
    rng = random.Random(7)
    for _ in range(300):
        roots = [rng.randint(-6, 30) for _ in range(rng.randint(1, 4))]
        lead = rng.choice([1, 2, -3])
        p = IntPoly((lead,))
        for r in roots:
            p = p * (Q - r)
        assert positive_integer_roots(p) == sorted({r for r in roots if r > 0})


def test_degree_coincides():
    assert degree_coincides(P("q^2+q-1"), [P("q^2+q+1"), P("q^3-1")]) == []
    assert degree_coincides(Q + 1, [Q + 1]) == [Coincidence(ALL_Q, 0)]
    assert degree_coincides(P("q^2-1"), [P("q^2+q-3")]) == [Coincidence(2, 0)]
    assert degree_coincides(P("q^2-1"), [P("q^2+q-3")], q_min=3) == []
    with pytest.raises(ValueError):
        degree_coincides(Q, [])


def test_bundled_tables():
    for name, table in DEGREE_TABLES.items():
        assert table[0] == IntPoly((1,))
        # q+1 and q-1 never coincide; q-1 meets 1 at q = 2
        assert degree_coincides(Q - 1, table, 3) == [Coincidence(ALL_Q, 2)]


def test_load_poly_table():
    table = load_poly_table(["# degrees", "q^2+q+1", "", "q^3-1  # cube"])
    assert table == [P("q^2+q+1"), P("q^3-1")]
    with pytest.raises(ValueError, match="line 2"):
        load_poly_table(["q", "q^^2"])


def test_v2_examples():
    assert v2(97976320) == 16
    assert v2(7 + 1) == 3
    assert v2(1) == 0
    assert two_part(24) == 8
    with pytest.raises(ValueError):
        v2(0)


@given(st.integers(1, 10**30), st.integers(1, 10**30))
def test_v2_additive(a, b):
    assert v2(a * b) == v2(a) + v2(b)


@given(st.lists(st.integers(-50, 50), max_size=6), st.integers(-1000, 1000))
def test_horner_matches_power_sum(coeffs, x):
    p = IntPoly(tuple(coeffs))
    assert p(x) == sum(c * x**i for i, c in enumerate(coeffs))


def test_fraction_bound_type():
    assert isinstance(root_bound(P("3q^2+1")), Fraction)
    assert root_bound(P("3q^2+1")) == Fraction(2)
