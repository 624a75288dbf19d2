import pytest

from fqwilson.carlitz import CarlitzCache, monic_polys
from fqwilson.errors import BoundExceeded, ZeroC
from fqwilson.gf import make_prime_field
from fqwilson.irr import iter_monic_irreducibles
from fqwilson.poly import Poly, divrem, exact_div, parse_poly

# fields small enough that every identity below is checked exactly
GRID = [(2, 6), (3, 4), (4, 3), (5, 2)]


def field_of(q):
    from fqwilson.gf import parse_field
    return parse_field(str(q))


def test_bracket_literal():
    for q, dmax in GRID:
        field = field_of(q)
        cache = CarlitzCache(field)
        for n in range(1, dmax + 1):
            assert cache.bracket(n) == \
                Poly.monomial(field, q ** n) - Poly.t(field)


def test_recurrences_and_degrees():
    for q, dmax in GRID:
        field = field_of(q)
        cache = CarlitzCache(field)
        assert cache.L(0) == Poly.one(field)
        assert cache.D(0) == Poly.one(field)
        for n in range(1, dmax + 1):
            assert cache.L(n) == cache.bracket(n) * cache.L(n - 1)
            assert cache.D(n) == cache.bracket(n) * cache.D(n - 1) ** q
            assert cache.L(n).degree == sum(q ** i for i in range(1, n + 1))
            assert cache.D(n).degree == n * q ** n


def test_d_is_product_of_monics():
    # D_n literally multiplies out all monic polynomials of degree n
    for q, nmax in ((2, 3), (3, 2)):
        field = field_of(q)
        cache = CarlitzCache(field)
        for n in range(1, nmax + 1):
            prod = Poly.one(field)
            for f in monic_polys(field, n):
                prod = prod * f
            assert prod == cache.D(n)


def test_monic_polys_count():
    field = make_prime_field(3)
    assert sum(1 for _ in monic_polys(field, 3)) == 27


def test_f_matches_brute_product_on_grid():
    for q, dmax in GRID:
        field = field_of(q)
        cache = CarlitzCache(field)
        for d in range(1, dmax + 1):
            assert cache.F(d) == cache.F_brute(d), (q, d)


def test_f_closed_form():
    for q, dmax in GRID:
        field = field_of(q)
        cache = CarlitzCache(field)
        for d in range(1, dmax + 1):
            expected = exact_div(cache.D(d), cache.L(d))
            if d % 2:
                expected = -expected
            assert cache.F(d) == expected


def test_f_mod_matches_exact_reduction():
    for q, dmax in GRID:
        field = field_of(q)
        cache = CarlitzCache(field)
        for d in range(1, dmax + 1):
            for mtext in ("t^3+t+1", "t^2+1", "t^4+t^2+t+1"):
                m = parse_poly(mtext, field)
                assert cache.F_mod(d, m) == divrem(cache.F(d), m)[1]


def test_f_is_minus_one_mod_every_prime():
    # the Wilson-quotient analogue of Wilson's theorem itself
    for q, dmax in ((2, 4), (3, 4), (5, 2)):
        field = field_of(q)
        cache = CarlitzCache(field)
        for d in range(1, dmax + 1):
            minus_one = -Poly.one(field)
            for ctx in iter_monic_irreducibles(field, d):
                assert cache.F_mod(d, ctx.prime) == minus_one, str(ctx.prime)


def test_wilson_sum_routes_agree():
    for q, dmax in ((2, 6), (3, 5), (5, 3)):
        field = field_of(q)
        cache = CarlitzCache(field)
        for d in range(2, dmax + 1):
            assert cache.wilson_sum_poly(d) == cache.wilson_sum_via_quotients(d)


def test_wilson_sum_is_minus_l_derivative():
    field = make_prime_field(3)
    cache = CarlitzCache(field)
    for d in (2, 3, 4):
        assert cache.wilson_sum_poly(d) == -cache.L(d - 1).derivative()


def test_perturbation_forms():
    field = make_prime_field(3)
    cache = CarlitzCache(field)
    one = Poly.one(field)
    assert cache.perturbation("L_minus_c", 4, 1) == cache.L(3) - one
    assert cache.perturbation("L_minus_c", 4, 2) == cache.L(3) - one - one
    assert cache.perturbation("D_plus_sign_c", 4, 1) == cache.D(3) + one
    assert cache.perturbation("D_plus_sign_c", 5, 1) == cache.D(4) - one
    with pytest.raises(ZeroC):
        cache.perturbation("L_minus_c", 4, 0)
    with pytest.raises(ValueError):
        cache.perturbation("nonsense", 4, 1)


def test_exact_f_guard():
    field = make_prime_field(3)
    cache = CarlitzCache(field)
    with pytest.raises(BoundExceeded):
        cache.F(30)


def test_cache_memoizes():
    field = make_prime_field(2)
    cache = CarlitzCache(field)
    assert cache.L(5) is cache.L(5)
