"""The Carlitz quantities of F_q[t] and their perturbations.

[n] = t^(q^n) - t is the product of the monic primes whose degree
divides n; L_n = [n][n-1]...[1] is the least common multiple of the
monic polynomials of degree n; D_n = [n][n-1]^q...[1]^(q^(n-1)) is
their product.  F_d = (-1)^d D_d / L_d plays the role of (N-1)! for a
prime of degree d: the Wilson congruence asks whether F_d = -1 holds
modulo the square of the prime rather than just the prime.

Everything here is exact except F_mod, which evaluates F_d modulo a
given polynomial through the recurrences without ever forming the
gigantic exact numerator.
"""

from __future__ import annotations

from .errors import BoundExceeded, ZeroC
from .gf import Field
from .poly import DEGREE_GUARD, ModReducer, Poly, exact_div, q_power_expand


def monic_polys(field: Field, degree: int):
    """All monic polynomials of the given degree, in code order."""
    q = field.order
    for index in range(q ** degree):
        codes = []
        m = index
        for _ in range(degree):
            m, r = divmod(m, q)
            codes.append(r)
        codes.append(1)
        yield Poly(field, tuple(codes))


class CarlitzCache:
    """Memoized tower of brackets, factorials and lcm-quantities."""

    def __init__(self, field: Field):
        self.field = field
        self._brackets: dict[int, Poly] = {}
        self._L: dict[int, Poly] = {0: Poly.one(field)}
        self._D: dict[int, Poly] = {0: Poly.one(field)}

    def bracket(self, n: int) -> Poly:
        if n < 1:
            raise ValueError("[n] is defined for n >= 1")
        if n not in self._brackets:
            q = self.field.order
            if q ** n > DEGREE_GUARD:
                raise BoundExceeded(f"[{n}] has degree {q}^{n} beyond the guard")
            self._brackets[n] = Poly.monomial(self.field, q ** n) - Poly.t(self.field)
        return self._brackets[n]

    def L(self, n: int) -> Poly:
        if n not in self._L:
            self._L[n] = self.bracket(n) * self.L(n - 1)
        return self._L[n]

    def D(self, n: int) -> Poly:
        if n not in self._D:
            self._D[n] = self.bracket(n) * q_power_expand(self.D(n - 1), 1)
        return self._D[n]

    def F(self, d: int) -> Poly:
        """(-1)^d D_d / L_d, exactly."""
        out = exact_div(self.D(d), self.L(d))
        if d % 2 and self.field.char != 2:
            out = -out
        return out

    def F_brute(self, d: int) -> Poly:
        """Literal product of all monic polynomials of degree < d,
        raised to the q-1 and signed; the independent route to F_d."""
        field = self.field
        q = field.order
        count = (q ** d - 1) // (q - 1)
        if count > 1 << 20:
            raise BoundExceeded(f"brute product over {count} polynomials refused")
        prod = Poly.one(field)
        for deg in range(d):
            for f in monic_polys(field, deg):
                prod = prod * f
        out = prod ** (q - 1)
        if count % 2 and field.char != 2:
            out = -out
        return out

    def F_mod(self, d: int, modulus: Poly) -> Poly:
        """F_d reduced mod the given polynomial, via the recurrences
        D_0 = 1, D_n = [n] D_{n-1}^q and F_d = +-(D_0 ... D_{d-1})^(q-1)."""
        field = self.field
        q = field.order
        red = ModReducer(modulus)
        t = Poly.t(field)
        x = red.reduce(t)
        acc = Poly.one(field)
        d_cur = Poly.one(field)
        for _ in range(d):
            acc = red.mulmod(acc, red.powmod(d_cur, q - 1))
            x = red.powmod(x, q)
            d_cur = red.mulmod(x - red.reduce(t), red.powmod(d_cur, q))
        if d % 2 and field.char != 2:
            acc = -acc
        return acc

    def wilson_sum_poly(self, d: int) -> Poly:
        """-L_{d-1}', which equals the sum of L_{d-1}/[i] over i < d.

        Each bracket has derivative -1, so the product rule collapses
        the sum of cofactors into a single derivative.
        """
        return -self.L(d - 1).derivative()

    def wilson_sum_via_quotients(self, d: int) -> Poly:
        """The same sum formed literally, term by term."""
        field = self.field
        acc = Poly.zero(field)
        ld = self.L(d - 1)
        for i in range(1, d):
            acc = acc + exact_div(ld, self.bracket(i))
        return acc

    def perturbation(self, kind: str, d: int, c) -> Poly:
        """L_{d-1} - c or D_{d-1} + (-1)^d c, for nonzero c."""
        field = self.field
        cc = field(c)
        if cc.code == 0:
            raise ZeroC("perturbations require a nonzero constant")
        if kind == "L_minus_c":
            return self.L(d - 1) - Poly.constant(field, cc)
        if kind == "D_plus_sign_c":
            term = Poly.constant(field, cc if d % 2 == 0 else -cc)
            return self.D(d - 1) + term
        raise ValueError(f"unknown perturbation kind {kind!r}")
