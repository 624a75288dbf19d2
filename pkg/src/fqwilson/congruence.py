"""Wieferich and Wilson prime detection through every equivalent route.

A prime P of degree d is a-Wieferich when a^(q^d) = a mod P^2, and
Wilson when F_d = -1 mod P^2, where F_d is the product of all nonzero
polynomials of degree below d.  Each property admits a family of
equivalent conditions phrased through the three derivatives; the suites
here evaluate every route independently and raise EquivalenceViolation
if the routes ever disagree, so a disagreement is a loud bug signal
rather than a quietly wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .carlitz import CarlitzCache
from .deriv import (
    MIXED_LABELS,
    delta_at_theta,
    fermat_quotient_iter,
    fermat_quotient_mod,
    mixed,
)
from .errors import EquivalenceViolation, FieldMismatch, ZeroC
from .gf import FieldElement
from .irr import PrimeContext
from .poly import ModReducer, Poly, divrem, embed, eval_poly

WIEFERICH_LABELS = ("def", "i", "i'", "ii", "ii'", "iii")
WILSON_LABELS = (
    "def", "i", "i'", "i''", "ii", "ii'", "iii",
    "i-ii", "i-ii'", "ii-i", "ii-i'", "i-iii", "iii-i", "ii-iii", "iii-ii",
)


@dataclass
class ConditionSuite:
    """Verdicts of every evaluated condition at one prime."""

    context: PrimeContext
    kind: str
    verdicts: dict
    base: Poly = None
    skipped: tuple = ()
    marker: str = ""

    @property
    def unanimous(self) -> bool:
        return len(set(self.verdicts.values())) <= 1

    @property
    def holds(self) -> bool:
        """The common verdict (callers check unanimity was asserted)."""
        return next(iter(self.verdicts.values()))

    def to_json(self):
        out = {
            "prime": str(self.context.prime),
            "kind": self.kind,
            "verdicts": dict(self.verdicts),
            "unanimous": self.unanimous,
            "skipped": list(self.skipped),
        }
        if self.base is not None:
            out["base"] = str(self.base)
        if self.marker:
            out["marker"] = self.marker
        return out


@dataclass
class BaseClass:
    """How a base polynomial sits relative to the p-th power forms."""

    tag: str
    witness: Poly = None
    c: FieldElement = None

    def to_json(self):
        out = {"tag": self.tag}
        if self.witness is not None:
            out["witness"] = str(self.witness)
        if self.c is not None:
            out["c"] = self.c.code
        return out


def _is_zero_at_theta(f: Poly, ctx: PrimeContext) -> bool:
    val = eval_poly(embed(f, ctx.residue_field), ctx.theta)
    return val == ctx.residue_field(0)


def _assert_unanimous(suite: ConditionSuite):
    if not suite.unanimous:
        split = {lab: v for lab, v in suite.verdicts.items()}
        raise EquivalenceViolation(
            f"{suite.kind} conditions disagree at {suite.context.prime}: {split}"
        )


def wieferich_suite(ctx: PrimeContext, a: Poly) -> ConditionSuite:
    """All six a-Wieferich conditions, each by its own route.

    def   a^(q^d) = a mod P^2, by direct modular exponentiation
    i     P divides da/dt
    i'    (da/dt)(theta) = 0
    ii    Q(a) = 0 mod P
    ii'   Q(a)(theta) = 0
    iii   a^[1](theta) = 0
    """
    if a.field != ctx.prime.field:
        raise FieldMismatch("base must live over the prime's coefficient field")
    prime = ctx.prime
    verdicts = {}

    red = ModReducer(prime * prime)
    verdicts["def"] = red.powmod(a, ctx.norm) == red.reduce(a)

    da = a.derivative()
    verdicts["i"] = divrem(da, prime)[1].is_zero
    verdicts["i'"] = _is_zero_at_theta(da, ctx)

    # One modular quotient serves both routes: Q(a)(theta) only needs
    # the residue of Q(a) mod P, since P(theta) = 0.
    qm = fermat_quotient_mod(a, ctx, 1)
    verdicts["ii"] = qm.is_zero
    verdicts["ii'"] = _is_zero_at_theta(qm, ctx)

    verdicts["iii"] = delta_at_theta(a, ctx, 1) == ctx.residue_field(0)

    suite = ConditionSuite(context=ctx, kind="wieferich", verdicts=verdicts, base=a)
    _assert_unanimous(suite)
    return suite


def wilson_suite(ctx: PrimeContext, skip_def: bool = False) -> ConditionSuite:
    """All fifteen Wilson conditions for p > 2; definition only for p = 2.

    The pure conditions:
    def   F_d = -1 mod P^2
    i     d2P/dt2 = 0 identically
    i'    P divides d2P/dt2
    i''   (d2P/dt2)(theta) = 0
    ii    Q(Q(t)) = 0 mod P
    ii'   Q(Q(t))(theta) = 0
    iii   P^[2](theta) = 0
    plus the eight mixed second derivatives.  The equivalences only
    hold for odd characteristic, so for p = 2 the suite evaluates the
    definition alone and carries a definition-only marker.  skip_def
    substitutes condition i for the definition and records the skip,
    for callers working under an explicit budget.
    """
    prime = ctx.prime
    field = prime.field
    p = field.char
    t = Poly.t(field)

    if p == 2:
        cache = CarlitzCache(field)
        fval = cache.F_mod(ctx.degree, prime * prime)
        verdicts = {"def": fval == -Poly.one(field)}
        skipped = tuple(lab for lab in WILSON_LABELS if lab != "def")
        return ConditionSuite(context=ctx, kind="wilson", verdicts=verdicts,
                              skipped=skipped, marker="definition-only")

    verdicts = {}
    skipped = ()
    if skip_def:
        skipped = ("def",)
    else:
        cache = CarlitzCache(field)
        fval = cache.F_mod(ctx.degree, prime * prime)
        verdicts["def"] = fval == -Poly.one(field)

    d2 = prime.derivative().derivative()
    verdicts["i"] = d2.is_zero
    verdicts["i'"] = divrem(d2, prime)[1].is_zero
    verdicts["i''"] = _is_zero_at_theta(d2, ctx)

    q2 = fermat_quotient_iter(t, ctx, 2, k=1)
    verdicts["ii"] = q2.is_zero
    verdicts["ii'"] = _is_zero_at_theta(q2, ctx)

    verdicts["iii"] = delta_at_theta(prime, ctx, 2) == ctx.residue_field(0)

    for lab in MIXED_LABELS:
        val = mixed(lab, ctx)
        if isinstance(val, Poly):
            verdicts[lab] = val.is_zero
        else:
            verdicts[lab] = val == val.field(0)

    suite = ConditionSuite(context=ctx, kind="wilson", verdicts=verdicts,
                           skipped=skipped,
                           marker="skipped (bound)" if skip_def else "")
    _assert_unanimous(suite)
    return suite


def _pth_power_poly(b: Poly) -> Poly:
    field = b.field
    p = field.char
    codes = [0] * (p * b.degree + 1) if not b.is_zero else []
    for i, c in enumerate(b.codes):
        codes[p * i] = field.pow(c, p)
    return Poly(field, codes)


def _pth_root_codes(codes, field):
    return [field.pth_root(c) for c in codes]


def classify_base(a: Poly) -> BaseClass:
    """Theorem-2 trichotomy for the base a.

    a = b^p for some b           -> every prime is a-Wieferich
    a = b^p + c t with c nonzero -> no prime is a-Wieferich
    anything else                -> generic
    Coefficientwise p-th roots always exist in F_q, so the structural
    exponent test (nonzero coefficients only at multiples of p, with
    exponent 1 allowed in the second form) is exact.
    """
    field = a.field
    p = field.char
    idx = [i for i, c in enumerate(a.codes) if c]
    if all(i % p == 0 for i in idx):
        b = Poly(field, _pth_root_codes(a.codes[::p], field))
        assert _pth_power_poly(b) == a
        return BaseClass(tag="AllPrimesWieferich", witness=b)
    c = a.coeff(1)
    if c and all(i % p == 0 for i in idx if i != 1):
        shifted = a - Poly.monomial(field, 1, c)
        b = Poly(field, _pth_root_codes(shifted.codes[::p], field))
        assert _pth_power_poly(b) + Poly.monomial(field, 1, c) == a
        return BaseClass(tag="NoWieferichPrimes", witness=b, c=c)
    return BaseClass(tag="Generic")


def wilson_multiplicity(ctx: PrimeContext) -> int:
    """Largest k with F_d = -1 mod P^k, capped at p+2.

    A return of p+2 means "at least p+2": the residue of F_d + 1 was
    zero at the working precision P^(p+3).
    """
    prime = ctx.prime
    field = prime.field
    cap = field.char + 2
    cache = CarlitzCache(field)
    r = cache.F_mod(ctx.degree, prime ** (cap + 1)) + Poly.one(field)
    if r.is_zero:
        return cap
    return min(valuation(r, prime), cap)


def coefficient_characterization(prime: Poly) -> bool:
    """Nonzero coefficients only at indices i with p | i or p | i-1.

    For irreducible arguments in odd characteristic this is the Wilson
    property read off the coefficients; for p = 2 it is vacuously true.
    """
    p = prime.field.char
    return all(i % p == 0 or (i - 1) % p == 0
               for i, c in enumerate(prime.codes) if c)


def is_special_wilson(ctx: PrimeContext, c) -> bool:
    """Whether dP/dt is the constant (-1)^(d-1) c.

    Checked twice: directly on the derivative, and structurally as
    P = a^p + (-1)^(d-1) c t.  The two must agree for every input.
    """
    field = ctx.prime.field
    c = field(c) if not isinstance(c, FieldElement) else c
    if c == field(0):
        raise ZeroC("c must be a nonzero field constant")
    target = -c if (ctx.degree - 1) % 2 else c
    p = field.char

    by_derivative = ctx.prime.derivative() == Poly.constant(field, target)

    shifted = ctx.prime - Poly.monomial(field, 1, target)
    by_form = all(i % p == 0 for i, cc in enumerate(shifted.codes) if cc)

    if by_derivative != by_form:
        raise EquivalenceViolation(
            f"derivative and p-th power form disagree at {ctx.prime}"
        )
    return by_derivative


def valuation(f: Poly, prime: Poly) -> int:
    """Largest k with prime^k dividing f, by repeated division."""
    if f.is_zero:
        raise ValueError("valuation of the zero polynomial")
    k = 0
    cur = f
    while True:
        quot, rem = divrem(cur, prime)
        if not rem.is_zero:
            return k
        cur = quot
        k += 1
