"""Univariate polynomials over the fields of gf.py.

Coefficients are stored as a little-endian tuple of element codes with
no trailing zeros, so (codes, field) is a canonical form and equality
is structural.  The zero polynomial has an empty tuple and degree
NEG_INF.

Multiplication dispatches on the coefficient field: packed-int
carry-less arithmetic over F_2, Kronecker substitution into machine
integers for other small prime fields once operands are long enough to
beat schoolbook, and generic schoolbook over extension fields (whose
polynomials stay short in this package).  ModReducer precomputes a
Barrett inverse so repeated reductions by a fixed modulus cost two
multiplies instead of a quadratic division.
"""

from __future__ import annotations

from . import _gf2
from .errors import (
    BoundExceeded,
    CoefficientsNotInFixedField,
    DivisionByZero,
    FieldMismatch,
    NotDivisible,
)
from .gf import Field, FieldElement

NEG_INF = float("-inf")

# refuse single objects beyond this degree; keeps runaway exponent
# arithmetic from allocating gigabyte coefficient vectors
DEGREE_GUARD = 1 << 18

_KRON_MIN_LEN = 64     # combined length where Kronecker beats schoolbook
_BARRETT_MIN_DEG = 96  # modulus degree where Barrett beats schoolbook


class Poly:
    """A polynomial over a fixed finite field."""

    __slots__ = ("field", "codes")

    def __init__(self, field: Field, codes=()):
        n = len(codes)
        while n and codes[n - 1] == 0:
            n -= 1
        self.field = field
        self.codes = tuple(codes[:n])

    @classmethod
    def from_codes(cls, field: Field, codes) -> "Poly":
        checked = tuple(field(c).code for c in codes)
        return cls(field, checked)

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def t(cls, field: Field) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field: Field, c) -> "Poly":
        return cls(field, (field(c).code,))

    @classmethod
    def monomial(cls, field: Field, e: int, c=1) -> "Poly":
        if e > DEGREE_GUARD:
            raise BoundExceeded(f"monomial degree {e} exceeds guard {DEGREE_GUARD}")
        code = field(c).code
        if code == 0:
            return cls(field, ())
        return cls(field, (0,) * e + (code,))

    # -- structure ----------------------------------------------------

    @property
    def degree(self):
        return len(self.codes) - 1 if self.codes else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.codes

    @property
    def lead_code(self) -> int:
        if not self.codes:
            raise DivisionByZero("zero polynomial has no leading coefficient")
        return self.codes[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.codes) and self.codes[-1] == 1

    @property
    def constant_code(self) -> int:
        return self.codes[0] if self.codes else 0

    def coeff(self, i: int) -> FieldElement:
        code = self.codes[i] if 0 <= i < len(self.codes) else 0
        return FieldElement(self.field, code)

    def monic(self) -> "Poly":
        lc = self.lead_code
        if lc == 1:
            return self
        inv = self.field.inv(lc)
        mul = self.field.mul
        return Poly(self.field, tuple(mul(c, inv) for c in self.codes))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.codes == other.codes
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.codes))

    def __bool__(self):
        return bool(self.codes)

    def __repr__(self):
        return f"Poly(F{self.field.order}, {format_poly(self)})"

    def __str__(self):
        return format_poly(self)

    # -- ring operations ----------------------------------------------

    def _check_field(self, other: "Poly"):
        if self.field != other.field:
            raise FieldMismatch(
                f"polynomials over F{self.field.order} and F{other.field.order}"
            )

    def __add__(self, other):
        if isinstance(other, (FieldElement, int)):
            other = Poly.constant(self.field, other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_field(other)
        a, b = self.codes, other.codes
        if len(a) < len(b):
            a, b = b, a
        add = self.field.add
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return Poly(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.field.neg
        return Poly(self.field, tuple(neg(c) for c in self.codes))

    def __sub__(self, other):
        if isinstance(other, (FieldElement, int)):
            other = Poly.constant(self.field, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Poly":
        code = self.field(c).code
        if code == 0:
            return Poly(self.field, ())
        if code == 1:
            return self
        mul = self.field.mul
        return Poly(self.field, tuple(mul(x, code) for x in self.codes))

    def __mul__(self, other):
        if isinstance(other, (FieldElement, int)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_field(other)
        a, b = self.codes, other.codes
        if not a or not b:
            return Poly(self.field, ())
        if len(a) + len(b) - 2 > DEGREE_GUARD:
            raise BoundExceeded(
                f"product degree {len(a) + len(b) - 2} exceeds guard {DEGREE_GUARD}"
            )
        field = self.field
        if field.is_prime_field:
            if field.char == 2:
                return Poly(field, _unpack2(_gf2.mul(_pack2(a), _pack2(b))))
            if len(a) + len(b) >= _KRON_MIN_LEN and field.char < 256:
                return Poly(field, _kron_mul(a, b, field.char))
            return Poly(field, _school_mul_prime(a, b, field.char))
        return Poly(field, _school_mul_generic(a, b, field))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative polynomial powers are not defined")
        if e == 0:
            return Poly.one(self.field)
        if self.codes and (len(self.codes) - 1) * e > DEGREE_GUARD:
            raise BoundExceeded(
                f"power degree {(len(self.codes) - 1) * e} exceeds guard {DEGREE_GUARD}"
            )
        result = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        if isinstance(other, (FieldElement, int)):
            other = Poly.constant(self.field, other)
        return divrem(self, other)

    def __floordiv__(self, other):
        return self.__divmod__(other)[0]

    def __mod__(self, other):
        return self.__divmod__(other)[1]

    def __call__(self, x):
        return eval_poly(self, x)

    def derivative(self) -> "Poly":
        field = self.field
        p = field.char
        mul = field.mul
        out = []
        for j in range(1, len(self.codes)):
            k = j % p
            out.append(mul(self.codes[j], k) if k else 0)
        return Poly(field, out)


# -- multiplication kernels -------------------------------------------


def _pack2(codes) -> int:
    acc = 0
    for i, c in enumerate(codes):
        if c:
            acc |= 1 << i
    return acc


def _unpack2(packed: int):
    if not packed:
        return ()
    return tuple(1 if packed >> i & 1 else 0 for i in range(packed.bit_length()))


def _school_mul_prime(a, b, p):
    if len(a) > len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return tuple(c % p for c in out)


def _school_mul_generic(a, b, field):
    if len(a) > len(b):
        a, b = b, a
    mul = field.mul
    add = field.add
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = add(out[i + j], mul(ai, bj))
    return tuple(out)


def _kron_mul(a, b, p):
    # pack coefficients into byte-aligned lanes wide enough that the
    # integer product's lanes carry the exact convolution sums
    maxsum = min(len(a), len(b)) * (p - 1) * (p - 1)
    lane = (maxsum.bit_length() + 7) // 8
    ia = int.from_bytes(b"".join(c.to_bytes(lane, "little") for c in a), "little")
    ib = int.from_bytes(b"".join(c.to_bytes(lane, "little") for c in b), "little")
    wide = ia * ib
    n = len(a) + len(b) - 1
    raw = wide.to_bytes(lane * n + 8, "little")
    out = []
    for i in range(n):
        out.append(int.from_bytes(raw[lane * i: lane * (i + 1)], "little") % p)
    return tuple(out)


# -- division ---------------------------------------------------------


def divrem(a: Poly, b: Poly):
    """Quotient and remainder with deg r < deg b."""
    a._check_field(b)
    if b.is_zero:
        raise DivisionByZero("polynomial division by zero")
    field = a.field
    db = len(b.codes) - 1
    if len(a.codes) - 1 < db:
        return Poly.zero(field), a
    if field.is_prime_field and field.char == 2:
        q, r = _gf2.divmod_(_pack2(a.codes), _pack2(b.codes))
        return Poly(field, _unpack2(q)), Poly(field, _unpack2(r))
    mul = field.mul
    sub = field.sub
    lead_inv = field.inv(b.codes[-1])
    rem = list(a.codes)
    quot = [0] * (len(a.codes) - db)
    bc = b.codes
    for top in range(len(rem) - 1, db - 1, -1):
        c = rem[top]
        if c == 0:
            continue
        q = mul(c, lead_inv) if lead_inv != 1 else c
        quot[top - db] = q
        off = top - db
        for j in range(db + 1):
            if bc[j]:
                rem[off + j] = sub(rem[off + j], mul(q, bc[j]))
    return Poly(field, quot), Poly(field, rem[:db])


def exact_div(a: Poly, b: Poly) -> Poly:
    q, r = divrem(a, b)
    if not r.is_zero:
        raise NotDivisible(f"{b} does not divide {a}")
    return q


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    a._check_field(b)
    field = a.field
    if field.is_prime_field and field.char == 2:
        g = _gf2.gcd(_pack2(a.codes), _pack2(b.codes))
        return Poly(field, _unpack2(g))
    while not b.is_zero:
        a, b = b, divrem(a, b)[1]
    if a.is_zero:
        return a
    return a.monic()


# -- evaluation and composition ---------------------------------------


def _eval_field(f: Poly, x: FieldElement) -> Field:
    ef = x.field
    if ef == f.field or ef.is_extension_of(f.field):
        return ef
    raise FieldMismatch(
        f"cannot evaluate a polynomial over F{f.field.order} at a point of F{ef.order}"
    )


def eval_poly(f: Poly, x) -> FieldElement:
    if isinstance(x, int):
        x = f.field(x)
    ef = _eval_field(f, x)
    mul = ef.mul
    add = ef.add
    xc = x.code
    acc = 0
    for c in reversed(f.codes):
        acc = add(mul(acc, xc), c)
    return FieldElement(ef, acc)


def synth_div(f: Poly, x):
    """Divide by (t - x) synthetically: returns (quotient, f(x)).

    The point may live in an extension of the coefficient field, in
    which case the quotient is a polynomial over that extension.
    """
    if isinstance(x, int):
        x = f.field(x)
    ef = _eval_field(f, x)
    mul = ef.mul
    add = ef.add
    xc = x.code
    if f.is_zero:
        return Poly.zero(ef), ef.zero
    out = [0] * (len(f.codes) - 1)
    acc = f.codes[-1]
    for i in range(len(f.codes) - 2, -1, -1):
        out[i] = acc
        acc = add(mul(acc, xc), f.codes[i])
    return Poly(ef, out), FieldElement(ef, acc)


def taylor_shift(f: Poly, c) -> Poly:
    """f(t + c), by collecting synthetic remainders at c."""
    if isinstance(c, int):
        c = f.field(c)
    ef = _eval_field(f, c)
    g = Poly(ef, f.codes)
    out = []
    while not g.is_zero:
        g, r = synth_div(g, c)
        out.append(r.code)
    return Poly(ef, out)


def q_power_expand(f: Poly, d: int, base_order=None) -> Poly:
    """f raised to the Q = base_order**d power, Q a power of the
    characteristic, for f with coefficients fixed by x -> x^base_order.

    In characteristic p, (sum c_i t^i)^Q = sum c_i^Q t^(iQ); when every
    coefficient satisfies c^base_order = c this is pure exponent
    spreading, which is how Frobenius twists stay cheap.
    """
    field = f.field
    q = field.order if base_order is None else base_order
    if base_order is not None and base_order != field.order:
        for c in f.codes:
            if field.pow(c, q) != c:
                raise CoefficientsNotInFixedField(
                    f"coefficient code {c} is not fixed by x -> x^{q}"
                )
    if f.is_zero or d == 0:
        return f
    big_q = q ** d
    n = len(f.codes) - 1
    if n * big_q > DEGREE_GUARD:
        raise BoundExceeded(
            f"expanded degree {n * big_q} exceeds guard {DEGREE_GUARD}"
        )
    out = [0] * (n * big_q + 1)
    for i, c in enumerate(f.codes):
        out[i * big_q] = c
    return Poly(field, out)


def embed(f: Poly, ext: Field) -> Poly:
    """View f in an extension field; element codes carry over as-is."""
    if ext == f.field:
        return f
    if not ext.is_extension_of(f.field):
        raise FieldMismatch(f"F{ext.order} does not extend F{f.field.order}")
    return Poly(ext, f.codes)


def map_codes(f: Poly, fn) -> Poly:
    """Apply a code-level function to every coefficient."""
    return Poly(f.field, tuple(fn(c) for c in f.codes))


# -- modular contexts -------------------------------------------------


class ModReducer:
    """Reduction context for a fixed nonzero modulus.

    Over F_2 it delegates to the packed-int Barrett reducer; over
    other fields it keeps a Newton-grown power series inverse of the
    reversed modulus once the degree justifies it, and falls back to
    plain long division for small moduli.
    """

    __slots__ = ("modulus", "field", "_mode", "_packed", "_rm", "_rinv", "_prec")

    def __init__(self, modulus: Poly, barrett=None):
        if modulus.is_zero:
            raise DivisionByZero("zero modulus")
        if not modulus.is_monic:
            modulus = modulus.monic()
        self.modulus = modulus
        self.field = modulus.field
        field = modulus.field
        if field.is_prime_field and field.char == 2 and modulus.degree >= 1:
            self._mode = "gf2"
            self._packed = _gf2.Reducer(_pack2(modulus.codes))
            return
        self._packed = None
        use_barrett = (
            barrett if barrett is not None else modulus.degree >= _BARRETT_MIN_DEG
        )
        if use_barrett and modulus.degree >= 2:
            self._mode = "barrett"
            self._rm = Poly(field, tuple(reversed(modulus.codes)))
            self._rinv = Poly.one(field)  # rm(0) = 1 since modulus is monic
            self._prec = 1
        else:
            self._mode = "school"

    def _ensure(self, prec: int) -> None:
        k = self._prec
        if k >= prec:
            return
        inv = self._rinv
        rm = self._rm
        field = self.field
        while k < prec:
            k = min(2 * k, prec)
            prod = _trunc(_trunc(rm, k) * inv, k)
            err = prod - Poly.one(field)
            if not err.is_zero:
                inv = _trunc(inv - _trunc(inv * err, k), k)
        self._rinv, self._prec = inv, k

    def reduce(self, f: Poly) -> Poly:
        if self._mode == "gf2":
            return Poly(self.field, _unpack2(self._packed.reduce(_pack2(f.codes))))
        m = self.modulus
        n = m.degree
        if f.degree < n:
            return f
        if self._mode == "school":
            return divrem(f, m)[1]
        k = f.degree - n
        self._ensure(k + 1)
        ra = Poly(self.field, tuple(reversed(f.codes)))
        rq = _trunc(ra * self._rinv, k + 1)
        q_codes = list(rq.codes) + [0] * (k + 1 - len(rq.codes))
        q = Poly(self.field, tuple(reversed(q_codes)))
        r = f - q * m
        if r.degree >= n:  # pragma: no cover - algebra guarantees deg r < n
            return divrem(r, m)[1]
        return r

    def mulmod(self, a: Poly, b: Poly) -> Poly:
        return self.reduce(a * b)

    def powmod(self, a: Poly, e: int) -> Poly:
        if e < 0:
            raise ValueError("negative exponents are not supported mod a polynomial")
        if self._mode == "gf2":
            pa = self._packed.reduce(_pack2(a.codes))
            result = 1
            red = self._packed
            while e:
                if e & 1:
                    result = red.mulmod(result, pa)
                pa = red.sqrmod(pa)
                e >>= 1
            return Poly(self.field, _unpack2(result))
        a = self.reduce(a)
        result = Poly.one(self.field)
        while e:
            if e & 1:
                result = self.reduce(result * a)
            a = self.reduce(a * a)
            e >>= 1
        return result


def _trunc(f: Poly, k: int) -> Poly:
    if len(f.codes) <= k:
        return f
    return Poly(f.field, f.codes[:k])


def powmod(a: Poly, e: int, m: Poly) -> Poly:
    return ModReducer(m).powmod(a, e)


# -- text form --------------------------------------------------------


def format_poly(f: Poly, var: str = "t") -> str:
    """Descending-power text; coefficients print as element codes."""
    if f.is_zero:
        return "0"
    terms = []
    for e in range(len(f.codes) - 1, -1, -1):
        c = f.codes[e]
        if not c:
            continue
        if e == 0:
            terms.append(str(c))
        else:
            v = var if e == 1 else f"{var}^{e}"
            terms.append(v if c == 1 else f"{c}*{v}")
    return "+".join(terms)


def parse_poly(text: str, field: Field, var: str = "t") -> Poly:
    """Parse '2*t^3+t+1' or a '[c0,c1,...]' code list."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    if s.startswith("["):
        if not s.endswith("]"):
            raise ValueError(f"unterminated code list: {text!r}")
        inner = s[1:-1].strip()
        if not inner:
            return Poly.zero(field)
        return Poly.from_codes(field, [int(tok) for tok in inner.split(",")])
    s = s.replace(" ", "")
    # split into signed terms
    terms = []
    buf = ""
    sign = 1
    for ch in s:
        if ch in "+-" and buf:
            terms.append((sign, buf))
            sign = 1 if ch == "+" else -1
            buf = ""
        elif ch in "+-" and not buf:
            if ch == "-":
                sign = -sign
        else:
            buf += ch
    if not buf:
        raise ValueError(f"dangling sign in {text!r}")
    terms.append((sign, buf))
    acc = Poly.zero(field)
    for sign, term in terms:
        if "*" in term:
            cs, vs = term.split("*", 1)
            coeff = field(int(cs))
        elif term.startswith(var):
            coeff = field.one
            vs = term
        elif var in term:
            cs, vs = term.split(var, 1)
            coeff = field(int(cs))
            vs = var + vs
        else:
            coeff = field(int(term))
            vs = ""
        if vs:
            if vs == var:
                e = 1
            elif vs.startswith(var + "^"):
                e = int(vs[len(var) + 1:])
            else:
                raise ValueError(f"bad term {term!r}")
        else:
            e = 0
        if sign < 0:
            coeff = -coeff
        acc = acc + Poly.monomial(field, e, coeff)
    return acc
