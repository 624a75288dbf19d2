"""Polynomials over GF(2) packed into Python ints.

Bit i of the integer is the coefficient of t^i, so the zero polynomial
is 0 and deg(f) = f.bit_length() - 1.  All functions here are free
functions on ints; the Poly layer packs and unpacks at its boundary.

Multiplication uses carry-less shift-xor for small operands and a
Kronecker-style substitution into 16-bit lanes for large ones, riding
on CPython's subquadratic big-int multiply.  Reduction uses a Barrett
precomputation (a Newton-iterated power series inverse of the reversed
modulus) so repeated powmod steps cost two multiplies each.
"""

from __future__ import annotations

_MUL_LANE_CUTOVER = 2048  # bits; below this shift-xor wins

# byte -> its 16-byte spread (each bit moved to its own 16-bit lane)
_SPREAD = []
for _b in range(256):
    _acc = 0
    for _i in range(8):
        if _b >> _i & 1:
            _acc |= 1 << (16 * _i)
    _SPREAD.append(_acc.to_bytes(16, "little"))

# byte -> squared spread (bit i -> bit 2i), for cheap squaring
_SQR = []
for _b in range(256):
    _acc = 0
    for _i in range(8):
        if _b >> _i & 1:
            _acc |= 1 << (2 * _i)
    _SQR.append(_acc)
del _b, _acc, _i


def deg(f: int) -> int:
    return f.bit_length() - 1


def mul(a: int, b: int) -> int:
    """Carry-less product of two GF(2) polynomials."""
    if not a or not b:
        return 0
    if a.bit_length() > b.bit_length():
        a, b = b, a
    if a.bit_length() <= _MUL_LANE_CUTOVER:
        acc = 0
        while a:
            low = a & -a
            acc ^= b * low  # low is a single bit, so this is b << shift
            a ^= low
        return acc
    return _lane_mul(a, b)


def _spread16(a: int) -> int:
    """Place each bit of a into its own 16-bit lane."""
    nbytes = (a.bit_length() + 7) // 8
    raw = a.to_bytes(nbytes, "little")
    return int.from_bytes(b"".join(_SPREAD[byte] for byte in raw), "little")


def _lane_mul(a: int, b: int) -> int:
    # A product lane accumulates at most min(deg a, deg b)+1 terms, so
    # 16-bit lanes cannot overflow below 2^16-bit operands; above that
    # the smaller operand is split.
    if not a or not b:
        return 0
    la, lb = a.bit_length(), b.bit_length()
    if min(la, lb) >= (1 << 16):
        if la > lb:
            a, b = b, a
            la, lb = lb, la
        half = la // 2
        lo = a & ((1 << half) - 1)
        return _lane_mul(lo, b) ^ (_lane_mul(a >> half, b) << half)
    wide = _spread16(a) * _spread16(b)
    nlanes = la + lb - 1
    raw = wide.to_bytes(2 * nlanes + 4, "little")
    out = 0
    for i in range(nlanes):
        if raw[2 * i] & 1:
            out |= 1 << i
    return out


def sqr(f: int) -> int:
    """f(t)^2 = f(t^2): interleave zero bits."""
    if not f:
        return 0
    nbytes = (f.bit_length() + 7) // 8
    raw = f.to_bytes(nbytes, "little")
    out = 0
    for i, byte in enumerate(raw):
        if byte:
            out |= _SQR[byte] << (16 * i)
    return out


def divmod_(a: int, b: int):
    if not b:
        raise ZeroDivisionError("gf2 division by zero")
    db = deg(b)
    q = 0
    while a.bit_length() - 1 >= db:
        shift = a.bit_length() - 1 - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def mod_(a: int, b: int) -> int:
    db = deg(b)
    while a.bit_length() - 1 >= db:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def gcd(a: int, b: int) -> int:
    while b:
        a, b = b, mod_(a, b)
    return a


def bitrev(f: int, width: int) -> int:
    """Reverse the low `width` bits of f."""
    return int(bin(f | 1 << width)[3:][::-1], 2)


class Reducer:
    """Barrett reduction mod a fixed f over GF(2).

    Precomputes a power series inverse of the bit-reversal of f, grown
    by Newton iteration to whatever precision incoming dividends need;
    reduce() then costs two multiplies regardless of dividend size.
    """

    __slots__ = ("f", "n", "rf", "rinv", "prec")

    def __init__(self, f: int):
        if f < 2:
            raise ValueError("modulus must have degree >= 1")
        self.f = f
        self.n = deg(f)
        self.rf = bitrev(f, self.n + 1)
        self.rinv = 1  # rf has constant term 1, so 1 is correct mod t
        self.prec = 1
        self._ensure(self.n + 1)

    def _ensure(self, prec: int) -> None:
        inv, k = self.rinv, self.prec
        rf = self.rf
        while k < prec:
            k = min(2 * k, prec)
            mask = (1 << k) - 1
            err = (mul(rf & mask, inv) & mask) ^ 1
            if err:
                inv = (inv ^ mul(inv, err)) & mask
        self.rinv, self.prec = inv, k

    def reduce(self, a: int) -> int:
        n = self.n
        da = deg(a)
        if da < n:
            return a
        k = da - n
        self._ensure(k + 1)
        mask = (1 << (k + 1)) - 1
        rq = mul(bitrev(a, da + 1) & mask, self.rinv) & mask
        q = bitrev(rq, k + 1)
        return a ^ mul(q, self.f)

    def mulmod(self, a: int, b: int) -> int:
        return self.reduce(mul(a, b))

    def sqrmod(self, a: int) -> int:
        return self.reduce(sqr(a))


def powmod(a: int, e: int, f: int) -> int:
    red = Reducer(f)
    a = red.reduce(a)
    result = 1
    while e:
        if e & 1:
            result = red.mulmod(result, a)
        a = red.sqrmod(a)
        e >>= 1
    return result


def is_irreducible(f: int) -> bool:
    """Rabin's test, specialised to GF(2) with packed squarings."""
    n = deg(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    if not f & 1:
        return False  # divisible by t
    if bin(f).count("1") % 2 == 0:
        return False  # divisible by t+1
    primes = []
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            primes.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        primes.append(m)
    checkpoints = sorted({n // r for r in primes})
    red = Reducer(f)
    h = 2  # the polynomial t
    done = 0
    for cp in checkpoints:
        for _ in range(cp - done):
            h = red.sqrmod(h)
        done = cp
        if gcd(h ^ 2, f) != 1:
            return False
    for _ in range(n - done):
        h = red.sqrmod(h)
    return h == 2
