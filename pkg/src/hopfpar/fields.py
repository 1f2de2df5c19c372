"""Exact scalars: the rationals and the cyclotomic fields Q(zeta_n).

A cyclotomic element is stored as a coefficient vector over the power basis
1, t, ..., t^(phi(n)-1) of Q[t]/Phi_n(t).  Arithmetic never leaves exact
rational coefficients.  Each session fixes one field; combining elements of
distinct cyclotomic orders raises instead of embedding.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import DivisionByZero, IncompatibleCyclotomicOrder, InputError

_F0 = Fraction(0)
_F1 = Fraction(1)


def euler_phi(n: int) -> int:
    out, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out *= (p - 1) * p ** (e - 1)
        p += 1
    if m > 1:
        out *= m - 1
    return out


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    out = [_F0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(num, den):
    """Exact division in Q[t]; coefficients ascending."""
    num = list(num)
    q = [_F0] * max(0, len(num) - len(den) + 1)
    inv_lead = _F1 / den[-1]
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1] * inv_lead
        if c:
            q[k] = c
            for j, d in enumerate(den):
                num[k + j] -= c * d
    return q, _poly_trim(num)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Phi_n as ascending monic rational coefficients."""
    if n == 1:
        return (_F0 - 1, _F1)
    num = [_F0] * (n + 1)
    num[0], num[n] = Fraction(-1), _F1
    poly = num
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not rem, "cyclotomic division must be exact"
    return tuple(poly)


class CycElt:
    """Element of Q(zeta_n), n >= 2, as a power-basis coefficient tuple."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs):
        self.n = n
        self.coeffs = tuple(coeffs)

    def _check(self, other):
        if isinstance(other, CycElt):
            if other.n != self.n:
                raise IncompatibleCyclotomicOrder(
                    f"cannot mix Q(zeta_{self.n}) with Q(zeta_{other.n})",
                    witness={"n": self.n, "m": other.n},
                )
            return other
        if isinstance(other, (int, Fraction)):
            c = [_F0] * len(self.coeffs)
            c[0] = Fraction(other)
            return CycElt(self.n, c)
        return None

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __neg__(self):
        return CycElt(self.n, tuple(-c for c in self.coeffs))

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return CycElt(self.n, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return CycElt(self.n, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycElt(self.n, tuple(c * q for c in self.coeffs))
        o = self._check(other)
        if o is None:
            return NotImplemented
        field = CyclotomicField(self.n)
        deg = field.degree
        prod = [_F0] * (2 * deg - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(o.coeffs):
                    if y:
                        prod[i + j] += x * y
        out = list(prod[:deg])
        for k in range(deg, len(prod)):
            if prod[k]:
                for j, r in enumerate(field._power_table[k - deg]):
                    out[j] += prod[k] * r
        return CycElt(self.n, out)

    __rmul__ = __mul__

    def inv(self):
        if not self:
            raise DivisionByZero(f"inverse of zero in Q(zeta_{self.n})")
        field = CyclotomicField(self.n)
        # extended Euclid: u*self + v*Phi_n = 1 in Q[t]
        r0, r1 = list(field.modulus), _poly_trim(list(self.coeffs))
        u0, u1 = [], [_F1]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            qu = _poly_mul(q, u1)
            width = max(len(u0), len(qu))
            a = u0 + [_F0] * (width - len(u0))
            b = qu + [_F0] * (width - len(qu))
            u0, u1 = u1, _poly_trim([x - y for x, y in zip(a, b)])
            r0, r1 = r1, r
        assert r1, "Phi_n is irreducible so the gcd is a nonzero constant"
        scale = _F1 / r1[0]
        out = [c * scale for c in u1] + [_F0] * field.degree
        return CycElt(self.n, out[: field.degree])

    def __truediv__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        out = CyclotomicField(self.n).one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c}" if i == 0 else f"{c}*z^{i}")
        return "+".join(parts) if parts else "0"


class RationalField:
    """The prime field Q; elements are fractions.Fraction."""

    order = 1
    degree = 1

    def __init__(self):
        self.zero = _F0
        self.one = _F1

    def from_int(self, k: int) -> Fraction:
        return Fraction(k)

    def embed(self, q) -> Fraction:
        return Fraction(q)

    coerce = embed

    def inv(self, x):
        if not x:
            raise DivisionByZero("inverse of zero in Q")
        return _F1 / x

    def zeta(self, k: int = 1):
        raise InputError("Q has no primitive root of unity beyond -1, 1")

    def to_json(self, x) -> dict:
        return {"n": 1, "coeffs": [[x.numerator, x.denominator]]}

    def from_json(self, obj):
        if obj.get("n", 1) != 1:
            raise IncompatibleCyclotomicOrder("expected a rational scalar")
        num, den = obj["coeffs"][0]
        return Fraction(num, den)

    def parse(self, text: str):
        return _parse_scalar(self, text)

    def format(self, x) -> str:
        return str(x)

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class CyclotomicField:
    """Q(zeta_n) for n >= 2, with the power basis of Q[t]/Phi_n."""

    _instances: dict = {}

    def __new__(cls, n: int):
        if n in cls._instances:
            return cls._instances[n]
        inst = super().__new__(cls)
        cls._instances[n] = inst
        return inst

    def __init__(self, n: int):
        if getattr(self, "order", None) == n:
            return
        if n < 2:
            raise InputError("use RationalField for n = 1")
        self.order = n
        self.degree = euler_phi(n)
        self.modulus = cyclotomic_polynomial(n)
        # t^(degree+k) reduced mod Phi_n, for k = 0 .. degree-2
        table = []
        prev = [-c for c in self.modulus[:-1]]
        table.append(tuple(prev))
        for _ in range(self.degree - 2):
            nxt = [_F0] + prev[:-1]
            top = prev[-1]
            if top:
                for j in range(self.degree):
                    nxt[j] -= top * self.modulus[j]
            table.append(tuple(nxt))
            prev = nxt
        self._power_table = table
        self.zero = CycElt(n, (_F0,) * self.degree)
        one = [_F0] * self.degree
        one[0] = _F1
        self.one = CycElt(n, one)

    def from_int(self, k: int) -> CycElt:
        c = [_F0] * self.degree
        c[0] = Fraction(k)
        return CycElt(self.order, c)

    def embed(self, q) -> CycElt:
        c = [_F0] * self.degree
        c[0] = Fraction(q)
        return CycElt(self.order, c)

    def coerce(self, x) -> CycElt:
        if isinstance(x, CycElt):
            if x.n != self.order:
                raise IncompatibleCyclotomicOrder(
                    f"cannot coerce Q(zeta_{x.n}) into Q(zeta_{self.order})"
                )
            return x
        return self.embed(x)

    def inv(self, x):
        return self.coerce(x).inv()

    def zeta(self, k: int = 1) -> CycElt:
        k %= self.order
        out = self.one
        if self.degree == 1:
            # n = 2: zeta = -1
            root = self.embed(-1)
        else:
            c = [_F0] * self.degree
            c[1] = _F1
            root = CycElt(self.order, c)
        for _ in range(k):
            out = out * root
        return out

    def to_json(self, x) -> dict:
        x = self.coerce(x)
        return {"n": self.order, "coeffs": [[c.numerator, c.denominator] for c in x.coeffs]}

    def from_json(self, obj) -> CycElt:
        if obj.get("n") != self.order:
            raise IncompatibleCyclotomicOrder(
                f"scalar of order {obj.get('n')} in a Q(zeta_{self.order}) session"
            )
        return CycElt(self.order, tuple(Fraction(a, b) for a, b in obj["coeffs"]))

    def parse(self, text: str):
        return _parse_scalar(self, text)

    def format(self, x) -> str:
        return repr(self.coerce(x))

    def __repr__(self):
        return f"Q(zeta_{self.order})"

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.order == self.order

    def __hash__(self):
        return hash(("Qzeta", self.order))


def field_for(n: int):
    return RationalField() if n <= 1 else CyclotomicField(n)


def _parse_term(field, term: str):
    term = term.strip()
    neg = False
    while term and term[0] in "+-":
        if term[0] == "-":
            neg = not neg
        term = term[1:].strip()
    if not term:
        raise InputError("empty scalar term")
    coeff = field.one
    for factor in term.split("*"):
        factor = factor.strip()
        if factor in ("i", "I"):
            if isinstance(field, RationalField) or field.order % 4 != 0:
                raise InputError("'i' needs a cyclotomic field of order divisible by 4")
            coeff = coeff * field.zeta(field.order // 4)
        elif factor.startswith("zeta"):
            if isinstance(field, RationalField):
                raise InputError("'zeta' needs a cyclotomic field")
            k = 1
            if "^" in factor:
                factor, exp = factor.split("^")
                k = int(exp)
            coeff = coeff * field.zeta(k)
        else:
            coeff = coeff * field.embed(Fraction(factor))
    return -coeff if neg else coeff


def _parse_scalar(field, text: str):
    """Parse sums of terms like '-1', '2/3', 'i', 'zeta^3', '1/2*zeta'."""
    text = text.strip()
    if not text:
        raise InputError("empty scalar")
    terms, cur, depth = [], "", 0
    for ch in text:
        if ch in "+-" and cur.strip() and not cur.rstrip().endswith(("*", "^", "/")):
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    total = field.zero
    for t in terms:
        total = total + _parse_term(field, t)
    return total
