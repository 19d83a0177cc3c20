"""Exact field arithmetic over Q, GF(p), and the cyclotomic extensions Q(zeta_m).

Every element is kept in a canonical representation, so equality of values is
equality of representations:

  * rationals      -> ``fractions.Fraction`` (reduced, positive denominator)
  * GF(p) residues -> ``int`` in ``[0, p)``
  * Q(zeta_m)      -> tuple of Fractions of length deg(Phi_m), reduced modulo
                      the m-th cyclotomic polynomial Phi_m

Q(zeta_1) is the rationals and constructing it yields the rational field.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional, Sequence

from .errors import FieldMismatchError, ParseError

PRIME_LIMIT = 2**31
DLOG_TABLE_LIMIT = 10**6


# ---------------------------------------------------------------------------
# integer helpers


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for every n < 3_215_031_751."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n >= 1, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def integer_kth_root(x: int, k: int) -> int:
    """floor(x ** (1/k)) for x >= 0, k >= 1, computed with integer Newton steps."""
    if x < 0 or k < 1:
        raise ValueError("integer_kth_root needs x >= 0 and k >= 1")
    if x in (0, 1) or k == 1:
        return x
    r = 1 << -(-x.bit_length() // k)
    while True:
        nr = ((k - 1) * r + x // r ** (k - 1)) // k
        if nr >= r:
            return r
        r = nr


def perfect_kth_root(q: Fraction, k: int) -> Optional[Fraction]:
    """The positive rational r with r**k == q, or None. Requires q > 0."""
    if q <= 0:
        raise ValueError("perfect_kth_root needs q > 0")
    a = integer_kth_root(q.numerator, k)
    if a**k != q.numerator:
        return None
    b = integer_kth_root(q.denominator, k)
    if b**k != q.denominator:
        return None
    return Fraction(a, b)


# ---------------------------------------------------------------------------
# integer polynomials (ascending coefficient lists) for Phi_m


def _poly_div_exact(num: Sequence[int], den: Sequence[int]) -> tuple[int, ...]:
    """Exact division of integer polynomials; den must be monic and divide num."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dd]
        out[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    if any(num[:dd]):
        raise ValueError("polynomial division was not exact")
    return tuple(out)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, ascending, computed by dividing x^m - 1 by the
    proper-divisor cyclotomic polynomials."""
    if m < 1:
        raise ParseError("cyclotomic conductor must be >= 1")
    poly: tuple[int, ...] = tuple([-1] + [0] * (m - 1) + [1])
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return poly


# ---------------------------------------------------------------------------
# scalars


class Scalar:
    """A field element paired with its field handle. Immutable and hashable."""

    __slots__ = ("field", "value")

    def __init__(self, field: "Field", value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, *_):
        raise AttributeError("Scalar is immutable")

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"cannot mix {self.field.descriptor()} and {other.field.descriptor()}"
                )
            return other
        return self.field.scalar(other)

    @property
    def is_zero(self) -> bool:
        return self.field._is_zero(self.value)

    def __add__(self, other):
        o = self._coerce(other)
        return Scalar(self.field, self.field._add(self.value, o.value))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return Scalar(self.field, self.field._sub(self.value, o.value))

    def __rsub__(self, other):
        return self._coerce(other).__sub__(self)

    def __mul__(self, other):
        o = self._coerce(other)
        return Scalar(self.field, self.field._mul(self.value, o.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.is_zero:
            raise ZeroDivisionError("division by zero scalar")
        return Scalar(self.field, self.field._mul(self.value, self.field._inv(o.value)))

    def __rtruediv__(self, other):
        return self._coerce(other).__truediv__(self)

    def __neg__(self):
        return Scalar(self.field, self.field._neg(self.value))

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return Scalar(self.field, self.field._pow(self.value, k))

    def inverse(self) -> "Scalar":
        if self.is_zero:
            raise ZeroDivisionError("zero scalar has no inverse")
        return Scalar(self.field, self.field._inv(self.value))

    def multiplicative_order(self) -> Optional[int]:
        return self.field.multiplicative_order(self)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.field.scalar(other).value
            except (ParseError, ValueError):
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def sort_key(self):
        """A total order within one field, used for deterministic output."""
        return self.field._sort_key(self.value)

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"Scalar({self.field.descriptor()}, {self})"


class UnityGroup(NamedTuple):
    """The cyclic group of all roots of unity contained in a field."""

    order: int
    generator: Scalar


class KthRoots(NamedTuple):
    """Outcome of solving x**k = c: either the complete root list, or an
    honest refusal carrying the unsolved equation."""

    complete: bool
    roots: tuple[Scalar, ...]
    equation: Optional[str] = None


# ---------------------------------------------------------------------------
# fields


class Field:
    """Common interface; concrete classes fill in the raw-value arithmetic."""

    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"<field {self.descriptor()}>"

    def descriptor(self) -> str:
        raise NotImplementedError

    @property
    def zero(self) -> Scalar:
        return self.scalar(0)

    @property
    def one(self) -> Scalar:
        return self.scalar(1)

    def scalar(self, value) -> Scalar:
        """Coerce an int, Fraction, string, or same-field Scalar."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(
                    f"scalar from {value.field.descriptor()} used in {self.descriptor()}"
                )
            return value
        return Scalar(self, self._convert(value))

    def unity_group(self) -> UnityGroup:
        return UnityGroup(self._unity_order(), self.scalar(self._unity_generator()))

    def roots_of_unity(self, k: int) -> list[Scalar]:
        """All x in the field with x**k == 1; there are gcd(k, N) of them."""
        if k < 1:
            raise ValueError("k must be >= 1")
        n_roots = math.gcd(k, self._unity_order())
        g = self.unity_group().generator ** (self._unity_order() // n_roots)
        out, cur = [], self.one
        for _ in range(n_roots):
            out.append(cur)
            cur = cur * g
        return sorted(out, key=Scalar.sort_key)

    def multiplicative_order(self, x: Scalar) -> Optional[int]:
        """Order of x when x is a root of unity, else None."""
        x = self.scalar(x)
        if x.is_zero:
            raise ZeroDivisionError("zero has no multiplicative order")
        big_n = self._unity_order()
        if x**big_n != self.one:
            return None
        t = big_n
        for q in prime_factors(big_n) if big_n > 1 else []:
            while t % q == 0 and x ** (t // q) == self.one:
                t //= q
        return t

    def _unity_dlog(self, x: Scalar) -> Optional[int]:
        """Exponent e with generator**e == x, or None when x is not in mu_N."""
        table = getattr(self, "_unity_table", None)
        if table is None:
            table = {}
            g = self.unity_group().generator
            cur = self.one
            for e in range(self._unity_order()):
                table[cur] = e
                cur = cur * g
            self._unity_table = table
        return table.get(self.scalar(x))

    def kth_roots(self, c: Scalar, k: int) -> KthRoots:
        """All field solutions of x**k = c, when decidable.

        Roots of unity and rational-times-root-of-unity right-hand sides are
        always decided exactly; a genuinely irrational cyclotomic c comes back
        as an incomplete outcome carrying the equation text.
        """
        c = self.scalar(c)
        if c.is_zero:
            raise ZeroDivisionError("kth_roots requires c != 0")
        if k < 1:
            raise ValueError("k must be >= 1")
        return self._kth_roots(c, k)

    def _solve_unity_power(self, k: int, e: int) -> list[Scalar]:
        """Solutions y in mu_N of y**k = g**e, via the congruence k*t = e (mod N)."""
        big_n = self._unity_order()
        d = math.gcd(k, big_n)
        if e % d:
            return []
        step = big_n // d
        t0 = (e // d) * pow(k // d, -1, step) % step if step > 1 else 0
        g = self.unity_group().generator
        return [g ** ((t0 + j * step) % big_n) for j in range(d)]

    # raw-value hooks -------------------------------------------------------

    def _convert(self, value):
        raise NotImplementedError

    def _add(self, a, b):
        raise NotImplementedError

    def _sub(self, a, b):
        return self._add(a, self._neg(b))

    def _mul(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _inv(self, a):
        raise NotImplementedError

    def _is_zero(self, a) -> bool:
        raise NotImplementedError

    def _pow(self, a, k: int):
        out = self._convert(1)
        base = a
        while k:
            if k & 1:
                out = self._mul(out, base)
            base = self._mul(base, base)
            k >>= 1
        return out

    def _sort_key(self, a):
        raise NotImplementedError

    def _unity_order(self) -> int:
        raise NotImplementedError

    def _unity_generator(self):
        raise NotImplementedError

    def _kth_roots(self, c: Scalar, k: int) -> KthRoots:
        raise NotImplementedError

    def format(self, value) -> str:
        raise NotImplementedError

    def parse(self, text: str) -> Scalar:
        raise NotImplementedError

    @property
    def characteristic(self) -> int:
        raise NotImplementedError


class RationalField(Field):
    """The rational numbers."""

    def _key(self):
        return ("Q",)

    def descriptor(self) -> str:
        return "Q"

    @property
    def characteristic(self) -> int:
        return 0

    def _convert(self, value):
        if isinstance(value, bool):
            raise ParseError("bool is not a scalar")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value).value
        raise ParseError(f"cannot coerce {value!r} into Q")

    def _add(self, a, b):
        return a + b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        return 1 / a

    def _is_zero(self, a):
        return a == 0

    def _pow(self, a, k):
        return a**k

    def _sort_key(self, a):
        return a

    def _unity_order(self):
        return 2

    def _unity_generator(self):
        return Fraction(-1)

    def _as_fraction(self, value) -> Optional[Fraction]:
        return value

    def _kth_roots(self, c: Scalar, k: int) -> KthRoots:
        return _char0_kth_roots(self, c, k)

    def format(self, value) -> str:
        return str(value)

    def parse(self, text: str) -> Scalar:
        try:
            return Scalar(self, Fraction(text.strip().replace(" ", "")))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {text!r}") from exc


class PrimeField(Field):
    """GF(p) for a prime p < 2**31; the discrete-log table is built once at
    construction for p <= 10**6 and powers kth_roots."""

    def __init__(self, p: int):
        if not isinstance(p, int) or p >= PRIME_LIMIT or not is_prime(p):
            raise ParseError(f"GF modulus must be a prime below 2**31, got {p!r}")
        self.p = p
        self.generator = self._find_primitive_root()
        self._dlog: Optional[dict[int, int]] = None
        if p <= DLOG_TABLE_LIMIT:
            table, cur = {}, 1
            for e in range(p - 1):
                table[cur] = e
                cur = cur * self.generator % p
            self._dlog = table

    def _find_primitive_root(self) -> int:
        if self.p == 2:
            return 1
        n = self.p - 1
        qs = prime_factors(n)
        for g in range(2, self.p):
            if all(pow(g, n // q, self.p) != 1 for q in qs):
                return g
        raise RuntimeError("no primitive root found")  # unreachable for prime p

    def _key(self):
        return ("GF", self.p)

    def descriptor(self) -> str:
        return f"GF({self.p})"

    @property
    def characteristic(self) -> int:
        return self.p

    def _convert(self, value):
        if isinstance(value, bool):
            raise ParseError("bool is not a scalar")
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ParseError(f"denominator of {value} vanishes mod {self.p}")
            return value.numerator * pow(den, -1, self.p) % self.p
        if isinstance(value, str):
            return self.parse(value).value
        raise ParseError(f"cannot coerce {value!r} into GF({self.p})")

    def _add(self, a, b):
        return (a + b) % self.p

    def _mul(self, a, b):
        return a * b % self.p

    def _neg(self, a):
        return -a % self.p

    def _inv(self, a):
        return pow(a, -1, self.p)

    def _is_zero(self, a):
        return a == 0

    def _pow(self, a, k):
        return pow(a, k, self.p)

    def _sort_key(self, a):
        return a

    def _unity_order(self):
        return self.p - 1 if self.p > 2 else 1

    def _unity_generator(self):
        return self.generator if self.p > 2 else 1

    def _kth_roots(self, c: Scalar, k: int) -> KthRoots:
        if self._dlog is None:
            return KthRoots(False, (), f"x^{k} = {c} over {self.descriptor()}")
        a = self._dlog[c.value]
        roots = self._solve_unity_power(k, a)
        return KthRoots(True, tuple(sorted(roots, key=Scalar.sort_key)))

    def format(self, value) -> str:
        return str(value)

    def parse(self, text: str) -> Scalar:
        text = text.strip().replace(" ", "")
        try:
            return Scalar(self, self._convert(Fraction(text)))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad GF({self.p}) scalar {text!r}") from exc


_TERM_RE = re.compile(
    r"^([+-]?)(?:(\d+(?:/\d+)?)\*?)?(?:z(?:\^(\d+))?)?$"
)


class CyclotomicField(Field):
    """Q(zeta_m) for m >= 2, as Q[z] modulo Phi_m. Conductor 1 collapses to Q."""

    def __new__(cls, m: int):
        if m == 1:
            return RationalField()
        return super().__new__(cls)

    def __init__(self, m: int):
        if m == 1:
            return
        if not isinstance(m, int) or m < 1:
            raise ParseError(f"cyclotomic conductor must be a positive int, got {m!r}")
        self.m = m
        self.phi = cyclotomic_polynomial(m)
        self.degree = len(self.phi) - 1
        # z^(degree + i) reduced mod Phi_m, integer coefficient rows
        red: list[tuple[int, ...]] = [tuple(-c for c in self.phi[:-1])]
        for _ in range(self.degree - 1):
            prev = red[-1]
            shifted = [0] + list(prev[:-1])
            top = prev[-1]
            if top:
                shifted = [s + top * r for s, r in zip(shifted, red[0])]
            red.append(tuple(shifted))
        self._red = red

    def _key(self):
        return ("cyclo", self.m)

    def descriptor(self) -> str:
        return f"Q(zeta_{self.m})"

    @property
    def characteristic(self) -> int:
        return 0

    @property
    def zeta(self) -> Scalar:
        """The distinguished primitive m-th root of unity."""
        vec = [Fraction(0)] * self.degree
        if self.degree == 1:
            # m == 2: zeta is -1
            vec[0] = Fraction(-1)
        else:
            vec[1] = Fraction(1)
        return Scalar(self, tuple(vec))

    def _convert(self, value):
        if isinstance(value, bool):
            raise ParseError("bool is not a scalar")
        if isinstance(value, (int, Fraction)):
            vec = [Fraction(0)] * self.degree
            vec[0] = Fraction(value)
            return tuple(vec)
        if isinstance(value, str):
            return self.parse(value).value
        if isinstance(value, tuple) and len(value) == self.degree:
            return tuple(Fraction(v) for v in value)
        raise ParseError(f"cannot coerce {value!r} into {self.descriptor()}")

    def _reduce(self, conv: list[Fraction]) -> tuple[Fraction, ...]:
        deg = self.degree
        out = list(conv[:deg]) + [Fraction(0)] * (deg - len(conv[:deg]))
        for t in range(deg, len(conv)):
            c = conv[t]
            if c:
                row = self._red[t - deg]
                for i in range(deg):
                    if row[i]:
                        out[i] += c * row[i]
        return tuple(out)

    def _add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def _mul(self, a, b):
        deg = self.degree
        conv = [Fraction(0)] * (2 * deg - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        return self._reduce(conv)

    def _neg(self, a):
        return tuple(-x for x in a)

    def _inv(self, a):
        # extended Euclid in Q[x] against Phi_m, which is irreducible, keeping
        # the Bezout coefficient of a: r_i = s_i * a + t_i * Phi_m
        r0 = [Fraction(v) for v in a]
        while r0 and r0[-1] == 0:
            r0.pop()
        if not r0:
            raise ZeroDivisionError("zero has no inverse")
        r1 = [Fraction(c) for c in self.phi]
        s0, s1 = [Fraction(1)], []
        while r1:
            q = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, _frac_poly_sub(r0, _frac_poly_mul(q, r1))
            s0, s1 = s1, _frac_poly_sub(s0, _frac_poly_mul(q, s1))
        lead = r0[0]  # gcd is a nonzero constant
        inv_poly = [c / lead for c in s0]
        vec = inv_poly + [Fraction(0)] * max(0, self.degree - len(inv_poly))
        return self._reduce(vec)

    def _is_zero(self, a):
        return all(x == 0 for x in a)

    def _sort_key(self, a):
        return a

    def _unity_order(self):
        return self.m if self.m % 2 == 0 else 2 * self.m

    def _unity_generator(self):
        z = self.zeta
        return z.value if self.m % 2 == 0 else self._neg(z.value)

    def _as_fraction(self, value) -> Optional[Fraction]:
        if all(x == 0 for x in value[1:]):
            return value[0]
        return None

    def _kth_roots(self, c: Scalar, k: int) -> KthRoots:
        return _char0_kth_roots(self, c, k)

    def format(self, value) -> str:
        parts = []
        for i, coef in enumerate(value):
            if coef == 0:
                continue
            mag = abs(coef)
            if i == 0:
                body = str(mag)
            else:
                zpart = "z" if i == 1 else f"z^{i}"
                body = zpart if mag == 1 else f"{mag}*{zpart}"
            parts.append(("-" if coef < 0 else "+", body))
        if not parts:
            return "0"
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def parse(self, text: str) -> Scalar:
        s = text.replace(" ", "")
        if not s:
            raise ParseError("empty scalar string")
        terms = re.findall(r"[+-]?[^+-]+", s)
        if "".join(terms) != s:
            raise ParseError(f"bad scalar {text!r}")
        coeffs: dict[int, Fraction] = {}
        for term in terms:
            mt = _TERM_RE.match(term)
            if not mt or (mt.group(2) is None and "z" not in term):
                raise ParseError(f"bad term {term!r} in {text!r}")
            sign = -1 if mt.group(1) == "-" else 1
            coef = Fraction(mt.group(2)) if mt.group(2) else Fraction(1)
            if "z" in term:
                power = int(mt.group(3)) if mt.group(3) else 1
            else:
                power = 0
            coeffs[power] = coeffs.get(power, Fraction(0)) + sign * coef
        conv = [Fraction(0)] * (max(coeffs) + 1)
        for power, coef in coeffs.items():
            conv[power] = coef
        return Scalar(self, self._reduce(conv))


# rational polynomial helpers for the cyclotomic inverse


def _frac_poly_divmod(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    """Quotient of num by den over Q (den nonzero)."""
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return []
    q = [Fraction(0)] * (len(num) - dd)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + dd] / den[-1]
        q[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    return q


def _frac_poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _frac_poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    while out and out[-1] == 0:
        out.pop()
    return out


def _char0_kth_roots(field: Field, c: Scalar, k: int) -> KthRoots:
    """Shared characteristic-zero solver for x**k = c.

    Splits c as u*w with u a root of unity and w > 0 rational whenever c**N is
    a perfect N-th power of a rational; then x = r*y with r**k = w rational
    and y ranging over the mu_N solutions of y**k = u. When the split or the
    rational root extraction fails, the answer is decisively empty over Q and
    honestly incomplete over a bigger cyclotomic field.
    """
    big_n = field._unity_order()
    equation = f"x^{k} = {c} over {field.descriptor()}"
    z = (c**big_n).value
    zf = field._as_fraction(z)
    rational_line = field._as_fraction(c.value) is not None
    if zf is None or zf <= 0:
        return KthRoots(False, (), equation)
    w = perfect_kth_root(zf, big_n)
    if w is None:
        if rational_line:
            raise RuntimeError("rational c**N must be a perfect N-th power")
        return KthRoots(False, (), equation)
    u = c / field.scalar(w)
    e = field._unity_dlog(u)
    if e is None:
        # c = u*w with u**N = 1 by construction, so u must lie in mu_N
        raise RuntimeError("unity part missing from the root-of-unity table")
    r = perfect_kth_root(w, k)
    if r is None:
        # Any solution would put the positive real radical w^(1/k) inside the
        # field: |x|^2 = w^(2/k) is fixed by conjugation. For odd k the other
        # conjugates w^(1/k) * omega are non-real, so normality of subfields
        # of an abelian extension forces w^(1/k) rational, a contradiction.
        # Over the rationals themselves |x|^k = w settles every k.
        if k % 2 == 1 or getattr(field, "degree", 1) == 1:
            return KthRoots(True, ())
        return KthRoots(False, (), equation)
    rs = field.scalar(r)
    roots = [rs * y for y in field._solve_unity_power(k, e)]
    return KthRoots(True, tuple(sorted(roots, key=Scalar.sort_key)))


# ---------------------------------------------------------------------------
# descriptor grammar: Q | GF(p) | Q(zeta_m)

_GF_RE = re.compile(r"^GF\((\d+)\)$")
_CYCLO_RE = re.compile(r"^Q\(zeta_(\d+)\)$")


def parse_field(text: str) -> Field:
    s = text.strip()
    if s == "Q":
        return RationalField()
    mt = _GF_RE.match(s)
    if mt:
        return PrimeField(int(mt.group(1)))
    mt = _CYCLO_RE.match(s)
    if mt:
        return CyclotomicField(int(mt.group(1)))
    raise ParseError(f"bad field descriptor {text!r}")
