"""Exact arithmetic in GF(p^m).

A field is described by its characteristic p, extension degree m and a monic
irreducible polynomial f of degree m over GF(p), given as a coefficient list
[c0, c1, ..., 1] with the constant term first.  Elements are residue classes
of GF(p)[x] mod f; the residue of x is written t.

Internally an element is a single integer code sum(c_i * p^i) over its
coefficient vector (c_0, ..., c_{m-1}).  For fields up to TABLE_LIMIT
elements, dense add/mul/inverse/Frobenius tables are cached both as plain
lists (scalar hot path) and as numpy arrays (vectorized linear algebra);
larger fields fall back to polynomial arithmetic per operation.

Canonical text format: "0", "1" or "t^k" in discrete-log form when t
generates K*, with "w" and "tau" accepted as aliases of "t"; a coefficient
form "[c0,c1,...]" always parses, and a bare integer parses as an element of
the prime subfield.
"""

from __future__ import annotations

import numpy as np

from .errors import (DegreeMismatchError, FieldTooLargeError,
                     NotIrreducibleError, NotPrimeError, ParseError)

TABLE_LIMIT = 4096


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p); little-endian coefficient lists, no
# trailing zeros


def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    return _ptrim(res)


def _pmod(a, f, p):
    a = list(a)
    linv = pow(f[-1], p - 2, p)
    while len(a) >= len(f):
        c = a[-1] % p
        if c:
            s = (c * linv) % p
            off = len(a) - len(f)
            for i, fi in enumerate(f):
                a[off + i] = (a[off + i] - s * fi) % p
        a.pop()
    return _ptrim(a)


def _pgcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(a, e, f, p):
    """a^e mod f."""
    r = [1]
    a = _pmod(a, f, p)
    while e:
        if e & 1:
            r = _pmod(_pmul(r, a, p), f, p)
        a = _pmod(_pmul(a, a, p), f, p)
        e >>= 1
    return r


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_irreducible(poly, p, m):
    """Rabin test: x^(p^m) = x mod f and gcd(x^(p^(m/l)) - x, f) = 1."""
    if m == 1:
        return True
    x = [0, 1]
    xq = _ppowmod(x, p ** m, poly, p)
    lhs = _ptrim([(a - b) % p for a, b in
                  zip(xq + [0] * 2, x + [0] * max(0, len(xq) - 2))])
    if lhs:
        return False
    for ell in prime_factors(m):
        xe = _ppowmod(x, p ** (m // ell), poly, p)
        diff = [(a - b) % p for a, b in
                zip(xe + [0, 0], x + [0] * max(0, len(xe) - 2))]
        g = _pgcd(poly, _ptrim(diff), p)
        if len(g) != 1:
            return False
    return True


# ---------------------------------------------------------------------------


class FieldTables:
    """Dense numpy lookup tables for vectorized GF(q) linear algebra."""

    __slots__ = ("q", "add", "mul", "neg", "inv", "frob", "dlog", "exp")

    def __init__(self, field: "FiniteField"):
        q, p, m = field.q, field.p, field.m
        if q > TABLE_LIMIT:
            raise FieldTooLargeError(
                f"dense tables capped at q <= {TABLE_LIMIT}, got q = {q}")
        self.q = q
        codes = np.arange(q)
        digits = np.array([(codes // p ** i) % p for i in range(m)])  # (m, q)
        sums = (digits[:, :, None] + digits[:, None, :]) % p
        weights = (p ** np.arange(m)).reshape(m, 1, 1)
        self.add = (sums * weights).sum(axis=0).astype(np.int32)
        self.neg = (((p - digits) % p) * weights[:, :, 0]).sum(axis=0).astype(np.int32)

        # multiplication via discrete logs of an internal generator
        gen = field._find_generator()
        exp = np.zeros(max(q - 1, 1), dtype=np.int32)
        dlog = -np.ones(q, dtype=np.int64)
        x = 1
        for k in range(q - 1):
            exp[k] = x
            dlog[x] = k
            x = field._mul_poly(x, gen)
        a_nz = np.arange(1, q)
        mul = np.zeros((q, q), dtype=np.int32)
        mul[1:, 1:] = exp[(dlog[a_nz][:, None] + dlog[a_nz][None, :]) % (q - 1)]
        self.mul = mul
        self.exp = exp
        self.dlog = dlog
        inv = np.zeros(q, dtype=np.int32)
        inv[1:] = exp[(-dlog[a_nz]) % (q - 1)]
        self.inv = inv
        frob = np.zeros((m, q), dtype=np.int32)
        frob[0] = codes
        if m > 1:
            powp = np.zeros(q, dtype=np.int32)
            powp[1:] = exp[(dlog[a_nz] * p) % (q - 1)]
            frob[1] = powp
            for k in range(2, m):
                frob[k] = powp[frob[k - 1]]
        self.frob = frob


class FiniteField:
    """GF(p^m) with an explicit defining polynomial."""

    def __init__(self, p: int, m: int, poly):
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        if m < 1:
            raise DegreeMismatchError("extension degree must be >= 1")
        poly = [c % p for c in poly]
        if len(poly) != m + 1 or poly[-1] != 1:
            raise DegreeMismatchError(
                f"need a monic polynomial of degree {m}, got {poly}")
        if not _is_irreducible(poly, p, m):
            raise NotIrreducibleError(
                f"{poly} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.poly = tuple(poly)
        self.q = p ** m
        if self.q > 2 ** 20:
            raise FieldTooLargeError("fields capped at p^m <= 2^20")
        self.t = p if m > 1 else (-poly[0]) % p  # residue of x as a code
        self.primitive = self._order(self.t) == self.q - 1
        self._tables = None
        self._scalar_mul = None
        self._scalar_frob = None
        self._dlog_t = None

    # -- identity / comparison ------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, FiniteField)
                and (self.p, self.m, self.poly) == (other.p, other.m, other.poly))

    def __hash__(self):
        return hash((self.p, self.m, self.poly))

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    # -- code-level arithmetic ------------------------------------------------

    def coeffs_of(self, code: int) -> tuple:
        p = self.p
        return tuple((code // p ** i) % p for i in range(self.m))

    def code_of(self, coeffs) -> int:
        c = 0
        for x in reversed(list(coeffs)):
            c = c * self.p + (x % self.p)
        return c

    def add_c(self, a: int, b: int) -> int:
        p = self.p
        if self.m == 1:
            return (a + b) % p
        c, w = 0, 1
        while a or b:
            c += ((a + b) % p) * w
            a //= p
            b //= p
            w *= p
        return c

    def neg_c(self, a: int) -> int:
        p = self.p
        if self.m == 1:
            return (-a) % p
        c, w = 0, 1
        while a:
            c += ((p - a % p) % p) * w
            a //= p
            w *= p
        return c

    def sub_c(self, a: int, b: int) -> int:
        return self.add_c(a, self.neg_c(b))

    def _mul_poly(self, a: int, b: int) -> int:
        va = list(self.coeffs_of(a))
        vb = list(self.coeffs_of(b))
        prod = _pmod(_pmul(va, vb, self.p), list(self.poly), self.p)
        return self.code_of(prod + [0] * (self.m - len(prod)))

    def mul_c(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        sm = self._mul_table()
        if sm is not None:
            return sm[a][b]
        return self._mul_poly(a, b)

    def inv_c(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self.pow_c(a, self.q - 2)

    def div_c(self, a: int, b: int) -> int:
        return self.mul_c(a, self.inv_c(b))

    def pow_c(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 0
        e %= self.q - 1
        r = 1
        while e:
            if e & 1:
                r = self.mul_c(r, a)
            a = self.mul_c(a, a)
            e >>= 1
        return r

    def frob_c(self, a: int, k: int) -> int:
        k %= self.m
        sf = self._frob_table()
        if sf is not None:
            return sf[k][a]
        return self.pow_c(a, self.p ** k)

    def _order(self, a: int) -> int:
        if a == 0:
            return 0
        order = self.q - 1
        for ell in prime_factors(self.q - 1):
            while order % ell == 0 and self.pow_c(a, order // ell) == 1:
                order //= ell
        return order

    def _find_generator(self) -> int:
        if self.primitive:
            return self.t
        for a in range(2, self.q):
            if self._order(a) == self.q - 1:
                return a
        return 1  # q = 2

    # -- cached tables ----------------------------------------------------------

    def tables(self) -> FieldTables:
        if self._tables is None:
            self._tables = FieldTables(self)
        return self._tables

    def _mul_table(self):
        if self._scalar_mul is None and self.q <= TABLE_LIMIT:
            self._scalar_mul = self.tables().mul.tolist()
        return self._scalar_mul

    def _frob_table(self):
        if self._scalar_frob is None and self.q <= TABLE_LIMIT:
            self._scalar_frob = self.tables().frob.tolist()
        return self._scalar_frob

    def dlog_c(self, a: int):
        """Discrete log base t, or None if a is 0 or outside <t>."""
        if a == 0:
            return None
        if self.q <= TABLE_LIMIT and self.primitive:
            if self._dlog_t is None:
                self._dlog_t = self.tables().dlog.tolist() \
                    if self.t == self._find_generator() else None
            if self._dlog_t is not None:
                return self._dlog_t[a]
        x = 1
        for k in range(self.q - 1):
            if x == a:
                return k
            x = self.mul_c(x, self.t)
        return None

    # -- element constructors ----------------------------------------------------

    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    def gen(self) -> "FieldElem":
        return FieldElem(self, self.t)

    def elem(self, code: int) -> "FieldElem":
        return FieldElem(self, code % self.q if code >= 0 else code % self.q)

    def from_coeffs(self, coeffs) -> "FieldElem":
        coeffs = list(coeffs)
        if len(coeffs) > self.m:
            raise DegreeMismatchError("too many coefficients")
        coeffs += [0] * (self.m - len(coeffs))
        return FieldElem(self, self.code_of(coeffs))

    def from_int(self, k: int) -> "FieldElem":
        """Prime-subfield element k mod p."""
        return FieldElem(self, k % self.p)

    def elements(self):
        if self.q > TABLE_LIMIT:
            raise FieldTooLargeError("element iteration capped")
        return [FieldElem(self, c) for c in range(self.q)]

    def random(self, rng) -> "FieldElem":
        return FieldElem(self, rng.randrange(self.q))

    # -- text format ----------------------------------------------------------

    def render_c(self, code: int) -> str:
        if code == 0:
            return "0"
        if code == 1:
            return "1"
        if self.primitive:
            k = self.dlog_c(code)
            if k is not None:
                return "t" if k == 1 else f"t^{k}"
        return "[" + ",".join(str(c) for c in self.coeffs_of(code)) + "]"

    def parse(self, text: str) -> "FieldElem":
        s = text.strip()
        if not s:
            raise ParseError("empty field element")
        if s.startswith("["):
            if not s.endswith("]"):
                raise ParseError(f"unterminated coefficient list: {text!r}")
            try:
                coeffs = [int(x) for x in s[1:-1].split(",") if x.strip() != ""]
            except ValueError:
                raise ParseError(f"bad coefficient list: {text!r}") from None
            return self.from_coeffs(coeffs)
        low = s.lower()
        for alias in ("tau", "t", "w"):
            if low.startswith(alias):
                rest = s[len(alias):]
                if rest == "":
                    k = 1
                elif rest.startswith("^"):
                    try:
                        k = int(rest[1:])
                    except ValueError:
                        raise ParseError(f"bad exponent: {text!r}") from None
                else:
                    continue
                return FieldElem(self, self.pow_c(self.t, k))
        try:
            k = int(s)
        except ValueError:
            raise ParseError(f"cannot parse field element: {text!r}") from None
        return self.from_int(k)


class FieldElem:
    """Immutable element of a FiniteField."""

    __slots__ = ("field", "code")

    def __init__(self, field: FiniteField, code: int):
        self.field = field
        self.code = code

    @property
    def coeffs(self) -> tuple:
        return self.field.coeffs_of(self.code)

    def is_zero(self) -> bool:
        return self.code == 0

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.code == other.code and self.field == other.field
        if isinstance(other, int):
            return self == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.code, self.field.p, self.field.m))

    def _coerce(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        raise TypeError(f"cannot combine FieldElem with {type(other).__name__}")

    def __add__(self, other):
        o = self._coerce(other)
        return FieldElem(self.field, self.field.add_c(self.code, o.code))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return FieldElem(self.field, self.field.sub_c(self.code, o.code))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return FieldElem(self.field, self.field.neg_c(self.code))

    def __mul__(self, other):
        o = self._coerce(other)
        return FieldElem(self.field, self.field.mul_c(self.code, o.code))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return FieldElem(self.field, self.field.div_c(self.code, o.code))

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, e: int):
        return FieldElem(self.field, self.field.pow_c(self.code, e))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.field, self.field.inv_c(self.code))

    def frob(self, k: int = 1) -> "FieldElem":
        """Image under the Frobenius power x -> x^(p^k)."""
        return FieldElem(self.field, self.field.frob_c(self.code, k))

    def __repr__(self):
        return self.field.render_c(self.code)


def ff_make(p: int, m: int, poly) -> FiniteField:
    """Validated field constructor; rejects composite p and reducible poly."""
    return FiniteField(p, m, poly)


def frobenius(a: FieldElem, k: int) -> FieldElem:
    """a^(p^k); Aut(K) is cyclic of order m generated by x -> x^p."""
    return a.frob(k)
