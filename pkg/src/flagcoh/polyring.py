"""Sparse exact multivariate polynomial arithmetic with weighted grading.

Polynomials are stored as dicts mapping a packed monomial key to a nonzero
coefficient.  The key encodes the weighted degree in the high bits and the
complemented exponents (last variable first) below it, so that

  * plain integer comparison of keys realizes the weighted graded
    reverse-lexicographic order (weights = q-degrees, rightmost variable
    is the tiebreak),
  * monomial multiplication is a single integer addition
    (``ka + kb - ONE``).

Coefficients are exact: Python ints, rationals (gmpy2.mpq when available,
fractions.Fraction otherwise) or elements of a prime field Z/p stored as
ints in [0, p).  No floating point is used anywhere.

The zero polynomial has an empty term map; its degree is reported as the
``-inf`` sentinel.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

try:  # pragma: no cover - exercised implicitly by the whole suite
    from gmpy2 import mpq as _mpq

    def make_rat(num, den=1):
        return _mpq(num, den)

except ImportError:  # pragma: no cover
    def make_rat(num, den=1):
        return Fraction(num, den)


RAT_ONE = make_rat(1)


def rat_is_integral(c) -> bool:
    """True when an exact coefficient is an integer."""
    if isinstance(c, int):
        return True
    return c.denominator == 1


class RingMismatchError(ValueError):
    pass


class NotDivisibleError(ArithmeticError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


# ---------------------------------------------------------------------------
# coefficient domains


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24, probabilistic above."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    # fixed witness set is deterministic for n < 3317044064679887385961981
    witnesses = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    if n >= 3317044064679887385961981:  # pragma: no cover
        rng = random.Random(0xC0FFEE ^ n)
        witnesses = tuple(rng.randrange(2, n - 1) for _ in range(40))
    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class CoefficientRing:
    """One of exact integers, exact rationals, or a large prime field."""

    kind: str  # "exact-integers" | "exact-rationals" | "prime-field"
    modulus: int | None = None

    def __post_init__(self):
        if self.kind not in ("exact-integers", "exact-rationals", "prime-field"):
            raise ValueError(f"unknown coefficient ring kind {self.kind!r}")
        if self.kind == "prime-field":
            p = self.modulus
            if p is None or p <= 2**31:
                raise ValueError("prime-field modulus must exceed 2^31")
            if not is_probable_prime(p):
                raise ValueError(f"prime-field modulus {p} is not prime")
        elif self.modulus is not None:
            raise ValueError("modulus only allowed for prime fields")

    @property
    def is_field(self) -> bool:
        return self.kind != "exact-integers"

    def normalize(self, c):
        if self.kind == "prime-field":
            return int(c) % self.modulus
        if self.kind == "exact-integers":
            if isinstance(c, int):
                return c
            if rat_is_integral(c):
                return int(c)
            raise ValueError(f"coefficient {c} is not an integer")
        # rationals: keep ints as ints, anything else as exact rational
        if isinstance(c, int):
            return c
        return make_rat(c.numerator, c.denominator)

    def divide(self, a, b):
        """Exact division a/b, raising when impossible in this ring."""
        if self.kind == "prime-field":
            return a * pow(b, self.modulus - 2, self.modulus) % self.modulus
        if self.kind == "exact-integers":
            q, r = divmod(a, b)
            if r != 0:
                raise NotDivisibleError(f"{a} not divisible by {b} over the integers")
            return q
        q = make_rat(a) / make_rat(b)
        return int(q) if rat_is_integral(q) else q


INTEGERS = CoefficientRing("exact-integers")
RATIONALS = CoefficientRing("exact-rationals")


def prime_field(p: int) -> CoefficientRing:
    return CoefficientRing("prime-field", p)


# ---------------------------------------------------------------------------
# ring descriptors and packed monomials

EXP_BITS = 8
EXP_MASK = (1 << EXP_BITS) - 1
# exponents created via pack() are capped so that a product of two packed
# monomials can never overflow an exponent field
EXP_CAP = EXP_MASK // 2

NEG_INF = float("-inf")


@dataclass(frozen=True)
class RingDescriptor:
    """Ordered variables with positive integer q-degrees over a coefficient ring."""

    variables: tuple[str, ...]
    q_degrees: tuple[int, ...]
    coefficients: CoefficientRing = INTEGERS
    _index: dict = field(init=False, repr=False, compare=False, hash=False, default=None)

    def __post_init__(self):
        if len(self.variables) != len(self.q_degrees):
            raise ValueError("variables and q_degrees must have equal length")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be unique")
        if any(d <= 0 for d in self.q_degrees):
            raise ValueError("q-degrees must be positive")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.variables)})

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def var_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    # -- packed monomial helpers ------------------------------------------

    @property
    def one_key(self) -> int:
        key = 0
        for _ in range(self.nvars):
            key = (key << EXP_BITS) | EXP_MASK
        return key

    def pack(self, exponents) -> int:
        n = self.nvars
        if len(exponents) != n:
            raise ValueError("exponent vector length mismatch")
        wdeg = 0
        key = 0
        degs = self.q_degrees
        for i in range(n - 1, -1, -1):
            e = exponents[i]
            if e < 0 or e > EXP_CAP:
                raise ValueError(f"exponent {e} outside supported range [0, {EXP_CAP}]")
            wdeg += e * degs[i]
        key = wdeg
        for i in range(n - 1, -1, -1):
            key = (key << EXP_BITS) | (EXP_MASK - exponents[i])
        return key

    def unpack(self, key: int) -> tuple[int, ...]:
        n = self.nvars
        return tuple(EXP_MASK - ((key >> (EXP_BITS * i)) & EXP_MASK) for i in range(n))

    def key_degree(self, key: int) -> int:
        return key >> (EXP_BITS * self.nvars)

    def mul_keys(self, a: int, b: int) -> int:
        return a + b - self.one_key

    def key_divides(self, divisor: int, target: int) -> bool:
        for i in range(self.nvars):
            s = EXP_BITS * i
            if (divisor >> s) & EXP_MASK < (target >> s) & EXP_MASK:
                return False
        return True

    def key_quotient(self, target: int, divisor: int) -> int:
        return target - divisor + self.one_key

    def render_key(self, key: int) -> str:
        exps = self.unpack(key)
        parts = []
        for name, e in zip(self.variables, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    # -- polynomial constructors ------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = self.coefficients.normalize(c)
        if not c:
            return Polynomial(self, {})
        return Polynomial(self, {self.one_key: c})

    def var(self, name: str) -> "Polynomial":
        i = self.var_index(name)
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, {self.pack(exps): self.coefficients.normalize(1)})

    def monomial(self, exponents, coeff=1) -> "Polynomial":
        c = self.coefficients.normalize(coeff)
        if not c:
            return Polynomial(self, {})
        return Polynomial(self, {self.pack(exponents): c})

    def from_terms(self, terms: dict) -> "Polynomial":
        """Build from {exponent tuple: coefficient}, pruning zeros."""
        out = {}
        norm = self.coefficients.normalize
        for exps, c in terms.items():
            c = norm(c)
            if c:
                k = self.pack(exps)
                acc = out.get(k, 0) + c
                if acc:
                    out[k] = acc
                else:
                    out.pop(k, None)
        return Polynomial(self, out)

    def with_coefficients(self, coefficients: CoefficientRing) -> "RingDescriptor":
        return RingDescriptor(self.variables, self.q_degrees, coefficients)

    def parse(self, text: str) -> "Polynomial":
        return parse(text, self)


def ring(pairs, coefficients: CoefficientRing = INTEGERS) -> RingDescriptor:
    """Convenience builder: ring([("x", 1), ("y", 2)], RATIONALS)."""
    names = tuple(p[0] for p in pairs)
    degs = tuple(p[1] for p in pairs)
    return RingDescriptor(names, degs, coefficients)


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Immutable sparse polynomial; do not mutate ``terms`` after creation."""

    __slots__ = ("ring", "terms", "_lm")

    def __init__(self, ring_: RingDescriptor, terms: dict):
        self.ring = ring_
        self.terms = terms
        self._lm = None

    # -- basic structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def leading_key(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        if self._lm is None:
            self._lm = max(self.terms)
        return self._lm

    def leading_coefficient(self):
        return self.terms[self.leading_key()]

    def weighted_degree(self):
        """Maximal q-degree of a term; -inf for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        return self.ring.key_degree(self.leading_key())

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        kd = self.ring.key_degree
        it = iter(self.terms)
        d = kd(next(it))
        return all(kd(k) == d for k in it)

    def coefficient_of(self, exponents):
        return self.terms.get(self.ring.pack(exponents), 0)

    def sorted_terms(self):
        return [(k, self.terms[k]) for k in sorted(self.terms, reverse=True)]

    # -- equality -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)) or rat_like(other):
            return self.terms == self.ring.const(other).terms
        return NotImplemented

    def __hash__(self):
        raise TypeError("polynomials are not hashable")

    # -- arithmetic -----------------------------------------------------------

    def _check_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError("polynomials live in different rings")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.const(other)
        self._check_ring(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, c in b.items():
            acc = out.get(k, 0) + c
            if acc:
                out[k] = acc
            else:
                del out[k]
        if self.ring.coefficients.kind == "prime-field":
            p = self.ring.coefficients.modulus
            out = {k: v % p for k, v in out.items() if v % p}
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        if self.ring.coefficients.kind == "prime-field":
            p = self.ring.coefficients.modulus
            return Polynomial(self.ring, {k: (-c) % p for k, c in self.terms.items()})
        return Polynomial(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return self.ring.const(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self._scale(other)
        self._check_ring(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return Polynomial(self.ring, {})
        if len(a) > len(b):
            a, b = b, a
        one = self.ring.one_key
        out: dict = {}
        get = out.get
        for k1, c1 in a.items():
            base = k1 - one
            for k2, c2 in b.items():
                k = base + k2
                acc = get(k, 0) + c1 * c2
                if acc:
                    out[k] = acc
                else:
                    del out[k]
        if self.ring.coefficients.kind == "prime-field":
            p = self.ring.coefficients.modulus
            out = {k: v % p for k, v in out.items() if v % p}
        return Polynomial(self.ring, out)

    def _scale(self, c):
        c = self.ring.coefficients.normalize(c)
        if not c:
            return Polynomial(self.ring, {})
        out = {k: v * c for k, v in self.terms.items()}
        if self.ring.coefficients.kind == "prime-field":
            p = self.ring.coefficients.modulus
            out = {k: v % p for k, v in out.items() if v % p}
        return Polynomial(self.ring, out)

    def __rmul__(self, other):
        return self._scale(other)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- calculus and maps ----------------------------------------------------

    def derivative(self, name: str) -> "Polynomial":
        i = self.ring.var_index(name)
        shift = EXP_BITS * i
        out = {}
        degs = self.ring.q_degrees[i]
        for k, c in self.terms.items():
            e = EXP_MASK - ((k >> shift) & EXP_MASK)
            if e == 0:
                continue
            nk = k + (1 << shift) - (degs << (EXP_BITS * self.ring.nvars))
            acc = out.get(nk, 0) + c * e
            if acc:
                out[nk] = acc
            else:
                del out[nk]
        if self.ring.coefficients.kind == "prime-field":
            p = self.ring.coefficients.modulus
            out = {k: v % p for k, v in out.items() if v % p}
        return Polynomial(self.ring, out)

    def map_coefficients(self, target: CoefficientRing) -> "Polynomial":
        r = self.ring.with_coefficients(target)
        out = {}
        for k, c in self.terms.items():
            c = target.normalize(c)
            if c:
                out[k] = c
        return Polynomial(r, out)

    def evaluate(self, point: dict):
        """Exact evaluation; point maps every occurring variable to a value."""
        n = self.ring.nvars
        vals = [None] * n
        for name, v in point.items():
            vals[self.ring.var_index(name)] = v
        total = 0
        for k, c in self.terms.items():
            term = c
            for i in range(n):
                e = EXP_MASK - ((k >> (EXP_BITS * i)) & EXP_MASK)
                if e:
                    if vals[i] is None:
                        raise KeyError(f"missing coordinate for {self.ring.variables[i]!r}")
                    term = term * vals[i] ** e
            total = total + term
        return total

    def evaluate_mod_p(self, point: dict, p: int) -> int:
        """Value at a point over Z/p; rational coefficients are reduced mod p."""
        if self.ring.coefficients.kind == "prime-field":
            raise ValueError("polynomial already lives over a prime field")
        n = self.ring.nvars
        vals = [None] * n
        for name, v in point.items():
            vals[self.ring.var_index(name)] = v % p
        total = 0
        for k, c in self.terms.items():
            if isinstance(c, int):
                cc = c % p
            else:
                den = int(c.denominator) % p
                if den == 0:
                    raise ZeroDivisionError("coefficient denominator vanishes mod p")
                cc = int(c.numerator) % p * pow(den, p - 2, p) % p
            term = cc
            for i in range(n):
                e = EXP_MASK - ((k >> (EXP_BITS * i)) & EXP_MASK)
                if e:
                    if vals[i] is None:
                        raise KeyError(f"missing coordinate for {self.ring.variables[i]!r}")
                    term = term * pow(vals[i], e, p) % p
            total = (total + term) % p
        return total

    def substitute(self, images: dict, target: RingDescriptor | None = None) -> "Polynomial":
        """Ring homomorphism sending each variable to its image polynomial.

        Every variable actually occurring in the polynomial must have an
        image; images must be homogeneous of the variable's q-degree and
        share one target ring.
        """
        src = self.ring
        tgt = target
        for name, img in images.items():
            src.var_index(name)
            if not isinstance(img, Polynomial):
                raise TypeError(f"image of {name!r} must be a Polynomial")
            if tgt is None:
                tgt = img.ring
            elif img.ring != tgt:
                raise RingMismatchError(f"image of {name!r} lives in a different ring")
            d = img.weighted_degree()
            want = src.q_degrees[src.var_index(name)]
            if img and (not img.is_homogeneous() or d != want):
                raise ValueError(
                    f"image of {name!r} must be homogeneous of q-degree {want}"
                )
        if tgt is None:
            tgt = src
        img_by_index: dict[int, Polynomial] = {
            src.var_index(name): img for name, img in images.items()
        }
        power_cache: dict[tuple[int, int], Polynomial] = {}

        def image_power(i: int, e: int) -> Polynomial:
            got = power_cache.get((i, e))
            if got is None:
                got = img_by_index[i] ** e
                power_cache[(i, e)] = got
            return got

        result = tgt.zero()
        n = src.nvars
        for k, c in self.terms.items():
            term = tgt.const(c)
            for i in range(n):
                e = EXP_MASK - ((k >> (EXP_BITS * i)) & EXP_MASK)
                if not e:
                    continue
                if i not in img_by_index:
                    raise KeyError(f"unmapped variable {src.variables[i]!r}")
                term = term * image_power(i, e)
            result = result + term
        return result

    # -- rendering ------------------------------------------------------------

    def render(self) -> str:
        return render(self)

    def __repr__(self):
        return f"<poly {render(self)}>"


def rat_like(c) -> bool:
    return hasattr(c, "numerator") and hasattr(c, "denominator")


# ---------------------------------------------------------------------------
# division


def divmod_single(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Division with remainder by a single divisor.

    Returns (q, r) with num = q*den + r and no term of r divisible by the
    leading monomial of den.  Correct because every key introduced by a
    subtraction step is strictly smaller than the key being processed, so
    a max-heap sweep visits each monomial exactly once.
    """
    if num.ring != den.ring:
        raise RingMismatchError("operands live in different rings")
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    import heapq

    rg = num.ring
    coeffs = rg.coefficients
    ld = den.leading_key()
    lc = den.terms[ld]
    tail = [(k, c) for k, c in den.terms.items() if k != ld]
    one = rg.one_key
    work = dict(num.terms)
    heap = [-k for k in work]
    heapq.heapify(heap)
    q: dict = {}
    r: dict = {}
    divides = rg.key_divides
    is_gfp = coeffs.kind == "prime-field"
    p = coeffs.modulus
    while heap:
        k = -heapq.heappop(heap)
        c = work.pop(k, 0)
        if not c:
            continue
        if is_gfp:
            c %= p
            if not c:
                continue
        if divides(ld, k):
            qk = k - ld + one
            qc = coeffs.divide(c, lc)
            q[qk] = q.get(qk, 0) + qc
            for tk, tc in tail:
                nk = qk + tk - one
                if nk in work:
                    work[nk] -= qc * tc
                else:
                    work[nk] = -qc * tc
                    heapq.heappush(heap, -nk)
        else:
            r[k] = c
    q = {k: v for k, v in q.items() if v}
    return Polynomial(rg, q), Polynomial(rg, r)


def exact_divide(num: Polynomial, den: Polynomial) -> Polynomial:
    """Quotient q with q*den = num; raises NotDivisibleError otherwise."""
    q, r = divmod_single(num, den)
    if not r.is_zero():
        raise NotDivisibleError("polynomial division leaves a remainder")
    return q


# ---------------------------------------------------------------------------
# parsing and rendering (grammar is fixed; see README)


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        t = self.text
        while self.pos < len(t) and t[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_nat(self) -> int:
        self.skip_ws()
        start = self.pos
        t = self.text
        while self.pos < len(t) and t[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected a number", start)
        return int(t[start : self.pos])

    def take_ident(self) -> str:
        self.skip_ws()
        start = self.pos
        t = self.text
        if self.pos < len(t) and (t[self.pos].isalpha() or t[self.pos] == "_"):
            self.pos += 1
            while self.pos < len(t) and (t[self.pos].isalnum() or t[self.pos] == "_"):
                self.pos += 1
        if self.pos == start:
            raise ParseError("expected an identifier", start)
        return t[start : self.pos]

    def accept(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect_end(self):
        self.skip_ws()
        if self.pos < len(self.text):
            raise ParseError(f"unexpected {self.text[self.pos]!r}", self.pos)


def parse(text: str, ring_: RingDescriptor) -> Polynomial:
    """Parse the documented polynomial grammar into a canonical polynomial."""
    tok = _Tokenizer(text)
    result = ring_.zero()
    first = True
    while True:
        tok.skip_ws()
        if first and tok.pos >= len(text):
            raise ParseError("empty polynomial", tok.pos)
        sign = 1
        if not first:
            if tok.pos >= len(text):
                break
            if tok.accept("+"):
                sign = 1
            elif tok.accept("-"):
                sign = -1
            else:
                tok.expect_end()
                break
        result = result + _parse_term(tok, ring_, sign)
        first = False
        tok.skip_ws()
        if tok.pos >= len(text):
            break
    return result


def _parse_term(tok: _Tokenizer, ring_: RingDescriptor, sign: int) -> Polynomial:
    ch = tok.peek()
    if not ch:
        raise ParseError("expected a term", tok.pos)
    coeff = None
    if ch == "-" or ch.isdigit():
        neg = tok.accept("-")
        num = tok.take_nat()
        den = 1
        if tok.accept("/"):
            den = tok.take_nat()
            if den == 0:
                raise ParseError("zero denominator", tok.pos)
        coeff = make_rat(-num if neg else num, den)
        if rat_is_integral(coeff):
            coeff = int(coeff)
        factors_required = False
    else:
        factors_required = True
    exps = [0] * ring_.nvars
    seen_factor = False
    while True:
        if coeff is not None or seen_factor:
            if not tok.accept("*"):
                break
        tok.skip_ws()
        name_pos = tok.pos
        name = tok.take_ident()
        try:
            i = ring_.var_index(name)
        except KeyError:
            raise ParseError(f"unknown variable {name!r}", name_pos) from None
        e = 1
        if tok.accept("^"):
            e = tok.take_nat()
        exps[i] += e
        seen_factor = True
    if factors_required and not seen_factor:
        raise ParseError("expected a term", tok.pos)
    c = coeff if coeff is not None else 1
    return ring_.monomial(exps, sign * c)


def _format_coeff(c) -> str:
    return str(c)


def render(p: Polynomial) -> str:
    """Canonical text: terms in descending order, coefficient first."""
    if not p.terms:
        return "0"
    pieces = []
    for idx, (k, c) in enumerate(p.sorted_terms()):
        mono = p.ring.render_key(k)
        neg = c < 0
        mag = -c if neg else c
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{_format_coeff(mag)}*{mono}"
        else:
            body = _format_coeff(mag)
        if idx == 0:
            if neg:
                if mono and mag == 1:
                    body = f"-1*{mono}"
                else:
                    body = f"-{body}"
            pieces.append(body)
        else:
            pieces.append(f"{' - ' if neg else ' + '}{body}")
    return "".join(pieces)


def content(p: Polynomial) -> int:
    """GCD of integer coefficients (1 for the zero polynomial)."""
    import math

    g = 0
    for c in p.terms.values():
        if not rat_is_integral(c):
            raise ValueError("content is defined for integer polynomials")
        g = math.gcd(g, int(c))
    return g if g else 1


def monic(p: Polynomial) -> Polynomial:
    """Scale by the inverse of the leading coefficient (field coefficients)."""
    if p.is_zero():
        return p
    coeffs = p.ring.coefficients
    if not coeffs.is_field:
        raise ValueError("monic normalization needs field coefficients")
    lc = p.leading_coefficient()
    if coeffs.kind == "prime-field":
        inv = pow(lc, coeffs.modulus - 2, coeffs.modulus)
        return p._scale(inv)
    return p._scale(make_rat(1) / make_rat(lc))
