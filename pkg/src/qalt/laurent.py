"""Exact Laurent polynomials on the half-integer lattice.

Exponents are stored doubled (the monomial t^(k/2) is keyed by the integer
k), so half-integer powers of t and integer powers of A live in one exact
integer representation with no floating point. Coefficients are arbitrary
precision integers.

The same class carries Jones polynomials in t^(1/2), Kauffman brackets in
A, and spanning-tree polynomials in A; only rendering cares which letter
is in play.
"""

from __future__ import annotations

import cmath
import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt


class ZeroPolynomial(ValueError):
    """An operation that needs a nonzero polynomial got the zero one."""


class SupportNotOnLattice(ValueError):
    """The support does not fit a single arithmetic progression of the step."""


class Overlap(ValueError):
    """gap_between needs the first support strictly below the second."""


class HalfLaurent:
    """Immutable Laurent polynomial with doubled-integer exponents."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        # terms: mapping doubled exponent -> coefficient; zeros dropped here
        clean = {}
        if terms:
            for e2, c in dict(terms).items():
                if not isinstance(e2, int) or not isinstance(c, int):
                    raise TypeError("doubled exponents and coefficients must be int")
                if c != 0:
                    clean[e2] = c
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", hash(tuple(sorted(clean.items()))))

    def __setattr__(self, name, value):
        raise AttributeError("HalfLaurent is immutable")

    # construction helpers

    @classmethod
    def zero(cls) -> "HalfLaurent":
        return cls()

    @classmethod
    def one(cls) -> "HalfLaurent":
        return cls({0: 1})

    @classmethod
    def monomial2(cls, e2: int, coeff: int = 1) -> "HalfLaurent":
        """coeff * x^(e2/2)."""
        return cls({e2: coeff})

    # inspection

    def items2(self) -> tuple:
        """Sorted (doubled exponent, coefficient) pairs."""
        return tuple(sorted(self._terms.items()))

    def coeff2(self, e2: int) -> int:
        return self._terms.get(e2, 0)

    def support2(self) -> tuple:
        return tuple(sorted(self._terms))

    def is_zero(self) -> bool:
        return not self._terms

    def min2(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no degree")
        return min(self._terms)

    def max2(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no degree")
        return max(self._terms)

    def breadth2(self) -> int:
        """max degree minus min degree, in doubled units; 0 for monomials."""
        return self.max2() - self.min2()

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        out = dict(self._terms)
        for e2, c in other._terms.items():
            out[e2] = out.get(e2, 0) + c
        return HalfLaurent(out)

    def __neg__(self):
        return HalfLaurent({e2: -c for e2, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        out = dict(self._terms)
        for e2, c in other._terms.items():
            out[e2] = out.get(e2, 0) - c
        return HalfLaurent(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return HalfLaurent({e2: c * other for e2, c in self._terms.items()})
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                k = e1 + e2
                out[k] = out.get(k, 0) + c1 * c2
        return HalfLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = HalfLaurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift2(self, k2: int) -> "HalfLaurent":
        """Multiply by x^(k2/2)."""
        return HalfLaurent({e2 + k2: c for e2, c in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return "HalfLaurent(%r)" % self.render()

    # evaluation

    def evaluate(self, z: complex, branch: str = "principal-sqrt") -> complex:
        """Numeric value with x^(1/2) taken as the principal square root.

        z = -1 and z = 1 short-circuit to exact integer arithmetic.
        """
        if branch != "principal-sqrt":
            raise ValueError("unsupported branch %r" % branch)
        if z == 0:
            raise ValueError("evaluation point must be nonzero")
        if z == 1:
            return complex(sum(self._terms.values()))
        if z == -1:
            re_, im = self.eval_at_minus_one()
            return complex(re_, im)
        s = cmath.sqrt(z)
        total = 0j
        for e2, c in self._terms.items():
            total += c * s ** e2
        return total

    def eval_at_minus_one(self) -> tuple:
        """Exact Gaussian integer (a, b) = a + b*i at x = -1, x^(1/2) = i."""
        re_ = im = 0
        for e2, c in self._terms.items():
            m = e2 % 4
            if m == 0:
                re_ += c
            elif m == 1:
                im += c
            elif m == 2:
                re_ -= c
            else:
                im -= c
        return re_, im

    def abs_at_minus_one(self) -> int:
        """|f(-1)| as an exact nonnegative integer."""
        a, b = self.eval_at_minus_one()
        if b == 0:
            return abs(a)
        if a == 0:
            return abs(b)
        n = a * a + b * b
        r = isqrt(n)
        if r * r != n:
            raise ValueError("|f(-1)| is not an integer")
        return r

    def abs_at_primitive_eighth_root(self) -> int:
        """|f(zeta)| for zeta = exp(i*pi/4), exact; needs integer exponents.

        Writing f(zeta) = v0 + v1*zeta + v2*zeta^2 + v3*zeta^3 gives
        |f|^2 = sum(v_i^2) + sqrt(2)*(v0*v1 - v0*v3 + v1*v2 + v2*v3), so the
        value is an integer exactly when the sqrt(2) part vanishes and the
        rational part is a perfect square.
        """
        v = [0, 0, 0, 0]
        for e2, c in self._terms.items():
            if e2 % 2:
                raise SupportNotOnLattice(
                    "eighth-root evaluation needs integer exponents")
            k = (e2 // 2) % 8
            if k < 4:
                v[k] += c
            else:
                v[k - 4] -= c
        p = v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]
        q = v[0] * v[1] - v[0] * v[3] + v[1] * v[2] + v[2] * v[3]
        if q != 0:
            raise ValueError("|f(zeta_8)|^2 is irrational")
        r = isqrt(p)
        if r * r != p:
            raise ValueError("|f(zeta_8)| is not an integer")
        return r

    # rendering

    def render(self, var: str = "t") -> str:
        """Terms in increasing exponent order, "t^(-5/2)" style exponents."""
        if not self._terms:
            return "0"
        parts = []
        for e2, c in self.items2():
            mag = abs(c)
            if e2 == 0:
                body = str(mag)
            else:
                power = var if e2 == 2 else var + "^" + _exp_str(e2)
                body = power if mag == 1 else str(mag) + power
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)


def _exp_str(e2: int) -> str:
    if e2 % 2 == 0:
        k = e2 // 2
        return str(k) if k > 0 else "(%d)" % k
    return "(%d/2)" % e2


_CHUNK = re.compile(
    r"^(?:(\d+)\s*\*?\s*)?"          # optional coefficient
    r"(?:(?P<var>\w+)"               # optional variable
    r"(?:\^(?P<exp>.+))?)?$"         # optional exponent
)
_EXP = re.compile(r"^\(?\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?\)?$")


def parse(text: str, var: str = "t") -> HalfLaurent:
    """Inverse of render; also tolerates '*' and unparenthesized exponents."""
    s = text.strip()
    if s in ("", "0"):
        return HalfLaurent.zero()
    chunks = []
    depth = 0
    start = 0
    prev = ""
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > start and prev not in "^+-*(":
            chunks.append(s[start:i])
            start = i
        if not ch.isspace():
            prev = ch
    chunks.append(s[start:])
    terms = {}
    for chunk in chunks:
        chunk = chunk.strip()
        sign = 1
        while chunk and chunk[0] in "+-":
            if chunk[0] == "-":
                sign = -sign
            chunk = chunk[1:].strip()
        m = _CHUNK.match(chunk)
        if not m or (m.group(1) is None and m.group("var") is None):
            raise ValueError("cannot parse term %r" % chunk)
        coeff = int(m.group(1)) if m.group(1) else 1
        if m.group("var") is None:
            e2 = 0
        else:
            if m.group("var") != var:
                raise ValueError(
                    "unexpected variable %r (wanted %r)" % (m.group("var"), var))
            exp_text = m.group("exp")
            if exp_text is None:
                e2 = 2
            else:
                em = _EXP.match(exp_text.strip())
                if not em:
                    raise ValueError("cannot parse exponent %r" % exp_text)
                num = int(em.group(1))
                den = int(em.group(2)) if em.group(2) else 1
                if den == 1:
                    e2 = 2 * num
                elif den == 2:
                    e2 = num
                else:
                    raise ValueError("only halves are supported: %r" % exp_text)
        terms[e2] = terms.get(e2, 0) + sign * coeff
    return HalfLaurent(terms)


@dataclass(frozen=True)
class GapReport:
    """Support structure of a polynomial on an arithmetic lattice.

    breadth2/step2 are in doubled-exponent units; gaps is a tuple of
    (start2, length) where start2 is the doubled exponent of the first
    missing lattice position and length counts consecutive missing
    positions (in step units). alternating is true when some global sign
    makes every present coefficient's sign agree with the parity of its
    lattice index, so coefficients in the same residue class mod 2*step
    share a sign and adjacent classes oppose.
    """

    breadth2: int
    step2: int
    gaps: tuple
    alternating: bool

    @property
    def breadth(self) -> Fraction:
        return Fraction(self.breadth2, 2)

    @property
    def step(self) -> Fraction:
        return Fraction(self.step2, 2)

    def gap_count(self) -> int:
        return len(self.gaps)

    def total_gap_length(self) -> int:
        return sum(length for _, length in self.gaps)


def analyze(f: HalfLaurent, step2: int) -> GapReport:
    """Breadth, interior gaps, and sign alternation of f on the given lattice.

    step2 is the lattice step in doubled units (2 for integer steps in t,
    8 for the usual step of 4 on the A-exponent lattice).
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot analyze the zero polynomial")
    if step2 <= 0:
        raise ValueError("step2 must be positive")
    support = f.support2()
    lo = support[0]
    for e2 in support:
        if (e2 - lo) % step2:
            raise SupportNotOnLattice(
                "support %r does not lie on a step-%s lattice"
                % (support, Fraction(step2, 2)))
    gaps = []
    run_start = None
    run_len = 0
    sign_ref = 0
    alternating = True
    for idx in range((support[-1] - lo) // step2 + 1):
        e2 = lo + idx * step2
        c = f.coeff2(e2)
        if c == 0:
            if run_start is None:
                run_start = e2
                run_len = 0
            run_len += 1
            continue
        if run_start is not None:
            gaps.append((run_start, run_len))
            run_start = None
        expected = 1 if idx % 2 == 0 else -1
        s = 1 if c > 0 else -1
        if sign_ref == 0:
            sign_ref = s * expected
        elif s != sign_ref * expected:
            alternating = False
    return GapReport(
        breadth2=support[-1] - lo,
        step2=step2,
        gaps=tuple(gaps),
        alternating=alternating,
    )


def gap_between(f: HalfLaurent, g: HalfLaurent, step2: int):
    """Gap length between the top of f and the bottom of g, in step units.

    Returns None when the supports are adjacent on the lattice; raises
    Overlap when g does not start strictly above f.
    """
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("gap_between needs nonzero polynomials")
    if step2 <= 0:
        raise ValueError("step2 must be positive")
    m2 = f.max2()
    n2 = g.min2()
    if n2 <= m2:
        raise Overlap("supports overlap or touch out of order")
    if (n2 - m2) % step2:
        raise SupportNotOnLattice(
            "distance %s is not a lattice multiple" % Fraction(n2 - m2, 2))
    d = (n2 - m2) // step2
    if d == 1:
        return None
    return d - 1


def monomial_quotient(f: HalfLaurent, g: HalfLaurent):
    """(sign, shift2) with f = sign * x^(shift2/2) * g, or None."""
    fi = f.items2()
    gi = g.items2()
    if not fi or not gi or len(fi) != len(gi):
        return None
    shift2 = fi[0][0] - gi[0][0]
    c0f, c0g = fi[0][1], gi[0][1]
    if c0f == c0g:
        sign = 1
    elif c0f == -c0g:
        sign = -1
    else:
        return None
    for (ef, cf), (eg, cg) in zip(fi, gi):
        if ef - eg != shift2 or cf != sign * cg:
            return None
    return sign, shift2
