"""Exact integer polynomials in the variable ``q``.

Coefficients are Python ints, stored lowest degree first and trimmed, so
``IntPoly((-1, 1, 1))`` is ``q^2 + q - 1``. Nothing here touches floating
point: coincidence of character degrees is an exact question.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "IntPoly",
    "Q",
    "ALL_Q",
    "Coincidence",
    "parse_poly",
    "cyclotomic",
    "is_cyclotomic",
    "root_bound",
    "cauchy_bound",
    "positive_integer_roots",
    "degree_coincides",
    "v2",
    "two_part",
    "evaluate",
    "DEGREE_TABLES",
    "load_poly_table",
]


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        end = len(c)
        while end and c[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", c[:end])

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, q0: int) -> int:
        # Horner, exact
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        return acc

    def _coerce(self, other) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out = IntPoly((1,))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divmod_exact(self, divisor: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Long division by a divisor with leading coefficient +-1."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if abs(divisor.lead) != 1:
            raise ValueError("divisor must have leading coefficient +-1")
        rem = list(self.coeffs)
        dq = divisor.degree
        quot = [0] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * divisor.lead  # lead is +-1 so this is exact division
            if c:
                quot[i - dq] = c
                for j, d in enumerate(divisor.coeffs):
                    rem[i - dq + j] -= c * d
        return IntPoly(tuple(quot)), IntPoly(tuple(rem))

    def __floordiv__(self, divisor: "IntPoly") -> "IntPoly":
        quot, rem = self.divmod_exact(divisor)
        if not rem.is_zero():
            raise ValueError(f"{divisor} does not divide {self}")
        return quot

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = "q" if i == 1 else f"q^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += sign + body
        return out

    def __repr__(self) -> str:
        return f"IntPoly('{self}')"


Q = IntPoly((0, 1))


_TOKEN = re.compile(r"\s*(?:(\d+)|(q)|(\^)|(\*)|([+-])|(\()|(\)))")


def parse_poly(text: str) -> IntPoly:
    """Parse e.g. ``"q^2+q-1"``, ``"2*q^3 - 7q + 3"``, ``"(q-1)*(q+1)"``.

    Accepts ``^``, ``*``, implicit multiplication by juxtaposition,
    unary minus, parentheses and multi-digit coefficients.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad polynomial {text!r} at column {pos + 1}")
        pos = m.end()
        kind = m.lastindex
        tokens.append((kind, m.group(kind)))
    if not tokens:
        raise ValueError("empty polynomial")

    idx = 0

    def peek():
        return tokens[idx] if idx < len(tokens) else (None, None)

    def take():
        nonlocal idx
        tok = peek()
        idx += 1
        return tok

    def expr() -> IntPoly:
        acc = IntPoly()
        sign = 1
        kind, val = peek()
        if kind == 5:
            take()
            sign = -1 if val == "-" else 1
        acc = term() * sign
        while True:
            kind, val = peek()
            if kind != 5:
                return acc
            take()
            t = term()
            acc = acc + t if val == "+" else acc - t

    def term() -> IntPoly:
        acc = power()
        while True:
            kind, _ = peek()
            if kind == 4:
                take()
                acc = acc * power()
            elif kind in (1, 2, 6):
                acc = acc * power()
            else:
                return acc

    def power() -> IntPoly:
        base = atom()
        kind, _ = peek()
        if kind == 3:
            take()
            kind, val = take()
            if kind != 1:
                raise ValueError(f"exponent must be a non-negative integer in {text!r}")
            return base ** int(val)
        return base

    def atom() -> IntPoly:
        kind, val = take()
        if kind == 1:
            return IntPoly((int(val),))
        if kind == 2:
            return Q
        if kind == 6:
            inner = expr()
            if take()[0] != 7:
                raise ValueError(f"unbalanced parenthesis in {text!r}")
            return inner
        if kind == 5 and val == "-":
            return -atom()
        raise ValueError(f"unexpected token {val!r} in {text!r}")

    result = expr()
    if idx != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return result


def evaluate(p: IntPoly, q0: int) -> int:
    return p(q0)


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPoly:
    """d-th cyclotomic polynomial, by exact division of q^d - 1."""
    if d < 1:
        raise ValueError("d must be >= 1")
    num = Q**d - 1
    for e in range(1, d):
        if d % e == 0:
            num = num // cyclotomic(e)
    return num


def _totient(d: int) -> int:
    result, m, p = d, d, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def is_cyclotomic(p: IntPoly) -> int | None:
    """Return d if ``p`` equals the d-th cyclotomic polynomial, else None."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    deg = p.degree
    if deg < 1:
        return None
    # totient(d) >= sqrt(d/2), so d <= 2 deg^2
    for d in range(1, 2 * deg * deg + 1):
        if _totient(d) == deg and cyclotomic(d) == p:
            return d
    return None


def _normalised(p: IntPoly) -> IntPoly:
    if p.is_zero():
        raise ValueError("zero polynomial")
    return -p if p.lead < 0 else p


def root_bound(p: IntPoly) -> Fraction:
    """2 * max|coefficient| / |leading coefficient|."""
    p = _normalised(p)
    if p.degree < 1:
        raise ValueError("root bound needs a non-constant polynomial")
    return Fraction(2 * max(abs(c) for c in p.coeffs), p.lead)


def cauchy_bound(p: IntPoly) -> Fraction:
    """The classical bound 1 + max_{i<deg}|c_i| / |c_deg|, for cross-checks."""
    p = _normalised(p)
    if p.degree < 1:
        raise ValueError("root bound needs a non-constant polynomial")
    return 1 + Fraction(max(abs(c) for c in p.coeffs[:-1]), p.lead)


def positive_integer_roots(p: IntPoly) -> list[int]:
    if p.is_zero():
        raise ValueError("every integer is a root of the zero polynomial")
    if p.degree == 0:
        return []
    top = math.ceil(root_bound(p))
    return [r for r in range(1, top + 1) if p(r) == 0]


class _AllQ:
    __slots__ = ()

    def __repr__(self):
        return "ALL_Q"

    def __str__(self):
        return "all"


ALL_Q = _AllQ()


@dataclass(frozen=True)
class Coincidence:
    q: int | _AllQ
    index: int


def degree_coincides(candidate: IntPoly, table: Sequence[IntPoly], q_min: int = 2) -> list[Coincidence]:
    """Table entries that equal ``candidate`` at some integer q >= q_min.

    Identical polynomials are reported once with ``q=ALL_Q``.
    """
    if not table:
        raise ValueError("empty degree table")
    hits = []
    for i, t in enumerate(table):
        diff = t - candidate
        if diff.is_zero():
            hits.append(Coincidence(ALL_Q, i))
            continue
        hits.extend(Coincidence(r, i) for r in positive_integer_roots(diff) if r >= q_min)
    return hits


def v2(m: int) -> int:
    """Exponent of 2 in a nonzero integer."""
    if m == 0:
        raise ValueError("v2(0) is undefined")
    m = abs(m)
    return (m & -m).bit_length() - 1


def two_part(m: int) -> int:
    """|m|_2, the largest power of 2 dividing m."""
    return 1 << v2(m)


def _table(*texts: str) -> tuple[IntPoly, ...]:
    return tuple(parse_poly(t) for t in texts)


# Irreducible character degrees as integer polynomials. PSL2 also has the
# half-degrees (q +- 1)/2, which are not integer polynomials and are omitted.
DEGREE_TABLES: dict[str, tuple[IntPoly, ...]] = {
    "psl2": _table("1", "q", "q-1", "q+1"),
    "pgl2": _table("1", "q", "q-1", "q+1"),
    "gl2": _table("1", "q", "q-1", "q+1"),
    "gu2": _table("1", "q", "q-1", "q+1"),
}


def load_poly_table(lines: Iterable[str]) -> list[IntPoly]:
    """One polynomial per line; blank lines and ``#`` comments skipped."""
    out = []
    for lineno, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(parse_poly(line))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return out
