"""Slopes of simple closed curves on the basic surfaces, and SL(2,Z).

A curve class is a nonzero integer pair (r, s) modulo the identification
(r, s) ~ (-r, -s); it is primitive when gcd(r, s) = 1.  The canonical
representative has s > 0, or s = 0 and r > 0.  Non-primitive pairs are
allowed and stand for gcd(r, s) parallel copies of the primitive class.

The tori carry the full SL(2,Z) mapping class action (the standard linear
action on slopes).  On the four-punctured sphere this library only exposes
the half twist `sigma` and its inverse; `sigma` fixes punctures 3 and 4 and
exchanges punctures 1 and 2, which the sphere module accounts for
separately when acting on peripheral labels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "CurveClass",
    "CurveSyntaxError",
    "MappingClass",
    "curve",
    "parse_slope",
    "gcd_decompose",
    "mcg_apply",
    "intersection_number",
    "IDENTITY",
    "sigma",
]


@dataclass(frozen=True)
class CurveClass:
    r: int
    s: int

    def __post_init__(self):
        if self.r == 0 and self.s == 0:
            raise ValueError("(0, 0) is not a curve class")
        if self.s < 0 or (self.s == 0 and self.r < 0):
            object.__setattr__(self, "r", -self.r)
            object.__setattr__(self, "s", -self.s)

    @property
    def d(self) -> int:
        """The number of parallel copies, gcd(|r|, |s|)."""
        return math.gcd(self.r, self.s)

    def primitive(self) -> "CurveClass":
        d = self.d
        return CurveClass(self.r // d, self.s // d)

    @property
    def is_primitive(self) -> bool:
        return self.d == 1

    def scaled(self, k: int) -> "CurveClass":
        if k <= 0:
            raise ValueError("scale factor must be positive")
        return CurveClass(k * self.r, k * self.s)

    def sort_key(self) -> tuple[int, int]:
        return (self.s, self.r)

    def text(self) -> str:
        return f"({self.r},{self.s})"

    def __str__(self) -> str:
        return self.text()


def curve(r: int, s: int) -> CurveClass:
    return CurveClass(r, s)


def gcd_decompose(c: CurveClass) -> tuple[int, CurveClass]:
    """Split a slope into (multiplicity, primitive class)."""
    return c.d, c.primitive()


class CurveSyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.position = position
        self.text = text


def parse_slope(text: str) -> CurveClass:
    """Parse ``(r,s)`` with optional interior whitespace."""
    s = text.strip()
    if not s.startswith("("):
        raise CurveSyntaxError("expected '('", 0, text)
    if not s.endswith(")"):
        raise CurveSyntaxError("expected ')'", len(s) - 1, text)
    body = s[1:-1]
    pieces = body.split(",")
    if len(pieces) != 2:
        raise CurveSyntaxError("expected exactly one ','", 1, text)
    try:
        r = int(pieces[0].strip())
    except ValueError:
        raise CurveSyntaxError(f"bad integer {pieces[0].strip()!r}", 1, text) from None
    try:
        sv = int(pieces[1].strip())
    except ValueError:
        raise CurveSyntaxError(
            f"bad integer {pieces[1].strip()!r}", 2 + len(pieces[0]), text
        ) from None
    if r == 0 and sv == 0:
        raise CurveSyntaxError("(0,0) is not a curve", 1, text)
    return CurveClass(r, sv)


@dataclass(frozen=True)
class MappingClass:
    """A mapping class of the torus as a 2x2 integer matrix of determinant 1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError("mapping class matrix must have determinant 1")

    def apply(self, slope: CurveClass) -> CurveClass:
        return CurveClass(
            self.a * slope.r + self.b * slope.s,
            self.c * slope.r + self.d * slope.s,
        )

    def compose(self, other: "MappingClass") -> "MappingClass":
        return MappingClass(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "MappingClass":
        return MappingClass(self.d, -self.b, -self.c, self.a)

    def power(self, k: int) -> "MappingClass":
        if k < 0:
            return self.inverse().power(-k)
        out = IDENTITY
        base = self
        while k:
            if k & 1:
                out = out.compose(base)
            base = base.compose(base)
            k >>= 1
        return out


IDENTITY = MappingClass(1, 0, 0, 1)


def sigma() -> MappingClass:
    """The half twist [[1, 1], [0, 1]]: (r, s) -> (r + s, s)."""
    return MappingClass(1, 1, 0, 1)


def mcg_apply(m: MappingClass, c: CurveClass) -> CurveClass:
    """Canonical form of m applied to a slope; preserves the multiplicity."""
    return m.apply(c)


def intersection_number(a: CurveClass, b: CurveClass) -> int:
    """Geometric intersection number |r_a s_b - s_a r_b| of primitive slopes."""
    if not a.is_primitive or not b.is_primitive:
        raise ValueError("intersection_number needs primitive curve classes")
    return abs(a.r * b.s - a.s * b.r)
