"""Partial multiplication on the once-punctured torus.

Labels pair an optional slope with a power of the central peripheral curve
U; a label of slope multiplicity d and U-power u read in flavor P stands
for P_d(primitive) * P_u(U).  No general product formula is implemented:
only the proved families below are supported, and anything else raises
``NoProductRuleError``.

Supported products, all in the normalized type-one flavor:

  * a label whose primitive curve meets a primitive curve once (two-term
    rule, same shape as the closed-torus product);
  * left multiplication of (1,0) against any (n,2) label, which picks up a
    peripheral correction (U + q^2 + q^-2) exactly when n is odd;
  * (n,1) times (0,1), whose peripheral correction is governed by the
    one-variable polynomials G_n computed here both in closed form and by
    recursion.

The lowest-q-exponent extraction rewrites that last product in a caller
supplied integer-coefficient flavor and groups terms by q-exponent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curves import CurveClass, curve, gcd_decompose
from .elements import NoProductRuleError, SkeinElement, single, zero
from .laurent import Laurent, ONE, const, q_power
from .polyseq import (
    CHEB_S,
    THAT,
    Poly1,
    PolySeq,
    X,
    builtin_sequence,
    expand_in,
    expansion_coeffs,
)

__all__ = [
    "SURFACE",
    "PTorusLabel",
    "PT_EMPTY",
    "plabel",
    "parity_indicator",
    "mul_once",
    "mul_t10_tn2",
    "g_closed",
    "g_recursive",
    "mul_tn1_t01",
    "mul_by_t10",
    "two_way_expansion",
    "shift_u",
    "convert",
    "upper_bound_extract",
    "element_from_json",
]

SURFACE = "t11"


@dataclass(frozen=True)
class PTorusLabel:
    slope: CurveClass | None = None
    u: int = 0

    def __post_init__(self):
        if self.u < 0:
            raise ValueError("U-power must be nonnegative")

    def sort_key(self):
        if self.slope is None:
            return (0, 0, 0, self.u)
        return (1, self.slope.s, self.slope.r, self.u)

    def text(self) -> str:
        parts = []
        if self.slope is not None:
            parts.append(self.slope.text())
        if self.u == 1:
            parts.append("U")
        elif self.u > 1:
            parts.append(f"U^{self.u}")
        return "*".join(parts) if parts else "1"

    def json_obj(self):
        return {
            "slope": None if self.slope is None else self.slope.text(),
            "u": self.u,
        }


PT_EMPTY = PTorusLabel(None, 0)


def plabel(r: int | None = None, s: int | None = None, u: int = 0) -> PTorusLabel:
    slope = None if r is None else curve(r, s)
    return PTorusLabel(slope, u)


def _single(label: PTorusLabel, coeff=1, flavor: str = "that") -> SkeinElement:
    return single(SURFACE, flavor, label, coeff)


def parity_indicator(n: int) -> int:
    """1 for odd n, 0 for even n: whether the peripheral correction fires."""
    return n & 1


def shift_u(elem: SkeinElement, k: int) -> SkeinElement:
    """Attach k extra peripheral copies to every label (U is central)."""
    if k == 0:
        return elem
    return elem.map_labels(lambda lab: PTorusLabel(lab.slope, lab.u + k))


def _instantiate(
    p: Poly1, prim: CurveClass, *, u: int = 0, basis: PolySeq = THAT
) -> SkeinElement:
    """Read a one-variable polynomial on a primitive curve as an element.

    The degree-k part of p, expanded over the basis sequence, lands on the
    label k * prim (empty slope for k = 0) with the given U-power.
    """
    terms = []
    for k, ck in enumerate(expand_in(p, basis)):
        if ck.is_zero:
            continue
        slope = None if k == 0 else prim.scaled(k)
        terms.append((PTorusLabel(slope, u), ck))
    return SkeinElement(SURFACE, basis.name, terms)


def mul_once(a: PTorusLabel, b: CurveClass) -> SkeinElement:
    """Product (label a) * (primitive curve b) when a's primitive curve
    meets b exactly once, i.e. |rv - su| equals the multiplicity of a.

    U-powers ride along unchanged.
    """
    if a.slope is None:
        raise NoProductRuleError("left factor has no slope component")
    if not b.is_primitive:
        raise ValueError("right factor must be a primitive curve class")
    d = a.slope.d
    r, s = a.slope.r, a.slope.s
    u, v = b.r, b.s
    D = r * v - s * u
    if abs(D) != d:
        raise NoProductRuleError(
            f"curves {a.slope.primitive().text()} and {b.text()} do not "
            f"intersect once (|{r}*{v} - {s}*{u}| = {abs(D)}, need {d})"
        )
    return SkeinElement(
        SURFACE,
        "that",
        [
            (PTorusLabel(curve(r + u, s + v), a.u), q_power(D)),
            (PTorusLabel(curve(r - u, s - v), a.u), q_power(-D)),
        ],
    )


def mul_t10_tn2(n: int) -> SkeinElement:
    """Left multiplication of the (1,0) label against the (n,2) label.

    Two slope terms shifted by q^(+-2), plus (U + q^2 + q^-2) exactly when
    n is odd.
    """
    terms = [
        (PTorusLabel(curve(n + 1, 2), 0), q_power(2)),
        (PTorusLabel(curve(n - 1, 2), 0), q_power(-2)),
    ]
    if parity_indicator(n):
        terms.append((PTorusLabel(None, 1), ONE))
        terms.append((PT_EMPTY, q_power(2) + q_power(-2)))
    return SkeinElement(SURFACE, "that", terms)


def g_closed(n: int) -> Poly1:
    """Closed form of the peripheral-correction polynomial G_n:

        G_n = sum over 1 <= i <= n//2 of q^(4i - n - 2) * S_{n-2i}(x),

    with G_0 = G_1 = 0.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    acc = Poly1()
    for i in range(1, n // 2 + 1):
        acc = acc + CHEB_S.poly(n - 2 * i).scaled(q_power(4 * i - n - 2))
    return acc


def g_recursive(n: int) -> Poly1:
    """G_n by the recursion that drives the (n,1)*(0,1) product family:

        G_m = q^-1 x G_{m-1} - q^-2 G_{m-2} + q^(m-2) A_{m-1},

    where A is the odd-parity indicator and G_0 = G_1 = 0.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    table = [Poly1(), Poly1()]
    for m in range(2, n + 1):
        p = (X * table[m - 1]).scaled(q_power(-1)) - table[m - 2].scaled(q_power(-2))
        if parity_indicator(m - 1):
            p = p + Poly1.const(q_power(m - 2))
        table.append(p)
    return table[n] if n < len(table) else table[-1]


def mul_tn1_t01(n: int) -> SkeinElement:
    """The product (n,1) * (0,1) in the normalized type-one flavor:

        q^n (n,2) + q^-n (n,0) + (U + q^2 + q^-2) G_n((1,0)).

    At n = 0 the product is the square of one curve, computed by expanding
    x^2 over the basis (the (n,0) term degenerates to twice the empty
    label there).
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return _instantiate(X * X, curve(0, 1))
    acc = SkeinElement(
        SURFACE,
        "that",
        [
            (PTorusLabel(curve(n, 2), 0), q_power(n)),
            (PTorusLabel(curve(n, 0), 0), q_power(-n)),
        ],
    )
    g = g_closed(n)
    if not g.is_zero:
        a_curve = curve(1, 0)
        acc = acc + _instantiate(g, a_curve, u=1)
        acc = acc + _instantiate(g, a_curve).scaled(q_power(2) + q_power(-2))
    return acc


def mul_by_t10(elem: SkeinElement) -> SkeinElement:
    """Left-multiply an element by the (1,0) label, term by term.

    Covers exactly the label shapes reachable from the supported products:
    empty slopes, (k,0) powers of the (1,0) curve itself, (m,1) curves, and
    U-free (m,2) labels.
    """
    if elem.surface != SURFACE or elem.flavor != "that":
        raise ValueError("mul_by_t10 expects a 'that'-flavor element")
    a_curve = curve(1, 0)
    acc = zero(SURFACE, "that")
    for label, c in elem.items():
        if label.slope is None:
            out = _single(PTorusLabel(a_curve, label.u))
        elif label.slope.s == 0:
            k = label.slope.d
            out = _instantiate(X * THAT.poly(k), a_curve, u=label.u)
        elif label.slope.s == 1:
            out = shift_u(mul_once(PTorusLabel(a_curve, 0), label.slope), label.u)
        elif label.slope.s == 2:
            if label.u:
                raise NoProductRuleError(
                    "no rule for (1,0) against a peripheral-dressed (n,2) label"
                )
            out = mul_t10_tn2(label.slope.r)
        else:
            raise NoProductRuleError(
                f"no rule for (1,0) against label {label.text()}"
            )
        acc = acc + out.scaled(c)
    return acc


def two_way_expansion(n: int) -> tuple[SkeinElement, SkeinElement]:
    """Expand (1,0) * ((n,1) * (0,1)) both ways.

    Way one resolves (1,0)*(n,1) first; way two multiplies (1,0) into the
    expanded (n,1)*(0,1).  Associativity makes the two elements equal, and
    checking that equality mechanizes the induction step behind the
    product family.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    way1 = mul_tn1_t01(n + 1).scaled(q_power(1)) + mul_tn1_t01(n - 1).scaled(
        q_power(-1)
    )
    way2 = mul_by_t10(mul_tn1_t01(n))
    return way1, way2


def convert(
    elem: SkeinElement, target: PolySeq, source: PolySeq | None = None
) -> SkeinElement:
    """Change basis flavor componentwise: the slope polynomial and the
    U-power are each re-expanded over the target sequence."""
    if elem.surface != SURFACE:
        raise ValueError("convert expects a punctured-torus element")
    if source is None:
        source = builtin_sequence(elem.flavor)
    if source.name != elem.flavor:
        raise ValueError(
            f"element flavor {elem.flavor!r} does not match source "
            f"{source.name!r}"
        )
    if not target.normalized:
        raise ValueError(f"target sequence {target.name!r} is not normalized")
    unit = (ONE,)
    terms = []
    for label, c in elem.items():
        if label.slope is None:
            slope_parts = [(0, ONE)]
            prim = None
        else:
            d, prim = gcd_decompose(label.slope)
            slope_parts = [
                (k, ck)
                for k, ck in enumerate(expansion_coeffs(source, target, d))
                if not ck.is_zero
            ]
        u_coeffs = unit if label.u == 0 else expansion_coeffs(source, target, label.u)
        u_parts = [(j, cj) for j, cj in enumerate(u_coeffs) if not cj.is_zero]
        for k, ck in slope_parts:
            slope = None if k == 0 else prim.scaled(k)
            for j, cj in u_parts:
                terms.append((PTorusLabel(slope, j), c * ck * cj))
    return SkeinElement(SURFACE, target.name, terms)


def upper_bound_extract(P: PolySeq, n: int) -> tuple[int, SkeinElement]:
    """Rewrite (n,1)*(0,1) in flavor P and return its lowest q-layer.

    P must be normalized with q-free integer coefficients and P_1 = x, so
    the two input labels mean the curves themselves.  The result element
    carries integer coefficients (one q-layer of the product).
    """
    from .elements import split_by_q_exponent

    if P.poly(1) != X:
        raise ValueError(f"sequence {P.name!r} does not have P_1 = x")
    for k in range(n + 1):
        for c in P.poly(k).coeffs:
            if not c.is_zero and c.q_degree_range() != (0, 0):
                raise ValueError(
                    f"sequence {P.name!r} has q-dependent coefficients at "
                    f"degree {k}"
                )
    converted = convert(mul_tn1_t01(n), P, THAT)
    buckets = split_by_q_exponent(converted)
    low = min(buckets)
    return low, buckets[low]


def label_from_json(obj: dict) -> PTorusLabel:
    from .curves import parse_slope

    slope = obj.get("slope")
    return PTorusLabel(
        None if slope is None else parse_slope(slope), int(obj.get("u", 0))
    )


def element_from_json(obj: dict) -> SkeinElement:
    if obj.get("surface") != SURFACE:
        raise ValueError(
            f"not a punctured-torus element: surface {obj.get('surface')!r}"
        )
    terms = [
        (label_from_json(t["label"]), Laurent.from_json_obj(t["coeff"]))
        for t in obj.get("terms", [])
    ]
    return SkeinElement(SURFACE, obj.get("basis", "that"), terms)
