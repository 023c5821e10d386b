"""The skein algebra of the closed torus.

Basis labels are the empty multicurve plus slopes (r, s) != (0, 0) up to
sign; a label of multiplicity d = gcd(r, s) read in flavor P stands for
P_d applied to the primitive curve.  In the normalized type-one Chebyshev
flavor the product of two slope labels is the two-term rule

    (r,s) * (u,v)  =  q^D (r+u, s+v) + q^-D (r-u, s-v),   D = rv - us,

where a (0, 0) result contributes twice the empty label.  That convention
lives only inside ``fg_mul``; everywhere else the empty label is an honest
basis element with coefficient semantics.  Products in any other flavor are
defined by converting through the type-one basis; there is no independent
product rule.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curves import CurveClass, MappingClass, curve, gcd_decompose, parse_slope
from .elements import SkeinElement, single, zero
from .laurent import Laurent, ONE, const, q_power
from .polyseq import THAT, PolySeq, builtin_sequence, expansion_coeffs
from .reports import (
    VERDICT_POSITIVE,
    VERDICT_VIOLATION,
    PositivityReport,
    Witness,
)

__all__ = [
    "SURFACE",
    "TorusLabel",
    "EMPTY",
    "tlabel",
    "fg_mul",
    "mul",
    "convert",
    "structure_constants",
    "canonical_slopes",
    "positivity_scan",
    "apply_mcg",
    "label_from_text",
    "element_from_json",
]

SURFACE = "t10"


@dataclass(frozen=True)
class TorusLabel:
    slope: CurveClass | None = None

    def sort_key(self):
        if self.slope is None:
            return (0, 0, 0)
        return (1, self.slope.s, self.slope.r)

    def text(self) -> str:
        return "1" if self.slope is None else self.slope.text()

    def json_obj(self):
        return self.text()


EMPTY = TorusLabel(None)


def tlabel(r: int, s: int) -> TorusLabel:
    return TorusLabel(curve(r, s))


def _single(label: TorusLabel, coeff=1, flavor: str = "that") -> SkeinElement:
    return single(SURFACE, flavor, label, coeff)


def fg_mul(a: TorusLabel, b: TorusLabel) -> SkeinElement:
    """Product of two labels in the normalized type-one flavor."""
    if a.slope is None:
        return _single(b)
    if b.slope is None:
        return _single(a)
    r, s = a.slope.r, a.slope.s
    u, v = b.slope.r, b.slope.s
    D = r * v - u * s
    terms = []
    for sign, (x, y) in ((1, (r + u, s + v)), (-1, (r - u, s - v))):
        coeff = q_power(sign * D)
        if x == 0 and y == 0:
            terms.append((EMPTY, coeff + coeff))
        else:
            terms.append((TorusLabel(curve(x, y)), coeff))
    return SkeinElement(SURFACE, "that", terms)


def mul(x: SkeinElement, y: SkeinElement) -> SkeinElement:
    """Bilinear extension of the label product; type-one flavor only."""
    if x.surface != SURFACE or y.surface != SURFACE:
        raise ValueError("torus multiplication needs torus elements")
    if x.flavor != "that" or y.flavor != "that":
        raise ValueError(
            "torus products are computed in the 'that' flavor; convert first"
        )
    acc = zero(SURFACE, "that")
    for la, ca in x.items():
        for lb, cb in y.items():
            acc = acc + fg_mul(la, lb).scaled(ca * cb)
    return acc


def convert(
    x: SkeinElement, target: PolySeq, source: PolySeq | None = None
) -> SkeinElement:
    """Exact change of basis flavor.

    A label of multiplicity d carries the source sequence's degree-d entry
    on its primitive curve; rewriting that entry over the target sequence
    maps degree-k terms to the label k * primitive and the constant term to
    the empty label.
    """
    if x.surface != SURFACE:
        raise ValueError("convert expects a torus element")
    if source is None:
        source = builtin_sequence(x.flavor)
    if source.name != x.flavor:
        raise ValueError(
            f"element flavor {x.flavor!r} does not match source {source.name!r}"
        )
    if not target.normalized:
        raise ValueError(f"target sequence {target.name!r} is not normalized")
    terms = []
    for label, c in x.items():
        if label.slope is None:
            terms.append((EMPTY, c))
            continue
        d, prim = gcd_decompose(label.slope)
        for k, ck in enumerate(expansion_coeffs(source, target, d)):
            if ck.is_zero:
                continue
            new = EMPTY if k == 0 else TorusLabel(prim.scaled(k))
            terms.append((new, c * ck))
    return SkeinElement(SURFACE, target.name, terms)


def structure_constants(P: PolySeq, a: TorusLabel, b: TorusLabel) -> SkeinElement:
    """The product of two basis labels read and returned in flavor P."""
    ea = convert(_single(a, flavor=P.name), THAT, P)
    eb = convert(_single(b, flavor=P.name), THAT, P)
    return convert(mul(ea, eb), P, THAT)


def canonical_slopes(bound: int) -> list[CurveClass]:
    """All canonical slopes with |r|, |s| <= bound, sorted by (s, r)."""
    out = [curve(r, 0) for r in range(1, bound + 1)]
    for s in range(1, bound + 1):
        for r in range(-bound, bound + 1):
            out.append(curve(r, s))
    out.sort(key=lambda c: c.sort_key())
    return out


def positivity_scan(P: PolySeq, bound: int, *, q1: bool = False) -> PositivityReport:
    """Check every structure constant over the slope box |r|,|s| <= bound.

    Scans ordered pairs of canonical labels in (s, r)-lexicographic order
    and records every coefficient outside the positive part; the first
    recorded witness is deterministic.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    labels = [TorusLabel(c) for c in canonical_slopes(bound)]
    that_forms = {
        lab: convert(_single(lab, flavor=P.name), THAT, P) for lab in labels
    }
    witnesses: list[Witness] = []
    for a in labels:
        for b in labels:
            prod = convert(mul(that_forms[a], that_forms[b]), P, THAT)
            for label, cf in prod.items():
                ok = cf.specialize_q1() >= 0 if q1 else cf.is_positive()
                if not ok:
                    witnesses.append(
                        Witness((a.text(), b.text()), label.text(), cf)
                    )
    verdict = VERDICT_POSITIVE if not witnesses else VERDICT_VIOLATION
    return PositivityReport(SURFACE, P.name, bound, verdict, witnesses, q1=q1)


def apply_mcg(elem: SkeinElement, m: MappingClass) -> SkeinElement:
    """Apply a torus mapping class to every label of an element."""
    return elem.map_labels(
        lambda lab: lab if lab.slope is None else TorusLabel(m.apply(lab.slope))
    )


def label_from_text(text: str) -> TorusLabel:
    t = text.strip()
    if t == "1":
        return EMPTY
    return TorusLabel(parse_slope(t))


def element_from_json(obj: dict) -> SkeinElement:
    if obj.get("surface") != SURFACE:
        raise ValueError(f"not a torus element: surface {obj.get('surface')!r}")
    terms = [
        (label_from_text(t["label"]), Laurent.from_json_obj(t["coeff"]))
        for t in obj.get("terms", [])
    ]
    return SkeinElement(SURFACE, obj.get("basis", "that"), terms)
