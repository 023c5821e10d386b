"""Linear combinations of basis labels over Z[q, q^-1].

A skein element is a finite sum of surface-specific labels with Laurent
coefficients, tagged with the surface and the basis flavor (the name of the
polynomial sequence its labels are read in).  Labels are small frozen values
providing ``sort_key``, ``text`` and ``json_obj``.

Elements are canonical (no zero coefficients) and treated as immutable;
every operation returns a new value.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator

from .laurent import Laurent, ZERO, q_power

__all__ = [
    "SkeinElement",
    "NoProductRuleError",
    "zero",
    "single",
    "split_by_q_exponent",
]


class NoProductRuleError(ValueError):
    """A product was requested outside the proved partial multiplication."""


class SkeinElement:
    __slots__ = ("surface", "flavor", "_terms")

    def __init__(self, surface: str, flavor: str, terms: Iterable = ()):
        data: dict = {}
        pairs = terms.items() if isinstance(terms, dict) else terms
        for label, c in pairs:
            c = Laurent.coerce(c)
            if c.is_zero:
                continue
            acc = data.get(label)
            data[label] = c if acc is None else acc + c
        self.surface = surface
        self.flavor = flavor
        self._terms = {l: c for l, c in data.items() if not c.is_zero}

    # -- access --------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def coeff(self, label) -> Laurent:
        return self._terms.get(label, ZERO)

    def labels(self):
        return sorted(self._terms, key=lambda l: l.sort_key())

    def items(self) -> Iterator[tuple[object, Laurent]]:
        for label in self.labels():
            yield label, self._terms[label]

    # -- linear structure ------------------------------------------------------

    def _check_compatible(self, other: "SkeinElement"):
        if self.surface != other.surface:
            raise ValueError(
                f"surface mismatch: {self.surface!r} vs {other.surface!r}"
            )
        if self.flavor != other.flavor:
            raise ValueError(
                f"basis flavor mismatch: {self.flavor!r} vs {other.flavor!r}"
            )

    def __add__(self, other: "SkeinElement") -> "SkeinElement":
        self._check_compatible(other)
        terms = dict(self._terms)
        for label, c in other._terms.items():
            acc = terms.get(label)
            terms[label] = c if acc is None else acc + c
        return SkeinElement(self.surface, self.flavor, terms)

    def __neg__(self) -> "SkeinElement":
        return SkeinElement(
            self.surface, self.flavor, {l: -c for l, c in self._terms.items()}
        )

    def __sub__(self, other: "SkeinElement") -> "SkeinElement":
        return self + (-other)

    def scaled(self, c: Laurent | int) -> "SkeinElement":
        c = Laurent.coerce(c)
        return SkeinElement(
            self.surface, self.flavor, {l: c * v for l, v in self._terms.items()}
        )

    def __rmul__(self, c: Laurent | int) -> "SkeinElement":
        return self.scaled(c)

    def map_labels(self, fn: Callable) -> "SkeinElement":
        """Apply a label transformation, merging any collisions."""
        return SkeinElement(
            self.surface,
            self.flavor,
            ((fn(label), c) for label, c in self._terms.items()),
        )

    def with_flavor(self, flavor: str) -> "SkeinElement":
        return SkeinElement(self.surface, flavor, self._terms)

    # -- comparison and display -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return (
            self.surface == other.surface
            and self.flavor == other.flavor
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash(
            (self.surface, self.flavor, frozenset(self._terms.items()))
        )

    def text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for label, c in self.items():
            cs = str(c)
            lt = label.text()
            if lt == "1":
                parts.append(f"({cs})" if len(c) > 1 else cs)
            elif cs == "1":
                parts.append(lt)
            elif len(c) > 1 or cs.startswith("-"):
                parts.append(f"({cs})*{lt}")
            else:
                parts.append(f"{cs}*{lt}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"<{self.surface}:{self.flavor} {self.text()}>"

    # -- serialization ------------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "surface": self.surface,
            "basis": self.flavor,
            "terms": [
                {"label": label.json_obj(), "coeff": c.to_json_obj()}
                for label, c in self.items()
            ],
        }


def zero(surface: str, flavor: str) -> SkeinElement:
    return SkeinElement(surface, flavor)


def single(surface: str, flavor: str, label, coeff: Laurent | int = 1) -> SkeinElement:
    return SkeinElement(surface, flavor, [(label, coeff)])


def split_by_q_exponent(elem: SkeinElement) -> dict[int, SkeinElement]:
    """Split an element by the q-exponent of its coefficient monomials.

    Bucket e holds the integer part of every c*q^e term; scaling bucket e
    by q^e and summing recovers the element exactly.
    """
    buckets: dict[int, list] = {}
    for label, c in elem._terms.items():
        for e, k in c.items():
            buckets.setdefault(e, []).append((label, Laurent.coerce(k)))
    return {
        e: SkeinElement(elem.surface, elem.flavor, pairs)
        for e, pairs in buckets.items()
    }


def recombine_q_split(
    surface: str, flavor: str, buckets: dict[int, SkeinElement]
) -> SkeinElement:
    acc = zero(surface, flavor)
    for e, part in buckets.items():
        acc = acc + part.scaled(q_power(e))
    return acc
