"""Command line front end.

Exit codes: 0 for a successful check or computation, 2 when a requested
certification finds a genuine positivity violation (a successful
computation with a negative answer), 1 for usage or parse errors.

Output is deterministic: labels are sorted, Laurent exponents ascend, and
JSON is emitted compactly with a fixed key order.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import curves, positivity, skein_ptorus, skein_s04, skein_torus
from .curves import CurveClass, parse_slope
from .elements import NoProductRuleError
from .polyseq import (
    PolySeq,
    builtin_sequence,
    chebyshev,
    load_sequence_file,
    seq_leq,
    substitute_t,
)

_DISPLAY = {"that": "That", "s": "S", "t": "T", "monomial": "Monomial"}


def _display(name: str) -> str:
    return _DISPLAY.get(name, name)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def resolve_sequence(spec: str) -> PolySeq:
    if spec.startswith("file:"):
        return load_sequence_file(spec[len("file:"):])
    return builtin_sequence(spec)


class _Parser(argparse.ArgumentParser):
    # Usage errors exit 1; exit 2 is reserved for certified violations.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _parse_flavored(text: str, letters: str) -> tuple[str, CurveClass]:
    t = text.strip()
    if t and t[0] in letters:
        return t[0], parse_slope(t[1:])
    raise ValueError(
        f"expected a label of the form {' or '.join(f'{c}(r,s)' for c in letters)}, "
        f"got {text!r}"
    )


def _parse_power(text: str, head: str) -> int | None:
    """Parse ``head`` or ``head^k`` into the exponent k, else None."""
    t = text.strip()
    if t == head:
        return 1
    if t.startswith(head + "^"):
        tail = t[len(head) + 1 :]
        if tail.isdigit() and int(tail) > 0:
            return int(tail)
        raise ValueError(f"bad exponent in {text!r}")
    return None


def _parse_gamma_power(text: str) -> tuple[int, int] | None:
    """Parse ``gi`` or ``gi^k`` into (index, power), else None."""
    t = text.strip()
    if len(t) >= 2 and t[0] == "g" and t[1] in "1234":
        k = _parse_power(t, t[:2])
        if k is not None:
            return int(t[1]) - 1, k
    return None


# -- tor -----------------------------------------------------------------------


def _cmd_tor_mul(args) -> int:
    P = resolve_sequence(args.basis)
    a = skein_torus.label_from_text(args.a)
    b = skein_torus.label_from_text(args.b)
    elem = skein_torus.structure_constants(P, a, b)
    if args.json:
        print(_dump(elem.to_json_obj()))
    else:
        print(elem.text())
    return 0


def _cmd_tor_scan(args) -> int:
    P = resolve_sequence(args.basis)
    report = skein_torus.positivity_scan(P, args.bound, q1=args.q1)
    if args.json:
        print(_dump(report.to_json_obj()))
    else:
        print(
            f"torus scan: basis={P.name} bound={report.bound} q1={report.q1}"
        )
        print(f"verdict: {report.verdict}")
        if report.witnesses:
            print(f"violations: {len(report.witnesses)}")
            w = report.first_witness()
            print(
                f"first witness: {w.inputs[0]} * {w.inputs[1]} -> "
                f"label {w.label}, coefficient {w.coeff}"
            )
    return 0 if report.passed else 2


# -- ptor ----------------------------------------------------------------------


def _ptor_dispatch(a: CurveClass, b: CurveClass):
    if (a.r, a.s) == (1, 0) and b.s == 2:
        return skein_ptorus.mul_t10_tn2(b.r)
    if a.s == 1 and a.r >= 0 and (b.r, b.s) == (0, 1):
        return skein_ptorus.mul_tn1_t01(a.r)
    if b.is_primitive:
        return skein_ptorus.mul_once(skein_ptorus.PTorusLabel(a, 0), b)
    raise NoProductRuleError(
        f"no product rule for T{a.text()} * T{b.text()} on the punctured torus"
    )


def _ptor_operand(text: str):
    u = _parse_power(text, "U")
    if u is not None:
        return ("u", u)
    _, slope = _parse_flavored(text, "T")
    return ("slope", slope)


def _cmd_ptor_mul(args) -> int:
    ka, va = _ptor_operand(args.a)
    kb, vb = _ptor_operand(args.b)
    if ka == "u" and kb == "u":
        # Pure peripheral product: one-variable multiplication on U.
        from .polyseq import THAT, expand_in, poly_mul

        prod = poly_mul(THAT.poly(va), THAT.poly(vb))
        terms = [
            (skein_ptorus.PTorusLabel(None, j), c)
            for j, c in enumerate(expand_in(prod, THAT))
            if not c.is_zero
        ]
        from .elements import SkeinElement

        elem = SkeinElement(skein_ptorus.SURFACE, "that", terms)
    elif ka == "u" or kb == "u":
        # The peripheral curve is central: the product of disjoint basis
        # factors is the joint basis label.
        u = va if ka == "u" else vb
        slope = vb if ka == "u" else va
        from .elements import single

        elem = single(
            skein_ptorus.SURFACE, "that", skein_ptorus.PTorusLabel(slope, u)
        )
    else:
        elem = _ptor_dispatch(va, vb)
    if args.json:
        print(_dump(elem.to_json_obj()))
    else:
        print(elem.text())
    return 0


def _cmd_ptor_verify(args) -> int:
    n_max = args.n_max
    if args.check == "g-closed":
        bad = [
            n
            for n in range(n_max + 1)
            if skein_ptorus.g_recursive(n) != skein_ptorus.g_closed(n)
        ]
        passed = not bad
        detail = {"check": "g-closed", "n_max": n_max, "passed": passed, "failures": bad}
        text = f"g-closed vs recursion, n <= {n_max}: " + (
            "all equal" if passed else f"mismatches at {bad}"
        )
    else:
        bad = []
        for n in range(2, n_max + 1):
            w1, w2 = skein_ptorus.two_way_expansion(n)
            if w1 != w2:
                bad.append(n)
        passed = not bad
        detail = {
            "check": "consistency",
            "n_max": n_max,
            "passed": passed,
            "failures": bad,
        }
        text = f"two-way (1,0)-expansion, 2 <= n <= {n_max}: " + (
            "consistent" if passed else f"mismatches at {bad}"
        )
    if args.json:
        print(_dump(detail))
    else:
        print(text)
    return 0 if passed else 2


def _cmd_ptor_extract(args) -> int:
    P = resolve_sequence(args.seq)
    low, elem = skein_ptorus.upper_bound_extract(P, args.n)
    if args.json:
        print(
            _dump(
                {"n": args.n, "lowest_exponent": low, "element": elem.to_json_obj()}
            )
        )
    else:
        print(f"lowest q-exponent of ({args.n},1)*(0,1) in basis {P.name}: {low}")
        print(f"element: {elem.text()}")
    return 0


# -- s04 -----------------------------------------------------------------------


def _s04_dispatch(la: str, a: CurveClass, lb: str, b: CurveClass):
    if la != lb:
        raise NoProductRuleError("both labels must use the same basis letter")
    if la == "S":
        if (a.r, a.s) == (1, 0) and b.s == 2:
            return skein_s04.mul_s10_sm2(b.r)
        if (a.r, a.s) == (1, 0) and b.s == 1:
            return skein_s04.mul_a_bn(b.r, "s")
        if (a.r, a.s) == (1, 0) and b.s == 0:
            return skein_s04.mul_by_s10(
                skein_s04._single(skein_s04.S04Label(b), 1, "s")
            )
        if a.s == 1 and a.r >= 0 and (b.r, b.s) == (0, 1):
            return skein_s04.mul_sn1_s01(a.r)[0]
    else:
        if (a.r, a.s) == (1, 0) and b.s == 1:
            return skein_s04.mul_a_bn(b.r, "that")
        if a.s == 0 and (b.r, b.s) == (0, 1):
            return skein_s04.mul_tna_b(a.r)
    raise NoProductRuleError(
        f"no product rule for {la}{a.text()} * {lb}{b.text()} on the sphere"
    )


def _s04_operand(text: str):
    g = _parse_gamma_power(text)
    if g is not None:
        return ("gamma", g)
    letter, slope = _parse_flavored(text, "TS")
    return ("slope", (letter, slope))


def _cmd_s04_mul(args) -> int:
    ka, va = _s04_operand(args.a)
    kb, vb = _s04_operand(args.b)
    if ka == "gamma" or kb == "gamma":
        # Peripheral curves are central monomials: merge exponents.
        from .elements import single

        g = [0, 0, 0, 0]
        slope = None
        flavor = "s"
        for kind, val in ((ka, va), (kb, vb)):
            if kind == "gamma":
                idx, power = val
                g[idx] += power
            else:
                letter, slope = val
                flavor = "s" if letter == "S" else "that"
        elem = single(
            skein_s04.SURFACE, flavor, skein_s04.S04Label(slope, tuple(g))
        )
    else:
        la, a = va
        lb, b = vb
        elem = _s04_dispatch(la, a, lb, b)
    if args.json:
        print(_dump(elem.to_json_obj()))
    else:
        print(elem.text())
    return 0


def _h_bounds_failures(n_max: int) -> list[dict]:
    failures = []
    for n in range(1, n_max + 1):
        h = skein_s04.h_part(n)
        for label, c in h.items():
            if label.slope is not None and label.slope.s in (1, 2):
                failures.append({"n": n, "label": label.text(), "reason": "label"})
            rng = c.q_degree_range()
            if rng is not None and (rng[0] < -2 * n + 2 or rng[1] > 2 * n - 2):
                failures.append(
                    {"n": n, "label": label.text(), "reason": "q-range"}
                )
    return failures


def _cmd_s04_verify(args) -> int:
    n_max = args.n_max
    if args.check == "h-bounds":
        failures = _h_bounds_failures(n_max)
        passed = not failures
        detail = {
            "check": "h-bounds",
            "n_max": n_max,
            "passed": passed,
            "failures": failures,
        }
        text = f"remainder structure, 1 <= n <= {n_max}: " + (
            "within bounds" if passed else f"{len(failures)} failures"
        )
    elif args.check == "tna-b":
        bad = [
            n
            for n in range(n_max + 1)
            if skein_s04.mul_tna_b(n) != skein_s04.tna_b_by_recurrence(n)
        ]
        passed = not bad
        detail = {"check": "tna-b", "n_max": n_max, "passed": passed, "failures": bad}
        text = f"closed form vs recurrence, n <= {n_max}: " + (
            "all equal" if passed else f"mismatches at {bad}"
        )
    elif args.check == "sigma":
        bad = []
        for n in range(-n_max, n_max):
            if skein_s04.apply_sigma(skein_s04.mul_a_bn(n, "s")) != skein_s04.mul_a_bn(
                n + 1, "s"
            ):
                bad.append(("a-bn", n))
        for m in range(-n_max, n_max):
            if skein_s04.apply_sigma(skein_s04.mul_s10_sm2(m)) != skein_s04.mul_s10_sm2(
                m + 2
            ):
                bad.append(("s10-m2", m))
        passed = not bad
        detail = {
            "check": "sigma",
            "n_max": n_max,
            "passed": passed,
            "failures": [list(b) for b in bad],
        }
        text = f"half-twist transport, |n| <= {n_max}: " + (
            "equivariant" if passed else f"mismatches {bad}"
        )
    else:  # h-positive: observational only, never a failure exit
        rows = []
        for n in range(1, n_max + 1):
            h = skein_s04.h_part(n)
            rows.append(
                {
                    "n": n,
                    "all_positive": all(c.is_positive() for _, c in h.items()),
                }
            )
        detail = {"check": "h-positive", "n_max": n_max, "observations": rows}
        lines = [
            f"n={row['n']}: {'positive' if row['all_positive'] else 'has negative coefficients'}"
            for row in rows
        ]
        text = (
            f"remainder positivity observations (monomial peripheral "
            f"coordinates), 1 <= n <= {n_max}:\n" + "\n".join(lines)
        )
        passed = True
    if args.json:
        print(_dump(detail))
    else:
        print(text)
    return 0 if passed else 2


def _cmd_s04_extract(args) -> int:
    n = args.n
    low, elem = skein_s04.lowest_q_term_s04(n)
    want_label = skein_s04.S04Label(curves.curve(n, 0))
    want = skein_s04._single(want_label, 1, "s")
    matches = low == -2 * n and elem == want
    if args.json:
        print(
            _dump(
                {
                    "n": n,
                    "lowest_exponent": low,
                    "element": elem.to_json_obj(),
                    "matches_expected": matches,
                }
            )
        )
    else:
        print(f"lowest q-exponent of ({n},1)*(0,1): {low}")
        print(f"element: {elem.text()}")
        print(f"matches q^{-2*n} * ({n},0): {'yes' if matches else 'no'}")
    return 0 if matches else 2


def _cmd_s04_force_p1(args) -> int:
    report = skein_s04.p1_forcing_witness(args.delta)
    if args.json:
        print(_dump(report.to_json_obj()))
    else:
        print(f"perturbing the linear entry by {report.delta}:")
        print(
            f"  peripheral witness {report.gamma_label.text()}: "
            f"coefficient {report.gamma_coeff}"
        )
        print(
            f"  curve witness {report.slope_label.text()}: "
            f"coefficient {report.slope_coeff}"
        )
        print(f"  non-positive labels: {len(report.violations)}")
    return 2


# -- certify ---------------------------------------------------------------------


def _cmd_certify_torus_unique(args) -> int:
    report = positivity.torus_uniqueness(args.n_max, args.box, q1=args.q1)
    if args.json:
        print(_dump(report.to_json_obj()))
    else:
        print(
            f"torus uniqueness: levels 2..{report.n_max}, "
            f"box {report.coeff_box}, q1={report.q1}"
        )
        for lv in report.levels:
            print(
                f"level {lv.level}: {lv.n_perturbations} perturbations, "
                f"{'all violated' if lv.all_killed else f'{len(lv.unkilled)} survived'}"
            )
        print(f"unperturbed sequence clean: {report.t_hat_clean}")
        print(f"verdict: {report.verdict}")
    return 0 if report.certified else 2


def _cmd_certify_sandwich(args) -> int:
    P = resolve_sequence(args.seq)
    report = positivity.sandwich_check(P, args.n_max, q1=args.q1)
    if args.json:
        print(_dump(report.to_json_obj()))
    else:
        print(f"sandwich check: sequence={P.name} n_max={report.n_max}")
        lo, up = report.lower, report.upper
        print(
            f"(That) <= ({_display(P.name)}): "
            + ("holds" if lo.holds else f"fails, witness {lo.witness}")
        )
        print(
            f"({_display(P.name)}) <= (S): "
            + ("holds" if up.holds else f"fails, witness {up.witness}")
        )
        print(f"passed: {report.passed}")
    return 0 if report.passed else 2


# -- cheb / order -----------------------------------------------------------------


def _cmd_cheb(args) -> int:
    p = chebyshev(args.kind, args.n)
    if args.subst_t:
        value = substitute_t(p)
        if args.json:
            print(_dump({"kind": args.kind, "n": args.n, "t_value": value.to_json_obj()}))
        else:
            print(str(value))
        return 0
    if args.json:
        print(
            _dump(
                {
                    "kind": args.kind,
                    "n": args.n,
                    "coeffs": [c.to_json_obj() for c in p.coeffs],
                }
            )
        )
    else:
        print(str(p))
    return 0


def _cmd_order(args) -> int:
    P = resolve_sequence(args.left)
    Q = resolve_sequence(args.right)
    result = seq_leq(P, Q, args.n_max, q1=args.q1)
    if args.json:
        obj = {
            "relation": "leq",
            "left": P.name,
            "right": Q.name,
            "n_max": args.n_max,
        }
        obj.update(result.to_json_obj())
        print(_dump(obj))
    else:
        if result.holds:
            print(
                f"({_display(P.name)}) <= ({_display(Q.name)}) "
                f"certified to n={args.n_max}"
            )
        else:
            n, k, c = result.witness
            print(
                f"({_display(P.name)}) <= ({_display(Q.name)}) fails at "
                f"n={n}: coefficient {c} on index {k}"
            )
    return 0 if result.holds else 2


# -- wiring -----------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="skein", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    tor = sub.add_parser("tor", help="closed torus")
    tor_sub = tor.add_subparsers(dest="subcommand", required=True)
    p = tor_sub.add_parser("mul", help="product of two basis labels")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--basis", default="that")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_tor_mul)
    p = tor_sub.add_parser("scan", help="positivity scan over a slope box")
    p.add_argument("--basis", default="that")
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--q1", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_tor_scan)

    ptor = sub.add_parser("ptor", help="once-punctured torus")
    ptor_sub = ptor.add_subparsers(dest="subcommand", required=True)
    p = ptor_sub.add_parser("mul", help="product of two supported labels")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_ptor_mul)
    p = ptor_sub.add_parser("verify", help="mechanized identity checks")
    p.add_argument("check", choices=["g-closed", "consistency"])
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_ptor_verify)
    p = ptor_sub.add_parser("extract", help="lowest q-layer of (n,1)*(0,1)")
    p.add_argument("--seq", default="s")
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_ptor_extract)

    s04 = sub.add_parser("s04", help="four-punctured sphere")
    s04_sub = s04.add_subparsers(dest="subcommand", required=True)
    p = s04_sub.add_parser("mul", help="product of two supported labels")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_s04_mul)
    p = s04_sub.add_parser("verify", help="mechanized identity checks")
    p.add_argument(
        "check", choices=["h-bounds", "tna-b", "sigma", "h-positive"]
    )
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_s04_verify)
    p = s04_sub.add_parser("extract", help="lowest q-layer of (n,1)*(0,1)")
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_s04_extract)
    p = s04_sub.add_parser("force-p1", help="perturb the linear entry")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_s04_force_p1)

    certify = sub.add_parser("certify", help="bounded positivity certifications")
    certify_sub = certify.add_subparsers(dest="subcommand", required=True)
    p = certify_sub.add_parser("torus-unique", help="perturbation enumeration")
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--box", type=int, default=2)
    p.add_argument("--q1", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_certify_torus_unique)
    p = certify_sub.add_parser("sandwich", help="necessary order condition")
    p.add_argument("--seq", required=True)
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--q1", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_certify_sandwich)

    p = sub.add_parser("cheb", help="Chebyshev-type polynomials")
    p.add_argument("kind", choices=["t", "that", "s"])
    p.add_argument("n", type=int)
    p.add_argument("--subst-t", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_cheb)

    p = sub.add_parser("order", help="bounded sequence order")
    order_sub = p.add_subparsers(dest="subcommand", required=True)
    q = order_sub.add_parser("leq", help="check (left) <= (right)")
    q.add_argument("left")
    q.add_argument("right")
    q.add_argument("--n-max", type=int, default=20)
    q.add_argument("--q1", action="store_true")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=_cmd_order)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else int(exc.code)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
