#!/usr/bin/env python3
"""Replay the golden session corpus and print every computed value.

Usage:  python3 scripts/golden_sessions.py [--verbose]

Serves as a quick end-to-end smoke run and a usage demo: every invariant the
package computes shows up here at least once.
"""

import argparse
import sys
import time
import warnings
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from fthresh import (  # noqa: E402
    DENOMINATOR_POWER,
    Ideal,
    Ring,
    f_signature_value,
    fpt,
    is_f_jumping_exponent,
    is_fpt,
    nu,
    parse_polynomial,
    secant_intercept,
    snc_verdict_raw,
)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--verbose", action="store_true", help="stream driver traces")
    args = parser.parse_args()
    failures = 0

    def show(label, thunk, expected=None):
        nonlocal failures
        t0 = time.time()
        value = thunk()
        elapsed = time.time() - t0
        note = ""
        if expected is not None:
            ok = str(value) == str(expected)
            failures += 0 if ok else 1
            note = "ok" if ok else f"MISMATCH (expected {expected})"
        print(f"{label:<34} {str(value):>24}   [{elapsed:6.2f}s] {note}")

    warnings.simplefilter("ignore")

    R11 = Ring(11, ("x", "y"))
    I = Ideal(R11, [parse_polynomial("x^2 + y^3", R11), parse_polynomial("x*y", R11)])
    J = Ideal(R11, [parse_polynomial("x^2", R11), parse_polynomial("y^3", R11)])
    show("nu(2, I, J)", lambda: nu(2, I, J), 281)
    show("nu(2, xy(x^2+y^2), J)", lambda: nu(2, parse_polynomial("x*y*(x^2 + y^2)", R11), J), 120)

    R17 = Ring(17, ("x", "y", "z"))
    diag = parse_polynomial("x^3 + y^4 + z^5", R17)
    show("nu(10, x^3+y^4+z^5) fast", lambda: nu(10, diag), 1541642394460)
    show("nu(10, ...) general", lambda: nu(10, diag, use_special_algorithms=False), 1541642394460)

    R5z = Ring(5, ("x", "y", "z"))
    m = Ideal(R5z, [R5z.variable(i) for i in range(3)])
    show("nu(2, m, m^2)", lambda: nu(2, m, m.power(2)), 97)
    show("nu(5, ..., list)", lambda: nu(5, parse_polynomial("x^2*y^4 + y^2*z^7 + z^2*x^8", R5z),
                                        return_list=True), [0, 1, 8, 44, 224, 1124])

    R11z = Ring(11, ("x", "y", "z"))
    show("nu(3, x^3+y^3+z^3+xyz)", lambda: nu(3, parse_polynomial("x^3 + y^3 + z^3 + x*y*z", R11z),
                                              use_special_algorithms=False), 1209)

    R3 = Ring(3, ("x", "y"))
    m5 = Ideal(R3, [R3.variable("x"), R3.variable("y")]).power(5)
    show("nu(4, m^5)", lambda: nu(4, m5), 32)
    show("mu(4, m^5)", lambda: nu(4, m5, containment="power"), 26)

    R7 = Ring(7, ("x", "y"))
    away = parse_polynomial("(x - 1)^3 - (y - 2)^2", R7)
    show("nu(3, away from origin)", lambda: nu(3, away), "infinity")
    show("nu(3, ..., global)", lambda: nu(3, away, at_origin=False), 285)

    verbose = args.verbose
    show("fpt(x^3+y^3+z^3+xyz)", lambda: fpt(parse_polynomial("x^3 + y^3 + z^3 + x*y*z", R5z),
                                             verbose=verbose), Fraction(4, 5))
    show("fpt(x^5+y^6+z^7+(xyz)^3)", lambda: fpt(parse_polynomial("x^5 + y^6 + z^7 + (x*y*z)^3", R5z)))
    show("fpt(x^17+y^20+z^24)", lambda: fpt(parse_polynomial("x^17 + y^20 + z^24", R5z)),
         Fraction(94, 625))

    R5 = Ring(5, ("x", "y"))
    f10 = parse_polynomial("x^2*(x + y)^3*(x + 3*y^2)^5", R5)
    show("fpt depth 3 attempts 0", lambda: fpt(f10, depth_of_search=3, attempts=0))
    show("fpt depth 3 attempts 1", lambda: fpt(f10, depth_of_search=3, attempts=1), Fraction(22, 125))
    f13 = parse_polynomial("x^6*y^4 + x^4*y^9 + (x^2 + y^3)^3", R5)
    show("fpt depth 3 attempts 2", lambda: fpt(f13, depth_of_search=3, attempts=2), Fraction(17, 62))
    f16 = parse_polynomial("x^3*y^11*(x + y)^8*(x^2 + y^3)^8", R5)
    show("fpt depth 3 attempts 8", lambda: fpt(f16, depth_of_search=3, attempts=8), Fraction(1, 19))

    f23 = parse_polynomial("2*x^10*y^8 + x^4*y^7 - 2*x^3*y^8", R5)
    show("s(f, 16/125)", lambda: f_signature_value(3, 16, f23), Fraction(793, 15625))
    show("s(f, 17/125)", lambda: f_signature_value(3, 17, f23), Fraction(342, 15625))
    show("secant intercept", lambda: secant_intercept(3, 17, Fraction(793, 15625),
                                                      Fraction(342, 15625), 5), Fraction(8009, 56375))
    show("fpt final attempt", lambda: fpt(f23, depth_of_search=3, final_attempt=True,
                                          guess_strategy=DENOMINATOR_POWER, verbose=verbose))
    show("fpt depth 4", lambda: fpt(f23, depth_of_search=4), Fraction(1, 7))

    fg = parse_polynomial("x*(y - 1)^2 - y*(x - 1)^3", R7)
    show("fpt at origin", lambda: fpt(fg), 1)
    show("fpt global", lambda: fpt(fg, at_origin=False), Fraction(5, 6))

    show("is_fpt(997/6250, binomial)",
         lambda: is_fpt(Fraction(997, 6250),
                        parse_polynomial("x^2*y^6*z^10 + x^10*y^5*z^3", R5z), at_origin=True), True)
    show("is_fpt(5787/78125, binary form)",
         lambda: is_fpt(Fraction(5787, 78125),
                        parse_polynomial("x^2*y^6*(x + y)^9*(x + 3*y)^10", R5), at_origin=True), True)

    R13 = Ring(13, ("x", "y"))
    quartic = parse_polynomial("y*((y + 1) - (x - 1)^2)*(x - 2)*(x + y - 2)", R13)
    show("is_f_jumping(3/4)", lambda: is_f_jumping_exponent(Fraction(3, 4), quartic), True)
    show("is_fpt(3/4)", lambda: is_fpt(Fraction(3, 4), quartic), False)

    R7z = Ring(7, ("x", "y", "z"))
    show("snc(x^2 - y^2)", lambda: snc_verdict_raw(parse_polynomial("x^2 - y^2", R7z))[0], True)
    show("snc(x^2 - yz)", lambda: snc_verdict_raw(parse_polynomial("x^2 - y*z", R7z))[0], False)
    tangent = parse_polynomial("(y - (x - 1)^2)*y^2", R7)
    show("snc(tangent, origin)", lambda: snc_verdict_raw(tangent, at_origin=True)[0], True)
    show("snc(tangent, global)", lambda: snc_verdict_raw(tangent, at_origin=False)[0], False)

    print()
    if failures:
        print(f"{failures} mismatches")
        return 1
    print("all golden values reproduced")
    return 0


if __name__ == "__main__":
    sys.exit(main())
