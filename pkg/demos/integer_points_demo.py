#!/usr/bin/env python3
"""Curve systems and box searches.

Builds the curve F_1 = ... = F_n, the variant with leading zero components,
a line preimage, and the sum-of-squares equation, then enumerates integer
points exactly inside a box with the pruned depth-first search.

Run:  python3 demos/integer_points_demo.py
"""

from kellerlab.bundled import load_bundled_map
from kellerlab.diophantine import (
    EquationSystem,
    cor1_sum_of_squares,
    curve_CF,
    curve_CFm,
    format_report,
    line_preimage,
    nonzero_point_exists,
    search_box,
)
from kellerlab.expr_io import print_polynomial
from kellerlab.fibers import Line


def show_system(title, system):
    print(title)
    for p in system.polynomials:
        print(f"  {print_polynomial(p)} = 0")


def main():
    F = load_bundled_map("triangular_2.map").to_poly_map()

    cf = curve_CF(F)
    show_system("curve F1 = F2:", cf)
    print(format_report(search_box(cf, 10)), end="")

    cfm = curve_CFm(F, 1)
    show_system("\nvariant F1 = 0:", cfm)
    print(format_report(search_box(cfm, 10)), end="")

    pre = line_preimage(F, Line((0, 0), (0, 1)))
    show_system("\npreimage of the vertical line through 0:", pre)
    print(format_report(search_box(pre, 10)), end="")

    sumsq = EquationSystem((cor1_sum_of_squares(F),))
    show_system("\nsum-of-squares equation:", sumsq)
    print(format_report(search_box(sumsq, 10)), end="")

    print("\nnonzero-point probes (radius 10):")
    for name in ("identity_2.map", "triangular_2.map", "triangular_4.map"):
        G = load_bundled_map(name).to_poly_map()
        verdict = nonzero_point_exists(curve_CF(G), 10)
        print(f"  {name}: {verdict.message()}")


if __name__ == "__main__":
    main()
