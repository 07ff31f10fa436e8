#!/usr/bin/env python3
"""Constructive SL(n, Z): complete a primitive vector to a determinant-1
matrix, and carry one primitive vector onto another.

The completion is the inductive bordered construction: solve the 2x2 case
by extended Euclid, then border the (n-1)-dimensional completion of the
reduced tail and solve the resulting linear determinant form for the two
free entries.

Run:  python3 demos/sl_completion_demo.py
"""

import random

from kellerlab.lattice import is_primitive, map_primitive_pair, sl_complete

from kellerlab._linalg import int_matrix_det


def show(title, rows):
    print(title)
    for row in rows:
        print("  " + " ".join(f"{x:4d}" for x in row))


def main():
    for v in [(2, 3), (2, 3, 5), (0, 4, 7), (6, 10, 15)]:
        assert is_primitive(v)
        A = sl_complete(v)
        show(f"completion of {v} (det = {int_matrix_det(A.rows)}):", A.rows)
        print()

    v, w = (2, 3, 5), (0, 1, 1)
    B = map_primitive_pair(v, w)
    show(f"matrix carrying {v} to {w}:", B.rows)
    print(f"  check: B v = {B.apply(v)}")

    rng = random.Random(7)
    print("\nrandom spot-checks (dimension 2..6):")
    for n in range(2, 7):
        while True:
            cand = tuple(rng.randint(-20, 20) for _ in range(n))
            if any(cand) and is_primitive(cand):
                break
        A = sl_complete(cand)
        ok = A.column(0) == cand
        print(f"  n={n}: first column recovered: {ok}")


if __name__ == "__main__":
    main()
