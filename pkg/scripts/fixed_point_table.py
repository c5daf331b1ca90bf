#!/usr/bin/env python3
"""Reproduce the fixed-point table for symplectic automorphisms of order 2..8.

For each n the count is recovered three independent ways: from the unit
identity, from the closed form 24/n * prod(1 + 1/p)^{-1}, and as stored in
the reference table; the unit identity of the full preset model is evaluated
exactly alongside.
"""

from orbk3.inertia import (
    FIXED_POINT_TABLE,
    fixed_points_closed_form,
    preset_cyclic,
    solve_fixed_points_cyclic,
    validate_identity,
)


def main():
    print(f"{'n':>2}  {'solved':>6}  {'closed':>6}  {'table':>5}  identity")
    for n in range(2, 9):
        solved = solve_fixed_points_cyclic(n)
        closed = fixed_points_closed_form(n)
        table = FIXED_POINT_TABLE[n]
        identity = validate_identity(preset_cyclic(n))
        status = "ok" if solved == closed == table and identity == 1 else "MISMATCH"
        print(f"{n:>2}  {solved:>6}  {closed:>6}  {table:>5}  {identity} ({status})")


if __name__ == "__main__":
    main()
