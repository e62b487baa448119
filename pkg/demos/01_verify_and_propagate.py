#!/usr/bin/env python3
"""Walk through the core frieze mechanics on the period-4 E8 example.

A frieze assigns a positive integer to every vertex of the repetition
quiver so that each value times its right neighbour equals one plus the
product of the values between them.  One column determines everything:
propagation forward and backward is exact integer arithmetic, and a
frieze always returns to its starting column.
"""

from friezes import (
    FriezeSlice,
    DynkinType,
    detect_period,
    e8_example_pattern,
    mesh_product,
    propagate_backward,
    propagate_forward,
    verify_pattern,
)

pattern = e8_example_pattern()
print("the period-4 E8 example, rows in index order:")
for i, row in enumerate(pattern.rows(), start=1):
    print(f"  row {i}: {' '.join(str(v) for v in row)}")

violations = verify_pattern(pattern)
print(f"\nmesh relations checked: {pattern.dynkin.rank * pattern.period}, "
      f"violations: {len(violations)}")

# one relation in the open: the branch vertex 4 between columns 0 and 1
lhs = pattern.columns[0].values[3] * pattern.columns[1].values[3]
rhs = 1 + mesh_product(4, pattern.columns[0], pattern.columns[1])
print(f"vertex 4, columns 0/1:  29 * 41 = {lhs}  vs  1 + 6*11*18 = {rhs}")

# propagation: the whole frieze from one column
seed = pattern.columns[0]
nxt = propagate_forward(seed)
print(f"\nforward from column 0: {seed.values} -> {nxt.values}")
print(f"backward returns:      {propagate_backward(nxt).values}")

q, columns = detect_period(seed, cap=32)
print(f"orbit closes after {q} steps (the nominal period 16 is a multiple)")

# a seed that is NOT a frieze column dies immediately on exact division
from friezes import DeadEndError

try:
    detect_period(FriezeSlice(DynkinType("A", 2), (2, 2)), cap=10)
except DeadEndError as exc:
    print(f"\nA2 seed (2,2): dead end at step {exc.step}, vertex {exc.vertex} "
          "(division is not exact, so no frieze passes through it)")
