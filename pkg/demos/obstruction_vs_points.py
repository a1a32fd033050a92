"""
The top obstruction against actual points
=========================================

The cup product [a_1] u ... u [a_n] is an obstruction: when a rational
point exists on sum a_i x_i^2 = 1 the class vanishes. The converse
direction is where it gets interesting. In low degree the class is
complete, from rank 3 on it forgets the finite places and genuinely
misses some unsolvable forms. This script measures that gap on a small
family instead of taking anyone's word for it.
"""

import itertools

from hassewitt import (
    DiagonalForm,
    RATIONALS,
    is_zero,
    search_point,
    solvable_over_Q,
    top_obstruction,
)

# rank 2: the obstruction is exactly the Hilbert symbol, so it decides
f = DiagonalForm.of(3, 3)
print(f"{f}: obstruction zero: {is_zero(top_obstruction(f, RATIONALS))},"
      f" solvable: {solvable_over_Q(f).verdict}")
f = DiagonalForm.of(5, 5)
print(f"{f}: obstruction zero: {is_zero(top_obstruction(f, RATIONALS))},"
      f" solvable: {solvable_over_Q(f).verdict}, point: {search_point(f, 5)}")

# rank 3: <3, 3, -1> is everywhere positive enough for the reals, and the
# degree-3 class only remembers the reals, so the obstruction vanishes;
# the equation still has no rational point because Q_2 says no
f = DiagonalForm.of(3, 3, -1)
cert = solvable_over_Q(f)
print(f"\n{f}: obstruction zero: {is_zero(top_obstruction(f, RATIONALS))},"
      f" solvable: {cert.verdict} (fails at {cert.failing_place})")

# the same census over every form with entries in +-{1, 2, 3, 5}, ranks 1..3
counts = {}
converse_failures = []
for rank in (1, 2, 3):
    for entries in itertools.product((1, -1, 2, -2, 3, -3, 5, -5), repeat=rank):
        form = DiagonalForm.of(*entries)
        zero = is_zero(top_obstruction(form, RATIONALS))
        solvable = solvable_over_Q(form, search_height=1).verdict
        counts[zero, solvable] = counts.get((zero, solvable), 0) + 1
        if zero and not solvable:
            converse_failures.append(form)

print("\ncensus over 584 forms (obstruction zero, solvable):")
for key in [(True, True), (False, False), (True, False), (False, True)]:
    print(f"  {key}: {counts.get(key, 0)}")
print("nonzero obstruction always blocks the point, the other direction leaks:")
for form in converse_failures[:6]:
    print(f"  {form}")
print(f"  ... {len(converse_failures)} forms in all with a vanishing top class and no point")
