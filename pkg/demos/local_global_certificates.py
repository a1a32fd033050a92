"""
Local verdicts, global certificates
===================================

Whether sum a_i x_i^2 = 1 has a rational solution reduces to finitely
many completions: the reals, 2, and the odd primes ramified in the
coefficients. The certificate records which places were checked, where
the first failure happened, and (when everything passes) a witness
point if one exists below the search height.
"""

import json

from hassewitt import DiagonalForm, relevant_places, solvable_over_Q, search_point

for entries in [(5, 5), (-1, 3), (3, 3), (-1, -1), (2, 3, 5, 7), ("2/3", 5)]:
    form = DiagonalForm.of(*entries)
    cert = solvable_over_Q(form)
    places = [str(v) for v in relevant_places(form)]
    print(f"form {form}")
    print(f"  places to check: {places}")
    print(f"  certificate: {json.dumps(cert.to_json())}")

# a witness can exist and still sit above the search height: the verdict
# does not move, only the attached point does
form = DiagonalForm.of(13, 13)
low = solvable_over_Q(form, search_height=5)
high = solvable_over_Q(form, search_height=13)
print(f"\nform {form}")
print(f"  height  5: solvable={low.verdict}, witness={low.witness}")
print(f"  height 13: solvable={high.verdict}, witness={high.witness}")
x, y = high.witness
assert 13 * x * x + 13 * y * y == 1

# the point search on its own, smallest denominator first
print("\nsmallest points:")
for entries, height in [((1, 1), 3), ((5, 5), 5), ((2, 3, 5, 7), 20)]:
    pt = search_point(DiagonalForm.of(*entries), height)
    print(f"  {DiagonalForm.of(*entries)} at height {height}: {pt}")
