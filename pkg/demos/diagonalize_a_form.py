"""
Exact congruence diagonalization
================================

Any symmetric matrix B over Q can be written A B A^T = diag(D) with A
invertible, all in exact rational arithmetic. The diagonal entries are
only determined up to squares, but their square classes and the
invariants built from them are honest invariants of the form.
"""

from hassewitt import (
    DiagonalForm,
    Place,
    REAL_PLACE,
    SymmetricForm,
    diagonalize,
    discriminant,
    hasse_invariant,
)

# the hyperbolic plane: no diagonal entry to pivot on, so the algorithm
# first adds one row into another to create a nonzero diagonal entry
b = SymmetricForm.from_rows([[0, 1], [1, 0]])
a, d = diagonalize(b)
print("gram:     ", b.gram)
print("transform:", a)
print("diagonal: ", d)

# multiply it back out to see the identity on the nose
n = b.size
product = [
    [
        sum(a[i][k] * b.gram[k][l] * a[j][l] for k in range(n) for l in range(n))
        for j in range(n)
    ]
    for i in range(n)
]
print("A B A^T = ", product)

# a denser example
b = SymmetricForm.from_rows([["1/2", 1, 0], [1, 0, "2/3"], [0, "2/3", -1]])
a, d = diagonalize(b)
print("\n3x3 gram diagonalizes to", d)

# invariants read off the diagonal form
print("discriminant class:", discriminant(d))
for v in (REAL_PLACE, Place.finite(2), Place.finite(3)):
    print(f"hasse invariant at {v}: {hasse_invariant(d, v):+d}")

# the same form scaled by squares has the same invariants
scaled = DiagonalForm.of(*(e * 9 for e in d.entries))
assert discriminant(scaled) == discriminant(d)
assert all(
    hasse_invariant(scaled, v) == hasse_invariant(d, v)
    for v in (REAL_PLACE, Place.finite(2), Place.finite(3))
)
print("square scaling changes nothing, as it must")
