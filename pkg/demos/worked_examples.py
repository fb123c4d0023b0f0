"""Three small pairs worked by hand and by the engine.

Run with ``python3 demos/worked_examples.py``.
"""

from liesuper import derived_subalgebra, heisenberg_even, heisenberg_odd
from liesuper.freesuper import GradedAlphabet, build_truncated
from liesuper.pairs import multiplier_pair, multiplier_pair_basis, present


def show(L):
    I = derived_subalgebra(L)
    P = present(L)
    k = len(P.F.alphabet)
    letters = "letter" if k == 1 else "letters"
    print(f"{L.name}: dim {L.dim}, class {P.c}, free algebra on {k} {letters} up to degree {P.D}")
    print(f"  M(L, L^2) = {multiplier_pair(L, I)}")
    for r in multiplier_pair_basis(L, I):
        print(f"    represented by {r}")


for L in (heisenberg_even(1, 0), heisenberg_even(0, 1), heisenberg_odd(1)):
    show(L)

# One odd letter generates only y and [y,y], so F is H(0,1) itself and R = 0.
F = build_truncated(GradedAlphabet((), ("y",)), 4)
print("free algebra on one odd letter, dims by degree:", F.degree_dims())
