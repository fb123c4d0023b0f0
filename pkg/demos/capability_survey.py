"""Capability of every coordinate ideal of a few Heisenberg superalgebras.

The closed-form verdict sits next to the exterior-center computation; rows
marked ``<-`` are where they part ways.
"""

from liesuper import formulas as fm
from liesuper.families import coordinate_ideals, heisenberg_even, heisenberg_odd
from liesuper.pairs import exterior_center, multiplier_pair


def survey(L, predicate):
    print(L.name)
    for I in coordinate_ideals(L):
        if I.is_zero():
            continue
        Z = exterior_center(L, I)
        brute = Z.is_zero()
        closed = predicate(I.dim)
        flag = "" if brute == closed else "  <-"
        label = ", ".join(repr(e) for e in I.basis())
        print(f"  {label:22} M={multiplier_pair(L, I)!s:7} Z^={Z.dim!s:7} capable={brute!s:5} formula={closed}{flag}")


survey(heisenberg_even(1, 0), lambda d: fm.capable_heis_even_pair(1, 0, d))
survey(heisenberg_even(1, 1), lambda d: fm.capable_heis_even_pair(1, 1, d))
survey(heisenberg_odd(2), lambda d: fm.capable_heis_odd_pair(2, d))
