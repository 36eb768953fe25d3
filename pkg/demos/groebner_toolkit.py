"""Tour of the base toolkit: parsing, bases, normal forms, colon ideals,
elimination, and radical membership over small prime fields.

Run:  python3 demos/groebner_toolkit.py
"""

from charp import (Ideal, Lex, colon_ideal, eliminate, groebner_basis,
                   parse_ring, radical_membership)

R = parse_ring("F_2[x,y]")
print(f"ring: {R!r}")

f = R.poly("(x+y)^2")
print(f"(x+y)^2 expands to {f}  (freshman's dream in characteristic 2)")

I = Ideal(R, ["x^2 + y", "x*y + 1"])
print(f"\nideal {I!r}")
print("grevlex basis:", Ideal(R, I.gens).basis_str())
lex_basis = groebner_basis(I, Lex())
print("lex basis    :", "(" + ", ".join(map(str, lex_basis)) + ")")
print("the lex basis exposes the eliminant y^3 + 1, the resultant of the "
      "two generators with respect to x")

S = parse_ring("F_2[x,y,z]")
planes = Ideal(S, ["x*y", "x*z"])
print(f"\ncolon ({planes!r} : (x)) =", colon_ideal(planes, Ideal(S, ["x"])).basis_str())

E = eliminate(Ideal(S, ["x + y^2", "x*z + y"]), 1)
print("eliminating x from (x + y^2, x*z + y):", E.basis_str())

J = Ideal(R, ["x^2", "y^4"])
print(f"\nx + y in the radical of {J!r}?",
      radical_membership(R.poly("x + y"), J),
      " ((x+y)^4 = x^4 + y^4 lands inside)")

# every search takes a step budget; exceeding it raises instead of hanging
from charp import Budget, BudgetExceeded

try:
    Ideal(S, ["x^2*y + z", "y^2*z + x", "x*z^2 + y"]).groebner_basis(Budget(3))
except BudgetExceeded as exc:
    print(f"\ntiny budgets fail loudly: {exc} (used {exc.used} steps)")
