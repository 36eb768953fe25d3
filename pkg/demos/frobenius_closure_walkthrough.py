"""The standard non-F-pure family, end to end.

R = F_p[x,y,z]/(x^p - y*z^p) fails the colon criterion for F-purity, and
the ideal (z) is not Frobenius closed: x^p = y*z^p lies in (z)^[p], so x
joins the closure at the first level.  Equivalently x = y^(1/p) * z already
lies in (z) extended to the perfect closure and contracted back.

Run:  python3 demos/frobenius_closure_walkthrough.py
"""

from charp import (Ideal, extended_ideal_membership, fedder_f_pure,
                   frobenius_closure, is_frobenius_closed, parse_ring)

for p in (2, 3, 5):
    ring = parse_ring(f"F_{p}[x,y,z]/(x^{p} - y*z^{p})")
    print(f"\n--- {ring!r} ---")

    rep = fedder_f_pure(ring)
    print(f"colon criterion at q = {rep.q}: "
          f"{'F-pure' if rep.is_f_pure else 'NOT F-pure'}")
    print(f"  (I^[{p}] : I) = {rep.colon.basis_str()} sits inside "
          f"(x^{p}, y^{p}, z^{p})")

    J = Ideal(ring, ["z"])
    res = frobenius_closure(J, e_max=3)
    x = ring.free().poly("x")
    print(f"closure chain of (z): "
          + "  ->  ".join(c.basis_str() for c in res.chain))
    print(f"stabilized at e = {res.stabilized_at}; contains x: "
          f"{res.closure.contains(x)}")
    print(f"(z) Frobenius closed? {is_frobenius_closed(J, 3)}")
    print(f"x in (z)R^inf cap R? {extended_ideal_membership(x, J, 3)}")

print("\nBy contrast, polynomial rings are F-pure and every ideal there is "
      "Frobenius closed:")
free = parse_ring("F_2[x,y]")
print(f"  {free!r} F-pure: {fedder_f_pure(free).is_f_pure}")
I = Ideal(free, ["x^2", "x*y"])
print(f"  closure of {I!r} stabilizes at level "
      f"{frobenius_closure(I, 2).stabilized_at}")
