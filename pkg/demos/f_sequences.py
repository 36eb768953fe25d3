"""f-sequences: chains of ideals {J_e} with f^{-1}(J_{e+1}) = J_e.

Three families over F_2[x,y]: the bracket powers of (x,y), the mixed chain
(x, y^q), and the constant chain at a prime.  The defining property is
checked pair by pair, the union of associated primes is collected with
first-seen levels, and iterating preimages on J_0 recovers the common
radical of the whole chain.

Run:  python3 demos/f_sequences.py
"""

from charp import (FSequence, Ideal, fseq_radical_stabilize, fseq_verify,
                   parse_ring, union_ass_fseq)

R = parse_ring("F_2[x,y]")

families = {
    "bracket powers (x,y)^[q]": FSequence.bracket_chain(Ideal(R, ["x", "y"]), 5),
    "mixed chain (x, y^q)": FSequence.explicit(
        R, [Ideal(R, ["x", f"y^{2 ** e}"]) for e in range(6)]),
    "constant prime (x)": FSequence.constant_chain(Ideal(R, ["x"]), 5),
}

for name, seq in families.items():
    print(f"\n--- {name} ---")
    print("prefix:", "  ,  ".join(t.basis_str() for t in seq.terms[:4]), ", ...")
    ok, idx = fseq_verify(seq)
    print(f"defining property f^-1(J_(e+1)) = J_e: "
          f"{'holds' if ok else f'fails at {idx}'}")
    rad = fseq_radical_stabilize(seq)
    print(f"stable radical: {rad.basis_str()}")
    recs = union_ass_fseq(seq)
    base = [r for r in recs if r.side == "R"]
    print("union of Ass along the chain:",
          ", ".join(f"({', '.join(r.variables)}) from level {r.first_seen}"
                    for r in base))

print("\nA broken chain is caught immediately:")
bad = FSequence.explicit(R, [Ideal(R, ["x"]), Ideal(R, ["x^3"])])
ok, idx = fseq_verify(bad)
print(f"  [(x), (x^3)] verifies: {ok} (first failure at index {idx}; "
      f"the preimage of (x^3) is (x^2), not (x))")
