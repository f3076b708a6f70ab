"""Reconstructing the pushforward formulas from special test families.

The pushforward of each tautological class is determined by how it meets
three cheap one-parameter families of pointed stable curves:

* the tails family (genus-0 base with elliptic tails): all three classes
  push to zero there, forcing g-3 linear relations;
* the pencil families (a point moving on a fixed two-component curve):
  one degree equation per splitting type h;
* the bridge family (moving genus-2 curve with a fixed general tail):
  its base has Picard rank 3, so the comparison happens modulo the
  classical genus-2 relation 10*lambda = delta_0 + 2*delta_1.

Stacking all of these gives an exact linear system with a unique
solution -- which must agree, coefficient for coefficient, with the
closed-form pushforwards.  This script spells that out at (g, r, d) =
(10, 4, 12).

Run:  python demos/reconstruction_walkthrough.py
"""

from bnslopes import GrdParams, pullbacks, push_b, reconstruct
from bnslopes.families import bridge_pushforward, pencil_degree

g, r, d = 10, 4, 12
params = GrdParams(g, r, d)
print(f"Triple {params}: rho = {params.rho}, N = {params.N}, xi = {params.xi}")

print()
print("Closed-form pushforward of b:")
dc = push_b(params)
print(f"  {dc}")

print()
print("What the test families see:")
images = pullbacks(g, dc)
print(f"  bridge pullback:   {images.bridge}")
print(f"  known bridge class: {bridge_pushforward('b', params)}")
mu = images.bridge.relation_multiple(bridge_pushforward("b", params))
print(f"  they differ by {mu} x (10λ - δ0 - 2δ1) -- equal in the rank-3 quotient")
print(f"  tails pullback vanishes: {images.tails.is_zero()}")
print("  pencil degrees vs the known values:")
for h in (1, 2, 5, 9):
    print(f"    h={h}: {images.pencil_degrees[h - 1]} "
          f"(known: {pencil_degree('b', params, h)})")

print()
print("Now forget the closed form and solve the linear system:")
for which in "abc":
    got = reconstruct(g, r, d, which)
    from bnslopes.tautpush import push

    match = "matches" if got == push(which, params) else "DIFFERS FROM"
    print(f"  reconstructed pushforward of {which} {match} the closed form "
          f"(lambda-coefficient {got.lam})")
