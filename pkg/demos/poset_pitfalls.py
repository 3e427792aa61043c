"""The graded poset on R_n, and two published claims that do not survive.

Order the vertices by u <= v when v is reachable from u by flipping 0s
to 1s one at a time, staying inside the graph at every step.  Rank is
Hamming weight.  The rank generating polynomials and maximal-element
counts check out perfectly.  The claim that every interval [u, v] is a
Boolean lattice does not, and the closed-form Mobius function
(-1)^(wt(v) - wt(u)) falls with it.  This script shows the smallest
counterexample rather than sweeping it under the rug.
"""

from runcube import poset, strings

print("Rank polynomials F(R_n, x) = sum_k C(n-k+1, k) x^k:")
for n in range(1, 8):
    print("  n=%d: %s" % (n, poset.rank_polynomial(n).render()))

print()
print("At x = 1 these are the Fibonacci vertex counts:")
print("  %s" % [poset.rank_polynomial(n).evaluate({"x": 1}) for n in range(1, 11)])

print()
print("Some intervals really are cubes.  In R_6:")
box = poset.interval(6, "000000", "110001")
print("  [000000, 110001] = %s" % box)
print("  size %d = 2^3, Mobius closed form %d, recursive %d" % (
    len(box),
    poset.mobius(6, "000000", "110001"),
    poset.mobius_recursive(6, "000000", "110001"),
))

print()
print("But not all.  The smallest failure lives in R_5:")
box = poset.interval(5, "00100", "11100")
print("  [00100, 11100] = %s" % box)
print("  rank difference 2 wants 4 elements, there are %d" % len(box))
print("  10100 sits between the endpoints as a bitmask, yet it is not a")
print("  vertex: the full string 1010000 breaks the run condition at")
print("  position %d" % strings.first_violation("1010000"))
print("  Mobius: closed form %d, recursive %d" % (
    poset.mobius(5, "00100", "11100"),
    poset.mobius_recursive(5, "00100", "11100"),
))

print()
print("Survey of every comparable pair, small n:")
for n in range(1, 9):
    survey = poset.verify_boolean_intervals(n)
    print(
        "  R_%d: %3d pairs, %2d non-Boolean intervals"
        % (n, survey["pairs_checked"], len(survey["violations"]))
    )

print()
print("Maximal elements are immune to all this and match their own")
print("generating function:")
rep = poset.maximal_gf_check(order=20, brute_max=12)
for line in rep.lines():
    print("  %s" % line)
