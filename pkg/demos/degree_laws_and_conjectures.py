"""Degree-k vertex counts: eventual laws, a long recurrence, and a probe.

The number of degree-k vertices of R_n settles into a simple rule once n
clears a threshold depending on k: constant for k = 2, parity-dependent
constants for k = 3, and parity-dependent linear functions for k = 4, 5.
Behind all of them sits an order-11 recurrence for the degree
polynomials, and a conjecture that every degree-k series is rational
with denominator (1 - t^2)^(k+1) times the usual Fibonacci kernel.
"""

from runcube import enumerators as en

ORDER = 40

print("Degree-k vertex counts, k = 2..5, n = 2..24:")
for k in (2, 3, 4, 5):
    seq = en.degree_k_series(k, 24)
    print("  k=%d: %s" % (k, seq[2:]))

print()
print("The settled laws, checked through n = %d:" % ORDER)
rep = en.degree_k_law_check(order=ORDER)
for line in rep.lines():
    print("  %s" % line)

print()
print("The degree polynomials satisfy one recurrence of order 11 whose")
print("coefficients are polynomials in x, valid from n = 12 on:")
rep = en.recurrence_check(n_max=ORDER)
print("  holds for 12 <= n <= %d: %s" % (ORDER, rep.ok))

print()
print("Rationality probe: if the conjecture is right, multiplying the")
print("degree-k column by (1 - t^2)^(k+1) leaves a polynomial p_k of")
print("bounded degree.  Observed at order %d:" % ORDER)
for k in range(1, 5):
    probe = en.conjecture_pk_probe(k, order=ORDER)
    tail = max(i for i, c in enumerate(probe.coefficients) if c != 0)
    print(
        "  k=%d: tail vanishes %s, degree %d (conjectured bound %d)"
        % (k, probe.residual_zero, probe.observed_degree, probe.conjectured_bound)
    )
    print("       p_%d = %s" % (k, probe.coefficients[: tail + 1]))
