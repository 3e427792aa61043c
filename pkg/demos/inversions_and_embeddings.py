"""Inversion enumerators and the hypercube-to-run-string encoding.

The first half tracks Q_n(x, q), which weights every run-constrained
string of length n by x^(ones) q^(inversions), where an inversion is a
0 standing anywhere left of a 1.  The second half encodes arbitrary
binary words as run-constrained strings and measures what that does to
hypercube edges.
"""

from runcube import embedding, graph, inversions, strings

print("Inversion enumerators Q_n(x, q):")
for n in range(3, 8):
    print("  Q_%d = %s" % (n, inversions.q_polynomial(n).render()))

print()
print("A three-term sanity check on Q_4 = 1 + x + xq:")
for word in strings.enumerate_rc(4):
    print(
        "  %s: weight %d, inversions %d"
        % (word, word.count("1"), strings.inversions(word))
    )

print()
print("The recurrence peels off the first letter, shifting q-weights:")
rep = inversions.recurrence_check(n_max=14)
print("  Q_n = sum_k x^k Q_(n-1-2k)(x q^(k+1)) holds: %s" % rep.ok)

print()
print("At q = 1 only weights remain, and the shifted tables become the")
print("rank polynomials of the graphs (Q_(n+2) vs R_n):")
collapsed = inversions.q_polynomial(9).evaluate_at("q", 1)
print("  Q_9 at q=1: %s" % collapsed.render())

print()
print("Encoding binary words: write the runs, replace a run of r ones by")
print("the letter 1^r 0^(r+1), keep a protective 0 for a leading zero run,")
print("then right-pad with zeros to length 3n+1.")
for word in ("000", "010", "101", "111"):
    res = embedding.encode(word)
    print("  %s -> %s (vertex %s of R_%d)" % (word, res.image, res.label, res.host_dim))

print()
print("All 2^n encodings are distinct vertices of R_(3n-1), so the map")
print("embeds the hypercube Q_n as a set.  Edges stretch, though:")
for n in range(1, 5):
    res = embedding.dilation(n)
    print(
        "  n=%d: dilation %d, witnessed by hypercube edge %s - %s"
        % (n, res.dilation, res.worst_edge[0], res.worst_edge[1])
    )

print()
print("How small a host can contain an induced k-cube?  Scan the cube")
print("generating function column by column:")
for record in embedding.smallest_host_probe(8):
    print(
        "  Q_%d first appears in R_%d (conjectured ceil((5n-4)/2) = %d)"
        % (record.n, record.smallest_host, record.conjectured)
    )

print()
print("Brute-force confirmation for the small cases, counting interval")
print("cubes directly:")
for m in (1, 3, 6, 8):
    print("  R_%d: h(x) coefficients %s" % (m, graph.count_induced_cubes(m)))
