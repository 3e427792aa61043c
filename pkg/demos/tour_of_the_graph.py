"""A first walk through the run-constrained string graphs.

Vertices of R_n are binary strings of length n whose full form (the
string with two zeros appended) obeys the run condition: every maximal
run of r ones is followed by at least r+1 zeros.  Edges join strings at
Hamming distance one.  The vertex counts are Fibonacci numbers.
"""

from runcube import graph, strings

print("The five smallest graphs:")
for n in range(1, 6):
    g = graph.build(n)
    print(
        "  R_%d: %d vertices (f_%d), %d edges"
        % (n, g.vertex_count, n + 2, g.edge_count)
    )

print()
print("Every vertex of R_4, with its flip degrees (up, down):")
g = graph.build(4)
for i in range(g.vertex_count):
    label = g.label_string(i)
    up, down = strings.flip_degrees(label + "00")
    print("  %s  neighbors=%d  up=%d down=%d" % (label, g.degree(i), up, down))

print()
print("Degree census of R_10, streamed without materializing edges:")
census = graph.degree_census(10)
for (up, down), count in census.sorted_items():
    print("  up %d down %d: %d vertices" % (up, down, count))
print("  totals: %d vertices, %d edges" % (census.vertex_total(), census.edge_total()))

print()
print("Edge counts match the closed formula (3n+4) f_(n-6) + (5n+6) f_(n-5):")
for n in range(5, 13):
    brute = graph.edge_count(n)
    closed = graph.closed_form_edge_count(n)
    print("  n=%2d: census %4d, formula %4d" % (n, brute, closed))

print()
print("Metric facts come from plain BFS:")
g = graph.build(8)
print("  diameter of R_8: %d" % graph.diameter(g))
print("  radius of R_8: %d" % graph.radius(g))

print()
print("Maximal vertices (no 0 can be flipped to 1) of R_5:")
for label in graph.maximal_vertices(5):
    print("  %s" % label)
