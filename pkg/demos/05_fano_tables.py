"""Chern classes of two Fano families and the degree constraints they impose."""

from logsymp.chern import Hypersurface, ProductP1, c1c2_minus_c3, pair_with, total_chern
from logsymp.diophantine import enumerate_triples, format_tables, table_for_space

X = Hypersurface(6, 3)
c = total_chern(X)
print("cubic fourfold: c(X) =", c)
print("                c1c2 - c3 =", c1c2_minus_c3(c), "->", pair_with(c1c2_minus_c3(c), "H"))

Y = ProductP1(2)
k = c1c2_minus_c3(total_chern(Y))
print("P1 x quadric:   c1c2 - c3 =", k, "-> A:", pair_with(k, "A"), "B:", pair_with(k, "B"))

# Curves of type E6, E7, E8 contribute 8, 9, 10 to that degree.
print("8a6 + 9a7 + 10a8 = 48:", [s.values for s in enumerate_triples(48)])

for family, degrees in (("hypersurface", (1, 2, 3)), ("product", (1, 2, 3, 4))):
    reports = [table_for_space(family, d) for d in degrees]
    print()
    # rows that differ from the reference tables are explained in notes
    print(format_tables(reports))
