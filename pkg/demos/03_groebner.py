"""Ideals: Groebner bases, dimensions, Milnor numbers and Hessian rank."""

from logsymp import MonomialOrder, VariableContext, groebner, krull_dimension, milnor_number, quotient_dimension
from logsymp.ideals import Budget, hessian, rank_leq_mod_ideal, use_budget
from logsymp.errors import BudgetExceeded

XY = VariableContext(("x", "y"))
G = groebner([XY.poly("x^2 - y"), XY.poly("y^2 - x")], MonomialOrder("lex"))
print("lex basis      :", [str(g) for g in G])
print("quotient dim   :", quotient_dimension(G))

# Milnor numbers of the three simple elliptic singularities.
XYZ = VariableContext(("x", "y", "z"))
for src in ("x^3+y^3+z^3+x*y*z", "x^4+y^4+z^2+x*y*z", "x^6+y^3+z^2+x*y*z"):
    print(f"mu({src}) = {milnor_number(XYZ.poly(src))}")
print("mu(x*y)        :", milnor_number(XYZ.poly("x*y")))

# The cone over an elliptic curve is not smooth along its singular line.
W = VariableContext(("w", "x", "y", "z"))
print("krull dim      :", krull_dimension(groebner([W.poly("x"), W.poly("y"), W.poly("z")])))

# Rank of the Hessian of x^6 + y^3 + z^2 along the z-axis is one.
H = hessian(XYZ.poly("x^6 + y^3 + z^2"))
print("rank <= 1 mod (x, y):", rank_leq_mod_ideal(H, [XYZ.poly("x"), XYZ.poly("y")], 1))

# Long computations can be capped.
try:
    with use_budget(Budget(max_basis=2, max_degree=64)):
        groebner([XYZ.poly(s) for s in ("x+y+z", "x*y+y*z+z*x", "x*y*z-1")])
except BudgetExceeded as exc:
    print("budget         :", exc)
