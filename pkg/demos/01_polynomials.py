"""Exact polynomials: parsing, rendering, weights and exact division."""

from logsymp import VariableContext, exact_divide, partial_derivative, quasi_degree
from logsymp.errors import NotDivisible, PolySyntaxError

ctx = VariableContext(("x", "y", "z"), ("tau",))
f = ctx.poly("x^3 + y^3 + z^3 + tau*x*y*z")
print("f        =", f)
print("df/dx    =", partial_derivative(f, "x"))

# The cubic is quasi-homogeneous of degree 3 for equal weights; the E8 table
# polynomial needs weights (1, 2, 3).
print("deg f    =", quasi_degree(ctx.with_weights((1, 1, 1)).poly("x^3 + y^3 + z^3 + tau*x*y*z")))
w = VariableContext(("x", "y", "z")).with_weights((1, 2, 3))
print("deg E8   =", quasi_degree(w.poly("x^6 + y^3 + z^2 + x*y*z")))

# Coefficients are rationals, never floats.
g = ctx.poly("(x - 1/2)*(x + 2/3)")
print("g        =", g)
print("g/(x+2/3)=", exact_divide(g, ctx.poly("x + 2/3")))
try:
    exact_divide(g, ctx.poly("x"))
except NotDivisible as exc:
    print("x does not divide g:", exc)

# Syntax errors carry a character position.
try:
    ctx.poly("2x + y")
except PolySyntaxError as exc:
    print("parse error:", exc)
