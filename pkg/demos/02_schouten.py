"""Polyvector calculus: wedge, Schouten bracket, Pfaffian, contraction."""

from logsymp import VariableContext, contract_exact, pfaffian, schouten, wedge
from logsymp.poisson import from_brackets, jacobi_obstruction

ctx = VariableContext(("x", "y", "z"))

# A bivector is given by its brackets on coordinates.  [pi, pi] vanishes
# exactly when the bracket satisfies the Jacobi identity.
linear = from_brackets({"x,z": "y", "y,z": "x"}, ctx)
print("pi          =", linear.bivector)
print("[pi, pi]    =", jacobi_obstruction(linear))

bad = from_brackets({"x,y": "1", "y,z": "y"}, ctx)
print("pi'         =", bad.bivector)
print("[pi', pi']  =", jacobi_obstruction(bad))

# On four variables the Pfaffian is the coefficient of the top power,
# normalised so that d/dw^d/dx + d/dy^d/dz has Pfaffian 1.
W = VariableContext(("w", "x", "y", "z"))
omega = from_brackets({"w,x": "1", "y,z": "1"}, W).bivector
print("Pf(omega)   =", pfaffian(omega))

P = from_brackets(
    {"w,x": "x", "w,y": "y", "w,z": "z", "x,y": "z^2", "y,z": "x^2", "z,x": "y^2"}, W
)
pi = P.bivector
print("Poisson     :", jacobi_obstruction(P).is_zero())
h = pfaffian(pi)
print("Pf(pi)      =", h)

# Contraction identity on a 4-dimensional chart: 2 (i_dh pi) ^ pi = i_dh (pi ^ pi).
lhs = wedge(contract_exact(h, pi), pi) * 2
rhs = contract_exact(h, wedge(pi, pi))
print("identity    :", lhs == rhs)

# Hamiltonian vector fields preserve a Poisson bivector.
X = contract_exact(h, pi)
print("[X_h, pi]   =", schouten(X, pi))
