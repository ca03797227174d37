"""Elliptic log symplectic structures on a 4-dimensional chart."""

from logsymp import E6, E7, E8, classify_singularity, jacobi_obstruction, modular_field, pfaffian
from logsymp import VariableContext, normal_form_structure
from logsymp.poisson import e6tilde_structure, ellipticity_report, log_darboux_structure, toric_structure

# The normal forms are Poisson for every value of lam and tau.
for t in (E6, E7, E8):
    P = normal_form_structure(t, lam=None, tau=None)
    print(f"{t.label}: Jacobi holds identically: {jacobi_obstruction(P).is_zero()}")

# The degeneracy divisor of the normal form is lam*k times the table polynomial,
# and the modular field points along w.
P = normal_form_structure(E7, lam=1, tau=1)
print("Pfaffian     :", pfaffian(P.bivector))
print("modular field:", modular_field(P))
r = ellipticity_report(P, (0, 0, 0, 0))
print("verdict      :", r.verdict.value)

# A one-parameter family with the same shape.
Q = e6tilde_structure(3, 1)
print("e6tilde Pf   :", pfaffian(Q.bivector))

# Log-Darboux has a smooth divisor, so the origin is not a singular point.
L = log_darboux_structure(2)
print("log-Darboux  :", pfaffian(L.bivector), "|", ellipticity_report(L, (0, 0, 0, 0)).verdict.value)

# A toric structure degenerates along coordinate hyperplanes meeting in 2-planes.
T = toric_structure({(0, 1): 1, (0, 2): 2, (0, 3): 3, (1, 2): 5, (1, 3): 7, (2, 3): 11})
rt = ellipticity_report(T, (0, 0, 0, 0))
print("toric        :", rt.verdict.value, "|", "; ".join(rt.reasons))

# Recognising the surface singularity of the divisor.
ctx = VariableContext(("x", "y", "z"))
print(classify_singularity(ctx.poly("x^6 + y^3 + z^2 + x*y*z"), (1, 2, 3)))
