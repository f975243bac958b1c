"""The bias constants beta*_t and gamma*_t.

beta*_t is defined by a finite sum of integrals. It can also be written
exactly as r + s*log(2) with rational r and s, and s vanishes exactly when
3 divides t.
"""
from hookbias.constants import beta_closed, beta_quadrature, beta_recurrence_check, gamma

print(" t   exact beta*_t                      closed        quadrature    gamma*_t")
for t in (2, 3, 4, 5, 6, 7, 10, 21):
    b = beta_closed(t)
    print(f"{t:2d}  {str(b):34s} {float(b):.10f}  {beta_quadrature(t):.10f}  {gamma(t):.10f}")

# shifting t by 6 changes beta*_t by a short explicit sum
holds = all(beta_recurrence_check(t, form="corrected") for t in range(8, 200))
print("\nstep-6 recurrence (halved, with f3(t-6) removed) holds for t < 200:", holds)
print("as printed:", any(beta_recurrence_check(t) for t in range(8, 200)))
