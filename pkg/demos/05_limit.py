"""Large t: gamma*_t settles at 3 / (2 log(5/2)).

The limit comes from splitting the closed form by residue class mod 3; each
class contributes log(5/2)/3 to the limit of beta*_t.
"""
from hookbias.constants import gamma
from hookbias.limits import G, limit_gamma

for k in range(3):
    print(f"G({k}) = {G(k):.15f}")

print(f"\nlimit = {limit_gamma():.10f}")
for t in (10, 100, 1000, 10_000):
    print(f"gamma*_{t:<6d} = {gamma(t):.10f}   gap {abs(gamma(t) - limit_gamma()):.2e}")
