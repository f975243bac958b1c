"""Exact counts against their leading asymptotic terms.

The ratios creep toward 1 slowly, since the first correction is of relative
size n^{-1/2}.
"""
import math

from hookbias.asymptotics import exact_count, ratio_report, xi_bound

for t in (2, 3):
    for n in (500, 1000, 2000, 4000):
        r = ratio_report("a", t, n)
        print(f"a*_{t}({n}) / main term = {r.ratio:.5f}")

ratio = exact_count("a", 2, 4000) / exact_count("b", 2, 4000)
print(f"\na*_2(4000) / b*_2(4000) = {ratio:.5f}; limit 1/log 2 = {1 / math.log(2):.5f}")

# the product (-q; q^2)_inf near q = 1 against its modular main term
print("\n z     printed main term   exp(pi^2/(24z) - z/24)   (error in units of e^{-pi^2/z})")
for z in (1.0, 0.5, 0.2):
    print(f"{z:4}  {xi_bound(z).ratio:18.4g}  {xi_bound(z, psi='corrected').ratio:22.6f}")
