"""Country-level energy consumption through the same inequality lens.

A population-weighted Lorenz curve and Gini coefficient summarize how
unevenly per-capita energy use is distributed across countries, and
the sup-norm distance to an exponential law with the same mean tests
whether consumption follows the exponential shape that random-exchange
dynamics predict.
"""

import numpy as np

import moneykinetics as mk

# a synthetic world whose per-capita consumption is exactly exponential
n = 120
u = (np.arange(n) + 0.5) / n
synthetic = [mk.EnergyRecord(2005, f"country-{i:03d}", 1_000_000,
                             float(-2.2 * np.log1p(-u[i]))) for i in range(n)]

print("synthetic exponential world (mean 2.2 kW):")
print(f"  world average      : {mk.world_average(synthetic):.3f} kW per capita")
print(f"  weighted Gini      : {mk.weighted_gini(synthetic):.4f} "
      "(exponential law predicts 0.5)")
print(f"  distance from exp  : {mk.exponential_distance(synthetic):.4f}")

# a lopsided two-bloc world for contrast
blocs = [mk.EnergyRecord(2005, "low-income bloc", 1_100_000_000, 0.6),
         mk.EnergyRecord(2005, "high-income bloc", 300_000_000, 10.0)]
print("\ntwo-bloc world (0.6 kW vs 10 kW):")
print(f"  world average      : {mk.world_average(blocs):.3f} kW per capita")
print(f"  weighted Gini      : {mk.weighted_gini(blocs):.4f}")
print(f"  distance from exp  : {mk.exponential_distance(blocs):.4f}")

curve = mk.weighted_lorenz(blocs)
print("\n  Lorenz curve:")
for x, y in zip(curve.x, curve.y):
    print(f"    poorest {x:5.1%} of people use {y:5.1%} of the energy")
