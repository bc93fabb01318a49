"""Entropy rises monotonically from the equal-endowment start.

The initial state (everyone at $100) occupies a single histogram bin,
so its entropy is zero.  Random transfers spread the distribution and
the entropy climbs toward the value of the binned exponential law.
"""

import math

import moneykinetics as mk

config = mk.ScenarioConfig(
    n_agents=500,
    initial_balance=mk.from_dollars(100),
    rule=mk.FixedAmount(mk.from_dollars(1)),
    boundary=mk.NoDebt(),
    n_transactions=40_000_000,
    snapshot_every=2_000_000,
    seed=1,
    bin_width=mk.from_dollars(20),
)

trace = mk.run(config)

# entropy of the geometrically binned exponential with the same T
q = math.exp(-config.bin_width / trace.final().fit.temperature)
limit = -math.log(1 - q) - q / (1 - q) * math.log(q)

print("transactions   entropy/agent (nats)")
for snap in trace.snapshots:
    bar = "#" * int(40 * snap.summary.entropy_per_agent / limit)
    print(f"{snap.transactions:>12,}   {snap.summary.entropy_per_agent:.4f} {bar}")
print(f"\nbinned exponential limit: {limit:.4f}")
