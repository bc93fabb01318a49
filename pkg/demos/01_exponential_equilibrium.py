"""Random $1 transfers drive equal endowments to an exponential
equilibrium.

Everyone starts with $100; each transaction moves $1 from a random
payer to a random payee unless the payer is broke.  The stationary
distribution is exponential with temperature T = average money per
agent, and we check the fit with a KS distance.
"""

import moneykinetics as mk

config = mk.ScenarioConfig(
    n_agents=500,
    initial_balance=mk.from_dollars(100),
    rule=mk.FixedAmount(mk.from_dollars(1)),
    boundary=mk.NoDebt(),
    n_transactions=50_000_000,
    snapshot_every=5_000_000,
    seed=1,
)

trace = mk.run(config)
final = trace.final()
theory = mk.theoretical_temperatures(config.boundary, config.monetary_base(),
                                     config.n_agents)

print(f"ran {trace.applied:,} applied transactions "
      f"({trace.blocked.get('insufficient-funds', 0):,} blocked) "
      f"in {trace.elapsed_seconds:.1f}s")
print(f"theoretical T : ${theory.t / 100:.2f}")
print(f"fitted T      : ${final.fit.temperature / 100:.2f}")
print(f"KS distance   : {final.ks:.4f}")
print(f"Gini          : {mk.gini(trace.ledger.balances):.4f} "
      "(exponential law predicts 0.5)")

print("\nmoney distribution (one * per 4 agents):")
hist = final.histogram
for i, count in enumerate(hist.counts[:15]):
    lo = (hist.origin + i * hist.bin_width) / 100
    print(f"  ${lo:7.2f}+ | {'*' * (int(count) // 4)}")
