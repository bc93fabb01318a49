"""Interest widens the distribution; bankruptcy erases deep debt.

Deposit interest compounds positive balances while loan interest sinks
debtors, so inequality grows faster than with transfers alone.  A
periodic bankruptcy pass resets anyone below the threshold to zero,
with the bank's equity absorbing the write-off, so that
(agent balances + bank equity) stays constant to the cent.
"""

import moneykinetics as mk

base = dict(
    n_agents=500,
    initial_balance=mk.from_dollars(500),
    rule=mk.UniformRandom(mk.from_dollars(100)),
    boundary=mk.DebtLimit(mk.from_dollars(1000)),
    n_transactions=5_000_000,
    snapshot_every=500_000,
    seed=4,
)

plain = mk.run(mk.ScenarioConfig(**base))
compounding = mk.run(mk.ScenarioConfig(
    **base,
    interest=mk.InterestSpec(deposit_rate=0.01, loan_rate=0.02, cadence_sweeps=100),
    bankruptcy=mk.BankruptcySpec(threshold=mk.from_dollars(900), cadence_sweeps=500),
))

print(f"{'':<22}{'plain':>14}{'with events':>14}")
print(f"{'final std $':<22}{plain.final().variance ** 0.5 / 100:>14.2f}"
      f"{compounding.final().variance ** 0.5 / 100:>14.2f}")
print(f"{'final Gini':<22}{mk.gini(plain.ledger.balances - plain.final().min):>14.3f}"
      f"{mk.gini(compounding.ledger.balances - compounding.final().min):>14.3f}")

kinds = {}
for _, event in compounding.events:
    kinds[event.kind] = kinds.get(event.kind, 0) + 1
print(f"\nevents fired: {kinds}")
print(f"bank equity: ${compounding.bank.equity / 100:,.2f}")
conserved = compounding.final().total + compounding.bank.equity
print(f"balances + equity = ${conserved / 100:,.2f} "
      f"(injected ${compounding.ledger.total_injected / 100:,.2f})")
