"""How the debt boundary sets the money temperature.

Three regimes with the same $1000-per-agent monetary base:

  * no debt        -> exponential on [0, inf), T = $1000
  * debt to -$800  -> shifted exponential on [-800, inf), T = $1800
  * reserve ratio  -> two one-sided exponentials; lending multiplies the
    money supply by 1/R, and per-capita positive/negative holdings
    approach T+ = M_b/(R N) and T- = M_b(1-R)/(R N) at loan saturation.
"""

import moneykinetics as mk
from moneykinetics.stats import side_aggregates

N = 500
START = mk.from_dollars(1000)


def show(label, boundary, rule, transactions):
    config = mk.ScenarioConfig(N, START, rule, boundary, transactions,
                               transactions // 10, seed=3)
    trace = mk.run(config)
    theory = mk.theoretical_temperatures(boundary, config.monetary_base(), N)
    final = trace.final()
    print(f"\n{label}")
    if theory.t is not None:
        print(f"  theory T  = ${theory.t / 100:9.2f}   "
              f"fitted T = ${final.fit.temperature / 100:9.2f}")
    else:
        plus, minus = side_aggregates(trace.ledger.balances)
        print(f"  theory T+ = ${theory.t_plus / 100:9.2f}   "
              f"measured = ${plus / 100:9.2f}")
        print(f"  theory T- = ${theory.t_minus / 100:9.2f}   "
              f"measured = ${minus / 100:9.2f}")
        print(f"  loan book ${trace.bank.total_loans / 100:,.2f} of cap "
              f"${trace.bank.debt_cap() / 100:,.2f}")
    print(f"  range [${final.min / 100:,.2f}, ${final.max / 100:,.2f}], "
          f"net total ${final.total / 100:,.2f}")


show("no debt, $1 transfers", mk.NoDebt(), mk.FixedAmount(100), 2_000_000_000)
show("debt limit -$800, $1 transfers", mk.DebtLimit(mk.from_dollars(800)),
     mk.FixedAmount(100), 2_000_000_000)
show("reserve ratio R=0.8, $10 transfers", mk.ReserveRatio(0.8),
     mk.FixedAmount(1000), 50_000_000)
