"""Agent-based random money-transfer simulations and inequality analytics.

Integer-cent ledgers, pairwise exchange rules, debt boundary policies
with bank bookkeeping, distributional statistics (exponential fits,
entropy, KS, Lorenz/Gini), and country-level energy consumption
analysis.
"""

__version__ = "0.1.0"

from .banking import (BankruptcySpec, BankState, BoundaryPolicy, DebtLimit,
                      InterestSpec, LedgerEvent, MoneyAggregates, MutualCredit,
                      NoDebt, ReserveRatio, TemperatureSet, Unlimited,
                      accrue_interest, check_boundary, money_aggregates,
                      theoretical_temperatures, trigger_bankruptcy)
from .energy import (EnergyRecord, exponential_distance, load_energy_table,
                     weighted_gini, weighted_lorenz, world_average)
from .engine import ScenarioConfig, SimulationTrace, Snapshot, run
from .errors import (DomainError, EmptyDataset, EnergyTableError,
                     InvalidAgent, InvalidPopulation, InvalidRatio,
                     MoneyKineticsError, OverflowAbort, ScenarioError,
                     UndefinedCurve)
from .exchange import (PER_AGENT_UNIFORM, AgentLedger, ExchangeRule,
                       FixedAmount, Proportional, SavingPropensity,
                       TransferOutcome, UniformRandom, apply_transfer,
                       draw_pair, from_dollars, init_population,
                       propose_amount)
from .rng import ALGORITHM, SplitMix64
from .scenario import parse_scenario, parse_scenario_text
from .stats import (DistributionSummary, ExponentialModel, Histogram,
                    LorenzCurve, TwoSidedFit, entropy, exponential_lorenz,
                    fit_exponential, gini, histogram, histogram_ks,
                    ks_distance, lorenz_curve, side_aggregates,
                    stationarity_reached, summarize, two_sided_fit)

__all__ = [name for name in dir() if not name.startswith("_")]
