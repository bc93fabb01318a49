"""Scenario configuration and the simulation loop.

A run is a pure function of (config, seed): the transaction stream is
driven by a single splitmix64 generator, periodic interest and
bankruptcy events fire on sweep boundaries (one sweep = N
transactions), and a distribution summary is recorded every
snapshot_every transactions.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import _kernel
from .banking import (BankState, BankruptcySpec, BoundaryPolicy, DebtLimit,
                      InterestSpec, LedgerEvent, MutualCredit, NoDebt,
                      ReserveRatio, accrue_interest, balance_floor, is_reserve,
                      theoretical_temperatures, trigger_bankruptcy)
from .errors import OverflowAbort, ScenarioError
from .exchange import (AgentLedger, ExchangeRule, FixedAmount, Proportional,
                       SavingPropensity, UniformRandom, apply_transfer,
                       draw_pair, init_population, propose_amount)
from .rng import ALGORITHM, SplitMix64
from .stats import DistributionSummary, summarize

_BALANCE_LIMIT = 2 ** 62


@dataclass(frozen=True)
class ScenarioConfig:
    n_agents: int
    initial_balance: int
    rule: ExchangeRule
    boundary: BoundaryPolicy
    n_transactions: int
    snapshot_every: int
    seed: int
    interest: InterestSpec | None = None
    bankruptcy: BankruptcySpec | None = None
    bin_width: int | None = None

    def validate(self) -> None:
        if self.n_agents < 2:
            raise ScenarioError(f"need at least 2 agents, got {self.n_agents}")
        if self.initial_balance < 0:
            raise ScenarioError("initial_balance must be >= 0")
        if self.n_transactions < 1:
            raise ScenarioError("transactions must be >= 1")
        if self.snapshot_every < 1:
            raise ScenarioError("snapshot_every must be >= 1")
        if self.n_transactions // self.snapshot_every < 2:
            raise ScenarioError("snapshot_every must yield at least 2 snapshots")
        if self.bin_width is not None and self.bin_width < 1:
            raise ScenarioError("bin_width must be >= 1")

    def monetary_base(self) -> int:
        return self.n_agents * self.initial_balance

    def effective_bin_width(self) -> int:
        """Default: a twentieth of the expected temperature, falling
        back to a multiple of the transfer scale for zero-base runs."""
        if self.bin_width is not None:
            return self.bin_width
        temps = theoretical_temperatures(self.boundary, self.monetary_base(), self.n_agents)
        expected = temps.t if temps.t is not None else temps.t_plus
        if expected is not None and expected > 0:
            return max(int(round(expected / 20)), 1)
        if isinstance(self.rule, FixedAmount):
            scale = self.rule.delta
        elif isinstance(self.rule, UniformRandom):
            scale = self.rule.max_delta // 2
        else:
            scale = self.initial_balance // 20
        return max(10 * scale, 1)

    def fit_floor(self) -> int | None:
        """Support floor for one-sided exponential fits; None where the
        regime is two-sided or non-stationary."""
        if isinstance(self.boundary, (NoDebt, DebtLimit)):
            return balance_floor(self.boundary)
        return None


@dataclass(frozen=True)
class Snapshot:
    transactions: int
    summary: DistributionSummary
    loans: int = 0
    equity: int = 0


@dataclass
class SimulationTrace:
    config: ScenarioConfig
    snapshots: list[Snapshot]
    ledger: AgentLedger
    bank: BankState
    events: list[tuple[int, LedgerEvent]]
    applied: int
    blocked: dict[str, int]
    rng_algorithm: str = ALGORITHM
    elapsed_seconds: float = 0.0

    def histograms(self):
        return [s.summary.histogram for s in self.snapshots]

    def final(self) -> DistributionSummary:
        return self.snapshots[-1].summary


def _rule_encoding(rule: ExchangeRule) -> tuple[int, int, float]:
    if isinstance(rule, FixedAmount):
        return _kernel.RULE_FIXED, rule.delta, 0.0
    if isinstance(rule, UniformRandom):
        return _kernel.RULE_UNIFORM, rule.max_delta, 0.0
    if isinstance(rule, Proportional):
        return _kernel.RULE_PROPORTIONAL, 0, rule.gamma
    if isinstance(rule, SavingPropensity):
        if rule.per_agent:
            return _kernel.RULE_SAVING_PER_AGENT, 0, 0.0
        return _kernel.RULE_SAVING_GLOBAL, 0, float(rule.lam)
    raise ScenarioError(f"unknown exchange rule {rule!r}")


def _floor_reason(boundary: BoundaryPolicy) -> str:
    return "insufficient-funds" if isinstance(boundary, NoDebt) else "debt-cap"


def _python_chunk(ledger, bank, rng, config, steps, blocked):
    """Reference executor: the public single-transaction operations,
    driven by the same RNG stream as the compiled kernel."""
    applied = 0
    for _ in range(steps):
        payer, payee = draw_pair(rng, ledger.n_agents)
        lam = None
        if isinstance(config.rule, SavingPropensity) and config.rule.per_agent:
            lam = float(ledger.lambdas[payer])
        delta = propose_amount(config.rule, int(ledger.balances[payer]),
                               int(ledger.balances[payee]), rng, lam=lam)
        outcome = apply_transfer(ledger, bank, payer, payee, delta, config.boundary)
        if outcome.applied:
            applied += 1
        else:
            blocked[outcome.block_reason] = blocked.get(outcome.block_reason, 0) + 1
    return applied


def _kernel_chunk(ledger, bank, rng, config, steps, blocked, enc, lambdas):
    rule_code, p_int, p_float = enc
    reserve = is_reserve(config.boundary)
    floor = balance_floor(config.boundary)
    state, loans, applied, b_floor, b_cap = _kernel.run_chunk(
        ledger.balances, steps, np.uint64(rng.state),
        rule_code, np.int64(p_int), np.float64(p_float), lambdas,
        np.int64(_kernel.NO_FLOOR if floor is None or reserve else floor),
        reserve, np.int64(bank.debt_cap() if reserve else 0),
        np.int64(bank.total_loans),
    )
    rng.state = int(state)
    bank.total_loans = int(loans)
    if b_floor:
        reason = _floor_reason(config.boundary)
        blocked[reason] = blocked.get(reason, 0) + int(b_floor)
    if b_cap:
        blocked["bank-cap"] = blocked.get("bank-cap", 0) + int(b_cap)
    return int(applied)


def run(config: ScenarioConfig, executor: str = "kernel") -> SimulationTrace:
    """Run a full scenario and return its trace.

    executor="python" routes every transaction through the public
    single-step operations instead of the compiled kernel; both paths
    consume the identical RNG stream and produce identical traces.
    """
    config.validate()
    started = time.perf_counter()

    ledger = init_population(config.n_agents, config.initial_balance)
    bank = BankState(
        monetary_base=config.monetary_base(),
        reserve_ratio=config.boundary.ratio if is_reserve(config.boundary) else None,
    )
    rng = SplitMix64(config.seed)

    lambdas = np.empty(0, dtype=np.float64)
    if isinstance(config.rule, SavingPropensity) and config.rule.per_agent:
        lambdas = np.array([rng.uniform() for _ in range(config.n_agents)])
        ledger.lambdas = lambdas

    n = config.n_agents
    bin_width = config.effective_bin_width()
    fit_floor = config.fit_floor()
    interest_period = config.interest.cadence_sweeps * n if config.interest else None
    bankruptcy_period = config.bankruptcy.cadence_sweeps * n if config.bankruptcy else None

    enc = _rule_encoding(config.rule)
    snapshots = [Snapshot(0, summarize(ledger.balances, bin_width, fit_floor),
                          bank.total_loans, bank.equity)]
    events: list[tuple[int, LedgerEvent]] = []
    blocked: dict[str, int] = {}
    applied = 0

    def next_multiple(t: int, period: int) -> int:
        return (t // period + 1) * period

    t = 0
    while t < config.n_transactions:
        horizon = config.n_transactions
        horizon = min(horizon, next_multiple(t, config.snapshot_every))
        if interest_period:
            horizon = min(horizon, next_multiple(t, interest_period))
        if bankruptcy_period:
            horizon = min(horizon, next_multiple(t, bankruptcy_period))
        steps = horizon - t

        if executor == "kernel":
            applied += _kernel_chunk(ledger, bank, rng, config, steps, blocked, enc, lambdas)
        elif executor == "python":
            applied += _python_chunk(ledger, bank, rng, config, steps, blocked)
        else:
            raise ScenarioError(f"unknown executor {executor!r}")
        t = horizon

        if int(np.abs(ledger.balances).max()) > _BALANCE_LIMIT:
            raise OverflowAbort(f"balance magnitude exceeded 2^62 at transaction {t}")

        if interest_period and t % interest_period == 0:
            for ev in accrue_interest(ledger, bank, config.interest):
                events.append((t, ev))
        if bankruptcy_period and t % bankruptcy_period == 0:
            for ev in trigger_bankruptcy(ledger, bank, config.bankruptcy):
                events.append((t, ev))
        if t % config.snapshot_every == 0 or t == config.n_transactions:
            snapshots.append(Snapshot(t, summarize(ledger.balances, bin_width, fit_floor),
                                      bank.total_loans, bank.equity))

    return SimulationTrace(
        config=config, snapshots=snapshots, ledger=ledger, bank=bank,
        events=events, applied=applied, blocked=blocked,
        elapsed_seconds=time.perf_counter() - started,
    )
