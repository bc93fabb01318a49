"""Pairwise money transfers between agents.

All balances are signed 64-bit integers in minor units (cents), so
conservation can be asserted to the last cent.  A transaction is:
pick an ordered pair, propose a non-negative amount under the active
exchange rule, then apply it if the boundary policy permits.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidAgent, InvalidPopulation
from .rng import SplitMix64

CENTS = 100


def from_dollars(amount: float) -> int:
    """Convert a dollar amount to integer cents (round half to even)."""
    return int(np.rint(amount * CENTS))


# --- exchange rules ---------------------------------------------------------

PER_AGENT_UNIFORM = "per-agent-uniform"


@dataclass(frozen=True)
class FixedAmount:
    delta: int

    def __post_init__(self):
        if self.delta < 0:
            raise ValueError("delta must be >= 0")


@dataclass(frozen=True)
class UniformRandom:
    max_delta: int

    def __post_init__(self):
        if self.max_delta < 0:
            raise ValueError("max_delta must be >= 0")


@dataclass(frozen=True)
class Proportional:
    gamma: float

    def __post_init__(self):
        if not 0.0 < self.gamma < 1.0:
            raise ValueError("gamma must be in (0, 1)")


@dataclass(frozen=True)
class SavingPropensity:
    """Payer keeps fraction lam of their money; a random share of the
    released pool is transferred.  lam may be PER_AGENT_UNIFORM, in which
    case each agent draws its own propensity once at initialization."""

    lam: float | str

    def __post_init__(self):
        if isinstance(self.lam, str):
            if self.lam != PER_AGENT_UNIFORM:
                raise ValueError(f"unknown saving propensity mode {self.lam!r}")
        elif not 0.0 <= self.lam <= 1.0:
            raise ValueError("lam must be in [0, 1]")

    @property
    def per_agent(self) -> bool:
        return self.lam == PER_AGENT_UNIFORM


ExchangeRule = FixedAmount | UniformRandom | Proportional | SavingPropensity


# --- ledger -----------------------------------------------------------------


@dataclass
class AgentLedger:
    """Per-agent balances in cents plus the audit counter of money
    injected from outside (interest, bankruptcies)."""

    balances: np.ndarray
    total_injected: int = 0
    lambdas: np.ndarray | None = field(default=None, repr=False)

    @property
    def n_agents(self) -> int:
        return int(self.balances.shape[0])

    def total(self) -> int:
        return int(self.balances.sum())


def init_population(n: int, initial_balance: int) -> AgentLedger:
    """All agents start with the same balance (entropy zero)."""
    if n < 2:
        raise InvalidPopulation(f"need at least 2 agents, got {n}")
    if initial_balance < 0:
        raise ValueError("initial_balance must be >= 0")
    return AgentLedger(balances=np.full(n, initial_balance, dtype=np.int64),
                       total_injected=n * initial_balance)


# --- single transaction steps ----------------------------------------------


def draw_pair(rng: SplitMix64, n: int) -> tuple[int, int]:
    """Uniform ordered pair (payer, payee), payer != payee."""
    if n < 2:
        raise InvalidPopulation(f"need at least 2 agents, got {n}")
    payer = rng.below(n)
    payee = rng.below(n)
    while payee == payer:
        payee = rng.below(n)
    return payer, payee


def propose_amount(
    rule: ExchangeRule,
    m_payer: int,
    m_payee: int,
    rng: SplitMix64,
    lam: float | None = None,
) -> int:
    """Non-negative transfer amount in cents under the given rule.

    For per-agent saving propensities the caller resolves the payer's
    propensity and passes it as `lam`.
    """
    if isinstance(rule, FixedAmount):
        return rule.delta
    if isinstance(rule, UniformRandom):
        return rng.below(rule.max_delta + 1)
    if isinstance(rule, Proportional):
        return int(np.rint(rule.gamma * max(m_payer, 0)))
    if isinstance(rule, SavingPropensity):
        if rule.per_agent:
            if lam is None:
                raise ValueError("per-agent saving propensity requires lam")
        else:
            lam = float(rule.lam)
        eps = rng.uniform()
        delta = (1.0 - lam) * (m_payer - eps * (m_payer + m_payee))
        return max(int(np.rint(delta)), 0)
    raise TypeError(f"unknown exchange rule {rule!r}")


@dataclass(frozen=True)
class TransferOutcome:
    applied: bool
    payer: int
    payee: int
    delta: int
    block_reason: str | None = None


def apply_transfer(ledger, bank, payer, payee, delta, boundary) -> TransferOutcome:
    """Move delta from payer to payee if the boundary policy allows it.

    Applied transfers conserve the ledger total exactly; blocked ones
    leave ledger and bank untouched.  Reserve-ratio bookkeeping (loan
    for the payer's shortfall, automatic repayment out of the payee's
    receipt) is updated on the bank.
    """
    from .banking import check_boundary, is_reserve

    n = ledger.n_agents
    if not (0 <= payer < n and 0 <= payee < n) or payer == payee:
        raise InvalidAgent(f"bad agent pair ({payer}, {payee}) for n={n}")
    if delta < 0:
        raise ValueError("delta must be >= 0")

    bal = ledger.balances
    decision = check_boundary(boundary, bank, int(bal[payer]), delta)
    if not decision.allowed:
        return TransferOutcome(False, payer, payee, delta, decision.reason)

    if is_reserve(boundary):
        shortfall = max(0, delta - max(int(bal[payer]), 0))
        repayment = min(delta, max(0, -int(bal[payee])))
        bank.total_loans += shortfall - repayment
    bal[payer] -= delta
    bal[payee] += delta
    return TransferOutcome(True, payer, payee, delta, None)
