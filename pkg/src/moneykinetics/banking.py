"""Debt regimes, bank bookkeeping, interest, and bankruptcy.

Boundary policies decide whether a payer may go (further) negative.
The bank tracks the monetary base, the outstanding loan book under a
reserve-ratio regime, and an equity account that absorbs interest and
bankruptcy write-offs so that (agent balances + bank equity) is
conserved to the cent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidRatio

# --- boundary policies --------------------------------------------------------


@dataclass(frozen=True)
class NoDebt:
    """Balances may never drop below zero."""


@dataclass(frozen=True)
class DebtLimit:
    """Each agent may go negative down to -m_d."""

    m_d: int

    def __post_init__(self):
        if self.m_d < 0:
            raise ValueError("m_d must be >= 0")


@dataclass(frozen=True)
class ReserveRatio:
    """Bank lends payer shortfalls while total loans stay below the
    global cap M_b * (1 - R) / R implied by the required reserve ratio."""

    ratio: float

    def __post_init__(self):
        if not 0.0 < self.ratio <= 1.0:
            raise InvalidRatio(f"reserve ratio must be in (0, 1], got {self.ratio}")


@dataclass(frozen=True)
class Unlimited:
    """No lower bound; the distribution never becomes stationary."""


@dataclass(frozen=True)
class MutualCredit:
    """Zero-base community money; optional floor on balances."""

    floor: int | None = None


BoundaryPolicy = NoDebt | DebtLimit | ReserveRatio | Unlimited | MutualCredit


def balance_floor(policy: BoundaryPolicy) -> int | None:
    """Per-agent minimum balance, or None when unbounded below."""
    if isinstance(policy, NoDebt):
        return 0
    if isinstance(policy, DebtLimit):
        return -policy.m_d
    if isinstance(policy, MutualCredit):
        return policy.floor
    return None


def is_reserve(policy: BoundaryPolicy) -> bool:
    return isinstance(policy, ReserveRatio)


# --- bank state ---------------------------------------------------------------


@dataclass
class BankState:
    """Monetary aggregates for one run, all in cents.

    equity is the bank's accumulated profit and loss: it goes down by
    deposit interest paid and bankruptcy write-offs, up by loan
    interest accrued.
    """

    monetary_base: int
    total_loans: int = 0
    equity: int = 0
    reserve_ratio: float | None = None

    def debt_cap(self) -> int:
        if self.reserve_ratio is None:
            raise InvalidRatio("debt cap is defined only under a reserve ratio")
        return int(math.floor(self.monetary_base * (1.0 - self.reserve_ratio) / self.reserve_ratio))


@dataclass(frozen=True)
class BoundaryDecision:
    allowed: bool
    reason: str | None = None

ALLOW = BoundaryDecision(True)


def check_boundary(policy: BoundaryPolicy, bank: BankState, m_payer: int, delta: int) -> BoundaryDecision:
    """Decide whether a payer with balance m_payer may pay delta."""
    if delta < 0:
        raise ValueError("delta must be >= 0")
    if isinstance(policy, NoDebt):
        if m_payer >= delta:
            return ALLOW
        return BoundaryDecision(False, "insufficient-funds")
    if isinstance(policy, DebtLimit):
        if m_payer - delta >= -policy.m_d:
            return ALLOW
        return BoundaryDecision(False, "debt-cap")
    if isinstance(policy, MutualCredit):
        if policy.floor is None or m_payer - delta >= policy.floor:
            return ALLOW
        return BoundaryDecision(False, "debt-cap")
    if isinstance(policy, ReserveRatio):
        shortfall = max(0, delta - max(m_payer, 0))
        if shortfall == 0 or bank.total_loans + shortfall <= bank.debt_cap():
            return ALLOW
        return BoundaryDecision(False, "bank-cap")
    if isinstance(policy, Unlimited):
        return ALLOW
    raise TypeError(f"unknown boundary policy {policy!r}")


# --- closed-form predictions --------------------------------------------------


@dataclass(frozen=True)
class TemperatureSet:
    """Predicted exponential temperatures in cents; None where the
    regime has no stationary distribution."""

    t: float | None = None
    t_plus: float | None = None
    t_minus: float | None = None
    stationary: bool = True


def theoretical_temperatures(policy: BoundaryPolicy, monetary_base: int, n: int) -> TemperatureSet:
    """Closed-form stationary temperatures for a given debt regime."""
    if n < 1:
        raise ValueError("n must be >= 1")
    per_agent = monetary_base / n
    if isinstance(policy, NoDebt):
        return TemperatureSet(t=per_agent)
    if isinstance(policy, DebtLimit):
        return TemperatureSet(t=policy.m_d + per_agent)
    if isinstance(policy, ReserveRatio):
        r = policy.ratio
        return TemperatureSet(t_plus=per_agent / r, t_minus=per_agent * (1.0 - r) / r)
    return TemperatureSet(stationary=False)


@dataclass(frozen=True)
class MoneyAggregates:
    multiplier: float
    money: float
    debt: float


def money_aggregates(ratio: float, monetary_base: int) -> MoneyAggregates:
    """Money multiplier 1/R and the implied positive money and debt."""
    if not 0.0 < ratio <= 1.0:
        raise InvalidRatio(f"reserve ratio must be in (0, 1], got {ratio}")
    money = monetary_base / ratio
    return MoneyAggregates(multiplier=1.0 / ratio, money=money, debt=money - monetary_base)


# --- periodic events ----------------------------------------------------------


@dataclass(frozen=True)
class InterestSpec:
    """Simple per-cadence interest; rates are fractions per period."""

    deposit_rate: float
    loan_rate: float
    cadence_sweeps: int = 1

    def __post_init__(self):
        if self.deposit_rate < 0 or self.loan_rate < 0:
            raise ValueError("interest rates must be >= 0")
        if not (self.deposit_rate < 1 and self.loan_rate < 1):
            raise ValueError("interest rates must be < 1 per period")
        if self.cadence_sweeps < 1:
            raise ValueError("cadence must be >= 1 sweep")


@dataclass(frozen=True)
class BankruptcySpec:
    threshold: int
    cadence_sweeps: int = 1

    def __post_init__(self):
        if self.threshold <= 0:
            raise ValueError("threshold must be > 0")
        if self.cadence_sweeps < 1:
            raise ValueError("cadence must be >= 1 sweep")


@dataclass(frozen=True)
class LedgerEvent:
    kind: str  # deposit-interest | loan-interest | bankruptcy
    amount: int  # signed change to total agent money, cents
    agent: int | None = None


def accrue_interest(ledger, bank: BankState, spec: InterestSpec) -> list[LedgerEvent]:
    """Pay deposit interest on positive balances and accrue loan
    interest on negative ones; the bank's equity absorbs the exact
    opposite so the combined total is unchanged."""
    bal = ledger.balances
    events: list[LedgerEvent] = []

    if spec.deposit_rate > 0:
        pos = bal > 0
        paid = np.rint(spec.deposit_rate * bal[pos].astype(np.float64)).astype(np.int64)
        total_paid = int(paid.sum())
        if total_paid:
            bal[pos] += paid
            bank.equity -= total_paid
            events.append(LedgerEvent("deposit-interest", total_paid))

    if spec.loan_rate > 0:
        neg = bal < 0
        accrued = np.rint(spec.loan_rate * (-bal[neg]).astype(np.float64)).astype(np.int64)
        total_accrued = int(accrued.sum())
        if total_accrued:
            bal[neg] -= accrued
            bank.equity += total_accrued
            if bank.reserve_ratio is not None:
                bank.total_loans += total_accrued
            events.append(LedgerEvent("loan-interest", -total_accrued))

    return events


def trigger_bankruptcy(ledger, bank: BankState, spec: BankruptcySpec) -> list[LedgerEvent]:
    """Reset every balance below -threshold to zero; the erased debt is
    written off against the bank (loan book and equity)."""
    bal = ledger.balances
    events: list[LedgerEvent] = []
    broke = np.flatnonzero(bal < -spec.threshold)
    for idx in broke:
        erased = int(-bal[idx])
        bal[idx] = 0
        bank.equity -= erased
        if bank.reserve_ratio is not None:
            bank.total_loans -= erased
        events.append(LedgerEvent("bankruptcy", erased, agent=int(idx)))
    return events
