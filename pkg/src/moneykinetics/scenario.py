"""Flat key-value scenario files.

Format: one `key = value` per line, `#` comments, blank lines ignored.
Keys:

    agents                 int >= 2
    initial_balance_cents  int >= 0
    rule                   fixed | uniform | proportional | saving
    delta_cents            int (rule=fixed)
    max_delta_cents        int (rule=uniform)
    gamma                  float in (0,1) (rule=proportional)
    lambda                 float in [0,1] or "uniform" (rule=saving)
    boundary               nodebt | debt_limit | reserve_ratio | unlimited | mutual_credit
    m_d_cents              int >= 0 (boundary=debt_limit)
    reserve_ratio          float in (0,1] (boundary=reserve_ratio)
    floor_cents            int (boundary=mutual_credit, optional)
    transactions           int >= 1
    snapshot_every         int >= 1 (default: 10 sweeps)
    seed                   unsigned 64-bit int (default 1)
    bin_width_cents        int >= 1 (default: expected temperature / 20)
    interest.deposit_rate  float >= 0 per cadence
    interest.loan_rate     float >= 0 per cadence
    interest.cadence_sweeps int >= 1 (default 1)
    bankruptcy.threshold_cents int > 0
    bankruptcy.cadence_sweeps  int >= 1 (default 1)

Unknown keys are rejected.
"""

from __future__ import annotations

from pathlib import Path

from .banking import (BankruptcySpec, DebtLimit, InterestSpec, MutualCredit,
                      NoDebt, ReserveRatio, Unlimited)
from .engine import ScenarioConfig
from .errors import InvalidRatio, ScenarioError
from .exchange import (PER_AGENT_UNIFORM, FixedAmount, Proportional,
                       SavingPropensity, UniformRandom)

_KNOWN_KEYS = {
    "agents", "initial_balance_cents", "rule", "delta_cents", "max_delta_cents",
    "gamma", "lambda", "boundary", "m_d_cents", "reserve_ratio", "floor_cents",
    "transactions", "snapshot_every", "seed", "bin_width_cents",
    "interest.deposit_rate", "interest.loan_rate", "interest.cadence_sweeps",
    "bankruptcy.threshold_cents", "bankruptcy.cadence_sweeps",
}


def _read_pairs(text: str) -> dict[str, str]:
    pairs: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ScenarioError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _KNOWN_KEYS:
            raise ScenarioError(f"line {lineno}: unknown key {key!r}")
        if key in pairs:
            raise ScenarioError(f"line {lineno}: duplicate key {key!r}")
        pairs[key] = value
    return pairs


def _get_int(pairs, key, minimum=None):
    try:
        value = int(pairs[key])
    except ValueError:
        raise ScenarioError(f"key {key!r}: expected integer, got {pairs[key]!r}") from None
    if minimum is not None and value < minimum:
        raise ScenarioError(f"key {key!r}: must be >= {minimum}, got {value}")
    return value


def _get_float(pairs, key):
    try:
        return float(pairs[key])
    except ValueError:
        raise ScenarioError(f"key {key!r}: expected number, got {pairs[key]!r}") from None


def _require(pairs, key, rule_or_boundary):
    if key not in pairs:
        raise ScenarioError(f"{rule_or_boundary!r} requires key {key!r}")


def _build_rule(pairs):
    _require(pairs, "rule", "scenario")
    name = pairs["rule"]
    try:
        if name == "fixed":
            _require(pairs, "delta_cents", name)
            return FixedAmount(_get_int(pairs, "delta_cents", 0))
        if name == "uniform":
            _require(pairs, "max_delta_cents", name)
            return UniformRandom(_get_int(pairs, "max_delta_cents", 0))
        if name == "proportional":
            _require(pairs, "gamma", name)
            return Proportional(_get_float(pairs, "gamma"))
        if name == "saving":
            _require(pairs, "lambda", name)
            lam = pairs["lambda"]
            return SavingPropensity(PER_AGENT_UNIFORM if lam == "uniform" else float(lam))
    except ValueError as exc:
        raise ScenarioError(f"rule {name!r}: {exc}") from None
    raise ScenarioError(f"unknown rule {name!r}")


def _build_boundary(pairs):
    name = pairs.get("boundary", "nodebt")
    try:
        if name == "nodebt":
            return NoDebt()
        if name == "debt_limit":
            _require(pairs, "m_d_cents", name)
            return DebtLimit(_get_int(pairs, "m_d_cents", 0))
        if name == "reserve_ratio":
            _require(pairs, "reserve_ratio", name)
            return ReserveRatio(_get_float(pairs, "reserve_ratio"))
        if name == "unlimited":
            return Unlimited()
        if name == "mutual_credit":
            floor = _get_int(pairs, "floor_cents") if "floor_cents" in pairs else None
            return MutualCredit(floor=floor)
    except (ValueError, InvalidRatio) as exc:
        raise ScenarioError(f"boundary {name!r}: {exc}") from None
    raise ScenarioError(f"unknown boundary {name!r}")


def _build_interest(pairs):
    keys = [k for k in pairs if k.startswith("interest.")]
    if not keys:
        return None
    for needed in ("interest.deposit_rate", "interest.loan_rate"):
        _require(pairs, needed, "interest")
    try:
        return InterestSpec(
            deposit_rate=_get_float(pairs, "interest.deposit_rate"),
            loan_rate=_get_float(pairs, "interest.loan_rate"),
            cadence_sweeps=_get_int(pairs, "interest.cadence_sweeps", 1)
            if "interest.cadence_sweeps" in pairs else 1,
        )
    except ValueError as exc:
        raise ScenarioError(f"interest: {exc}") from None


def _build_bankruptcy(pairs):
    keys = [k for k in pairs if k.startswith("bankruptcy.")]
    if not keys:
        return None
    _require(pairs, "bankruptcy.threshold_cents", "bankruptcy")
    try:
        return BankruptcySpec(
            threshold=_get_int(pairs, "bankruptcy.threshold_cents"),
            cadence_sweeps=_get_int(pairs, "bankruptcy.cadence_sweeps", 1)
            if "bankruptcy.cadence_sweeps" in pairs else 1,
        )
    except ValueError as exc:
        raise ScenarioError(f"bankruptcy: {exc}") from None


def parse_scenario_text(text: str) -> ScenarioConfig:
    pairs = _read_pairs(text)
    for needed in ("agents", "initial_balance_cents", "transactions"):
        _require(pairs, needed, "scenario")
    n_agents = _get_int(pairs, "agents", 2)
    config = ScenarioConfig(
        n_agents=n_agents,
        initial_balance=_get_int(pairs, "initial_balance_cents", 0),
        rule=_build_rule(pairs),
        boundary=_build_boundary(pairs),
        n_transactions=_get_int(pairs, "transactions", 1),
        snapshot_every=_get_int(pairs, "snapshot_every", 1)
        if "snapshot_every" in pairs else 10 * n_agents,
        seed=_get_int(pairs, "seed", 0) if "seed" in pairs else 1,
        interest=_build_interest(pairs),
        bankruptcy=_build_bankruptcy(pairs),
        bin_width=_get_int(pairs, "bin_width_cents", 1)
        if "bin_width_cents" in pairs else None,
    )
    config.validate()
    return config


def parse_scenario(path) -> ScenarioConfig:
    """Load and validate a scenario file."""
    return parse_scenario_text(Path(path).read_text(encoding="utf-8"))
