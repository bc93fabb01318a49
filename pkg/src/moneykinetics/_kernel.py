"""Compiled transaction loop.

Replicates, bit for bit, the stream of draws and updates produced by
exchange.draw_pair / propose_amount / apply_transfer with the
splitmix64 generator (see rng.py); the engine's tests pin the two
paths against each other.
"""

import numpy as np
from numba import njit

RULE_FIXED = 0
RULE_UNIFORM = 1
RULE_PROPORTIONAL = 2
RULE_SAVING_GLOBAL = 3
RULE_SAVING_PER_AGENT = 4

NO_FLOOR = np.int64(np.iinfo(np.int64).min)


@njit(cache=True, inline="always")
def _next(state):
    state = state + np.uint64(0x9E3779B97F4A7C15)
    z = state
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return state, z ^ (z >> np.uint64(31))


@njit(cache=True)
def run_chunk(bal, steps, state, rule_code, p_int, p_float, lambdas,
              floor, has_cap, cap, total_loans):
    """Execute `steps` transactions in place; returns the advanced RNG
    state, the loan book, and applied/blocked counters."""
    n = np.uint64(bal.shape[0])
    applied = np.int64(0)
    blocked_floor = np.int64(0)
    blocked_cap = np.int64(0)
    for _ in range(steps):
        state, z = _next(state)
        payer = np.int64(z % n)
        state, z = _next(state)
        payee = np.int64(z % n)
        while payee == payer:
            state, z = _next(state)
            payee = np.int64(z % n)

        mp = bal[payer]
        mq = bal[payee]

        if rule_code == RULE_FIXED:
            delta = p_int
        elif rule_code == RULE_UNIFORM:
            state, z = _next(state)
            delta = np.int64(z % np.uint64(p_int + 1))
        elif rule_code == RULE_PROPORTIONAL:
            base = mp if mp > 0 else np.int64(0)
            delta = np.int64(np.rint(p_float * base))
        else:
            lam = p_float if rule_code == RULE_SAVING_GLOBAL else lambdas[payer]
            state, z = _next(state)
            eps = np.float64(z >> np.uint64(11)) * (2.0 ** -53)
            raw = (1.0 - lam) * (mp - eps * (mp + mq))
            delta = np.int64(np.rint(raw))
            if delta < 0:
                delta = np.int64(0)

        if has_cap:
            avail = mp if mp > 0 else np.int64(0)
            shortfall = delta - avail
            if shortfall < 0:
                shortfall = np.int64(0)
            if shortfall > 0 and total_loans + shortfall > cap:
                blocked_cap += 1
                continue
            repayment = delta
            owed = -mq if mq < 0 else np.int64(0)
            if owed < repayment:
                repayment = owed
            total_loans += shortfall - repayment
        elif floor != NO_FLOOR and mp - delta < floor:
            blocked_floor += 1
            continue

        bal[payer] = mp - delta
        bal[payee] = mq + delta
        applied += 1

    return state, total_loans, applied, blocked_floor, blocked_cap
