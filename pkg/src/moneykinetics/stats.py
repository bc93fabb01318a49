"""Distributional analysis of ledger snapshots.

Histograms, entropy, exponential temperature fits, KS distances,
Lorenz curves, and Gini coefficients.  Everything here is a pure
function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, EmptyDataset, UndefinedCurve

# --- histograms and entropy -------------------------------------------------


@dataclass(frozen=True)
class Histogram:
    bin_width: int
    origin: int
    counts: np.ndarray
    n_samples: int

    def edges(self) -> np.ndarray:
        k = np.arange(len(self.counts) + 1, dtype=np.int64)
        return self.origin + k * self.bin_width


def histogram(balances, bin_width: int, origin: int) -> Histogram:
    """Fixed-width binning; bin k covers [origin + k*w, origin + (k+1)*w)."""
    if bin_width <= 0:
        raise ValueError("bin_width must be > 0")
    bal = np.asarray(balances, dtype=np.int64)
    if bal.size == 0:
        raise ValueError("no samples")
    if int(bal.min()) < origin:
        raise ValueError("origin must not exceed the smallest balance")
    idx = (bal - origin) // bin_width
    counts = np.bincount(idx)
    return Histogram(bin_width=int(bin_width), origin=int(origin),
                     counts=counts.astype(np.int64), n_samples=int(bal.size))


def entropy(hist: Histogram) -> float:
    """Shannon entropy -sum p ln p in nats per agent; empty bins add 0."""
    if hist.n_samples <= 0:
        raise ValueError("empty histogram")
    p = hist.counts[hist.counts > 0] / hist.n_samples
    return float(-(p * np.log(p)).sum()) + 0.0  # normalize -0.0


def histogram_ks(a: Histogram, b: Histogram) -> float:
    """Sup-norm distance between the CDFs of two equally binned histograms."""
    if a.bin_width != b.bin_width:
        raise ValueError("histograms must share a bin width")
    if (a.origin - b.origin) % a.bin_width != 0:
        raise ValueError("histogram origins must lie on a common grid")
    lo = min(a.origin, b.origin)
    shift_a = (a.origin - lo) // a.bin_width
    shift_b = (b.origin - lo) // b.bin_width
    n = max(shift_a + len(a.counts), shift_b + len(b.counts))
    ca = np.zeros(n)
    cb = np.zeros(n)
    ca[shift_a:shift_a + len(a.counts)] = a.counts
    cb[shift_b:shift_b + len(b.counts)] = b.counts
    fa = np.cumsum(ca) / a.n_samples
    fb = np.cumsum(cb) / b.n_samples
    return float(np.abs(fa - fb).max())


# --- exponential fits ---------------------------------------------------------


@dataclass(frozen=True)
class ExponentialModel:
    """Shifted exponential: density exp(-(m - floor)/T)/T on [floor, inf)."""

    temperature: float
    floor: int = 0
    degenerate: bool = False

    def cdf(self, x):
        x = np.asarray(x, dtype=np.float64)
        if self.degenerate or self.temperature <= 0:
            return (x >= self.floor).astype(np.float64)
        return np.where(x < self.floor, 0.0, 1.0 - np.exp(-(x - self.floor) / self.temperature))


def fit_exponential(balances, floor: int = 0) -> ExponentialModel:
    """Maximum-likelihood fit: T is the mean excess over the floor."""
    bal = np.asarray(balances, dtype=np.int64)
    if bal.size < 2:
        raise ValueError("need at least 2 samples")
    if int(bal.min()) < floor:
        raise ValueError("all balances must be >= floor")
    t = (int(bal.sum()) - bal.size * floor) / bal.size
    if t == 0:
        return ExponentialModel(temperature=0.0, floor=floor, degenerate=True)
    return ExponentialModel(temperature=float(t), floor=floor)


def ks_distance(balances, model: ExponentialModel) -> float:
    """Sup-norm distance between the empirical CDF and the model CDF."""
    x = np.sort(np.asarray(balances, dtype=np.float64))
    n = x.size
    if n < 2:
        raise ValueError("need at least 2 samples")
    f = model.cdf(x)
    hi = np.arange(1, n + 1) / n - f
    lo = f - np.arange(0, n) / n
    return float(max(hi.max(), lo.max()))


@dataclass(frozen=True)
class TwoSidedFit:
    """Per-side mean temperatures; one_sided marks a missing side."""

    t_plus: float | None
    t_minus: float | None
    one_sided: bool


def two_sided_fit(balances) -> TwoSidedFit:
    """Separate exponential temperatures for positive balances and for
    debt magnitudes (per-side MLE with floors at zero)."""
    bal = np.asarray(balances, dtype=np.int64)
    pos = bal[bal > 0]
    neg = bal[bal < 0]
    t_plus = float(pos.mean()) if pos.size >= 2 else None
    t_minus = float(-neg.mean()) if neg.size >= 2 else None
    return TwoSidedFit(t_plus, t_minus, one_sided=(t_plus is None or t_minus is None))


def side_aggregates(balances) -> tuple[float, float]:
    """Per-capita totals of each side of the ledger: (sum of positive
    balances / n, sum of debt magnitudes / n).  Unlike the per-side
    conditional means in two_sided_fit, these divide by the whole
    population, which is what the closed-form reserve temperatures
    describe."""
    bal = np.asarray(balances, dtype=np.int64)
    if bal.size == 0:
        raise EmptyDataset("side_aggregates requires at least one balance")
    n = bal.size
    plus = float(bal[bal > 0].sum()) / n
    minus = float(-bal[bal < 0].sum()) / n
    return plus, minus


# --- Lorenz curves and Gini ---------------------------------------------------


@dataclass(frozen=True)
class LorenzCurve:
    """Points (population share, value share) from (0,0) to (1,1)."""

    x: np.ndarray
    y: np.ndarray
    gini: float


def _curve_from_cumulative(x: np.ndarray, y: np.ndarray) -> LorenzCurve:
    x = np.concatenate(([0.0], x))
    y = np.concatenate(([0.0], y))
    area = float(np.trapezoid(y, x))
    return LorenzCurve(x=x, y=y, gini=1.0 - 2.0 * area)


def lorenz_curve(values) -> LorenzCurve:
    """Lorenz curve of a non-negative sample (stable ascending sort, so
    ties keep input order)."""
    v = np.asarray(values, dtype=np.float64)
    if v.size == 0:
        raise ValueError("no values")
    if (v < 0).any():
        raise ValueError("values must be >= 0")
    total = v.sum()
    if total <= 0:
        raise UndefinedCurve("all values are zero")
    v = np.sort(v, kind="stable")
    n = v.size
    return _curve_from_cumulative(np.arange(1, n + 1) / n, np.cumsum(v) / total)


def gini(values) -> float:
    """Twice the area between the diagonal and the Lorenz curve; accepts
    either a sample of values or a precomputed curve."""
    if isinstance(values, LorenzCurve):
        return values.gini
    return lorenz_curve(values).gini


def exponential_lorenz(x):
    """Lorenz curve of the exponential distribution, y = x + (1-x) ln(1-x),
    extended to y(1) = 1 by continuity."""
    arr = np.asarray(x, dtype=np.float64)
    if (arr < 0).any() or (arr > 1).any():
        raise DomainError("x must lie in [0, 1]")
    with np.errstate(divide="ignore", invalid="ignore"):
        y = np.where(arr < 1.0, arr + (1.0 - arr) * np.log1p(-arr), 1.0)
    return float(y) if np.isscalar(x) or arr.ndim == 0 else y


# --- snapshot summaries -------------------------------------------------------


@dataclass(frozen=True)
class DistributionSummary:
    total: int
    mean: float
    variance: float
    skewness: float
    min: int
    max: int
    histogram: Histogram
    entropy_per_agent: float
    fit: ExponentialModel | None
    ks: float | None
    two_sided: TwoSidedFit | None


def summarize(balances, bin_width: int, fit_floor: int | None = None) -> DistributionSummary:
    """One snapshot's observables.  The histogram origin is the fit
    floor when given (and attained), otherwise the bin grid cell of the
    smallest balance."""
    bal = np.asarray(balances, dtype=np.int64)
    n = bal.size
    total = int(bal.sum())
    mean = total / n
    centered = bal.astype(np.float64) - mean
    variance = float((centered ** 2).mean())
    if variance > 0:
        skewness = float((centered ** 3).mean() / variance ** 1.5)
    else:
        skewness = 0.0

    lo = int(bal.min())
    if fit_floor is not None and lo >= fit_floor:
        origin = fit_floor
    else:
        origin = int(np.floor_divide(lo, bin_width) * bin_width)
    hist = histogram(bal, bin_width, origin)

    fit = None
    ks = None
    if fit_floor is not None and lo >= fit_floor:
        fit = fit_exponential(bal, fit_floor)
        if not fit.degenerate:
            ks = ks_distance(bal, fit)

    two = two_sided_fit(bal)
    if two.t_plus is None and two.t_minus is None:
        two = None

    return DistributionSummary(
        total=total, mean=mean, variance=variance, skewness=skewness,
        min=lo, max=int(bal.max()), histogram=hist,
        entropy_per_agent=entropy(hist), fit=fit, ks=ks, two_sided=two,
    )


# --- stationarity -------------------------------------------------------------


def stationarity_reached(histograms, epsilon: float, k: int) -> bool:
    """True when the last k consecutive snapshot pairs are all within
    epsilon in KS distance."""
    hists = list(histograms)
    if k < 1:
        raise ValueError("k must be >= 1")
    if len(hists) < k + 1:
        raise ValueError(f"need at least {k + 1} snapshots, got {len(hists)}")
    tail = hists[-(k + 1):]
    return all(histogram_ks(a, b) < epsilon for a, b in zip(tail, tail[1:]))
