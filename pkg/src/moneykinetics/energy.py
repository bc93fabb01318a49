"""Country-level energy consumption analytics.

Ingests CSV tables (year,country,population,kw_per_capita), and
produces population-weighted means, Lorenz curves, Gini coefficients,
and the sup-norm distance of the weighted empirical CDF from the
exponential law with the same mean.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import EmptyDataset, EnergyTableError, UndefinedCurve
from .stats import LorenzCurve, _curve_from_cumulative

HEADER = ["year", "country", "population", "kw_per_capita"]


@dataclass(frozen=True)
class EnergyRecord:
    year: int
    country: str
    population: int
    kw_per_capita: float


def _parse_row(row: list[str], lineno: int) -> EnergyRecord:
    if len(row) != 4:
        raise EnergyTableError(f"expected 4 fields, got {len(row)}", row=lineno)
    raw_year, country, raw_pop, raw_kw = row
    try:
        year = int(raw_year)
    except ValueError:
        raise EnergyTableError(f"bad integer {raw_year!r}", row=lineno, column="year") from None
    try:
        population = int(raw_pop)
    except ValueError:
        raise EnergyTableError(f"bad integer {raw_pop!r}", row=lineno, column="population") from None
    try:
        kw = float(raw_kw)
    except ValueError:
        raise EnergyTableError(f"bad number {raw_kw!r}", row=lineno, column="kw_per_capita") from None
    if population <= 0:
        raise EnergyTableError(f"population must be > 0, got {population}",
                               row=lineno, column="population")
    if not np.isfinite(kw) or kw < 0:
        raise EnergyTableError(f"consumption must be finite and >= 0, got {kw}",
                               row=lineno, column="kw_per_capita")
    return EnergyRecord(year=year, country=country, population=population, kw_per_capita=kw)


def load_energy_table(source) -> list[EnergyRecord]:
    """Parse a CSV table; `source` may be a path, text, bytes, or a
    file-like object.  The header must match exactly."""
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, Path):
        text = source.read_text(encoding="utf-8")
    elif isinstance(source, str):
        text = Path(source).read_text(encoding="utf-8") if "\n" not in source else source
    elif hasattr(source, "read"):
        raw = source.read()
        text = raw.decode("utf-8") if isinstance(raw, bytes) else raw
    else:
        raise TypeError(f"cannot read energy table from {type(source)!r}")

    reader = csv.reader(io.StringIO(text))
    rows = [(lineno, row) for lineno, row in enumerate(reader, start=1) if row]
    if not rows:
        raise EmptyDataset("empty energy table")
    header_line, header = rows[0]
    if header != HEADER:
        raise EnergyTableError(
            f"header must be exactly {','.join(HEADER)!r}, got {','.join(header)!r}",
            row=header_line)
    records = [_parse_row(row, lineno) for lineno, row in rows[1:]]
    if not records:
        raise EmptyDataset("energy table has a header but no rows")
    return records


def _sorted_records(records: list[EnergyRecord]) -> list[EnergyRecord]:
    # ties in consumption broken by country label for determinism
    return sorted(records, key=lambda r: (r.kw_per_capita, r.country))


def world_average(records: list[EnergyRecord]) -> float:
    """Population-weighted mean consumption in kW per capita."""
    if not records:
        raise EmptyDataset("no records")
    total_pop = sum(r.population for r in records)
    total_energy = sum(r.population * r.kw_per_capita for r in records)
    return total_energy / total_pop


def weighted_lorenz(records: list[EnergyRecord]) -> LorenzCurve:
    """Lorenz curve of per-capita consumption, weighting each country
    by its population; equals the unweighted curve on the
    person-expanded sample."""
    if not records:
        raise EmptyDataset("no records")
    ordered = _sorted_records(records)
    pop = np.array([r.population for r in ordered], dtype=np.float64)
    energy = pop * np.array([r.kw_per_capita for r in ordered])
    total_energy = energy.sum()
    if total_energy <= 0:
        raise UndefinedCurve("all consumption values are zero")
    return _curve_from_cumulative(np.cumsum(pop) / pop.sum(),
                                  np.cumsum(energy) / total_energy)


def weighted_gini(records: list[EnergyRecord]) -> float:
    return weighted_lorenz(records).gini


def exponential_distance(records: list[EnergyRecord]) -> float:
    """Sup-norm distance between the population-weighted empirical CDF
    of per-capita consumption and 1 - exp(-e/<e>)."""
    if not records:
        raise EmptyDataset("no records")
    mean = world_average(records)
    if mean <= 0:
        raise UndefinedCurve("zero mean consumption")
    ordered = _sorted_records(records)
    pop = np.array([r.population for r in ordered], dtype=np.float64)
    kw = np.array([r.kw_per_capita for r in ordered])
    ecdf_after = np.cumsum(pop) / pop.sum()
    ecdf_before = ecdf_after - pop / pop.sum()
    model = 1.0 - np.exp(-kw / mean)
    return float(np.maximum(np.abs(ecdf_after - model), np.abs(ecdf_before - model)).max())
