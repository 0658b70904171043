"""Stringy point counts of simple-normal-crossing log pairs, evaluated from
combinatorial stratum data.

The input is the boundary data visible to integer points: rational
coefficients c_j on horizontal divisors C_j, vertical components with
coefficients a_h, and for each pair (h, J) the number of residue points on
the locally closed stratum lying on exactly the C_j with j in J.  The count
is then

    sum_h q^(a_h) sum_J #stratum(h, J) prod_{j in J} (q - 1)/(q^(1-c_j) - 1),

finite precisely when every c_j >= 1 sits on empty strata only.  Components
supported in the special fiber where the model is singular carry no integer
points and are deliberately absent from the data model.

Whether the divisor data actually comes from an SNC pair (irreducible
completions, parameter products) is a geometric hypothesis on the caller's
side; nothing here can check it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .numutil import parse_rational
from .qexpr import INFINITE, InfiniteType, QExpr, QFrac

__all__ = [
    "SncLogPairData",
    "VerticalComponent",
    "MalformedSubsetError",
    "stringy_point_contribution",
    "stringy_count_snc",
]


class MalformedSubsetError(ValueError):
    """A stratum key is not a valid subset of the horizontal divisor indices."""


@dataclass(frozen=True)
class VerticalComponent:
    """One vertical coefficient a with its stratum point counts.

    Keys of ``strata`` are frozensets of 1-based horizontal indices; the
    entry for frozenset() counts points on no horizontal divisor.  Use an
    a = 0 component for points lying on no vertical divisor at all.
    """

    a: Fraction
    strata: tuple[tuple[frozenset[int], int], ...]

    def __init__(self, a, strata: Mapping[frozenset[int], int] | Iterable[tuple[frozenset[int], int]]):
        items = strata.items() if isinstance(strata, Mapping) else strata
        canonical = tuple(sorted(((frozenset(k), int(v)) for k, v in items), key=lambda kv: sorted(kv[0])))
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "strata", canonical)


@dataclass(frozen=True)
class SncLogPairData:
    horizontal: tuple[Fraction, ...]
    vertical: tuple[VerticalComponent, ...]
    declared_total: int | None = None

    def __init__(self, horizontal: Sequence, vertical: Sequence[VerticalComponent], declared_total: int | None = None):
        horizontal = tuple(Fraction(c) for c in horizontal)
        vertical = tuple(vertical)
        n_div = len(horizontal)
        total = 0
        for component in vertical:
            for subset, count in component.strata:
                if count < 0:
                    raise ValueError(f"negative stratum count {count}")
                for j in subset:
                    if not (isinstance(j, int) and 1 <= j <= n_div):
                        raise MalformedSubsetError(
                            f"subset {sorted(subset)} not within horizontal indices 1..{n_div}"
                        )
                total += count
        if declared_total is not None and total != declared_total:
            raise ValueError(f"stratum counts sum to {total}, declared total is {declared_total}")
        object.__setattr__(self, "horizontal", horizontal)
        object.__setattr__(self, "vertical", vertical)
        object.__setattr__(self, "declared_total", declared_total)

    # -- JSON ----------------------------------------------------------------

    @staticmethod
    def from_json(data: Mapping) -> "SncLogPairData":
        horizontal = [parse_rational(c) for c in data.get("horizontal", [])]
        vertical = []
        for entry in data.get("vertical", []):
            strata: dict[frozenset[int], int] = {}
            for stratum in entry.get("strata", []):
                raw = stratum["subset"]
                if not isinstance(raw, list) or any(not isinstance(j, int) for j in raw):
                    raise MalformedSubsetError(f"subset {raw!r} must be an array of integers")
                subset = frozenset(raw)
                if len(subset) != len(raw):
                    raise MalformedSubsetError(f"subset {raw!r} has repeated indices")
                if subset in strata:
                    raise MalformedSubsetError(f"subset {sorted(subset)} listed twice")
                strata[subset] = int(stratum["count"])
            vertical.append(VerticalComponent(parse_rational(entry.get("a", 0)), strata))
        total = data.get("total")
        return SncLogPairData(horizontal, vertical, None if total is None else int(total))

    @staticmethod
    def load(path: str | Path) -> "SncLogPairData":
        with open(path, "r", encoding="utf-8") as fh:
            return SncLogPairData.from_json(json.load(fh))

    def to_json(self) -> dict:
        return {
            "horizontal": [[c.numerator, c.denominator] for c in self.horizontal],
            "vertical": [
                {
                    "a": [component.a.numerator, component.a.denominator],
                    "strata": [
                        {"subset": sorted(subset), "count": count}
                        for subset, count in component.strata
                    ],
                }
                for component in self.vertical
            ],
            **({} if self.declared_total is None else {"total": self.declared_total}),
        }


def stringy_point_contribution(a, cs: Iterable) -> QFrac | InfiniteType:
    """Weight q^a prod_j (q-1)/(q^(1-c_j)-1) of a single residue point,
    Infinite as soon as one c_j >= 1."""
    a = Fraction(a)
    factors = QFrac(QExpr.q(a))
    for c in cs:
        c = Fraction(c)
        if c >= 1:
            return INFINITE
        factors = factors * QFrac(QExpr.q() - 1, QExpr.q(1 - c) - 1)
    return factors


def stringy_count_snc(data: SncLogPairData) -> QFrac | InfiniteType:
    """Evaluate the stratum formula; Infinite iff a coefficient >= 1 occurs
    in a subset with a nonzero stratum count."""
    total = QFrac(0)
    for component in data.vertical:
        for subset, count in component.strata:
            if count == 0:
                continue
            contribution = stringy_point_contribution(
                component.a, (data.horizontal[j - 1] for j in sorted(subset))
            )
            if isinstance(contribution, InfiniteType):
                return INFINITE
            total = total + contribution * count
    return total
