"""Floating-point operation accounting.

Convention (drives complexity-table reproduction): one addition per
both-finite candidate sum; each min-reduction over m finite candidates costs
max(0, m - 1) comparisons; a final selection over finite candidate sizes
costs (#finite - 1) comparisons. The "_inf" tallies hold the remaining
operations of a naive scan, i.e. those with at least one +inf operand.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict


@dataclass
class OpCounter:
    adds_finite: int = 0
    cmps_finite: int = 0
    adds_inf: int = 0
    cmps_inf: int = 0

    def record_add(self, both_finite: bool = True) -> None:
        if both_finite:
            self.adds_finite += 1
        else:
            self.adds_inf += 1

    def record_cmp(self, both_finite: bool = True) -> None:
        if both_finite:
            self.cmps_finite += 1
        else:
            self.cmps_inf += 1

    def add_bulk(self, adds_finite=0, adds_inf=0, cmps_finite=0, cmps_inf=0) -> None:
        self.adds_finite += int(adds_finite)
        self.adds_inf += int(adds_inf)
        self.cmps_finite += int(cmps_finite)
        self.cmps_inf += int(cmps_inf)

    def merge(self, other: "OpCounter") -> None:
        self.add_bulk(other.adds_finite, other.adds_inf,
                      other.cmps_finite, other.cmps_inf)

    def snapshot(self) -> "OpCounter":
        return OpCounter(self.adds_finite, self.cmps_finite,
                         self.adds_inf, self.cmps_inf)

    def reset(self) -> None:
        self.adds_finite = self.cmps_finite = 0
        self.adds_inf = self.cmps_inf = 0

    @property
    def finite_total(self) -> int:
        return self.adds_finite + self.cmps_finite

    @property
    def total(self) -> int:
        return self.finite_total + self.adds_inf + self.cmps_inf

    def as_dict(self) -> dict:
        return asdict(self)
