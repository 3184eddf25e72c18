"""Exact count tables keyed by weighted-difference value (and optionally EMC)."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from math import comb

DValue = tuple[int, ...]


@dataclass
class DistributionTable:
    """Counts of d-tuples in ``C(s, n)^d``.

    With ``with_emc`` the keys are ``(dvalue, emc)``; otherwise just ``dvalue``.
    A dvalue is the ``(d-1)``-tuple obtained by subtracting the last weighted
    total from the others.
    """

    s: int
    n: int
    d: int
    counts: dict = field(default_factory=dict)
    with_emc: bool = True

    def __eq__(self, other):
        if not isinstance(other, DistributionTable):
            return NotImplemented
        return (self.d, self.with_emc, self.counts) == (other.d, other.with_emc, other.counts)

    def total(self) -> int:
        return sum(self.counts.values())

    def expected_total(self) -> int:
        return comb(self.s + self.n - 1, self.s) ** self.d

    def get(self, dvalue, emc=None) -> int:
        dvalue = tuple(dvalue) if not isinstance(dvalue, int) else (dvalue,)
        key = (dvalue, emc) if self.with_emc else dvalue
        return self.counts.get(key, 0)

    def marginal(self) -> "DistributionTable":
        """Sum out the EMC coordinate."""
        if not self.with_emc:
            return self
        out: dict = {}
        for (dv, _), c in self.counts.items():
            out[dv] = out.get(dv, 0) + c
        return DistributionTable(self.s, self.n, self.d, out, with_emc=False)

    def rows(self) -> list[tuple]:
        """Flat sorted rows ``(*dvalue, [emc,] count)``."""
        if self.with_emc:
            return [(*dv, e, c) for (dv, e), c in sorted(self.counts.items())]
        return [(*dv, c) for dv, c in sorted(self.counts.items())]

    def header(self) -> list[str]:
        cols = ["D"] if self.d == 2 else [f"w{i + 1}" for i in range(self.d - 1)]
        if self.with_emc:
            cols.append("EMC")
        return cols + ["count"]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.header())
        writer.writerows(self.rows())
        return buf.getvalue()

    def to_json(self) -> str:
        entries = []
        for row in self.rows():
            entry = {"D": list(row[: self.d - 1])}
            if self.with_emc:
                entry["EMC"] = row[self.d - 1]
            entry["count"] = str(row[-1])
            entries.append(entry)
        payload = {"s": self.s, "n": self.n, "d": self.d, "with_emc": self.with_emc,
                   "total": str(self.total()), "entries": entries}
        return json.dumps(payload, indent=2)
