"""Verification reports: named exact checks with json-friendly witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .exact_linalg import Mat, sparse_vector
from .multilinear import unflat


@dataclass
class Check:
    name: str
    passed: bool
    witness: dict | None = None
    detail: str = ""
    degree: int | None = None
    map: str | None = None
    index: int | None = None

    def to_dict(self) -> dict:
        d = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.detail:
            d["detail"] = self.detail
        for k in ("degree", "map", "index"):
            v = getattr(self, k)
            if v is not None:
                d[k] = v
        return d


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)
    ranks: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            if prefix:
                c = Check(prefix + c.name, c.passed, c.witness, c.detail, c.degree, c.map, c.index)
            self.checks.append(c)
        self.ranks.update(other.ranks)
        self.notes.extend(other.notes)

    def compare(self, name, lhs: Mat, rhs: Mat, dom_dims=None, **meta) -> Check:
        return self.add(compare_maps(name, lhs, rhs, dom_dims, **meta))

    def require(self, name, ok: bool, detail="", witness=None, **meta) -> Check:
        return self.add(Check(name, bool(ok), witness, detail, **meta))

    def __getitem__(self, name) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> list:
        return [c.name for c in self.checks]

    def to_dict(self) -> dict:
        return {"title": self.title, "passed": self.passed,
                "checks": [c.to_dict() for c in self.checks],
                "ranks": self.ranks, "notes": list(self.notes)}


def compare_maps(name: str, lhs: Mat, rhs: Mat, dom_dims: Sequence[int] | None = None,
                 **meta) -> Check:
    """Exact equality of two matrices; on failure the witness names the first
    differing input basis vector and both images."""
    if lhs.shape != rhs.shape:
        return Check(name, False, {"lhs_shape": list(lhs.shape), "rhs_shape": list(rhs.shape)},
                     "shape mismatch", **meta)
    j = lhs.first_difference(rhs)
    if j is None:
        return Check(name, True, **meta)
    w = {"column": j, "lhs": sparse_vector(lhs.col(j)), "rhs": sparse_vector(rhs.col(j))}
    if dom_dims:
        w["input_legs"] = list(unflat(j, dom_dims))
    return Check(name, False, w, **meta)
