# core/linalg.py
"""Exact sparse linear systems over ℚ(i).

Rows are sparse maps ``unknown -> Scalar``. The system is split into connected
components (rows sharing an unknown), and each component is reduced with
sympy's ``DomainMatrix.rref`` over ``QQ_I``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Generic, Hashable, Mapping, Sequence, TypeVar

from loguru import logger
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

from core.scalar import ZERO, Number, Scalar, as_scalar

U = TypeVar("U", bound=Hashable)


def to_domain(s: Scalar):
    return QQ_I(QQ(s.re_num, s.re_den), QQ(s.im_num, s.im_den))


def from_domain(e) -> Scalar:
    return Scalar(
        Fraction(int(e.x.numerator), int(e.x.denominator)),
        Fraction(int(e.y.numerator), int(e.y.denominator)),
    )


@dataclass
class Solution(Generic[U]):
    """Affine solution set ``particular + span(basis)``; ``consistent=False`` means empty."""

    unknowns: list[U]
    consistent: bool
    particular: dict[U, Scalar] = field(default_factory=dict)
    basis: list[dict[U, Scalar]] = field(default_factory=list)
    rank: int = 0

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def is_unique(self) -> bool:
        return self.consistent and not self.basis

    def value(self, u: U) -> Scalar:
        return self.particular.get(u, ZERO)


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)


class LinearSystem(Generic[U]):
    """Collects rows ``Σ coeff·u = rhs`` over a fixed, ordered list of unknowns."""

    def __init__(self, unknowns: Sequence[U]) -> None:
        self.unknowns: list[U] = list(unknowns)
        self._index: dict[U, int] = {u: i for i, u in enumerate(self.unknowns)}
        self._rows: list[tuple[dict[int, Scalar], Scalar]] = []
        self._seen: set[tuple] = set()
        self._contradiction = False

    def __contains__(self, u: U) -> bool:
        return u in self._index

    @property
    def row_count(self) -> int:
        return len(self._rows)

    def add_row(self, coeffs: Mapping[U, Number], rhs: Number = 0) -> None:
        row: dict[int, Scalar] = {}
        for u, c in coeffs.items():
            s = as_scalar(c)
            if not s:
                continue
            i = self._index[u]
            row[i] = row.get(i, ZERO) + s
        row = {i: c for i, c in row.items() if c}
        b = as_scalar(rhs)
        if not row:
            if b:
                self._contradiction = True
            return
        key = (tuple(sorted(row.items())), b)
        if key in self._seen:
            return
        self._seen.add(key)
        self._rows.append((row, b))

    def solve(self) -> Solution[U]:
        n = len(self.unknowns)
        if self._contradiction:
            return Solution(self.unknowns, consistent=False)

        uf = _UnionFind(n)
        for row, _ in self._rows:
            cols = list(row)
            for j in cols[1:]:
                uf.union(cols[0], j)

        groups: dict[int, list[int]] = {}
        for i in range(n):
            groups.setdefault(uf.find(i), []).append(i)
        rows_by_group: dict[int, list[tuple[dict[int, Scalar], Scalar]]] = {}
        for row, b in self._rows:
            rows_by_group.setdefault(uf.find(next(iter(row))), []).append((row, b))

        particular: dict[int, Scalar] = {}
        basis: list[dict[int, Scalar]] = []
        rank = 0
        for root in sorted(groups):
            cols = groups[root]
            rows = rows_by_group.get(root, [])
            if not rows:
                basis.extend({i: Scalar(1)} for i in cols)
                continue
            part, null, r = _solve_component(cols, rows)
            if part is None:
                logger.debug(f"linalg: inconsistent component of {len(cols)} unknowns")
                return Solution(self.unknowns, consistent=False)
            particular.update(part)
            basis.extend(null)
            rank += r

        logger.debug(
            f"linalg: {n} unknowns, {len(self._rows)} rows, "
            f"{len(groups)} components, rank {rank}"
        )
        basis.sort(key=lambda vec: min(vec))
        return Solution(
            self.unknowns,
            consistent=True,
            particular={self.unknowns[i]: c for i, c in sorted(particular.items()) if c},
            basis=[{self.unknowns[i]: c for i, c in sorted(vec.items())} for vec in basis],
            rank=rank,
        )


def _solve_component(
    cols: list[int],
    rows: list[tuple[dict[int, Scalar], Scalar]],
) -> tuple[dict[int, Scalar] | None, list[dict[int, Scalar]], int]:
    width = len(cols)
    local = {c: j for j, c in enumerate(cols)}
    zero = QQ_I.zero
    dense = []
    for row, b in rows:
        line = [zero] * (width + 1)
        for c, coeff in row.items():
            line[local[c]] = to_domain(coeff)
        line[width] = to_domain(b)
        dense.append(line)

    reduced, pivots = DomainMatrix(dense, (len(dense), width + 1), QQ_I).rref()
    pivots = tuple(pivots)
    if width in pivots:
        return None, [], 0

    table = reduced.to_list()
    particular: dict[int, Scalar] = {}
    for i, p in enumerate(pivots):
        value = from_domain(table[i][width])
        if value:
            particular[cols[p]] = value

    pivot_set = set(pivots)
    null: list[dict[int, Scalar]] = []
    for f in range(width):
        if f in pivot_set:
            continue
        vec: dict[int, Scalar] = {cols[f]: Scalar(1)}
        for i, p in enumerate(pivots):
            entry = from_domain(table[i][f])
            if entry:
                vec[cols[p]] = -entry
        null.append(vec)
    return particular, null, len(pivots)
