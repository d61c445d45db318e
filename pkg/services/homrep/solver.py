# services/homrep/solver.py
"""Windowed solve for every twist map φ(v_t) = Σ_j a_{t,j} v_j compatible with ρ.

Unknowns are a_{t,j} for |t| ≤ W and |j| ≤ K with K = |k|W + |q| + |k|. For
each generator g (|deg g| ≤ W), each t and each output index i, the coefficient
of v_i in φ(ρ(g)v_t) − ρ(φ(g))φ(v_t) must vanish. A row is imposed only when
every unknown it references with a nonzero coefficient is allocated; the
solution space is reported on the interior rows |t| ≤ W − |k|.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from loguru import logger

from config import settings
from core.algebra import AlgElement, window_generators
from core.errors import WindowTooSmall
from core.linalg import LinearSystem
from core.scalar import ONE, ZERO, Scalar, format_scalar
from services.endo import DeltaCorrections, EndoParams, image
from services.homrep.admissibility import loose_shift
from services.homrep.models import TwistEntry, TwistMatrix, TwistSolutionPayload
from services.intermediate import FamilyParams, act_basis

Unknown = Tuple[int, int]


@dataclass
class TwistSolution:
    family: FamilyParams
    endo: EndoParams
    window: int
    interior: int
    index_bound: int
    unknowns: int
    equations: int
    basis: List[TwistMatrix]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def contains(self, matrix: TwistMatrix) -> bool:
        """Is the interior part of ``matrix`` in the span of the basis?"""
        keys = sorted(
            {key for key in matrix if abs(key[0]) <= self.interior}
            | {key for vec in self.basis for key in vec}
        )
        names = list(range(len(self.basis)))
        system: LinearSystem[int] = LinearSystem(names)
        for key in keys:
            system.add_row({i: vec.get(key, ZERO) for i, vec in enumerate(self.basis)},
                           matrix.get(key, ZERO) if abs(key[0]) <= self.interior else ZERO)
        return system.solve().consistent

    def to_payload(self) -> TwistSolutionPayload:
        return TwistSolutionPayload(
            params={**self.family.as_dict(), "endo": self.endo.as_dict()},
            window=self.window,
            interior=[-self.interior, self.interior],
            index_bound=self.index_bound,
            unknowns=self.unknowns,
            equations=self.equations,
            dimension=self.dimension,
            basis=[
                [TwistEntry(t=t, j=j, value=format_scalar(c)) for (t, j), c in sorted(vec.items())]
                for vec in self.basis
            ],
        )


def _noncentral_image(p: EndoParams, g) -> AlgElement:
    # centrals act as zero, so the corrections never reach a module equation
    return image(p, DeltaCorrections(), g).noncentral_part()


def solve_twist_window(f: FamilyParams, e: EndoParams, window: int | None = None) -> TwistSolution:
    w = settings.resolve_window(window, "solver")
    k = abs(e.k)
    interior = w - k
    if interior < 0:
        raise WindowTooSmall(w, k)

    q = loose_shift(f, e)
    bound = k * w + abs(q) + k
    ts = range(-w, w + 1)
    js = range(-bound, bound + 1)
    unknowns: List[Unknown] = [(t, j) for t in ts for j in js]
    allocated = set(unknowns)
    system: LinearSystem[Unknown] = LinearSystem(unknowns)

    reach = k * w
    for g in window_generators(w, centrals=False):
        phi_g = _noncentral_image(e, g)
        for t in ts:
            # ρ(g) v_t = c · v_{t'}
            source = act_basis(f, g, t)
            for i in range(-bound - reach, bound + reach + 1):
                row: Dict[Unknown, Scalar] = {}
                for t_prime, c in source.items():
                    row[(t_prime, i)] = row.get((t_prime, i), ZERO) + c
                for h, eh in phi_g.items():
                    j = i - h.n
                    r = act_basis(f, h, j).coeff(i)
                    if r:
                        row[(t, j)] = row.get((t, j), ZERO) - eh * r
                live = {u: c for u, c in row.items() if c}
                if not live or any(u not in allocated for u in live):
                    continue
                system.add_row(live)

    solution = system.solve()
    logger.debug(
        f"solve-twist {f.tag} k={e.k}: {len(unknowns)} unknowns, "
        f"{system.row_count} rows, rank {solution.rank}"
    )
    basis = _interior_basis(solution.basis, interior)
    return TwistSolution(
        family=f,
        endo=e,
        window=w,
        interior=interior,
        index_bound=bound,
        unknowns=len(unknowns),
        equations=system.row_count,
        basis=basis,
    )


def _interior_basis(vectors: List[Dict[Unknown, Scalar]], interior: int) -> List[TwistMatrix]:
    """Independent spanning set of the projections onto rows |t| ≤ interior."""
    projected = [
        {u: c for u, c in vec.items() if abs(u[0]) <= interior} for vec in vectors
    ]
    projected = [vec for vec in projected if vec]
    if not projected:
        return []
    keys = sorted({u for vec in projected for u in vec})
    # greedy: keep a vector only if it is outside the span of those kept so far
    kept: List[TwistMatrix] = []
    for vec in projected:
        if not _in_span(kept, vec, keys):
            kept.append(vec)
    return [_normalize(vec) for vec in kept]


def _in_span(kept: List[TwistMatrix], vec: TwistMatrix, keys: List[Unknown]) -> bool:
    if not kept:
        return False
    system: LinearSystem[int] = LinearSystem(list(range(len(kept))))
    for key in keys:
        system.add_row({i: b.get(key, ZERO) for i, b in enumerate(kept)}, vec.get(key, ZERO))
    return system.solve().consistent


def _normalize(vec: TwistMatrix) -> TwistMatrix:
    """Scale so the entry with the smallest (|t|, t, j) equals 1."""
    pivot = min(vec, key=lambda u: (abs(u[0]), u[0], u[1]))
    factor = ONE / vec[pivot]
    return {u: c * factor for u, c in sorted(vec.items())}
