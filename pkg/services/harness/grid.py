# services/harness/grid.py
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from itertools import islice
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple, TypeVar

from loguru import logger

from config import settings
from core.algebra import Generator
from core.sparse import SparseVec
from services.harness.models import CheckReport, Counterexample

P = TypeVar("P")

# evaluate(point) -> (lhs, rhs); the identity holds when they are equal
Evaluate = Callable[[P], Tuple[SparseVec, SparseVec]]

_CHUNK = 512


def describe_point(names: Sequence[str], point: Sequence[Any]) -> Dict[str, Any]:
    """{"x": "L1", "y": "I-1", "t": 0} from a tuple of generators and indices."""
    out: Dict[str, Any] = {}
    for name, value in zip(names, point):
        out[name] = str(value) if isinstance(value, Generator) else int(value)
    return out


def _chunks(points: Sequence[P], size: int) -> Iterable[Sequence[P]]:
    it = iter(points)
    while True:
        block = list(islice(it, size))
        if not block:
            return
        yield block


def run_grid(
    suite: str,
    points: Sequence[P],
    evaluate: Evaluate,
    names: Sequence[str],
    *,
    window: Dict[str, List[int]],
    params: Optional[Dict[str, Any]] = None,
    max_counterexamples: Optional[int] = None,
    parallel: Optional[bool] = None,
) -> CheckReport:
    """Evaluate every grid point and collect the first failures in grid order.

    Points must already be listed in the canonical enumeration order; chunks
    evaluated by the thread pool are merged back in that order.
    """
    cap = settings.MAX_COUNTEREXAMPLES if max_counterexamples is None else max_counterexamples
    use_pool = settings.PARALLEL if parallel is None else parallel

    def check_block(block: Sequence[P]) -> List[Tuple[P, SparseVec, SparseVec]]:
        bad = []
        for point in block:
            lhs, rhs = evaluate(point)
            if lhs != rhs:
                bad.append((point, lhs, rhs))
        return bad

    logger.debug(f"{suite}: {len(points)} grid points (parallel={use_pool})")

    blocks = _chunks(points, _CHUNK)
    if use_pool and len(points) > _CHUNK:
        with ThreadPoolExecutor(max_workers=settings.WORKERS) as pool:
            results = list(pool.map(check_block, blocks))
    else:
        results = [check_block(b) for b in blocks]

    failures = 0
    examples: List[Counterexample] = []
    for bad in results:
        for point, lhs, rhs in bad:
            failures += 1
            if len(examples) < cap:
                examples.append(
                    Counterexample(point=describe_point(names, point), lhs=str(lhs), rhs=str(rhs))
                )

    if failures:
        logger.debug(f"{suite}: {failures} failing points")

    return CheckReport(
        suite=suite,
        window=window,
        params=params or {},
        status="fail" if failures else "pass",
        checked=len(points),
        failures=failures,
        counterexamples=examples,
    )
