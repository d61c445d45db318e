# core/sparse.py
from __future__ import annotations

from typing import Any, Callable, Generic, Hashable, Iterable, Iterator, Mapping, TypeVar

from core.scalar import ZERO, Number, Scalar, as_scalar, format_scalar

K = TypeVar("K", bound=Hashable)
V = TypeVar("V", bound="SparseVec")
W = TypeVar("W", bound="SparseVec")


class SparseVec(Generic[K]):
    """Finite linear combination of basis keys with Scalar coefficients.

    Zero coefficients are never stored and terms iterate in canonical order
    (``sort_key``). Subclasses pick the key type, the order and the text form.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[K, Number] | Iterable[tuple[K, Number]] = ()) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[K, Scalar] = {}
        for key, coeff in items:
            acc[key] = acc.get(key, ZERO) + as_scalar(coeff)
        self._terms = {key: acc[key] for key in sorted(acc, key=self.sort_key) if acc[key]}
        self._hash = None

    # ── hooks ─────────────────────────────────────
    @staticmethod
    def sort_key(key: K) -> Any:
        return key

    @staticmethod
    def format_key(key: K) -> str:
        return str(key)

    # ── access ────────────────────────────────────
    @property
    def terms(self) -> dict[K, Scalar]:
        return dict(self._terms)

    def coeff(self, key: K) -> Scalar:
        return self._terms.get(key, ZERO)

    def items(self) -> Iterator[tuple[K, Scalar]]:
        return iter(self._terms.items())

    def keys(self) -> Iterator[K]:
        return iter(self._terms)

    def __iter__(self) -> Iterator[tuple[K, Scalar]]:
        return self.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    # ── vector space ──────────────────────────────
    def _combine(self: V, other: V, factor: int) -> V:
        if type(other) is not type(self):
            return NotImplemented
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            acc[key] = acc.get(key, ZERO) + (coeff if factor == 1 else -coeff)
        return type(self)(acc)

    def __add__(self: V, other: V) -> V:
        return self._combine(other, 1)

    def __sub__(self: V, other: V) -> V:
        return self._combine(other, -1)

    def __neg__(self: V) -> V:
        return type(self)({key: -coeff for key, coeff in self._terms.items()})

    def scale(self: V, s: Number) -> V:
        factor = as_scalar(s)
        if not factor:
            return type(self)()
        return type(self)({key: factor * coeff for key, coeff in self._terms.items()})

    def __mul__(self: V, s: Number) -> V:
        if isinstance(s, SparseVec):
            return NotImplemented
        return self.scale(s)

    __rmul__ = __mul__

    def map_keys(self, fn: Callable[[K], "SparseVec"], result: type[W]) -> W:
        """Linear extension of a basis map ``fn`` into vectors of type ``result``."""
        out: dict[Any, Scalar] = {}
        for key, coeff in self._terms.items():
            for k2, c2 in fn(key)._terms.items():
                out[k2] = out.get(k2, ZERO) + coeff * c2
        return result(out)

    # ── comparison ────────────────────────────────
    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, tuple(self._terms.items())))
        return self._hash

    # ── text ──────────────────────────────────────
    def format(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for key, coeff in self._terms.items():
            sign, body = _signed_coeff(coeff)
            atom = self.format_key(key)
            text = atom if body == "1" else f"{body}*{atom}"
            if not parts:
                parts.append(("-" if sign < 0 else "") + text)
            else:
                parts.append(("- " if sign < 0 else "+ ") + text)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.format()!r})"


def _signed_coeff(c: Scalar) -> tuple[int, str]:
    """Split a coefficient into a sign and the text printed before ``*``."""
    if c.im and c.re:
        return 1, f"({format_scalar(c)})"
    if c.im:
        mag = abs(c.im)
        return (-1 if c.im < 0 else 1), ("i" if mag == 1 else f"{mag}i")
    return (-1 if c.re < 0 else 1), str(abs(c.re))
