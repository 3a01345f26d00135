"""Continuous t-norms on [0, 1] and their residua.

Every continuous t-norm is handled as an ordinal sum: a list of disjoint
intervals ``[lo, hi]`` carrying a rescaled Lukasiewicz or product t-norm,
with ``min`` everywhere else.  The three basic t-norms are the degenerate
cases (no pieces for Godel, one full-width piece for the other two).

Truth values are plain floats.  Order and equality tests go through
:data:`EPS`; ``min``/``max`` are exact.

All evaluation functions accept scalars or numpy arrays and broadcast.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import IdempotentInput, NoDeltaFound

EPS = 1e-9
BISECTION_STEPS = 40  # resolution 2**-40
EPS_GRID = 2.0 ** -10

LUKASIEWICZ_KIND = "lukasiewicz"
PRODUCT_KIND = "product"
GODEL_KIND = "godel"
ORDINAL_SUM_KIND = "ordinal_sum"

_PIECE_KINDS = (LUKASIEWICZ_KIND, PRODUCT_KIND)
_ALIASES = {
    "godel": GODEL_KIND, "goedel": GODEL_KIND, "min": GODEL_KIND, "minimum": GODEL_KIND,
    "lukasiewicz": LUKASIEWICZ_KIND, "luk": LUKASIEWICZ_KIND, "l": LUKASIEWICZ_KIND,
    "product": PRODUCT_KIND, "prod": PRODUCT_KIND, "p": PRODUCT_KIND,
    "ordinal_sum": ORDINAL_SUM_KIND, "ordinal": ORDINAL_SUM_KIND,
}


def leq(a, b):
    """``a <= b`` up to :data:`EPS`."""
    return np.asarray(a) <= np.asarray(b) + EPS


def close(a, b):
    return np.abs(np.asarray(a, dtype=float) - np.asarray(b, dtype=float)) <= EPS


def _base_tensor(kind, x, y):
    if kind == LUKASIEWICZ_KIND:
        return np.maximum(x + y - 1.0, 0.0)
    return x * y


def _base_residuum(kind, x, y):
    # only called where x > y
    if kind == LUKASIEWICZ_KIND:
        return np.minimum(1.0 - x + y, 1.0)
    return y / x


class Piece(NamedTuple):
    lo: float
    hi: float
    kind: str

    @property
    def width(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class TNorm:
    """A continuous t-norm described as an ordinal sum.

    Use the class methods :meth:`godel`, :meth:`lukasiewicz`, :meth:`product`
    and :meth:`ordinal_sum` rather than the raw constructor.
    """

    kind: str
    pieces: tuple[Piece, ...] = ()

    def __post_init__(self):
        kind = _ALIASES.get(str(self.kind).lower())
        if kind is None:
            raise ValueError(f"unknown t-norm kind {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        if kind == GODEL_KIND:
            pieces = ()
        elif kind in _PIECE_KINDS:
            pieces = (Piece(0.0, 1.0, kind),)
        else:
            pieces = _check_pieces(self.pieces)
        object.__setattr__(self, "pieces", pieces)

    @classmethod
    def godel(cls) -> "TNorm":
        return cls(GODEL_KIND)

    @classmethod
    def lukasiewicz(cls) -> "TNorm":
        return cls(LUKASIEWICZ_KIND)

    @classmethod
    def product(cls) -> "TNorm":
        return cls(PRODUCT_KIND)

    @classmethod
    def ordinal_sum(cls, pieces: Sequence) -> "TNorm":
        """Build from ``(lo, hi, kind)`` triples (or dicts with those keys)."""
        return cls(ORDINAL_SUM_KIND, tuple(pieces))

    # -- evaluation -------------------------------------------------------

    def tensor(self, a, b):
        """The t-norm ``a & b``."""
        a, b = np.broadcast_arrays(np.asarray(a, dtype=float), np.asarray(b, dtype=float))
        out = np.array(np.minimum(a, b))
        for p in self.pieces:
            mask = (a >= p.lo) & (a <= p.hi) & (b >= p.lo) & (b <= p.hi)
            if mask.any():
                x = (a[mask] - p.lo) / p.width
                y = (b[mask] - p.lo) / p.width
                out[mask] = p.lo + p.width * _base_tensor(p.kind, x, y)
        return _scalar(out)

    def residuum(self, a, b):
        """The implication ``a -> b``: the largest ``c`` with ``a & c <= b``.

        ``a <= b`` is decided up to EPS.  Inside a piece (``lo <= b < a <= hi``)
        the rescaled piece residuum is used; otherwise ``a -> b = b`` because an
        idempotent separates ``b`` from ``a``.
        """
        a, b = np.broadcast_arrays(np.asarray(a, dtype=float), np.asarray(b, dtype=float))
        above = a > b + EPS
        out = np.where(above, b, 1.0)
        for p in self.pieces:
            mask = above & (b >= p.lo - EPS) & (a <= p.hi + EPS)
            if mask.any():
                x = (np.minimum(a[mask], p.hi) - p.lo) / p.width
                y = (np.maximum(b[mask], p.lo) - p.lo) / p.width
                out[mask] = p.lo + p.width * _base_residuum(p.kind, x, y)
        return _scalar(out)

    # -- idempotents ------------------------------------------------------

    def is_idempotent(self, a) -> bool:
        return bool(close(self.tensor(a, a), a))

    def idempotent_bracket(self, a: float) -> tuple[float, float]:
        """Nearest idempotents strictly below and above a non-idempotent ``a``."""
        if self.is_idempotent(a):
            raise IdempotentInput(f"{a} is idempotent for {self.kind}")
        for p in self.pieces:
            if p.lo < a < p.hi:
                return (p.lo, p.hi)
        raise IdempotentInput(f"{a} lies in no piece interior")  # unreachable for valid input

    def has_nontrivial_idempotent(self) -> bool:
        return not (len(self.pieces) == 1 and self.pieces[0].lo == 0.0 and self.pieces[0].hi == 1.0)

    def piece_endpoints(self) -> list[float]:
        pts = {0.0, 1.0}
        for p in self.pieces:
            pts.update((p.lo, p.hi))
        return sorted(pts)

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        d = {"kind": self.kind}
        if self.kind == ORDINAL_SUM_KIND:
            d["pieces"] = [{"lo": p.lo, "hi": p.hi, "kind": p.kind} for p in self.pieces]
        return d

    @classmethod
    def from_dict(cls, d) -> "TNorm":
        if isinstance(d, str):
            return cls(d)
        return cls(d["kind"], tuple(d.get("pieces", ())))

    @classmethod
    def parse(cls, text: str) -> "TNorm":
        """A bare name (``godel``, ``luk``, ...) or a JSON descriptor."""
        text = text.strip()
        if text.startswith("{"):
            return cls.from_dict(json.loads(text))
        return cls(text)

    def __str__(self):
        if self.kind != ORDINAL_SUM_KIND:
            return self.kind
        inner = ", ".join(f"{p.kind}[{p.lo:g},{p.hi:g}]" for p in self.pieces)
        return f"ordinal_sum({inner})"


def _check_pieces(raw) -> tuple[Piece, ...]:
    pieces = []
    for item in raw:
        if isinstance(item, dict):
            lo, hi, kind = item["lo"], item["hi"], item["kind"]
        else:
            lo, hi, kind = item
        kind = _ALIASES.get(str(kind).lower())
        if kind not in _PIECE_KINDS:
            raise ValueError(f"ordinal-sum pieces must be lukasiewicz or product, got {item!r}")
        lo, hi = float(lo), float(hi)
        if not 0.0 <= lo < hi <= 1.0:
            raise ValueError(f"bad piece bounds [{lo}, {hi}]")
        pieces.append(Piece(lo, hi, kind))
    pieces.sort()
    for left, right in zip(pieces, pieces[1:]):
        if right.lo < left.hi:
            raise ValueError(f"overlapping pieces {left} and {right}")
    return tuple(pieces)


def _scalar(arr):
    return float(arr) if arr.ndim == 0 else arr


GODEL = TNorm.godel()
LUKASIEWICZ = TNorm.lukasiewicz()
PRODUCT = TNorm.product()


# -- constructive delta lemmas ---------------------------------------------

def shrink_delta(t: TNorm, a: float, b: float, eps: float) -> float:
    """Find ``delta > 0`` with ``a & ((a - delta) -> b) < min(a, b) + eps``.

    Starts at ``delta = a`` and halves until the inequality holds.  The
    left-hand side is antitone in ``delta``, so the first success is kept.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    target = min(a, b) + eps
    delta = a if a > 0 else 1.0
    for _ in range(BISECTION_STEPS + 1):
        if t.tensor(a, t.residuum(max(a - delta, 0.0), b)) < target:
            return delta
        delta /= 2
    raise NoDeltaFound(f"no delta for a={a}, b={b}, eps={eps} under {t}")


def uniform_delta_holds(t: TNorm, a: float, eps: float, delta: float, cs=None) -> bool:
    """Check ``((a+delta) -> (a-delta)) & (c-delta) >= c - eps`` on a grid of ``c`` in ``[0, a]``."""
    if cs is None:
        cs = np.linspace(0.0, a, int(np.ceil(a / EPS_GRID)) + 1)
    upper = min(a + delta, 1.0)
    lower = max(a - delta, 0.0)
    lhs = t.tensor(t.residuum(upper, lower), np.maximum(cs - delta, 0.0))
    return bool(np.all(lhs >= cs - eps - EPS))


def uniform_delta(t: TNorm, a: float, eps: float) -> float:
    """Find ``delta > 0`` making the uniform lower bound hold for every ``c`` in ``[0, a]``.

    The bound is checked on a grid of step :data:`EPS_GRID`; ``a + delta`` is
    clamped to 1.
    """
    if not 0 < a <= 1:
        raise ValueError("a must lie in (0, 1]")
    if eps <= 0:
        raise ValueError("eps must be positive")
    delta = min(eps, a)
    for _ in range(BISECTION_STEPS + 1):
        if uniform_delta_holds(t, a, eps, delta):
            return delta
        delta /= 2
    raise NoDeltaFound(f"no uniform delta for a={a}, eps={eps} under {t}")
