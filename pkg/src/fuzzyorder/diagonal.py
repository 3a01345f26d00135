"""The quantaloid of diagonals for a continuous t-norm.

Objects are truth values; an arrow ``a -> b`` is a value ``alpha <= min(a, b)``.
Composition of ``alpha: a -> b`` with ``beta: b -> c`` is
``beta & (b -> alpha)``, which by divisibility also equals ``(b -> beta) & alpha``.
The unit on ``a`` is ``a`` itself.

Both hom-level residuals have closed forms obtained from the two ways of
writing the composite:

* ``beta o alpha <= gamma``  iff  ``beta <= (b -> alpha) -> gamma``
* ``beta o alpha <= gamma``  iff  ``alpha <= (b -> beta) -> gamma``

each capped by the top of the target hom-set.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import TypeMismatch
from .tnorm import EPS, TNorm, close


@dataclass(frozen=True)
class DiagArrow:
    src: float
    dst: float
    value: float

    def __post_init__(self):
        if not (0 <= self.src <= 1 and 0 <= self.dst <= 1 and 0 <= self.value <= 1):
            raise ValueError(f"arrow {self} leaves [0, 1]")
        if self.value > min(self.src, self.dst) + EPS:
            raise ValueError(f"arrow value {self.value} exceeds min({self.src}, {self.dst})")

    @classmethod
    def unit(cls, a: float) -> "DiagArrow":
        return cls(a, a, a)

    @classmethod
    def top(cls, a: float, b: float) -> "DiagArrow":
        return cls(a, b, min(a, b))


def _same(x, y, what):
    if not close(x, y):
        raise TypeMismatch(f"{what}: {x} != {y}")


def compose(t: TNorm, beta: DiagArrow, alpha: DiagArrow) -> DiagArrow:
    """``beta o alpha`` for ``alpha: a -> b`` and ``beta: b -> c``."""
    _same(alpha.dst, beta.src, "compose needs alpha.dst == beta.src")
    b = beta.src
    value = t.tensor(beta.value, t.residuum(b, alpha.value))
    return DiagArrow(alpha.src, beta.dst, min(value, alpha.src, beta.dst))


def left_residual(t: TNorm, gamma: DiagArrow, alpha: DiagArrow) -> DiagArrow:
    """Largest ``beta: b -> c`` with ``beta o alpha <= gamma`` (``alpha: a -> b``, ``gamma: a -> c``)."""
    _same(gamma.src, alpha.src, "left_residual needs gamma.src == alpha.src")
    b, c = alpha.dst, gamma.dst
    value = t.residuum(t.residuum(b, alpha.value), gamma.value)
    return DiagArrow(b, c, min(b, c, value))


def right_residual(t: TNorm, beta: DiagArrow, gamma: DiagArrow) -> DiagArrow:
    """Largest ``alpha: a -> b`` with ``beta o alpha <= gamma`` (``beta: b -> c``, ``gamma: a -> c``)."""
    _same(beta.dst, gamma.dst, "right_residual needs beta.dst == gamma.dst")
    a, b = gamma.src, beta.src
    value = t.residuum(t.residuum(b, beta.value), gamma.value)
    return DiagArrow(a, b, min(a, b, value))
