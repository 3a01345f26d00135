"""Finite ordered fuzzy sets (categories enriched in the diagonal quantaloid).

A :class:`DQCategory` is a hom matrix ``A`` over a t-norm.  The type of
object ``i`` is ``A[i, i]``.  Validity means

(i)   ``A[i, j] <= min(t[i], t[j])``
(ii)  ``t[i] <= A[i, i]`` (automatic, types are read off the diagonal)
(iii) ``(t[j] -> A[j, k]) & A[i, j] <= A[i, k]``

Categories over an infinite carrier (such as ``[0, 1]`` itself) are only
represented through finite grids.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import InvalidInstance, PreconditionError, TnormMismatch, UnboundedError, UnknownObject
from .tnorm import EPS, LUKASIEWICZ, LUKASIEWICZ_KIND, PRODUCT_KIND, TNorm


@dataclass(frozen=True)
class Violation:
    condition: str
    indices: tuple
    lhs: float
    rhs: float

    def __str__(self):
        return f"{self.condition} at {self.indices}: {self.lhs:.12g} vs {self.rhs:.12g}"

    def to_dict(self):
        return {"condition": self.condition, "indices": list(self.indices), "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class ValidationReport:
    subject: str = ""
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, condition, indices, lhs, rhs):
        self.violations.append(Violation(condition, tuple(int(i) for i in indices), float(lhs), float(rhs)))

    def extend(self, other: "ValidationReport"):
        self.violations.extend(other.violations)

    def raise_if_invalid(self):
        if not self.ok:
            raise InvalidInstance(f"{self.subject or 'instance'} is invalid: {self.violations[0]}", self)

    def to_dict(self):
        return {"subject": self.subject, "ok": self.ok, "violations": [v.to_dict() for v in self.violations]}

    def __str__(self):
        if self.ok:
            return f"{self.subject}: valid"
        lines = [f"{self.subject}: {len(self.violations)} violation(s)"]
        lines += [f"  {v}" for v in self.violations]
        return "\n".join(lines)


def _frozen(arr) -> np.ndarray:
    arr = np.array(arr, dtype=float)
    arr.setflags(write=False)
    return arr


def _report_mask(report, condition, mask, lhs, rhs):
    for idx in zip(*np.nonzero(mask)):
        report.add(condition, idx, lhs[idx], rhs[idx])


class DQCategory:
    """A finite ordered fuzzy set valued in ``([0,1], tnorm, 1)``."""

    def __init__(self, tnorm: TNorm, hom, objects: Sequence[str] | None = None):
        hom = _frozen(hom)
        if hom.ndim != 2 or hom.shape[0] != hom.shape[1]:
            raise ValueError(f"hom must be square, got shape {hom.shape}")
        n = hom.shape[0]
        if objects is None:
            objects = [f"x{i}" for i in range(n)]
        objects = tuple(str(o) for o in objects)
        if len(objects) != n or len(set(objects)) != n:
            raise ValueError("objects must be n distinct names")
        self.tnorm = tnorm
        self.hom = hom
        self.objects = objects

    @property
    def types(self) -> np.ndarray:
        return self.hom.diagonal()

    @property
    def size(self) -> int:
        return len(self.objects)

    def index(self, x) -> int:
        if isinstance(x, (int, np.integer)):
            if not 0 <= x < self.size:
                raise UnknownObject(x)
            return int(x)
        try:
            return self.objects.index(x)
        except ValueError:
            raise UnknownObject(x) from None

    def isolated(self) -> list[int]:
        """Objects of type 0."""
        return [i for i, t in enumerate(self.types) if t <= EPS]

    def validate(self) -> ValidationReport:
        report = ValidationReport("category")
        A, t, T = self.hom, self.types, self.tnorm
        _report_mask(report, "range", (A < -EPS) | (A > 1 + EPS), A, np.clip(A, 0, 1))
        bound = np.minimum(t[:, None], t[None, :])
        _report_mask(report, "(i) A(x,y) <= tx ^ ty", A > bound + EPS, A, bound)
        # lhs[i, j, k] = (t[j] -> A[j, k]) & A[i, j]
        lhs = T.tensor(T.residuum(t[:, None], A)[None, :, :], A[:, :, None])
        rhs = np.broadcast_to(A[:, None, :], lhs.shape)
        _report_mask(report, "(iii) (ty -> A(y,z)) & A(x,y) <= A(x,z)", lhs > rhs + EPS, lhs, rhs)
        return report

    def check(self) -> "DQCategory":
        self.validate().raise_if_invalid()
        return self

    def to_dict(self) -> dict:
        return {"tnorm": self.tnorm.to_dict(), "objects": list(self.objects), "hom": self.hom.tolist()}

    def __eq__(self, other):
        return (isinstance(other, DQCategory) and self.tnorm == other.tnorm
                and self.objects == other.objects and self.hom.shape == other.hom.shape
                and bool(np.all(np.abs(self.hom - other.hom) <= EPS)))

    __hash__ = None

    def __repr__(self):
        return f"DQCategory({self.tnorm}, objects={list(self.objects)}, hom={self.hom.tolist()})"


def transitive_closure(tnorm: TNorm, hom) -> np.ndarray:
    """Raise ``hom`` to the least matrix satisfying condition (iii).

    Composites along paths of length at most ``n`` suffice, so ``n`` rounds
    always reach the fixpoint.  Condition (i) is preserved.
    """
    A = np.array(hom, dtype=float)
    n = A.shape[0]
    t = A.diagonal().copy()
    for _ in range(max(n, 1)):
        R = tnorm.residuum(t[:, None], A)
        comp = tnorm.tensor(R[None, :, :], A[:, :, None]).max(axis=1)
        new = np.maximum(A, comp)
        if np.array_equal(new, A):
            break
        A = new
    np.fill_diagonal(A, t)
    return A


# -- constructors -----------------------------------------------------------

def min_category(t: TNorm, values: Sequence[float], objects=None) -> DQCategory:
    """Objects are the given values, ``A(x, y) = min(x, y)``."""
    v = np.asarray(values, dtype=float)
    if objects is None:
        objects = [f"{x:g}" for x in v]
        if len(set(objects)) != len(objects):
            objects = [f"x{i}" for i in range(len(v))]
    return DQCategory(t, np.minimum(v[:, None], v[None, :]), objects)


def idempotent_counterexample(t: TNorm, a: float, b: float):
    """Two-object category, Cauchy weight and its left adjoint that separate
    Cauchy weights from forward Cauchy ones.

    ``A(x,x) = b`` and every other hom is 0; ``phi = (a, 0)`` and
    ``psi = (a, 0)``, both of type ``a``.  Needs ``a`` idempotent and
    ``0 < a < b < 1``.
    """
    from .presheaf import Coweight, Weight

    if not 0 < a < b < 1:
        raise PreconditionError(f"need 0 < a < b < 1, got a={a}, b={b}")
    if not t.is_idempotent(a):
        raise PreconditionError(f"{a} is not idempotent for {t}")
    cat = DQCategory(t, [[b, 0.0], [0.0, 0.0]], ["x", "y"])
    phi = Weight(cat, a, [a, 0.0], name="phi")
    psi = Coweight(cat, a, [a, 0.0], name="psi")
    return cat, phi, psi


def final_prop_category(t: TNorm, a: float, n: int):
    """Grid version of the global category ``([0,1], ->)`` with the weight
    ``phi(0) = 1``, ``phi(x) = a`` elsewhere.

    Objects are ``0, 1/n, ..., 1``; ``A(x, y) = x -> y``; all types are 1
    and so is the type of ``phi`` (forced by ``phi(0) = 1``).
    """
    from .presheaf import Weight

    if n < 1:
        raise PreconditionError("grid resolution must be positive")
    if not 0 < a < 1 or not t.is_idempotent(a):
        raise PreconditionError(f"need an idempotent a in (0, 1), got {a}")
    grid = np.linspace(0.0, 1.0, n + 1)
    hom = t.residuum(grid[:, None], grid[None, :])
    cat = DQCategory(t, hom, [f"{x:g}" for x in grid])
    values = np.full(n + 1, a)
    values[0] = 1.0
    return cat, Weight(cat, 1.0, values, name="phi")


# -- partial metric spaces --------------------------------------------------

def _sub(x, y):
    """``x - y`` with the convention ``inf - inf = 0``."""
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    with np.errstate(invalid="ignore"):
        d = x - y
    return np.where(np.isinf(x) & np.isinf(y), 0.0, d)


class PartialMetricSpace:
    """Generalized partial metric: ``p(x,x), p(y,y) <= p(x,y)`` and
    ``p(y,z) + (p(x,y) - p(y,y)) >= p(x,z)``.  ``np.inf`` is allowed."""

    def __init__(self, p, objects: Sequence[str] | None = None):
        p = _frozen(p)
        if p.ndim != 2 or p.shape[0] != p.shape[1]:
            raise ValueError("distance matrix must be square")
        n = p.shape[0]
        self.p = p
        self.objects = tuple(objects) if objects is not None else tuple(f"x{i}" for i in range(n))

    @property
    def size(self) -> int:
        return self.p.shape[0]

    @property
    def self_distance(self) -> np.ndarray:
        return self.p.diagonal()

    @property
    def bounded(self) -> bool:
        return bool(np.all(self.p <= 1 + EPS))

    def validate(self) -> ValidationReport:
        report = ValidationReport("partial metric")
        p, d = self.p, self.self_distance
        _report_mask(report, "p >= 0", p < -EPS, p, np.zeros_like(p))
        _report_mask(report, "p(x,x) <= p(x,y)", d[:, None] > p + EPS, np.broadcast_to(d[:, None], p.shape), p)
        _report_mask(report, "p(y,y) <= p(x,y)", d[None, :] > p + EPS, np.broadcast_to(d[None, :], p.shape), p)
        # lhs[i, j, k] = p[j, k] + (p[i, j] - p[j, j])
        # inf + -inf only arises when p(y,y) > p(x,y), which is reported above
        with np.errstate(invalid="ignore"):
            lhs = p[None, :, :] + _sub(p, d[None, :])[:, :, None]
            rhs = np.broadcast_to(p[:, None, :], lhs.shape)
            bad = lhs < rhs - EPS
        _report_mask(report, "p(y,z) + (p(x,y) - p(y,y)) >= p(x,z)", bad, lhs, rhs)
        return report

    def __repr__(self):
        return f"PartialMetricSpace({self.p.tolist()})"


def to_pms(c: DQCategory) -> PartialMetricSpace:
    """Associated partial metric: ``1 - A`` for Lukasiewicz, ``-ln A`` for product."""
    kind = c.tnorm.kind
    if kind == LUKASIEWICZ_KIND:
        return PartialMetricSpace(1.0 - c.hom, c.objects)
    if kind == PRODUCT_KIND:
        return PartialMetricSpace(to_distance(c.tnorm, c.hom), c.objects)
    raise TnormMismatch(f"no partial-metric encoding for {c.tnorm}")


def from_pms(x: PartialMetricSpace, tnorm: TNorm = LUKASIEWICZ) -> DQCategory:
    if tnorm.kind == LUKASIEWICZ_KIND:
        if not x.bounded:
            raise UnboundedError("Lukasiewicz decoding needs p <= 1")
        return DQCategory(tnorm, 1.0 - x.p, x.objects)
    if tnorm.kind == PRODUCT_KIND:
        return DQCategory(tnorm, np.exp(-x.p), x.objects)
    raise TnormMismatch(f"no partial-metric encoding for {tnorm}")


def to_distance(tnorm: TNorm, values):
    """Truth values to distances under the encoding of ``tnorm``."""
    v = np.asarray(values, dtype=float)
    if tnorm.kind == LUKASIEWICZ_KIND:
        out = 1.0 - v
    elif tnorm.kind == PRODUCT_KIND:
        with np.errstate(divide="ignore"):
            out = np.where(v <= 0.0, np.inf, -np.log(np.maximum(v, np.finfo(float).tiny)))
        out = np.maximum(out, 0.0)
    else:
        raise TnormMismatch(f"no partial-metric encoding for {tnorm}")
    return float(out) if out.ndim == 0 else out

