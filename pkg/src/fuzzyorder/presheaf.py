"""Weights, coweights and distributors on finite categories.

A weight ``phi`` of type ``a`` on ``A`` is a distributor ``A -|-> *_a``:

    phi[i] <= min(t[i], a)            (t[j] -> phi[j]) & A[i, j] <= phi[i]

and a coweight ``psi`` of type ``b`` is a distributor ``*_b -|-> A``:

    psi[i] <= min(t[i], b)            (t[i] -> A[i, j]) & psi[i] <= psi[j]

The composite ``phi o psi`` of a weight after a coweight is a single truth
value, ``max_i (t[i] -> phi[i]) & psi[i]``.  The hom of the presheaf
category is ``P(phi, chi) = t_chi ^ min_i (phi[i] -> chi[i]) & t_phi``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .category import DQCategory, ValidationReport, _frozen, _report_mask
from .errors import CategoryMismatch, TypeMismatch
from .tnorm import EPS, close


class _Vector:
    kind = "vector"

    def __init__(self, over: DQCategory, wtype: float, values, name: str | None = None):
        values = _frozen(values)
        if values.shape != (over.size,):
            raise ValueError(f"{self.kind} needs {over.size} values, got shape {values.shape}")
        self.over = over
        self.wtype = float(wtype)
        self.values = values
        self.name = name

    @property
    def is_trivial(self) -> bool:
        return self.wtype <= EPS

    def _validate_bounds(self, report):
        t, v = self.over.types, self.values
        if not -EPS <= self.wtype <= 1 + EPS:
            report.add("type in [0,1]", (), self.wtype, min(max(self.wtype, 0.0), 1.0))
        bound = np.minimum(t, self.wtype)
        _report_mask(report, f"(1) {self.kind}[x] <= tx ^ type", v > bound + EPS, v, bound)
        _report_mask(report, f"{self.kind}[x] >= 0", v < -EPS, v, np.zeros_like(v))

    def close_to(self, other, tol=EPS) -> bool:
        return ((self.over is other.over or self.over == other.over) and abs(self.wtype - other.wtype) <= tol
                and bool(np.all(np.abs(self.values - other.values) <= tol)))

    def to_dict(self) -> dict:
        return {"name": self.name, "type": self.wtype, "values": self.values.tolist()}

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"{type(self).__name__}{label}(type={self.wtype:g}, values={self.values.tolist()})"


class Weight(_Vector):
    """A presheaf ``A -|-> *_type``."""

    kind = "phi"

    def validate(self) -> ValidationReport:
        report = ValidationReport(f"weight {self.name or ''}".strip())
        self._validate_bounds(report)
        T, A, t, v = self.over.tnorm, self.over.hom, self.over.types, self.values
        lhs = T.tensor(T.residuum(t, v)[None, :], A)  # [i, j]
        rhs = np.broadcast_to(v[:, None], lhs.shape)
        _report_mask(report, "(3) (ty -> phi(y)) & A(x,y) <= phi(x)", lhs > rhs + EPS, lhs, rhs)
        return report


class Coweight(_Vector):
    """A co-presheaf ``*_type -|-> A``."""

    kind = "psi"

    def validate(self) -> ValidationReport:
        report = ValidationReport(f"coweight {self.name or ''}".strip())
        self._validate_bounds(report)
        T, A, t, v = self.over.tnorm, self.over.hom, self.over.types, self.values
        lhs = T.tensor(T.residuum(t[:, None], A), v[:, None])  # [i, j]
        rhs = np.broadcast_to(v[None, :], lhs.shape)
        _report_mask(report, "(2) (tx -> A(x,y)) & psi(x) <= psi(y)", lhs > rhs + EPS, lhs, rhs)
        return report


@dataclass(eq=False)
class Distributor:
    src: DQCategory
    dst: DQCategory
    values: np.ndarray

    def __post_init__(self):
        self.values = _frozen(self.values)
        if self.values.shape != (self.src.size, self.dst.size):
            raise ValueError("distributor matrix has the wrong shape")

    def validate(self) -> ValidationReport:
        report = ValidationReport("distributor")
        if self.src.tnorm != self.dst.tnorm:
            report.add("same t-norm", (), 0.0, 1.0)
            return report
        T, D = self.src.tnorm, self.values
        ta, tb = self.src.types, self.dst.types
        bound = np.minimum(ta[:, None], tb[None, :])
        _report_mask(report, "(1) phi(x,y) <= tx ^ ty", D > bound + EPS, D, bound)
        # (2) B(y', y) o phi(x, y') <= phi(x, y);  lhs[i, j', j]
        lhs = T.tensor(T.residuum(tb[:, None], self.dst.hom)[None, :, :], D[:, :, None])
        rhs = np.broadcast_to(D[:, None, :], lhs.shape)
        _report_mask(report, "(2) B(y',y) o phi(x,y') <= phi(x,y)", lhs > rhs + EPS, lhs, rhs)
        # (3) phi(x', y) o A(x, x') <= phi(x, y);  lhs[i, i', j]
        lhs = T.tensor(T.residuum(ta[:, None], D)[None, :, :], self.src.hom[:, :, None])
        rhs = np.broadcast_to(D[:, None, :], lhs.shape)
        _report_mask(report, "(3) phi(x',y) o A(x,x') <= phi(x,y)", lhs > rhs + EPS, lhs, rhs)
        return report

    def leq(self, other) -> bool:
        other = other.values if isinstance(other, Distributor) else np.asarray(other)
        return bool(np.all(self.values <= other + EPS))


def identity(c: DQCategory) -> Distributor:
    return Distributor(c, c, c.hom)


def _same_category(*items):
    first = items[0].over
    for item in items[1:]:
        if item.over is not first and item.over != first:
            raise CategoryMismatch("weights live on different categories")
    return first


# -- composition and homs ---------------------------------------------------

def compose_wc(phi: Weight, psi: Coweight) -> float:
    """The truth value ``phi o psi``."""
    c = _same_category(phi, psi)
    T = c.tnorm
    return float(np.max(T.tensor(T.residuum(c.types, phi.values), psi.values), initial=0.0))


def compose_cw(psi: Coweight, phi: Weight) -> Distributor:
    """``psi o phi : A -|-> A`` with entries ``(a -> psi[j]) & phi[i]``."""
    c = _same_category(phi, psi)
    if not close(phi.wtype, psi.wtype):
        raise TypeMismatch(f"types differ: {phi.wtype} vs {psi.wtype}")
    T = c.tnorm
    return Distributor(c, c, T.tensor(T.residuum(phi.wtype, psi.values)[None, :], phi.values[:, None]))


def phom(phi: Weight, chi: Weight) -> float:
    """Hom in the presheaf category from ``phi`` to ``chi``."""
    c = _same_category(phi, chi)
    T = c.tnorm
    inner = T.tensor(T.residuum(phi.values, chi.values), phi.wtype)
    return float(min(chi.wtype, np.min(inner, initial=1.0)))


def yoneda(c: DQCategory, x) -> Weight:
    i = c.index(x)
    return Weight(c, c.types[i], c.hom[:, i], name=f"y({c.objects[i]})")


def coyoneda(c: DQCategory, x) -> Coweight:
    i = c.index(x)
    return Coweight(c, c.types[i], c.hom[i, :], name=f"coy({c.objects[i]})")


def trivial_weight(c: DQCategory) -> Weight:
    return Weight(c, 0.0, np.zeros(c.size), name="trivial")


def supremum(phi: Weight) -> list[int]:
    """Every object that is a supremum of ``phi`` (empty if none).

    ``x`` qualifies when ``t[x] = type(phi)`` and ``A(x, y) = P(phi, y(y))``
    for all ``y``.  Suprema are unique only up to isomorphism, so all
    witnesses are reported.
    """
    c = phi.over
    target = np.array([phom(phi, yoneda(c, y)) for y in range(c.size)])
    hits = []
    for x in range(c.size):
        if close(c.types[x], phi.wtype) and np.all(close(c.hom[x], target)):
            hits.append(x)
    return hits


def canonical_left_adjoint(phi: Weight) -> Coweight:
    """The largest coweight ``psi`` of type ``type(phi)`` with ``psi o phi <= A``.

    ``psi[y] = min(a, t[y], min_x ((a -> phi[x]) -> A[x, y]))``, the
    diagonal left residual of ``A(x, y)`` by ``phi(x)`` taken over all ``x``.
    Any left adjoint of ``phi`` lies below it.
    """
    c, a = phi.over, phi.wtype
    T = c.tnorm
    res = T.residuum(T.residuum(a, phi.values)[:, None], c.hom)  # [x, y]
    values = np.minimum(np.minimum(a, c.types), np.min(res, axis=0, initial=1.0))
    return Coweight(c, a, values, name=f"lmax({phi.name})" if phi.name else None)


def top_coweight(c: DQCategory, b: float) -> Coweight:
    return Coweight(c, b, np.minimum(b, c.types), name=f"top({b:g})")


def _raise_coweight(c, v):
    T = c.tnorm
    spread = T.tensor(T.residuum(c.types[:, None], c.hom), v[:, None]).max(axis=0)
    return np.maximum(v, spread)


def _raise_weight(c, v):
    T = c.tnorm
    spread = T.tensor(T.residuum(c.types, v)[None, :], c.hom).max(axis=1)
    return np.maximum(v, spread)


def coweight_closure(c: DQCategory, b: float, raw) -> Coweight:
    """Least coweight of type ``b`` above ``raw`` clamped to ``min(b, t)``.

    One raising pass is enough because the hom of ``c`` is already
    transitive.
    """
    v = np.minimum(np.clip(np.asarray(raw, dtype=float), 0.0, 1.0), np.minimum(b, c.types))
    return Coweight(c, b, _raise_coweight(c, v))


def weight_closure(c: DQCategory, a: float, raw) -> Weight:
    """Least weight of type ``a`` above ``raw`` clamped to ``min(a, t)``."""
    v = np.minimum(np.clip(np.asarray(raw, dtype=float), 0.0, 1.0), np.minimum(a, c.types))
    return Weight(c, a, _raise_weight(c, v))


def coweight_meet(psi1: Coweight, psi2: Coweight) -> Coweight:
    """Pointwise minimum; the meet of two coweights of one type."""
    c = _same_category(psi1, psi2)
    if not close(psi1.wtype, psi2.wtype):
        raise TypeMismatch("meets need coweights of equal type")
    return Coweight(c, psi1.wtype, np.minimum(psi1.values, psi2.values))


def cap(item, b: float):
    """Retype a (co)weight to ``b``, clamping values at ``b``.  The result is
    again a (co)weight, whether ``b`` is above or below the old type."""
    return type(item)(item.over, b, np.minimum(item.values, b), name=item.name)
