"""Nets on finite categories, represented by eventually periodic sequences.

Why eventually periodic sequences are enough
--------------------------------------------
Let ``{x_l}`` be a net over any directed set in a category with finitely
many objects, and let ``S`` be the set of objects that occur cofinally.
Every other object stops occurring beyond some index, and finitely many
such indices have a common upper bound, so the tail of the net lives in
``S``.  For ``s, u`` in ``S`` and any index ``l`` there are ``m >= l`` with
``x_m = s`` and ``n >= m`` with ``x_n = u``; hence every pair in ``S x S``
(in both orders, and the diagonal) shows up cofinally among the forward
pairs ``m <= n``.  Consequently

* the forward hom net order-converges iff ``A`` is constant on ``S x S``,
  and the same holds for the unrestricted (biCauchy) hom net;
* each ``sup_l inf_{m >= l}`` expression reduces to a minimum over ``S``.

All of this depends only on ``S``, and every nonempty ``S`` is realized by
a sequence that cycles through it.  The prefix never matters.

On finite carriers forward Cauchy and biCauchy therefore coincide.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .category import DQCategory, PartialMetricSpace, _sub, to_pms
from .errors import NoType
from .presheaf import Coweight, Weight
from .tnorm import EPS, close


class EPSequence:
    """``prefix`` followed by ``cycle`` repeated forever (object indices)."""

    def __init__(self, over: DQCategory, prefix: Sequence = (), cycle: Sequence = (0,), name=None):
        self.over = over
        self.prefix = tuple(over.index(x) for x in prefix)
        self.cycle = tuple(over.index(x) for x in cycle)
        if not self.cycle:
            raise ValueError("cycle must be nonempty")
        self.name = name

    @property
    def support(self) -> list[int]:
        """Objects that occur infinitely often."""
        return sorted(set(self.cycle))

    def __getitem__(self, k: int) -> int:
        if k < len(self.prefix):
            return self.prefix[k]
        return self.cycle[(k - len(self.prefix)) % len(self.cycle)]

    def to_dict(self) -> dict:
        return {"name": self.name, "prefix": list(self.prefix), "cycle": list(self.cycle)}

    def __repr__(self):
        return f"EPSequence(prefix={list(self.prefix)}, cycle={list(self.cycle)})"


@dataclass(frozen=True)
class NetClass:
    forward_cauchy: bool
    bicauchy: bool
    net_type: float | None


def _block(s: EPSequence) -> np.ndarray:
    S = s.support
    return s.over.hom[np.ix_(S, S)]


def classify_net(s: EPSequence) -> NetClass:
    block = _block(s)
    constant = bool(np.all(close(block, block[0, 0])))
    self_homs = block.diagonal()
    if constant:
        net_type = float(block[0, 0])
    elif np.all(close(self_homs, self_homs[0])):
        net_type = float(self_homs[0])
    else:
        net_type = None
    return NetClass(constant, constant, net_type)


def liminf_type(s: EPSequence) -> float:
    """``sup_l inf_{m >= l} A(x_m, x_m)``; always exists."""
    return float(s.over.types[s.support].min())


def _require_type(s):
    kind = classify_net(s)
    if kind.net_type is None:
        raise NoType(f"self-homs of {s} do not converge")
    return kind.net_type


def generated_weight(s: EPSequence) -> Weight:
    """``x -> min_{u in S} A(x, u)`` with the net's type."""
    a = _require_type(s)
    values = s.over.hom[:, s.support].min(axis=1)
    return Weight(s.over, a, values, name=f"phi[{s.name}]" if s.name else None)


def generated_coweight(s: EPSequence) -> Coweight:
    """``x -> min_{u in S} A(u, x)`` with the net's type."""
    a = _require_type(s)
    values = s.over.hom[s.support, :].min(axis=0)
    return Coweight(s.over, a, values, name=f"psi[{s.name}]" if s.name else None)


def is_yoneda_limit(s: EPSequence, x) -> bool:
    c = s.over
    i = c.index(x)
    S = s.support
    if not close(c.hom[i, i], liminf_type(s)):
        return False
    return bool(np.all(close(c.hom[i, :], c.hom[S, :].min(axis=0))))


def is_bilimit(s: EPSequence, x) -> bool:
    c = s.over
    i = c.index(x)
    S = s.support
    t = c.hom[i, i]
    return bool(close(t, c.hom[S, i].min()) and close(t, c.hom[i, S].min()) and close(t, liminf_type(s)))


def yoneda_limits(s: EPSequence) -> list[int]:
    return [x for x in range(s.over.size) if is_yoneda_limit(s, x)]


def bilimits(s: EPSequence) -> list[int]:
    return [x for x in range(s.over.size) if is_bilimit(s, x)]


def weak_fc_criterion(s: EPSequence, pms: PartialMetricSpace | None = None) -> bool:
    """Whether ``X(x_m, x_n) - X(x_m, x_m) -> 0`` along forward pairs.

    On an eventually periodic sequence this says ``X(u, v) = X(u, u)`` for
    all ``u, v`` in the support.
    """
    if pms is None:
        pms = to_pms(s.over)
    S = s.support
    block = pms.p[np.ix_(S, S)]
    gaps = _sub(block, block.diagonal()[:, None])
    return bool(np.all(np.abs(gaps) <= EPS))
