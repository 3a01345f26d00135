"""Classification of weights and completeness of finite categories.

Cauchy is decided exactly through the canonical left adjoint candidate.
Forward Cauchy (equivalently biCauchy, on a finite carrier) is decided by
enumerating the supports ``S`` on which the hom is constant.  Flatness
quantifies over all coweights, so it gets a three-valued verdict: it is
certified only through a sufficient condition (Cauchy, or forward Cauchy)
and refuted only by a concrete failing coweight or type.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, NamedTuple

import numpy as np

from .category import DQCategory, _sub, to_distance, to_pms
from .errors import ReconstructionFailed, TnormMismatch
from .nets import EPSequence, classify_net, generated_coweight, generated_weight
from .presheaf import (Coweight, Weight, canonical_left_adjoint, cap, compose_cw, compose_wc,
                       coweight_closure, supremum, trivial_weight, weight_closure, yoneda)
from .tnorm import EPS, LUKASIEWICZ_KIND, PRODUCT_KIND, close

DEFAULT_RESOLUTION = 20


# -- Cauchy ----------------------------------------------------------------

def left_adjoint(phi: Weight) -> Coweight | None:
    """A left adjoint of ``phi`` if one exists."""
    psi = canonical_left_adjoint(phi)
    if compose_wc(phi, psi) >= phi.wtype - EPS:
        return psi
    return None


def is_cauchy(phi: Weight) -> bool:
    return left_adjoint(phi) is not None


# -- forward Cauchy / biCauchy ---------------------------------------------

class FCWeight(NamedTuple):
    support: tuple[int, ...]
    wtype: float
    phi: Weight
    supports: tuple[tuple[int, ...], ...] = ()
    """Every constant block generating ``phi``."""


def constant_supports(c: DQCategory) -> Iterable[tuple[tuple[int, ...], float]]:
    """Every nonempty ``S`` on which the hom is constant, with that constant."""
    A = c.hom
    for r in range(1, c.size + 1):
        for S in itertools.combinations(range(c.size), r):
            block = A[np.ix_(S, S)]
            if np.all(close(block, block[0, 0])):
                yield S, float(block[0, 0])


def forward_cauchy_weights(c: DQCategory) -> list[FCWeight]:
    """Weights generated by forward Cauchy nets, one per distinct value."""
    found: list[FCWeight] = []
    for S, a in constant_supports(c):
        phi = generated_weight(EPSequence(c, (), S, name="S" + "".join(map(str, S))))
        for k, f in enumerate(found):
            if f.phi.close_to(phi):
                found[k] = f._replace(supports=f.supports + (S,))
                break
        else:
            found.append(FCWeight(S, a, phi, (S,)))
    return found


def _fc_match(phi: Weight):
    for f in forward_cauchy_weights(phi.over):
        if f.phi.close_to(phi):
            return f
    return None


def is_forward_cauchy_weight(phi: Weight) -> bool:
    return _fc_match(phi) is not None


def is_bicauchy_weight(phi: Weight) -> bool:
    """Checked through the net classifier on every support, independently of
    :func:`forward_cauchy_weights`."""
    c = phi.over
    for r in range(1, c.size + 1):
        for S in itertools.combinations(range(c.size), r):
            s = EPSequence(c, (), S)
            if classify_net(s).bicauchy and generated_weight(s).close_to(phi):
                return True
    return False


def explicit_adjoint(f: FCWeight) -> Coweight:
    """The coweight generated by the support, which is a left adjoint of ``f.phi``."""
    return generated_coweight(EPSequence(f.phi.over, (), f.support))


# -- flatness ----------------------------------------------------------------

class FlatStatus(str, Enum):
    CERTIFIED = "CertifiedFlat"
    REFUTED = "RefutedFlat"
    UNKNOWN = "Unknown"


@dataclass
class FlatVerdict:
    status: FlatStatus
    evidence: dict = field(default_factory=dict)

    def to_dict(self):
        return {"status": self.status.value, "evidence": self.evidence}


def critical_values(phi: Weight) -> np.ndarray:
    c = phi.over
    pts = {0.0, 1.0, phi.wtype, *c.types.tolist(), *phi.values.tolist(), *c.tnorm.piece_endpoints()}
    pts = np.unique(np.clip(np.array(sorted(pts)), 0.0, 1.0))
    mids = (pts[:-1] + pts[1:]) / 2
    return np.unique(np.concatenate([pts, mids]))


def _compose_batch(c, phi_res, psis):
    """``phi o psi`` for each row of ``psis``; ``phi_res = t -> phi``."""
    return c.tnorm.tensor(phi_res[None, :], psis).max(axis=1)


def _closure_batch(c, bs, raw):
    T, t = c.tnorm, c.types
    v = np.minimum(raw, np.minimum(bs[:, None], t[None, :]))
    R = T.residuum(t[:, None], c.hom)
    spread = T.tensor(R[None, :, :], v[:, :, None]).max(axis=1)
    return np.maximum(v, spread)


def _coweights_valid(c, bs, psis):
    T, t = c.tnorm, c.types
    if np.any(psis > np.minimum(bs[:, None], t[None, :]) + EPS):
        return False
    lhs = T.tensor(T.residuum(t[:, None], c.hom)[None, :, :], psis[:, :, None])
    return bool(np.all(lhs <= psis[:, None, :] + EPS))


def top_preservation_failure(phi: Weight) -> dict | None:
    """Exact check of ``phi o (b ^ t) = b ^ type(phi)`` over the critical grid."""
    c = phi.over
    bs = critical_values(phi)
    tops = np.minimum(bs[:, None], c.types[None, :])
    lhs = _compose_batch(c, c.tnorm.residuum(c.types, phi.values), tops)
    rhs = np.minimum(bs, phi.wtype)
    if np.any(lhs < rhs - EPS):
        k = int(np.argmax(rhs - lhs))
        return {"check": "top", "b": float(bs[k]), "lhs": float(lhs[k]), "rhs": float(rhs[k])}
    return None


def _coyoneda_pairs(phi: Weight):
    c = phi.over
    n = c.size
    bs, p1, p2 = [], [], []
    for i in range(n):
        for j in range(i, n):
            for b in {c.types[i], c.types[j], phi.wtype}:
                bs.append(b)
                p1.append(np.minimum(c.hom[i], b))
                p2.append(np.minimum(c.hom[j], b))
    return np.array(bs), np.array(p1), np.array(p2)


def _random_pairs(phi: Weight, budget: int, rng: np.random.Generator):
    c = phi.over
    crit = critical_values(phi)
    bs = np.where(rng.random(budget) < 0.5, rng.choice(crit, budget), rng.random(budget))
    raws = []
    for _ in range(2):
        raw = rng.random((budget, c.size))
        raw[rng.random((budget, c.size)) < 0.3] = 0.0
        raws.append(raw)
    return bs, _closure_batch(c, bs, raws[0]), _closure_batch(c, bs, raws[1])


def meet_preservation_failure(phi: Weight, budget: int = 1000, seed: int = 0) -> dict | None:
    """Search for coweights ``psi1, psi2`` of one type with
    ``phi o (psi1 ^ psi2) < (phi o psi1) ^ (phi o psi2)``.

    Checks every pair of co-representables (retyped to a shared type) and
    ``budget`` seeded random pairs built by :func:`coweight_closure`.
    """
    c = phi.over
    phi_res = c.tnorm.residuum(c.types, phi.values)
    rng = np.random.default_rng(seed)
    for source, (bs, p1, p2) in (("coyoneda", _coyoneda_pairs(phi)),
                                 ("random", _random_pairs(phi, budget, rng))):
        if len(bs) == 0:
            continue
        meet = np.minimum(p1, p2)
        if not _coweights_valid(c, bs, meet):
            raise AssertionError("pointwise meet of coweights is not a coweight")
        lhs = _compose_batch(c, phi_res, meet)
        rhs = np.minimum(_compose_batch(c, phi_res, p1), _compose_batch(c, phi_res, p2))
        bad = np.nonzero(lhs < rhs - EPS)[0]
        if bad.size:
            k = int(bad[0])
            return {"check": "meet", "source": source, "b": float(bs[k]), "psi1": p1[k].tolist(),
                    "psi2": p2[k].tolist(), "lhs": float(lhs[k]), "rhs": float(rhs[k])}
    return None


def refute_flat(phi: Weight, budget: int = 1000, seed: int = 0) -> dict | None:
    return top_preservation_failure(phi) or meet_preservation_failure(phi, budget, seed)


def verify_refutation(phi: Weight, evidence: dict) -> bool:
    """Recompute a refutation payload from scratch."""
    c = phi.over
    b = evidence["b"]
    if evidence["check"] == "top":
        top = Coweight(c, b, np.minimum(b, c.types))
        return compose_wc(phi, top) < min(b, phi.wtype) - EPS
    psi1 = Coweight(c, b, evidence["psi1"])
    psi2 = Coweight(c, b, evidence["psi2"])
    if not (psi1.validate().ok and psi2.validate().ok):
        return False
    meet = Coweight(c, b, np.minimum(psi1.values, psi2.values))
    return compose_wc(phi, meet) < min(compose_wc(phi, psi1), compose_wc(phi, psi2)) - EPS


def check_flat(phi: Weight, budget: int = 1000, seed: int = 0) -> FlatVerdict:
    if is_cauchy(phi):
        return FlatVerdict(FlatStatus.CERTIFIED, {"route": "cauchy"})
    if is_forward_cauchy_weight(phi):
        return FlatVerdict(FlatStatus.CERTIFIED, {"route": "forward_cauchy"})
    witness = refute_flat(phi, budget, seed)
    if witness is not None:
        return FlatVerdict(FlatStatus.REFUTED, witness)
    return FlatVerdict(FlatStatus.UNKNOWN, {"budget": budget, "seed": seed})


def classify_weight(phi: Weight, budget: int = 1000, seed: int = 0) -> dict:
    fc, bi = is_forward_cauchy_weight(phi), is_bicauchy_weight(phi)
    assert fc == bi, "forward Cauchy and biCauchy must coincide on finite carriers"
    return {"cauchy": is_cauchy(phi), "forward_cauchy": fc, "bicauchy": bi,
            "flat": check_flat(phi, budget, seed).to_dict()}


# -- completeness ----------------------------------------------------------

class Mode(str, Enum):
    YONEDA = "yoneda"
    BI = "bi"
    CAUCHY = "cauchy"
    FLAT = "flat"


@dataclass
class CompletenessReport:
    mode: Mode
    complete: str  # "Yes" | "No" | "Unknown"
    exact: bool
    witnesses: list = field(default_factory=list)

    def to_dict(self):
        return {"mode": self.mode.value, "complete": self.complete, "exact": self.exact,
                "witnesses": self.witnesses}


def _weight_payload(phi: Weight, **extra):
    return {"name": phi.name, "type": phi.wtype, "values": phi.values.tolist(), **extra}


def _candidate_weights(c: DQCategory, budget: int, seed: int):
    """Structured plus random weights for the refutation-only search."""
    pts = {0.0, 1.0, *c.types.tolist(), *np.unique(c.hom).tolist(), *c.tnorm.piece_endpoints()}
    pts = np.array(sorted(pts))
    levels = np.unique(np.concatenate([pts, (pts[:-1] + pts[1:]) / 2]))
    for b in levels:
        for x in range(c.size):
            w = cap(yoneda(c, x), float(b))
            w.name = f"y({c.objects[x]})|{b:g}"
            yield w
    rng = np.random.default_rng(seed)
    for k in range(budget):
        a = float(rng.choice(levels)) if rng.random() < 0.5 else float(rng.random())
        w = weight_closure(c, a, rng.random(c.size))
        w.name = f"random#{k}"
        yield w


def completeness(c: DQCategory, mode, candidates: Iterable[Weight] = (), budget: int = 200,
                 seed: int = 0) -> CompletenessReport:
    """Decide (or semi-decide) one of the four completeness notions.

    Yoneda and bicompleteness are exact: every forward Cauchy weight must have
    a supremum.  Cauchy and flat completeness are exact when the t-norm has no
    non-trivial idempotent (an isolated element plus suprema of all forward
    Cauchy weights).  Otherwise only refutations are possible.
    """
    mode = Mode(mode)
    missing = [f for f in forward_cauchy_weights(c) if not supremum(f.phi)]
    fc_witnesses = [_weight_payload(f.phi, support=list(f.support)) for f in missing]
    if mode in (Mode.YONEDA, Mode.BI):
        return CompletenessReport(mode, "No" if missing else "Yes", True, fc_witnesses)

    if not c.isolated():
        return CompletenessReport(mode, "No", True, [_weight_payload(trivial_weight(c), reason="no isolated element")])
    if missing:
        return CompletenessReport(mode, "No", True, fc_witnesses)
    if not c.tnorm.has_nontrivial_idempotent():
        return CompletenessReport(mode, "Yes", True)

    pool = itertools.chain(candidates, _candidate_weights(c, budget, seed))
    for phi in pool:
        if not phi.validate().ok or supremum(phi):
            continue
        if is_cauchy(phi):
            return CompletenessReport(mode, "No", True, [_weight_payload(phi, reason="cauchy without supremum")])
        if mode is Mode.FLAT and check_flat(phi, budget, seed).status is FlatStatus.CERTIFIED:
            return CompletenessReport(mode, "No", True, [_weight_payload(phi, reason="flat without supremum")])
    return CompletenessReport(mode, "Unknown", False)


# -- partial metric encodings ----------------------------------------------

def _pms_data(phi: Weight):
    c = phi.over
    if c.tnorm.kind not in (LUKASIEWICZ_KIND, PRODUCT_KIND):
        raise TnormMismatch(f"no partial-metric encoding for {c.tnorm}")
    X = to_pms(c).p
    fp = to_distance(c.tnorm, phi.values)
    support = np.nonzero(phi.values > EPS)[0]
    gap = _sub(fp, X.diagonal())
    return X, fp, to_distance(c.tnorm, phi.wtype), support, gap


@dataclass
class PMSFlatConditions:
    applicable: bool
    a_holds: bool = False
    b_holds: bool = False
    witnesses: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.applicable and self.a_holds and self.b_holds


def pms_flat_conditions(phi: Weight, resolution: int = DEFAULT_RESOLUTION) -> PMSFlatConditions:
    """Check the two metric conditions characterizing flat weights.

    With ``X`` the associated partial metric, ``phi'`` the transformed weight
    and ``gap(x) = phi'(x) - X(x, x)`` over points with ``phi(x) > 0``:

    (a) ``min gap = 0``;
    (b) for every ``x1, x2`` and ``delta_i = gap(x_i) + 2**-k``
        (``k = 1..resolution``) some ``y`` has
        ``gap(y) < min_i (X(x_i, x_i) + delta_i - X(x_i, y))``.

    (a) is exact.  In (b) smaller ``delta`` is the harder requirement, so the
    grid covers everything down to ``2**-resolution`` above the gap; it is a
    semidecision parameter.
    """
    if phi.is_trivial:
        return PMSFlatConditions(False, witnesses={"reason": "trivial weight"})
    X, _, _, support, gap = _pms_data(phi)
    out = PMSFlatConditions(True)
    if support.size == 0:
        # the infimum in (a) is over an empty set
        out.witnesses["a"] = {"argmin": None, "min_gap": float("inf")}
        return out
    g = gap[support]
    k_min = int(np.argmin(g))
    out.a_holds = bool(abs(g[k_min]) <= EPS)
    out.witnesses["a"] = {"argmin": int(support[k_min]), "min_gap": float(g[k_min])}
    d = X.diagonal()
    sub_X = X[np.ix_(support, support)]
    out.b_holds = True
    for k in range(1, resolution + 1):
        bound = (d[support] + g + 2.0 ** -k)[:, None] - sub_X  # [x, y]
        with np.errstate(invalid="ignore"):
            ok = (np.minimum(bound[:, None, :], bound[None, :, :]) > g[None, None, :]).any(axis=2)
        if not ok.all():
            i, j = np.argwhere(~ok)[0]
            out.b_holds = False
            out.witnesses["b"] = {"x1": int(support[i]), "x2": int(support[j]), "k": k}
            break
    return out


def reconstruct_net(phi: Weight, resolution: int = DEFAULT_RESOLUTION) -> EPSequence:
    """Build an eventually periodic sequence generating ``phi`` from the
    metric conditions.

    Walks an ascending chain in ``D = {(x, r) : gap(x) < r}`` ordered by
    ``(x, r) <= (y, s)  iff  X(x, y) + s <= X(x, x) + r``.  Round ``k`` joins
    the current element with ``(x, gap(x) + 2**-k)`` for every ``x`` in turn,
    which makes the chain cofinal.  The upper bound is ``x`` itself when
    possible, then the current point, then the admissible point of least
    gap.  On a finite carrier the chain settles on the support of a
    constant block, and the last round becomes the cycle.
    """
    cond = pms_flat_conditions(phi, resolution)
    if not cond.holds:
        raise ReconstructionFailed(f"metric flatness conditions fail: {cond.witnesses}")
    X, _, _, support, gap = _pms_data(phi)
    d = X.diagonal()
    cur = int(support[np.argmin(gap[support])])
    r = max(0.5, 2 * gap[cur] + EPS)
    visits, round_start = [cur], 0
    for k in range(1, resolution + 1):
        round_start = len(visits)
        cap_k = 2.0 ** -k
        for x in support:
            with np.errstate(invalid="ignore"):
                bound = np.minimum.reduce([d[cur] + r - X[cur, support],
                                           d[x] + gap[x] + cap_k - X[x, support],
                                           np.full(len(support), cap_k)])
                valid = gap[support] < bound
            if not valid.any():
                raise ReconstructionFailed(f"no upper bound for {cur} and {x} at radius 2**-{k}")
            j = _pick(support, valid, gap[support], (x, cur))
            cur, r = int(support[j]), float(bound[j])
            visits.append(cur)
    return EPSequence(phi.over, visits[:round_start], visits[round_start:], name="reconstructed")


def _pick(support, valid, gaps, preferred) -> int:
    for p in preferred:
        pos = np.nonzero(support == p)[0]
        if pos.size and valid[pos[0]]:
            return int(pos[0])
    cand = np.nonzero(valid)[0]
    return int(cand[np.lexsort((cand, gaps[cand]))][0])


def pms_left_adjoint(X: np.ndarray, fp: np.ndarray, a: float) -> np.ndarray:
    """Canonical left adjoint on the metric side (numerically smallest)."""
    finite = np.isfinite(fp)
    with np.errstate(invalid="ignore"):
        lift = _sub(X[finite, :], fp[finite][:, None]) + a
    lift = np.max(lift, axis=0, initial=-np.inf)
    return np.maximum.reduce([np.full(X.shape[0], a), X.diagonal(), lift])


def pms_is_cauchy(X: np.ndarray, fp: np.ndarray, a: float) -> bool:
    psi = pms_left_adjoint(X, fp, a)
    comp = np.min(fp + _sub(psi, X.diagonal()))
    return bool(comp <= a + EPS)


def pms_is_forward_cauchy(X: np.ndarray, fp: np.ndarray, a: float) -> bool:
    n = X.shape[0]
    for r in range(1, n + 1):
        for S in itertools.combinations(range(n), r):
            block = X[np.ix_(S, S)]
            if not np.all(_close_ext(block, block[0, 0])):
                continue
            if _close_ext(block[0, 0], a) and np.all(_close_ext(X[:, S].max(axis=1), fp)):
                return True
    return False


def _close_ext(x, y):
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    both_inf = np.isinf(x) & np.isinf(y)
    with np.errstate(invalid="ignore"):
        return both_inf | (np.abs(x - y) <= 1e-7)


@dataclass
class TransferReport:
    native: dict
    metric: dict

    @property
    def exact_agreement(self) -> bool:
        return all(self.native[k] == self.metric[k] for k in ("cauchy", "forward_cauchy", "bicauchy"))

    @property
    def flat_agreement(self) -> bool | None:
        """``None`` when either side is undecided."""
        a, b = self.native["flat"], self.metric["flat"]
        if FlatStatus.UNKNOWN.value in (a, b):
            return None
        return a == b


def transfer_classification(phi: Weight, budget: int = 1000, seed: int = 0) -> TransferReport:
    """Classify a Lukasiewicz weight natively and through ``1 - phi`` on the
    associated partial metric."""
    c = phi.over
    if c.tnorm.kind != LUKASIEWICZ_KIND:
        raise TnormMismatch("transfer needs the Lukasiewicz t-norm")
    if phi.is_trivial:
        raise ValueError("transfer is stated for non-trivial weights")
    X = to_pms(c).p
    fp, a = 1.0 - phi.values, 1.0 - phi.wtype
    fc = pms_is_forward_cauchy(X, fp, a)
    cauchy = pms_is_cauchy(X, fp, a)
    if fc or cauchy:
        flat = FlatStatus.CERTIFIED
    elif not pms_flat_conditions(phi).holds:
        flat = FlatStatus.REFUTED
    else:
        flat = FlatStatus.UNKNOWN
    native = classify_weight(phi, budget, seed)
    native["flat"] = native["flat"]["status"]
    metric = {"cauchy": cauchy, "forward_cauchy": fc, "bicauchy": fc, "flat": flat.value}
    return TransferReport(native, metric)


def check_explicit_adjoint(f: FCWeight) -> bool:
    """Both adjunction inequalities for the generated coweight of ``f``."""
    psi = explicit_adjoint(f)
    return (compose_wc(f.phi, psi) >= f.wtype - EPS
            and compose_cw(psi, f.phi).leq(f.phi.over.hom))

