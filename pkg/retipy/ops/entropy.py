"""
Shannon, Tsallis and Kaniadakis entropies of grey-tone distributions.

All logarithms are natural, so values are in nats. Zero bins contribute
nothing (0 ln 0 = 0 and 0^(1 +- kappa) = 0).

The Kaniadakis sums use the identities

    p^(1+k) - p^(1-k) = 2 p sinh(k ln p)
    p^(1+k) + p^(1-k) = 2 p cosh(k ln p)

which are exact and keep full precision as k approaches 0.
"""
import logging
import math
from typing import Any, Iterable, Optional, Tuple, Union

import numpy as np

from ..backend.dispatch import dispatch_entropy, register_entropy
from ..backend.errors import DegenerateConditionalError, InvalidIndexError, InvalidInputError
from ..backend.types import EntropyKind
from ..profiler import profile_operation
from ..schema import DEFAULT_KAPPA_MAX, DEFAULT_KAPPA_STEPS, EntropyCurve, TsallisCurve
from .histogram import JointDist, ProbDist, marginals

logger = logging.getLogger("retipy.ops.entropy")

# Below these distances from the limit the Shannon value is returned
Q_LIMIT_THRESHOLD = 1e-9
KAPPA_LIMIT_THRESHOLD = 1e-9

# The conditional and mutual forms use the small-index approximation
KAPPA_MAX = 0.1

_DENOMINATOR_FLOOR = 1e-12

Distribution = Union[ProbDist, Any]


def _as_dist(p: Distribution) -> ProbDist:
    return p if isinstance(p, ProbDist) else ProbDist(p)


def _check_q(q: float) -> float:
    q = float(q)
    if not math.isfinite(q) or q <= 0:
        raise InvalidIndexError(f"Tsallis index q must be > 0, got {q}")
    return q


def _check_kappa(kappa: float) -> float:
    kappa = float(kappa)
    if not math.isfinite(kappa) or kappa < 0:
        raise InvalidIndexError(f"Kaniadakis index kappa must be >= 0, got {kappa}")
    return kappa


def _check_small_kappa(kappa: float) -> float:
    kappa = _check_kappa(kappa)
    if kappa > KAPPA_MAX:
        raise InvalidIndexError(f"kappa must lie in [0, {KAPPA_MAX}] for the conditional forms, got {kappa}")
    return kappa


def shannon(p: Distribution, base: Optional[float] = None) -> float:
    """
    Shannon entropy S = -sum p_i ln p_i.

    Args:
        p: Probability distribution.
        base: Optional logarithm base; the default is e (nats).
    """
    nz = _as_dist(p).nonzero()
    value = -float(np.sum(nz * np.log(nz)))
    if base is not None:
        if not base > 0 or base == 1:
            raise InvalidInputError(f"Logarithm base must be positive and != 1, got {base}")
        value /= math.log(base)
    # -0.0 -> 0.0
    return value + 0.0


def tsallis(p: Distribution, q: float) -> float:
    """
    Tsallis entropy T_q = (1 - sum p_i^q) / (q - 1).

    Within 1e-9 of q = 1 the Shannon limit is returned.
    """
    q = _check_q(q)
    dist = _as_dist(p)
    if abs(q - 1.0) < Q_LIMIT_THRESHOLD:
        return shannon(dist)
    nz = dist.nonzero()
    return (1.0 - float(np.sum(nz ** q))) / (q - 1.0) + 0.0


def kaniadakis(p: Distribution, kappa: float) -> float:
    """
    Kaniadakis entropy K_k = -sum (p_i^(1+k) - p_i^(1-k)) / (2k).

    Below k = 1e-9 the Shannon limit is returned.
    """
    kappa = _check_kappa(kappa)
    dist = _as_dist(p)
    if kappa < KAPPA_LIMIT_THRESHOLD:
        return shannon(dist)
    nz = dist.nonzero()
    return -float(np.sum(nz * np.sinh(kappa * np.log(nz)))) / kappa + 0.0


def z_functional(p: Distribution, kappa: float) -> float:
    """
    The auxiliary sum Z_k = sum (p_i^(1+k) + p_i^(1-k)) / 2 entering the
    generalized additivity of the Kaniadakis entropy. Equals 1 at k = 0.
    """
    kappa = _check_kappa(kappa)
    dist = _as_dist(p)
    if kappa < KAPPA_LIMIT_THRESHOLD:
        return 1.0
    nz = dist.nonzero()
    return float(np.sum(nz * np.cosh(kappa * np.log(nz))))


def joint_entropy(j: JointDist, kind: Optional[EntropyKind] = None) -> float:
    """
    Entropy of the joint system (A, B): the joint matrix is flattened into
    a single distribution and evaluated with the requested kind.
    """
    kind = kind or EntropyKind.shannon()
    return dispatch_entropy(kind, j.flatten())


def tsallis_conditional(j: JointDist, q: float) -> float:
    """
    Conditional Tsallis entropy
    T_q(A|B) = [T_q(A,B) - T_q(B)] / [1 + (1 - q) T_q(B)],
    with B the column marginal.
    """
    q = _check_q(q)
    _, b = marginals(j)
    t_ab = tsallis(j.flatten(), q)
    t_b = tsallis(b, q)
    denominator = 1.0 + (1.0 - q) * t_b if abs(q - 1.0) >= Q_LIMIT_THRESHOLD else 1.0
    if abs(denominator) < _DENOMINATOR_FLOOR:
        raise DegenerateConditionalError(f"1 + (1 - q) T_q(B) vanishes for q = {q}")
    return (t_ab - t_b) / denominator


def kaniadakis_conditional(j: JointDist, kappa: float) -> float:
    """
    Conditional Kaniadakis entropy in its small-index form
    K_k(A|B) = [K_k(A,B) - K_k(B) Z_k(A)] / Z_k(B).

    At k = 0 this is the Shannon conditional H(A,B) - H(B).
    """
    kappa = _check_small_kappa(kappa)
    a, b = marginals(j)
    z_b = z_functional(b, kappa)
    if not z_b > 0:
        raise DegenerateConditionalError(f"Z_k(B) vanishes for kappa = {kappa}")
    k_ab = kaniadakis(j.flatten(), kappa)
    return (k_ab - kaniadakis(b, kappa) * z_functional(a, kappa)) / z_b


def kaniadakis_mutual(j: JointDist, kappa: float) -> float:
    """
    Mutual Kaniadakis entropy (without renormalization)
    MK_k(A;B) = K_k(A) - K_k(A|B). Zero for independent subsystems.
    """
    kappa = _check_small_kappa(kappa)
    a, _ = marginals(j)
    return kaniadakis(a, kappa) - kaniadakis_conditional(j, kappa)


def mutual_information(j: JointDist) -> float:
    """Shannon mutual information H(A) + H(B) - H(A,B)."""
    a, b = marginals(j)
    return shannon(a) + shannon(b) - shannon(j.flatten())


def kappa_grid(kappa_max: float = DEFAULT_KAPPA_MAX, steps: int = DEFAULT_KAPPA_STEPS) -> Tuple[float, ...]:
    """
    Uniform kappa grid from 0 to kappa_max inclusive.
    """
    if int(steps) != steps or steps < 2:
        raise InvalidInputError(f"A curve needs at least 2 steps, got {steps}")
    kappa_max = float(kappa_max)
    if not math.isfinite(kappa_max) or kappa_max <= 0:
        raise InvalidIndexError(f"kappa_max must be > 0, got {kappa_max}")
    grid = np.linspace(0.0, kappa_max, int(steps))
    return tuple(float(k) for k in grid)


@profile_operation
def entropy_curve(
    p: Distribution,
    kappa_max: float = DEFAULT_KAPPA_MAX,
    steps: int = DEFAULT_KAPPA_STEPS,
) -> EntropyCurve:
    """
    Kaniadakis entropy as a function of its entropic index, sampled on a
    uniform grid over [0, kappa_max]. The first value is the Shannon entropy.
    """
    kappas = kappa_grid(kappa_max, steps)
    dist = _as_dist(p)
    values = [kaniadakis(dist, kappa) for kappa in kappas]
    return EntropyCurve(kappas=list(kappas), values=values)


def tsallis_curve(p: Distribution, qs: Iterable[float]) -> TsallisCurve:
    """
    Tsallis entropy evaluated at each q in `qs`, in the given order.
    """
    dist = _as_dist(p)
    qs = [_check_q(q) for q in qs]
    if not qs:
        raise InvalidInputError("At least one q value is required")
    return TsallisCurve(qs=qs, values=[tsallis(dist, q) for q in qs])


@register_entropy("shannon")
def _shannon_kernel(p: ProbDist, index: Optional[float] = None) -> float:
    return shannon(p)


@register_entropy("tsallis")
def _tsallis_kernel(p: ProbDist, q: Optional[float]) -> float:
    if q is None:
        raise InvalidIndexError("Tsallis entropy needs an index q")
    return tsallis(p, q)


@register_entropy("kaniadakis")
def _kaniadakis_kernel(p: ProbDist, kappa: Optional[float]) -> float:
    if kappa is None:
        raise InvalidIndexError("Kaniadakis entropy needs an index kappa")
    return kaniadakis(p, kappa)
