"""Independent oracles used to freeze expected values.

Nothing in this module imports heatcap: the inverse map is solved by plain
bisection, water-filling by a direct arithmetic scan, and integrals by
huge-N trapezoid sums, so agreement with the package is meaningful.
"""

import math

import numpy as np


def forward(x: float) -> float:
    return (2.0 * x - 1.0) * math.exp(2.0 * x) + 1.0


def bisect_w0(y: float, hi: float = 10.0, iters: int = 200) -> float:
    """Bisection on the forward map; 200 halvings pin the root to full precision."""
    lo = 0.0
    while forward(hi) < y:
        hi *= 2.0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if forward(mid) < y:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def w0_slop(y: float, rel_tol: float = 1e-12) -> float:
    """Worst-case |x - true root| allowed by the residual stopping rule."""
    x = bisect_w0(y, hi=max(10.0, 0.5 * math.log1p(y) + 2.0))
    slope = 4.0 * x * math.exp(2.0 * x)  # d/dx of the forward map
    return 2.0 * rel_tol * max(1.0, y) / slope + 1e-13 * max(x, 1e-300)


def ladder_waterfill(levels, total: float):
    """Direct scan water-fill over a nondecreasing ladder (nu, K, nats)."""
    prefix = 0.0
    nu = float(levels[0])
    count = 0
    for k, level in enumerate(levels, start=1):
        prefix += float(level)
        cand = (total + prefix) / k
        if cand > float(level):
            nu = cand
            count = k
        else:
            break
    cap = 0.0
    for level in levels[:count]:
        cap += 0.5 * math.log(nu / float(level))
    return nu, count, cap


def heat_ladder(tbp: float, theta2: float, k_max: int):
    return [theta2 * math.exp((2 * k + 1) / tbp) for k in range(k_max)]


def continuum_energy(tbp: float, theta2: float, ustar: float) -> float:
    """Analytic delivered energy at water depth ustar."""
    return 0.5 * tbp * theta2 * ((ustar - 1.0) * math.exp(ustar) + 1.0)


def continuum_capacity(tbp: float, ustar: float) -> float:
    """Analytic capacity in nats at water depth ustar."""
    return 0.5 * tbp * ustar * ustar / 4.0


def trapezoid(f, a: float, b: float, n: int = 1_000_001) -> float:
    x = np.linspace(a, b, n)
    return float(np.trapezoid(f(x), x))


# ---------------------------------------------------------------------------
# Frozen values (computed with the oracles above; recomputed in tests where
# cheap enough).
W0_2000 = 2.996235648680342
W0_4PI = 1.1180612053616157
W0_10 = 1.0505014986384862
RATIO_1E8 = 0.9999528602147212  # w0(1e-8) / sqrt(1e-8 / 2)

CLOSED_10_2000_NATS = 44.887140312114546  # 5 * W0_2000^2
CLOSED_10_2000_BITS = 64.75845472797474
NU_CONTINUUM_10_2000 = 400.40290287833795  # exp(2 * W0_2000)

DISCRETE_EXAMPLE_K = 30
DISCRETE_EXAMPLE_BITS = 64.75241956899164
DISCRETE_EXAMPLE_NU = 400.2931434188507

SE_SNR1 = 0.28702903285912884
EBN0_SNR1 = 3.4839681200151995
SE_EXAMPLE_SNR = 2.06132563538998  # snr = 1000 / (2 pi)

EBN0_SNR_1E6 = 0.6954642810601019  # true value; ln 2 + 2.317e-3
