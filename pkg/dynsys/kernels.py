"""
dynsys/kernels.py — pętle orbity i jakobianów map wbudowanych kompilowane numba.

Publiczne API:
  KERNELS                                         nazwa jądra → kod mapy
  orbit_window(code, p, x0, start, stop, radius, lows, highs, noise)
                                                  → (stany, krok, status)
  jacobian_series(code, p, states)                → jakobiany (N, m, m)
  qr_block_logs(jacs, renorm_every)               → (log Rₖₖ na blok, alive)

Jądra powtarzają operacje funkcji kroku z builtin.py w tej samej kolejności
(fastmath wyłączone, bez FMA), więc orbity są identyczne bit w bit z pętlą
Pythona używaną dla map DSL.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

from .builtin import TINKERBELL_C

BERNOULLI    = 0
BAKER        = 1
TINKERBELL_A = 2
TINKERBELL_B = 3
LOGISTIC     = 4

KERNELS: dict[str, int] = {
    "bernoulli":    BERNOULLI,
    "baker":        BAKER,
    "tinkerbell_a": TINKERBELL_A,
    "tinkerbell_b": TINKERBELL_B,
    "logistic":     LOGISTIC,
}

STATUS_OK         = 0
STATUS_ESCAPE     = 1
STATUS_NON_FINITE = 2

_BRANCH = 0.5
_C1, _C2, _C3, _C4 = TINKERBELL_C


# ---------------------------------------------------------------------------
# Krok mapy
# ---------------------------------------------------------------------------

@njit(cache=True, fastmath=False)
def _tinkerbell(x, y, c1, c2, c3, c4):
    x1 = x[0]
    x2 = x[1]
    y[0] = x1 * x1 - x2 * x2 + c1 * x1 + c2 * x2
    y[1] = 2.0 * x1 * x2 + c3 * x1 + c4 * x2


@njit(cache=True, fastmath=False)
def _step(code, p, x, y):
    x1 = x[0]
    if code == BERNOULLI:
        a = p[0]
        if x1 <= _BRANCH:
            y[0] = 2.0 * a * x1
        else:
            y[0] = a * (2.0 * x1 - 1.0)
    elif code == BAKER:
        a = p[0]
        x2 = x[1]
        if x1 <= _BRANCH:
            y[0] = 2.0 * a * x1
            y[1] = 0.5 * a * x2
        else:
            y[0] = a * (2.0 * x1 - 1.0)
            y[1] = 0.5 * a * (x2 + 1.0)
    elif code == TINKERBELL_A:
        _tinkerbell(x, y, p[0], _C2, _C3, _C4)
    elif code == TINKERBELL_B:
        _tinkerbell(x, y, _C1, _C2, p[0], _C4)
    else:
        r = p[0]
        y[0] = r * x1 * (1.0 - x1)


@njit(cache=True, fastmath=False)
def orbit_window(code, p, x0, start, stop, radius, lows, highs, noise):
    """
    Stany x⁽ˢᵗᵃʳᵗ⁾..x⁽ˢᵗᵒᵖ⁾ jako tablica (stop − start + 1, m).

    Zwraca (stany, k, status); przy status ≠ STATUS_OK k to numer kroku,
    w którym orbita się rozbiegła, a stany są niekompletne. Pusty noise
    wyłącza regularyzację zaokrągleń.
    """
    m = x0.shape[0]
    out = np.empty((stop - start + 1, m))
    x = x0.copy()
    y = np.empty(m)

    for i in range(m):
        if not abs(x[i]) <= radius:
            return out, 0, STATUS_ESCAPE
    if start == 0:
        out[0, :] = x

    perturb = noise.shape[0] > 0
    for k in range(1, stop + 1):
        _step(code, p, x, y)

        if perturb:
            base = (k - 1) * m
            for i in range(m):
                v = y[i]
                z = v + v * noise[base + i]
                if lows[i] <= v and v <= highs[i]:
                    z = min(max(z, lows[i]), highs[i])
                y[i] = z

        for i in range(m):
            v = y[i]
            if not abs(v) <= radius:
                return out, k, STATUS_ESCAPE if math.isfinite(v) else STATUS_NON_FINITE

        if k >= start:
            out[k - start, :] = y
        x, y = y, x

    return out, stop, STATUS_OK


# ---------------------------------------------------------------------------
# Jakobiany
# ---------------------------------------------------------------------------

@njit(cache=True, fastmath=False)
def _tinkerbell_jac(x1, x2, out, c1, c2, c3, c4):
    out[0, 0] = 2.0 * x1 + c1
    out[0, 1] = -2.0 * x2 + c2
    out[1, 0] = 2.0 * x2 + c3
    out[1, 1] = 2.0 * x1 + c4


@njit(cache=True, fastmath=False)
def jacobian_series(code, p, states):
    """Df(x) dla każdego wiersza states; wynik (N, m, m)."""
    n = states.shape[0]
    m = states.shape[1]
    out = np.zeros((n, m, m))
    a = p[0]
    for t in range(n):
        x1 = states[t, 0]
        if code == BERNOULLI:
            out[t, 0, 0] = 2.0 * a
        elif code == BAKER:
            out[t, 0, 0] = 2.0 * a
            out[t, 1, 1] = 0.5 * a
        elif code == TINKERBELL_A:
            _tinkerbell_jac(x1, states[t, 1], out[t], a, _C2, _C3, _C4)
        elif code == TINKERBELL_B:
            _tinkerbell_jac(x1, states[t, 1], out[t], _C1, _C2, a, _C4)
        else:
            out[t, 0, 0] = a * (1.0 - 2.0 * x1)
    return out


# ---------------------------------------------------------------------------
# Akumulacja QR
# ---------------------------------------------------------------------------

@njit(cache=True, fastmath=False)
def qr_block_logs(jacs, renorm_every):
    """
    Ortonormalizacja Grama-Schmidta (zmodyfikowana) ramy Q co renorm_every
    jakobianów. Zwraca (logs, alive): logs[b, k] = log Rₖₖ bloku b dla
    k < alive; alive to liczba kolumn, które nie trafiły na Rₖₖ = 0.
    Norma kolumny jest skalowana przez max |aᵢ|, żeby kwadraty nie
    zaniżyły się do zera przy małych a.

    Kolumny k ≥ alive nie są dalej liczone: pierwsze kolumny Q nie zależą
    od dalszych. Jakobiany muszą być skończone.
    """
    n = jacs.shape[0]
    m = jacs.shape[1]
    blocks = (n + renorm_every - 1) // renorm_every
    logs = np.full((blocks, m), -np.inf)
    q = np.eye(m)
    a = np.empty((m, m))
    col = np.empty(m)
    alive = m

    for b in range(blocks):
        for c in range(alive):
            for i in range(m):
                a[i, c] = q[i, c]

        stop = min(n, (b + 1) * renorm_every)
        for t in range(b * renorm_every, stop):
            for c in range(alive):
                for i in range(m):
                    s = 0.0
                    for k in range(m):
                        s += jacs[t, i, k] * a[k, c]
                    col[i] = s
                for i in range(m):
                    a[i, c] = col[i]

        for c in range(alive):
            for prev in range(c):
                dot = 0.0
                for i in range(m):
                    dot += q[i, prev] * a[i, c]
                for i in range(m):
                    a[i, c] -= dot * q[i, prev]
            scale = 0.0
            for i in range(m):
                scale = max(scale, abs(a[i, c]))
            if scale == 0.0:
                alive = c
                break
            sq = 0.0
            for i in range(m):
                r = a[i, c] / scale
                sq += r * r
            norm = scale * math.sqrt(sq)
            logs[b, c] = math.log(norm)
            for i in range(m):
                q[i, c] = a[i, c] / norm

    return logs, alive
