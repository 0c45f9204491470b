"""numba-compiled kernels; same signatures as the numpy versions."""
import math

import numpy as np
from numba import njit

J0, COSINE = 0, 1
REAL, IMAGINARY = 0, 1


@njit(cache=True, nogil=True)
def lorentzian_sum(beta, n_max):
    # smallest terms first with compensation; the 1e6-term sums need it
    b2 = beta * beta
    total = 0.0
    comp = 0.0
    for n in range(n_max, 0, -1):
        term = 1.0 / (b2 + float(n) * float(n))
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return 2.0 * total + 1.0 / b2


@njit(cache=True, nogil=True)
def inverse_power_sum(s, n_max):
    total = 0.0
    comp = 0.0
    for k in range(n_max, 0, -1):
        term = float(k) ** (-s)
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total


@njit(cache=True, nogil=True)
def _integrand(kernel, contour, eps, xi, p):
    if contour == REAL:
        damp = math.exp(-eps * p)
        if kernel == COSINE:
            return p * p * p * damp * math.cos(xi * p)
        x = xi * p
        if abs(x) < 1e-8:
            j0 = 1.0 - x * x / 6.0
        else:
            j0 = math.sin(x) / x
        return p * p * p * damp * j0
    axi = abs(xi)
    damp = math.exp(-axi * p) * math.cos(eps * p)
    if kernel == COSINE:
        return p * p * p * damp
    return -p * p * damp / axi


@njit(cache=True, nogil=True)
def panel_integrals(kernel, contour, eps, xi, edges, nodes, weights):
    n_panels = edges.shape[0] - 1
    out = np.empty(n_panels)
    for i in range(n_panels):
        a = edges[i]
        half = 0.5 * (edges[i + 1] - a)
        acc = 0.0
        for j in range(nodes.shape[0]):
            acc += weights[j] * _integrand(kernel, contour, eps, xi, a + half * (nodes[j] + 1.0))
        out[i] = half * acc
    return out
