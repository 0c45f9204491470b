"""Pure-numpy reference implementations of the hot loops."""
import math

import numpy as np

J0, COSINE = 0, 1
REAL, IMAGINARY = 0, 1


def lorentzian_sum(beta, n_max):
    """Sum of 1/(beta^2 + n^2) over -n_max..n_max."""
    n = np.arange(n_max, 0, -1, dtype=np.float64)
    tail = math.fsum(1.0 / (beta * beta + n * n))
    return 2.0 * tail + 1.0 / (beta * beta)


def inverse_power_sum(s, n_max):
    """Sum of k^-s for k = 1..n_max."""
    k = np.arange(n_max, 0, -1, dtype=np.float64)
    return math.fsum(k ** (-float(s)))


def _kernel_values(kernel, contour, eps, xi, p):
    if contour == REAL:
        damp = np.exp(-eps * p)
        if kernel == COSINE:
            return p**3 * damp * np.cos(xi * p)
        return p**3 * damp * np.sinc(xi * p / np.pi)
    # p = i*t*sign(xi): the plane wave decays and the cutoff becomes a slow cosine
    axi = abs(xi)
    damp = np.exp(-axi * p) * np.cos(eps * p)
    if kernel == COSINE:
        return p**3 * damp
    return -(p**2) * damp / axi


def panel_integrals(kernel, contour, eps, xi, edges, nodes, weights):
    """Gauss-Legendre integral of the moment integrand on each panel."""
    a = edges[:-1]
    half = 0.5 * (edges[1:] - a)
    p = a[:, None] + half[:, None] * (nodes[None, :] + 1.0)
    vals = _kernel_values(kernel, contour, eps, xi, p)
    return half * (vals @ weights)
