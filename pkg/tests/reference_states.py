"""Reference density matrices and frozen oracle values shared by the tests.

Every value here was computed independently of the package (closed forms or
a separate script) and is frozen so regressions show up as hard failures.
"""

import numpy as np

S3 = np.sqrt(3.0)
S19 = np.sqrt(19.0)

# Purity 0.54, concurrence 0.4, rank 3, dense in the computational basis.
M40 = np.array([
    [13.0, 3.0 * S3, 2.0 * S3, -10.0],
    [3.0 * S3, 7.0, 6.0, -2.0 * S3],
    [2.0 * S3, 6.0, 7.0, -3.0 * S3],
    [-10.0, -2.0 * S3, -3.0 * S3, 13.0],
], dtype=complex) / 40.0

M40_SPECTRUM = (0.7, 0.2, 0.1, 0.0)
M40_PURITY = 0.54
M40_CONCURRENCE = 0.4
M40_NEGATIVITY = 0.2

# X-form state with the same purity and concurrence as M40, outer coherence.
M30A = np.array([
    [10.0 + 2.0 * S19, 0.0, 0.0, 6.0],
    [0.0, 10.0 - S19, 0.0, 0.0],
    [0.0, 0.0, 0.0, 0.0],
    [6.0, 0.0, 0.0, 10.0 - S19],
], dtype=complex) / 30.0

M30A_SPECTRUM = (0.70178563821399198, 0.18803670188197752, 0.11017765990403038, 0.0)
M30A_NEGATIVITY = 0.12697814295351384

# Same purity and concurrence again, inner coherence, different spectrum.
M30B = np.array([
    [10.0 - 2.0 * S19, 0.0, 0.0, 0.0],
    [0.0, 10.0 + S19, 6.0, 0.0],
    [0.0, 6.0, 10.0 + S19, 0.0],
    [0.0, 0.0, 0.0, 0.0],
], dtype=complex) / 30.0

M30B_SPECTRUM = (0.67862996478468918, 0.2786299647846891, 0.042740070430621738, 0.0)
M30B_NEGATIVITY = 0.1797684205933774

BELL_PHI_PLUS = np.array([
    [0.5, 0.0, 0.0, 0.5],
    [0.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, 0.0],
    [0.5, 0.0, 0.0, 0.5],
], dtype=complex)

MAX_MIXED = np.eye(4, dtype=complex) / 4.0


def pure_outer(c):
    """Rank-1 X state with concurrence c (purity 1)."""
    s = np.sqrt(max(0.0, 1.0 - c * c))
    return np.array([
        [(1.0 + s) / 2.0, 0.0, 0.0, c / 2.0],
        [0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0],
        [c / 2.0, 0.0, 0.0, (1.0 - s) / 2.0],
    ], dtype=complex)


def random_hermitian(rng, scale=1.0):
    a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    return scale * (a + a.conj().T) / 2.0


def random_density_np(rng):
    """Test-local density draw on numpy's generator (independent of the package RNG)."""
    g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    m = g @ g.conj().T
    return m / np.trace(m).real
