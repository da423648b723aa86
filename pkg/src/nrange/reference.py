"""Reference matrices used by the bundled figures, demos and named suites."""

import numpy as np

__all__ = ["TALL_EXAMPLE", "TALL_EXAMPLE_FRAME", "WIDE_EXAMPLE"]

# 2x3 example with Frobenius norm sqrt(98.25); drives the norm-range figure.
WIDE_EXAMPLE = np.array(
    [[6 + 1j, 0, 0.5], [-4, -3 - 6j, 0]],
    dtype=complex,
)

# 4x3 example whose lower range has a corner at 5i that the higher range
# does not share; drives the projector-range figure.
TALL_EXAMPLE = np.array(
    [[1 + 1j, -7, 0], [5j, 0.02, 0], [0, 0, 6 - 1j], [0, 0, 0]],
    dtype=complex,
)

# Frame selecting the lower three rows of the 4x3 example.
TALL_EXAMPLE_FRAME = np.vstack([np.zeros((1, 3)), np.eye(3)]).astype(complex)
