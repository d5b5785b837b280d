"""Library of simple functions for goising"""

import numpy as np

# Board sizes the rules engine accepts
MIN_SIZE = 5
MAX_SIZE = 19


def to_index(col, row, size):
    """Linear index of the point in column `col` and row `row`."""
    return col * size + row


def to_colrow(n, size):
    """Column and row of the point with linear index `n`."""
    return divmod(int(n), size)


def in_bounds(col, row, size):
    return 0 <= col < size and 0 <= row < size


def _process_size(size):
    if isinstance(size, bool) or not isinstance(size, (int, np.integer)):
        raise TypeError(f"Board size must be an int; got {type(size)}")
    if not MIN_SIZE <= size <= MAX_SIZE:
        raise ValueError(
            f"Board size must be between {MIN_SIZE} and {MAX_SIZE}; got {size}"
        )
    return int(size)


def transform_coords(col, row, size, k):
    """
    Apply one of the 8 dihedral symmetries of the board to coordinates

    Parameters
    ----------
    col, row : int or ndarray of int
        Coordinates of one or many points.

    size : int
        Board size.

    k : int
        Symmetry index, 0 to 7.  `k % 4` quarter turns are applied, followed
        by a reflection in the main diagonal when `k >= 4`.  `k = 0` is the
        identity.

    Returns
    -------
    col, row : int or ndarray of int
        Transformed coordinates, with the same shape as the inputs.
    """
    if not 0 <= k < 8:
        raise ValueError(f"Symmetry index must be in 0, ..., 7; got {k}")
    s = size - 1
    for _ in range(k % 4):
        col, row = s - row, col
    if k >= 4:
        col, row = row, col
    return col, row


def transform_grid(grid, k):
    """Apply dihedral symmetry `k` to a square (col, row) array."""
    size = grid.shape[0]
    cols, rows = np.indices(grid.shape)
    tc, tr = transform_coords(cols, rows, size, k)
    out = np.empty_like(grid)
    out[tc, tr] = grid
    return out
