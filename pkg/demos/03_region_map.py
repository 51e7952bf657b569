# Minimal iteration count over the open unit square of weight pairs.
#
# Each cell holds the smallest m <= m_max with a sure-success scheme, and 0
# if none was found.  The map is symmetric about rho = rho', and a band
# around the diagonal survives at m_max = 8.  A coarse grid keeps this quick;
# use `weightdecision region --resolution 128` for the full picture.

import numpy as np

from weightdecision.scan import region_grid, write_text

grid = region_grid(resolution=32, m_max=8)
print("symmetric:", np.array_equal(grid.cells, grid.cells.T))

# ASCII rendering, rho' increasing upward, '.' for no solution.
for row in grid.cells.T[::-1]:
    print("".join("." if v == 0 else str(v) for v in row))

for m in range(2, 9):
    print(f"m={m}: {np.count_nonzero(grid.cells == m)} cells")

write_text("region32.csv", grid.to_csv())
write_text("region32.pgm", grid.to_pgm())
print("wrote region32.csv and region32.pgm")
