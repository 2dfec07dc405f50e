import numpy as np

# sentinel for an empty residue class; large enough to never be a real
# Apery element yet small enough that adding a 64-bit generator cannot wrap
UNREACHED = np.int64(1 << 62)

# paper type number (1..4) -> minimal count of positive squares
TYPE_TO_IOTA = np.array([0, 1, 2, 4, 3], dtype=np.int8)
