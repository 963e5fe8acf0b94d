from borelreg.config import FuzzConfig

cfg = FuzzConfig(seed=12345, count=50, n_max=5, ops=("product", "intersect"), depth=3)
