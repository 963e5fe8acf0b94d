from borelreg.config import FuzzConfig

cfg = FuzzConfig(seed=42, count=100, n_max=3, ops=("intersect", "sum", "product"))
