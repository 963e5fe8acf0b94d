from borelreg.config import FuzzConfig

cfg = FuzzConfig(seed=0, count=0, depth=0, pair_count=0)
