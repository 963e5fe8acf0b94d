from borelreg.config import FuzzConfig

cfg = FuzzConfig(seed=7, exp_max=3, depth=1, pair_count=20)
