from borelreg.config import FuzzConfig

cfg = FuzzConfig()
