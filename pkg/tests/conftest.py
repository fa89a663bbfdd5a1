import multfree as mf

# reduced ratios b/a used across the suite
RATIO_FAMILY = [(2, 1), (3, 1), (3, 2), (4, 3), (5, 2), (5, 3), (7, 4)]


def family():
    return [mf.reduce_multiplier(b, a) for b, a in RATIO_FAMILY]
