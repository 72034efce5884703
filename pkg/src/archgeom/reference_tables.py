"""Published per-scale fractal dimensions of Armenian architectural drawings.

Each column lists the two-scale dimensions from the largest grid pair down,
together with the summary figures quoted alongside the tables.
"""

# (large grid, small grid) per row
MEDIEVAL_SCALES = ((200, 100), (100, 50), (50, 25), (25, 12.5))
MODERN_SCALES = ((128, 64), (64, 32), (32, 16), (16, 8))

MEDIEVAL = {
    "hripsime_facade": (1.46, 1.48, 1.49, 1.49),
    "hripsime_plan": (1.74, 1.58, 1.49, 1.51),
    "zvartnots_facade": (1.64, 1.54, 1.48, 1.47),
    "zvartnots_plan": (1.67, 1.57, 1.49, 1.43),
    "ani_facade": (1.56, 1.53, 1.56, 1.50),
    "ani_plan": (1.48, 1.50, 1.43, 1.13),
}

MODERN = {
    "cascade": (1.51, 1.49, 1.44, 1.38),
    "government_house_2": (1.56, 1.51, 1.52, 1.49),
    "st_gregory": (1.66, 1.60, 1.52, 1.46),
    "holy_trinity": (1.63, 1.63, 1.59, 1.52),
}

# quoted (mean, std); None where no figure is given
QUOTED_SUMMARY = {
    "hripsime_facade": (1.48, 0.014),
    "hripsime_plan": (1.58, 0.113),
    # the quoted 0.008 does not follow from the column; it recomputes to 0.078
    "zvartnots_facade": (1.533, 0.008),
    "zvartnots_plan": (1.540, 0.104),
    "ani_facade": (1.537, 0.029),
    "ani_plan": (1.385, 0.172),
    "cascade": (1.455, 0.058),
    "government_house_2": (1.52, 0.029),
    "st_gregory": (1.56, 0.088),
    "holy_trinity": (1.593, 0.052),
}

QUOTED_CORRELATION = {
    ("hripsime_facade", "hripsime_plan"): -0.997,
    ("zvartnots_facade", "zvartnots_plan"): 0.974,
    ("ani_facade", "ani_plan"): 0.797,
}

ALL_COLUMNS = {**MEDIEVAL, **MODERN}
