from .entropy import (
    entropy_curve,
    joint_entropy,
    kaniadakis,
    kaniadakis_conditional,
    kaniadakis_mutual,
    kappa_grid,
    mutual_information,
    shannon,
    tsallis,
    tsallis_conditional,
    tsallis_curve,
    z_functional,
)
from .histogram import (
    Histogram256,
    JointDist,
    ProbDist,
    grey_histogram,
    grey_tones,
    image_distribution,
    joint_histogram,
    marginals,
    to_distribution,
)
from .retinex import (
    color_restoration,
    dynamic_stretch,
    gaussian_blur,
    gaussian_kernel,
    msrcr,
    multi_scale_retinex,
    scale_distribution,
    single_scale_retinex,
)

__all__ = [
    "Histogram256",
    "JointDist",
    "ProbDist",
    "grey_histogram",
    "grey_tones",
    "image_distribution",
    "joint_histogram",
    "marginals",
    "to_distribution",
    "entropy_curve",
    "joint_entropy",
    "kaniadakis",
    "kaniadakis_conditional",
    "kaniadakis_mutual",
    "kappa_grid",
    "mutual_information",
    "shannon",
    "tsallis",
    "tsallis_conditional",
    "tsallis_curve",
    "z_functional",
    "color_restoration",
    "dynamic_stretch",
    "gaussian_blur",
    "gaussian_kernel",
    "msrcr",
    "multi_scale_retinex",
    "scale_distribution",
    "single_scale_retinex",
]
