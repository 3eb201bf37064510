"""tiltwall: exact wall-and-chamber computations for tilt stability on
Picard-rank-one threefolds.

The package computes twisted Chern characters, numerical walls and the
quadratic semidisk in the (beta, alpha^2) half plane, evaluates the
closed-form ch_3/genus bounds, enumerates all candidate destabilizing walls
for a class, and mechanically verifies the refutation arguments behind the
bounds, all in exact rational and quadratic-surd arithmetic.
"""

from .bounds import (
    A,
    B,
    bound_E,
    bound_E_tilde,
    conj_bound_rangeB,
    delta_c,
    eps,
    eps1,
    eps_tilde,
    hartshorne_reflexive,
    max_ch3_rank0,
    max_ch3_rank1,
    max_ch3_rank2,
    sections_bound_curve,
    sections_bound_points,
)
from .chern import (
    ChernVec,
    ChernVec2,
    discriminant,
    dual_class,
    ideal_sheaf_class,
    lattice_check,
    line_bundle_class,
    parse_class,
    tensor_O,
    twist,
)
from .exactnum import Interval, Poly, Rat, SignClass, Surd, sturm_sign, surd_cmp
from .fixtures import certify, certify_all, load_fixtures
from .geometry import (
    P3,
    PPAV,
    Profile,
    builtin_profiles,
    ch3_from_genus,
    genus_from_ch3,
    profile_by_name,
)
from .rangeb import (
    anchor_wall,
    h2_vanishing_check,
    heart_check,
    large_ch1_analysis,
    rangeb_report,
    rank_cap_check,
    special_case_2k11,
)
from .tiltplane import (
    Point,
    QRegion,
    Wall,
    WallKind,
    bar_beta,
    mu,
    no_wall_on_ray,
    nu,
    nu_zero_alpha_sq,
    q_region,
    q_value,
    wall,
    wall_compare,
)
from .wallsearch import (
    CandidateWall,
    Certificate,
    SearchBox,
    SearchConstraints,
    Verdict,
    brute_force_oracle,
    ch1_range,
    ch2_range,
    enumerate_candidates,
    rank_cap,
    refute_ch3,
)

__version__ = "0.1.0"
