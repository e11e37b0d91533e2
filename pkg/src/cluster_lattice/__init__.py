"""Arc combinatorics on a marked circle with finitely many limit points:
non-crossing partition lattices, thick subcategories and t-structures of
the associated triangulated categories, with window oracles, a CLI and
diagram export."""

from .circle import (
    ZERO,
    Arc,
    CirclePoint,
    ModelParams,
    Region,
    cross,
    cyclic_lt3,
    limit,
    linear_key,
    make_arc,
    marked,
    parse_arc,
    parse_point,
    region_contains,
    shift,
)
from .errors import (
    ClusterLatticeError,
    GuardExceeded,
    NoNonzeroMorphism,
    NotCrossing,
    PreconditionViolated,
    ValidationError,
)
from .noncrossing import (
    Partition,
    catalan,
    is_noncrossing,
    join,
    kreweras,
    kreweras_inverse,
    leq,
    meet,
    nc_enumerate,
    nnc_count,
    nnc_enumerate,
    parse_partition,
    partition,
    rotate,
)
from .objects import (
    ArcObject,
    Triangle,
    arc_object,
    cocone_of_crossing,
    factors_through,
    hom_dim,
    suspend,
    suspend_arc,
    zigzag_cone,
)
from .oracle import (
    ClosureReport,
    Window,
    compare_with_classification,
    window_aisle_closure,
    window_arcs,
    window_thick_closure,
)
from .thick import ThickSubcat, thick_contains, thick_generated, thick_join, thick_leq, thick_meet
from .tslattice import (
    EquivLattice,
    HasseGraph,
    equiv_lattice,
    hasse_export,
    meet_is_intersection_check,
    nondeg_equiv_iso_check,
    ts_join,
    ts_leq,
    ts_meet,
)
from .tstructures import (
    CoaislePresentation,
    EquivClass,
    TStructure,
    aisle_contains,
    aisle_generated,
    approx_triangle,
    coaisle_contains,
    coaisle_presentation,
    enumerate_tstructures,
    equiv_class,
    equiv_eq,
    heart,
    is_bounded_above,
    is_bounded_below,
    is_left_nondegenerate,
    is_nondegenerate,
    is_right_nondegenerate,
    validate_decoration,
)

__version__ = "0.1.0"
