"""Double circles on small integer grids, Jarnik polygons, and exact checkers."""
from .constructions import (
    JarnikSummary,
    build_double_circle,
    jarnik_counts,
    jarnik_polygon,
    naive_symmetric,
    quadratic_baseline,
    translate_to_grid,
)
from .lattice import (
    GcdTable,
    LatticeVector,
    build_gcd_table,
    gcd_lookup,
    is_visible,
    segment_lattice_points,
    turn2,
    turn3,
)
from .sequences import (
    L1Shell,
    PointSet,
    Role,
    VectorSequence,
    accumulate,
    alt,
    radial_sort_bucket,
    radial_sort_compare,
    scale,
    visible_vectors,
)
from .verification import (
    PickCounts,
    VerificationReport,
    check_lemma4,
    convex_hull,
    grid_size,
    is_double_circle,
    pick_counts,
)

__version__ = "0.1.0"
