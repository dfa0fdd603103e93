"""Exact Ehrhart series of alcoved polytopes via alcove shellings.

Everything runs over the rationals: root systems and alcoves in fundamental
coweight coordinates, polytopes as integer wall bounds, Ehrhart series as
integer numerators over fixed denominator shapes.  The dosp module adds the
combinatorial side for hypersimplices and the cover-label bijection check.
"""

from .alcove import (
    Alcove,
    FacetSupport,
    facet_support,
    facet_supports,
    fundamental_alcove,
    locate,
    neighbor,
    separating_wall_count,
)
from .dosp import (
    DOSP,
    ConjectureReport,
    check_conjecture,
    dosp,
    enumerate_dosps,
    facet_label,
    psi,
    winding,
)
from .errors import AlcovedError
from .oracle import CountReport, count_points, lattice_points, partition_check, verify
from .polytope import (
    AlcovedPolytope,
    from_bounds,
    from_vertices,
    fundamental_polytope,
    hypercube,
    hypersimplex,
)
from .rootsys import (
    PosRoot,
    RootSystem,
    build,
    cartan_matrix,
    eval_form,
    reflect,
    to_omega_coords,
)
from .series import RationalSeries, equals, expand, h_star, quasipolynomial
from .shelling import (
    DualGraph,
    Edge,
    bfs_weights,
    dual_graph,
    ehrhart_series,
    half_open_decomposition,
    numerator,
    to_dot,
)

__version__ = "0.1.0"

__all__ = [
    "Alcove",
    "AlcovedError",
    "AlcovedPolytope",
    "ConjectureReport",
    "CountReport",
    "DOSP",
    "DualGraph",
    "Edge",
    "FacetSupport",
    "PosRoot",
    "RationalSeries",
    "RootSystem",
    "bfs_weights",
    "build",
    "cartan_matrix",
    "check_conjecture",
    "count_points",
    "dosp",
    "dual_graph",
    "ehrhart_series",
    "enumerate_dosps",
    "equals",
    "eval_form",
    "expand",
    "facet_label",
    "facet_support",
    "facet_supports",
    "from_bounds",
    "from_vertices",
    "fundamental_alcove",
    "fundamental_polytope",
    "h_star",
    "half_open_decomposition",
    "hypercube",
    "hypersimplex",
    "lattice_points",
    "locate",
    "neighbor",
    "numerator",
    "partition_check",
    "psi",
    "quasipolynomial",
    "reflect",
    "separating_wall_count",
    "to_dot",
    "to_omega_coords",
    "verify",
    "winding",
]
