"""3-colouring extension on plane graphs with one triangle."""

from .plane_graph import (
    CycleNotFound,
    CycleRef,
    Disconnected,
    FacialWalk,
    NonPlanarRotation,
    NonSimple,
    OuterFaceNotFound,
    OuterNotCycle,
    PlaneGraph,
    PlaneGraphError,
    build,
    cycle_graph,
    cycles_up_to,
    from_drawing,
    interior_subgraph,
    rooted_code,
    rooted_isomorphic,
    subgraph_distance,
)

__version__ = "0.1.0"
