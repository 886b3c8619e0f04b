"""Rogers dilogarithm identities on the standard cell of M_{0,n}."""

from .chords import (
    BlockChord,
    Chord,
    DecoratedPolygon,
    block_chords,
    crosses,
    crossing_set,
    enumerate_chords,
    forget,
    pullback,
)
from .coords import (
    CoordMap,
    PointConfig,
    StarCoords,
    config_from_star,
    cross_ratio,
    dihedral_coords,
    sample_cell,
)
from .dilog import L1, li2, rogers_l
from .reduction import (
    Certificate,
    EquationInstance,
    build_certificate,
    build_certificate_even,
    build_certificate_odd,
    build_certificate_six,
    expand_instance,
    flatten_certificate,
    verify_certificate,
    verify_eqn,
)
from .relations import (
    DegenerationResult,
    FormalSum,
    check_block_relation,
    check_chord_relation,
    degenerate,
    wedge_sum,
)

__version__ = "0.1.0"
