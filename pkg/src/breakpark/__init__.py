"""breakpark: break divisors and parking functions on complete
multigraphs, their symmetric-group module structure, and numerical
Donaldson-Thomas invariants of loop quivers, all in exact arithmetic.
"""

from .counting import (
    dt_invariant,
    dt_via_euler_product,
    fuss_catalan,
    moebius,
    euler_phi,
    orbit_count_D,
    ramanujan_sum,
    von_sterneck,
)
from .errors import (
    BreakparkError,
    BudgetExceededError,
    GraphFormatError,
    InternalInvariantError,
    PreconditionError,
)
from .knm import (
    KnmParams,
    break_representative,
    circular_park,
    enumerate_break,
    enumerate_parking,
    enumerate_residue_tuples,
    is_break_mn,
    is_parking_mn,
    parking_representative,
    shift,
    shift_class,
    shift_classes,
    sort_orbit_key,
)
from .multigraph import (
    Multigraph,
    break_via_orientability,
    complete_multigraph,
    enumerate_break_divisors,
    euler_char_subset,
    genus,
    is_break_divisor,
    is_g_parking,
    is_orientable,
    parse_graph_file,
    spanning_tree_count,
)
from .reptheory import (
    character_break,
    character_break_bruteforce,
    character_break_closed,
    character_parking,
    class_size,
    murnaghan_nakayama,
    partitions_of,
    perm_module_h_expansion,
    restrict_character,
    schur_expansion,
    trivial_multiplicity,
)
from .series import ExactSeries

__version__ = "0.1.0"
