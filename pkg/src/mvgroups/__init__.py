"""Exact computation with finitely generated n-valued groups."""

from .multiset import MultiSet, flatten
from .groups import (
    Automorphism,
    AutomorphismGroup,
    CyclicGroup,
    DirectProduct,
    FiniteTableGroup,
    FreeAbelianGroup,
    FreeGroup,
    GroupBackend,
    HeisenbergGroup,
    MonoidBallTable,
    PermutationGroup,
    SemidirectProduct,
    close_automorphisms,
    identity_automorphism,
    monoid_balls,
    orbit,
    semidirect_mul,
)
from .mvalued import (
    CosetElement,
    CosetGroup,
    DoubleCosetElement,
    DoubleCosetGroup,
    MvGroup,
    MutatedNatGroup,
    NatGroup,
    check_axioms,
)
from .cayley import (
    GrowthTable,
    PowerTable,
    ball,
    compare_generating_sets,
    length,
    power_table,
)
from .dynamics import (
    BoundsReport,
    DynamicsTable,
    bounds_check,
    classify_growth,
    iterate_dynamic,
    quadratic_bound_check,
)
from .wordspec import (
    Instance,
    InstanceConfig,
    build_instance,
    load_instance,
    parse_config,
    parse_word,
    render_word,
)

__version__ = "0.1.0"
