"""Gray codes for the involutions of the Weyl groups of types A, B and D."""

from .cayley import (
    GeneratorSet,
    generating_set,
    is_edge,
    reflection,
    simple_generator,
    verify_hamilton_cycle,
)
from .codefile import Table, dumps_code, read_code, read_table, write_code
from .core import (
    CodeList,
    CycleForm,
    MoveClass,
    append_transposition,
    classify_move,
    compose,
    embed,
    extend_fixed,
    extend_tilde,
    format_word,
    from_cycles,
    hamming,
    identity,
    inverse,
    is_involution,
    membership,
    parse_word,
    relabel,
    relabel_list,
    reverse_list,
    signed_perm,
    to_cycles,
)
from .counting import count, enumerate_involutions, even_odd_excess
from .optimal_codes import (
    ConstructionFailed,
    Distance2Graph,
    Layer,
    SearchOutcome,
    bce,
    brgc,
    build_d_distance2,
    distance2_graph,
    find_hamilton,
    layers,
    ogcb,
    sign_assignments,
    verify_distance2,
)
from .recursive_codes import (
    TRIGGER_CODES,
    ValidationReport,
    Violation,
    gca,
    gcb,
    gcd_code,
    recursive_code,
    validate_properties,
)

__all__ = [name for name in dir() if not name.startswith("_")]
