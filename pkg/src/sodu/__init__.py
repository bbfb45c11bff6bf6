"""Toolkit for first- and second-order differential uniformity of power
S-boxes over GF(2^n): field arithmetic, lookup-table function analysis,
spectrum scans, exponent classification, and exhaustive exponent search."""

__version__ = "0.1.0"

from .gf2n import Field, add, is_irreducible, smallest_irreducible
from .vbf import (
    Anf,
    Vbf,
    algebraic_degree,
    anf,
    derivative,
    eval_d2_closed,
    from_anf,
    load_vbf,
    power_function,
    save_vbf,
    second_derivative,
)
from .spectra import (
    DdtSummary,
    SecondOrderSpectrum,
    Witness,
    backend_name,
    delta2_generic,
    delta2_power,
    differential_uniformity,
    nabla,
)
from .monomial import (
    CubicClass,
    classify_cubic,
    coset,
    coset_rep,
    coset_reps,
    equivalence_form,
    gcd_conditions,
    predict_cubic,
    triple_term_exponent,
)
from .search import (
    CheckpointError,
    ClaimResult,
    FeasibilityError,
    SearchRecord,
    conjecture_check,
    run_search,
    verify_claims,
)
