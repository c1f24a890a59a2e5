from .certificate import check_filtration_certificate, derived_certificate
from .probe import Prober, probe_presentations, random_presentation, random_probe
from .properties import (
    abelian_layer_bounds,
    perfect_extension,
    product_law,
    quotient_monotone,
    simple_term_bound,
    solvable_quotient_inclusions,
)
from .series import abelianization, derived_quotient_step, explore_derived_series
from .types import (
    Adorable,
    DerivedStep,
    EngineError,
    FiltrationCertificate,
    NotAdorable,
    NotAdorableReason,
    ProbeParamsError,
    ProbeReport,
    SizeBudgetError,
    Stall,
    Unknown,
    Verdict,
)

__all__ = [
    "check_filtration_certificate",
    "derived_certificate",
    "Prober",
    "probe_presentations",
    "random_presentation",
    "random_probe",
    "abelian_layer_bounds",
    "perfect_extension",
    "product_law",
    "quotient_monotone",
    "simple_term_bound",
    "solvable_quotient_inclusions",
    "abelianization",
    "derived_quotient_step",
    "explore_derived_series",
    "Adorable",
    "DerivedStep",
    "EngineError",
    "FiltrationCertificate",
    "NotAdorable",
    "NotAdorableReason",
    "ProbeParamsError",
    "ProbeReport",
    "SizeBudgetError",
    "Stall",
    "Unknown",
    "Verdict",
]
