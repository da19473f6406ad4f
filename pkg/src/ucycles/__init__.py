"""Near-universal cycles for k-subsets of [n] built from cyclic difference forms."""

from .assembler import PackingResult, generate_packing
from .classes import ClassSig, census, kappa, kappa_path, partitions_of
from .forms import Form, FormRep, Subset, choose_rep, form_of, sets_of_form
from .graphs import build_transition, eulerian_circuit, main_component
from .verifier import exhaustive_max_packing, verify

__all__ = [
    "ClassSig",
    "Form",
    "FormRep",
    "PackingResult",
    "Subset",
    "build_transition",
    "census",
    "choose_rep",
    "eulerian_circuit",
    "exhaustive_max_packing",
    "form_of",
    "generate_packing",
    "kappa",
    "kappa_path",
    "main_component",
    "partitions_of",
    "sets_of_form",
    "verify",
]
