"""Finite-scale workbench for one-dimensional subshifts, their automorphisms,
characteristic-measure approximants and sofic approximations."""

from .errors import (
    BudgetExceededError,
    EmptySubshiftError,
    InadmissibleWindowError,
    NonPrimitiveError,
    SpecError,
    SymdynError,
)
from .shifts import (
    SFT,
    Alphabet,
    ExplicitLanguage,
    FullShift,
    Substitution,
    Word,
    WordSet,
    explicit_language,
    full_shift,
    is_admissible,
    language,
    language_count,
    language_words,
    make_alphabet,
    sft,
    substitution,
    word,
)

__version__ = "0.1.0"
