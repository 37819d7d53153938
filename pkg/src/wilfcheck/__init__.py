"""Numerical semigroups, their invariants, and exhaustive checks of Wilf-density bounds."""
from .bounds import BoundCheck, BoundId, PropABranch, check_all
from .core import (FULL, NumericalSemigroup, contains, from_gaps, from_generators,
                   gaps_of, minimal_generators, parse_semigroup)
from .enumeration import (ScanReport, enumerate_bruteforce, enumerate_tree, extremal,
                          scan)
from .errors import (CapExceeded, GcdNotOne, InvalidGapSet, IsFullSemigroup,
                     MismatchedInputs, SemigroupError, SemigroupOverflow,
                     UnsupportedEmbeddingDim, WitnessNotFound)
from .invariants import InvariantSet, SporadicSet, invariants_of, sporadic_elements, wilf_number
from .lemma import LemmaChainCheck, WitnessCover, build_witness_cover, verify_lemma_bound

__version__ = "0.1.0"
