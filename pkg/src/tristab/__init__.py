"""tristab: exact line-transversal certificates for colored triangles."""

from .convex import (ColorConfig, Triangle, build_config, halfspace,
                     separation_pattern)
from .core import QuadScalar, Ray, Vec, canonical_ray
from .lemma import (LemmaInstance, PencilInstance, derive_contradiction,
                    verify_basic_lemma, verify_pencil_lemma)
from .pipeline import (GenSpec, TheoremCert, Unresolved, diagnostic_chain,
                       random_config, verify_theorem)
from .transversal import find_line_transversal, verify_transversal_cert

__version__ = "0.1.0"

__all__ = [
    "ColorConfig", "GenSpec", "LemmaInstance", "PencilInstance",
    "QuadScalar", "Ray", "TheoremCert", "Triangle", "Unresolved", "Vec",
    "build_config", "canonical_ray", "derive_contradiction",
    "diagnostic_chain", "find_line_transversal", "halfspace",
    "random_config", "separation_pattern", "verify_basic_lemma",
    "verify_pencil_lemma", "verify_theorem", "verify_transversal_cert",
]
