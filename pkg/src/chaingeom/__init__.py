"""chaingeom: exact-arithmetic chain geometries over small finite rings.

Core layers: fields (GF(p^n) tables), rings (matrix subalgebras and
subfield embeddings), projline (points, distant relation, chain orbits),
representations (images, transversals, regulus and spread verdicts),
morphisms (semilinear / correlation / fundamental maps).  On top sits a
FastAPI service with pydantic certificate models and a thin CLI client.
"""

__version__ = "0.1.0"

from .errors import (CapExceeded, ChainGeomError, DescriptorError,
                     MorphismConditionError, VerificationError)
from .fields import FieldAut, FieldHom, FiniteField, homomorphisms, make_field

__all__ = [
    "CapExceeded", "ChainGeomError", "DescriptorError",
    "MorphismConditionError", "VerificationError",
    "FieldAut", "FieldHom", "FiniteField", "homomorphisms", "make_field",
    "__version__",
]
