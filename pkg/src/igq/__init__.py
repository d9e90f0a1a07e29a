"""Exact verification engine for the quantum cohomology of IG(2,2n) and
the Lefschetz exceptional collections on G(2,m) and IG(2,2k).

Everything is computed over exact rationals at desk scale (n <= 5,
k <= 4): ring presentations and their Groebner bases, the spectrum of the
small quantum ring, the first-order big-quantum deformation, the Milnor
algebra match, and the Borel-Bott-Weil Ext profiles of the appendix-style
collections.
"""

__version__ = "0.1.0"

from .poly import GREVLEX, GRLEX, BlockOrder, Polynomial, Ring
from .groebner import (
    INFINITE,
    GroebnerBasis,
    Ideal,
    buchberger,
    colon,
    eliminate,
    normal_form,
    quotient_dimension,
    saturate,
    standard_monomials,
)
from .univariate import distinct_root_count, squarefree_part, univ_gcd

__all__ = [
    "__version__",
    "GREVLEX",
    "GRLEX",
    "BlockOrder",
    "Polynomial",
    "Ring",
    "INFINITE",
    "GroebnerBasis",
    "Ideal",
    "buchberger",
    "colon",
    "eliminate",
    "normal_form",
    "quotient_dimension",
    "saturate",
    "standard_monomials",
    "distinct_root_count",
    "squarefree_part",
    "univ_gcd",
]
