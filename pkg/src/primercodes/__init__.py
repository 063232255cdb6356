"""Balanced, primer and DNA computing codes built from cyclic codes over GF(2) and GF(4)."""

__version__ = "0.1.0"

from .gfcore import GF2, GF4, ExtField, dna_decode, dna_encode, ext_field  # noqa: E402
from .polyring import Poly  # noqa: E402
from .cyclic import (  # noqa: E402
    CyclicCode,
    DecodeError,
    LinearEncoder,
    TavaresEncoder,
    bch_narrow_sense,
    code_from_generator,
    code_properties,
    reversible_bch,
)
from .balance import construct_bin_balanced, construct_gc_balanced  # noqa: E402
from .primer import (  # noqa: E402
    RcGenSet,
    construct_primer_almost_balanced,
    construct_primer_general,
    construct_primer_rc,
    search_rc_generating,
    validate_rc_generating,
)
from .dnacomp import construct_dna_computing  # noqa: E402
