"""Biquandle-labeled Gauss diagrams, labeled Polyak algebras and their enhancements."""
from pathlib import Path

from .arrow import AlgebraElement, expand, inner_product
from .biquandle import Biquandle, BiquandleError, load_biquandle, parse_biquandle
from .enhance import EnhancementValue, enhancement, linking_number, parity_oracle
from .gauss import GaussDiagram, canonical_form, parse_gauss_code
from .labeling import counting_invariant, enumerate_labelings
from .polyak import PolyakBasis, polyak_basis, relation_generators, verify_invariance

DATA = Path(__file__).parent / "data"


def data_path(name):
    """Path of a shipped fixture file (biquandle tables, knot table)."""
    return DATA / name
