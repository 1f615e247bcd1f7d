"""Exact duplicial objects, distributive laws and cyclic homology at desk scale."""
from .linalg import GF, QQ, Matrix
from .complexes import ValidationReport, hc_betti, homology_table, total_complex
from .simplicial import SimplicialModule, check_identities, hc_of_duplicial, hh_betti
from .engine import BohmStefan, LawViolation, Module
from .hochschild import Algebra, algebra_catalog, hochschild_cyclic_module, twisted_module
from .hopf import Bialgebra, bialgebra_catalog, hopf_cyclic_module, is_hopf_and_antipode, sayd_check
from .nerve import FiniteCategory, category_catalog, cyclic_iff_groupoid

__version__ = "0.1.0"
