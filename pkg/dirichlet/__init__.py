"""
Dirichlet boundary value problem for orbitlike free elasticae
"""

from .problem import Assembly, DirichletProblem, DirichletSolution, SigmaQuad, assemble, endpoint_data
from .solver import ORIENTATIONS, SearchConfig, reproduces_boundary, sample_path, solve
from .symmetry import HypothesisReport, classify_symmetry, symmetry_breaking_family, symmetry_hypothesis_check
