"""Exact vertex-algebra engine for rectangular W-superalgebras of type A."""
from .appendix import AppendixSuite, Grading, leading_component
from .checks import MUTATIONS, CheckReport, SuiteResult
from .foundation import Instance, Scalar
from .ope import OpeSuite
from .properties import PropertySuite
from .reports import RunReport, SuiteConfig, run_suite
from .superalgebra import LieSuperalgebra, borel_ghost_algebra, gl_str_algebra
from .vertex import ENGINE_VERSION, State, VertexAlgebra, nth_product, translate
from .wconstruct import WAlgebra, closed_form_W1, closed_form_W2
from .yangian import ev_check, phi_check

__all__ = [
    "AppendixSuite",
    "CheckReport",
    "ENGINE_VERSION",
    "Grading",
    "Instance",
    "LieSuperalgebra",
    "MUTATIONS",
    "OpeSuite",
    "PropertySuite",
    "RunReport",
    "Scalar",
    "State",
    "SuiteConfig",
    "SuiteResult",
    "VertexAlgebra",
    "WAlgebra",
    "borel_ghost_algebra",
    "closed_form_W1",
    "closed_form_W2",
    "ev_check",
    "gl_str_algebra",
    "leading_component",
    "nth_product",
    "phi_check",
    "run_suite",
    "translate",
]
