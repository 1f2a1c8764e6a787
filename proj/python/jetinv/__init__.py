"""Python surface of the jetinv engine.

Thin re-export of the pybind11 module; rationals cross the boundary as
"p" / "p/q" strings so exactness is never lost to floats.
"""

try:
    # wheel layout: the extension lives inside the package
    from ._jetinv import (  # noqa: F401
        BadConfigError,
        EngineError,
        JetPoint,
        Motion,
        cayley_hamilton_reduce,
        cayley_rotation,
        dplusf_power,
        eikonal_sample,
        eval_invariant,
        gram,
        independence_rank,
        jet_of_polynomial,
        newton_girard,
        prolong_action,
        run_suite,
        verify_ode,
    )
except ImportError:
    # build-tree layout: the extension sits on sys.path
    from _jetinv import (  # noqa: F401
        BadConfigError,
        EngineError,
        JetPoint,
        Motion,
        cayley_hamilton_reduce,
        cayley_rotation,
        dplusf_power,
        eikonal_sample,
        eval_invariant,
        gram,
        independence_rank,
        jet_of_polynomial,
        newton_girard,
        prolong_action,
        run_suite,
        verify_ode,
    )

__all__ = [
    "BadConfigError",
    "EngineError",
    "JetPoint",
    "Motion",
    "cayley_hamilton_reduce",
    "cayley_rotation",
    "dplusf_power",
    "eikonal_sample",
    "eval_invariant",
    "gram",
    "independence_rank",
    "jet_of_polynomial",
    "newton_girard",
    "prolong_action",
    "run_suite",
    "verify_ode",
]
