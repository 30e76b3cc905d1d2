"""Exact computer algebra for fermionic phase-space distributions."""

try:
    from ._fermiphase import *  # noqa: F401,F403  (installed layout)
except ImportError:  # pragma: no cover - in-tree build layout
    from _fermiphase import *  # noqa: F401,F403

__all__ = [
    "eval",
    "purity",
    "distribution_body",
    "det_gamma",
    "renyi_entropy",
    "find_wq_crossing",
    "fermi_dirac_nbar",
    "majorization_relation",
    "verify",
    "sweep_csv",
    "fermi_dirac_csv",
    "AlgebraError",
]
