"""Exact J-fraction convergents generating binomial coefficients.

Thin wrapper over the compiled ``_jfrac`` module.  Structured results
(reports, scans) come back as JSON strings; polynomials come back as
human-readable strings in the variables ``x`` and ``z``.
"""

try:
    from . import _jfrac as _impl
    from ._jfrac import *  # noqa: F401,F403
except ImportError:  # in-tree builds leave the module next to the package
    import _jfrac as _impl
    from _jfrac import *  # noqa: F401,F403

__version__ = "0.1.0"
__all__ = [name for name in dir(_impl) if not name.startswith("_")]
