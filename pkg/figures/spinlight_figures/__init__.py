"""Figure rendering for spinlight pipeline artifacts.

Two script entry points consume the documented CSV schemas produced by the
simulation CLI and render the pulse/mode overlay and the phase-space
histogram with its scatter inset.  Rendering is read-only and byte-stable for
fixed inputs and renderer version.
"""

from .io import SchemaError, read_columns, run_footer

__all__ = ["SchemaError", "read_columns", "run_footer"]
__version__ = "0.1.0"
