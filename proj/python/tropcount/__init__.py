"""Tropical curve counts with cross-ratio constraints.

Thin wrapper around the compiled core. Problems travel as JSON documents
(see the repository README for the schema); exact rationals are "p/q"
strings throughout.
"""

try:
    from ._tropcount import (
        __version__,
        count,
        enumerate,
        lift,
        real_count,
        render,
        smith_normal_form,
        trivalent_tree_count,
    )
except ImportError:  # running against a build tree
    from _tropcount import (
        __version__,
        count,
        enumerate,
        lift,
        real_count,
        render,
        smith_normal_form,
        trivalent_tree_count,
    )

__all__ = [
    "__version__",
    "count",
    "enumerate",
    "lift",
    "real_count",
    "render",
    "smith_normal_form",
    "trivalent_tree_count",
]
