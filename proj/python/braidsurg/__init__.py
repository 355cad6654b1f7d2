"""Braid-positive surgery presentations of closed oriented 3-manifolds.

Every operation mirrors a subcommand of the ``braidsurg`` command line tool
and shares its JSON document schema: surgery presentations are dicts with
``linking``, ``coefficients``, and ``unknotted``; braid diagrams are dicts
with ``strands``, ``word``, ``coefficients``, and optional ``axis``.
Integers beyond 64 bits cross the boundary as decimal strings.
"""

from ._core import (
    braids_equal,
    closure,
    h1,
    left_normal_form,
    minimal_twist_power,
    negative_letter_count,
    positify,
    rolfsen_twist,
    selftest,
    transform,
)

__all__ = [
    "braids_equal",
    "closure",
    "h1",
    "left_normal_form",
    "minimal_twist_power",
    "negative_letter_count",
    "positify",
    "rolfsen_twist",
    "selftest",
    "transform",
]
