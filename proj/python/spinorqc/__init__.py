"""Exact Cl(1,3) spinor calculator."""

from spinorqc._core import (
    __version__,
    bell,
    braid_group_order,
    check,
    decode,
    encode,
    eval_expression,
    teleport_exact,
)

__all__ = [
    "__version__",
    "bell",
    "braid_group_order",
    "check",
    "decode",
    "encode",
    "eval_expression",
    "teleport_exact",
]
