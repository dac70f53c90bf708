"""Exact exclusion of one-fixed-point actions of finite groups on spheres.

Two restrictions are applied to every faithful candidate tangent module: the
discrete-submodules restriction (strategy 1) and the intersection-number
restriction (strategy 2). Each exclusion comes with a checkable certificate.
"""
from .engine import ExcludeOptions, GroupData, exclude, verify_certificate
from .named import parse_group_spec
from .perm import Group, Perm, parse_perm

__all__ = ["ExcludeOptions", "Group", "GroupData", "Perm", "exclude", "parse_group_spec",
           "parse_perm", "verify_certificate"]
__version__ = "0.1.0"
