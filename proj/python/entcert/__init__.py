"""Exact certification toolkit for unextendible biseparable bases and
genuinely entangled subspaces."""

from entcert._core import (
    appendix_protocol_tree,
    certify_distillable,
    certify_ges,
    certify_strong_nonlocality,
    certify_ubb,
    construct,
    omega_set,
    rank,
    reproduce_paper,
    stopper,
    verify_fixtures,
    verify_protocol,
)

__all__ = [
    "appendix_protocol_tree",
    "certify_distillable",
    "certify_ges",
    "certify_strong_nonlocality",
    "certify_ubb",
    "construct",
    "omega_set",
    "rank",
    "reproduce_paper",
    "stopper",
    "verify_fixtures",
    "verify_protocol",
]
