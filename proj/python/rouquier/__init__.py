"""Rouquier blocks of cyclotomic Hecke algebras of G(de,e,r).

Report functions return the same dictionaries the command-line tool prints
as JSON.
"""

import json

from ._rouquier import (
    SCHEMA_VERSION,
    InvariantError,
    ValidationError,
    beta_number,
    contents_equal,
    is_d_stuttering,
    is_essential_pair,
    multipartitions,
    partition_from_beta,
    prime_divisors_of_root_difference,
    shift,
    tau,
)
from . import _rouquier as _core

__all__ = [
    "SCHEMA_VERSION",
    "InvariantError",
    "ValidationError",
    "ak_blocks",
    "ak_hyperplanes",
    "beta_number",
    "contents_equal",
    "group_blocks",
    "is_d_stuttering",
    "is_essential_pair",
    "multipartitions",
    "partition_from_beta",
    "prime_divisors_of_root_difference",
    "rank2_aa",
    "rank2_blocks",
    "rank2_hyperplanes",
    "shift",
    "tau",
    "verify",
]


def group_blocks(de, e, r, m, n):
    """Blocks of G(de,e,r) at x_j -> zeta_d^j q^m_j, z -> q^n."""
    return json.loads(_core.group_blocks_json(de, e, r, list(m), n))


def ak_blocks(d, r, m, n):
    """Blocks of the Ariki-Koike algebra of G(d,1,r)."""
    return json.loads(_core.ak_blocks_json(d, r, list(m), n))


def rank2_blocks(d, a, b, c, p=1):
    """Blocks of G(2pd,2p,2) with independent parameters a, b, c."""
    return json.loads(_core.rank2_blocks_json(d, list(a), list(b), list(c), p))


def rank2_aa(d, a, b, c, p=1):
    """Blocks plus a, A and a+A (as fraction strings) per character."""
    return json.loads(_core.rank2_aa_json(d, list(a), list(b), list(c), p))


def rank2_hyperplanes(d, p=1):
    return json.loads(_core.rank2_hyperplanes_json(d, p))


def ak_hyperplanes(d, r):
    return json.loads(_core.ak_hyperplanes_json(d, r))


def verify(suite="all", max_d=4, max_r=4, seed=7):
    return json.loads(_core.verify_json(suite, max_d, max_r, seed))
