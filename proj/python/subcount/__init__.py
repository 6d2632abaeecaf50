#
# Project subcount - Copyright 2026 The subcount Authors.
# SPDX-License-Identifier: Apache-2.0
#

"""Exact substructure counting with message-passing programs."""

from ._core import (
    BudgetError,
    Error,
    Graph,
    InternalError,
    OverflowError,
    ParseError,
    PreconditionError,
    ProgramError,
    ValidationError,
    count,
    count_walks,
    digest,
    distinguish,
    gen_coned_cycles,
    gen_complete,
    gen_cycle,
    gen_cycle_pair,
    gen_path,
    gen_petersen,
    gen_random,
    gen_random_regular,
    gen_rook4x4,
    gen_shrikhande,
    load_graph,
    oracle,
    oracle_cycles,
    parse_edgelist,
    parse_graph6,
)

__all__ = [name for name in dir() if not name.startswith("_")]
