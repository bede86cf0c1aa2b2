"""Orbits of GU_m(q) x GU_n(q) on m x n matrices over GF(q^2).

Matrices and invariants are plain dicts in the same JSON layout the
command-line tool reads and writes.
"""

from ._gusvd import (
    SCHEMA,
    canonical_string,
    f_nilpotent,
    field_info,
    flanders_admissible,
    jordan_pair,
    k_gl,
    orbit_invariant,
    partition_count,
    realize,
    same_orbit,
    star_admissible,
    star_witness,
    total_orbits,
    verify_completeness,
    verify_counts,
)


def matrix(p, e, rows):
    """Matrix document from a list of rows of element codes."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    return {"schema": SCHEMA, "p": p, "e": e, "m": m, "n": n, "entries": [x for row in rows for x in row]}


__all__ = [
    "SCHEMA",
    "canonical_string",
    "f_nilpotent",
    "field_info",
    "flanders_admissible",
    "jordan_pair",
    "k_gl",
    "matrix",
    "orbit_invariant",
    "partition_count",
    "realize",
    "same_orbit",
    "star_admissible",
    "star_witness",
    "total_orbits",
    "verify_completeness",
    "verify_counts",
]
