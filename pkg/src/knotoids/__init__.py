"""Invariants of knotoids computed from Gauss codes.

The main entry points are :func:`parse_gauss_code`, :func:`f_polynomial`,
:func:`nth_f_polynomial`, :func:`index_polynomial` and :func:`nth_polynomial`.
:mod:`knotoids.moves` rewrites diagrams by Reidemeister moves, and
:mod:`knotoids.cli` is the command-line front end.
"""

from knotoids.errors import (
    DomainError,
    EmptyDiagram,
    GaussSyntaxError,
    InvalidMove,
    KnotoidError,
    NotInCn,
    UnknownChord,
    UnknownName,
    ValidationError,
)
from knotoids.gauss import (
    CORPUS_NAMES,
    ChordView,
    Endpoint,
    GaussDiagram,
    Role,
    corpus,
    corpus_labels,
    crossing_chords,
    hm_labels,
    intersection_index,
    inverse,
    lead_side_sign_sum,
    make_hm,
    mirror,
    parse_gauss_code,
    product,
    relabel,
    serialize,
)
from knotoids.invariants import (
    ChordReport,
    GeneralizedPoly,
    NthChordData,
    chord_report,
    cn_chords,
    dn_function,
    f_polynomial,
    gp_canonical,
    in_cn,
    index_function,
    index_polynomial,
    mirror_transform,
    nth_f_polynomial,
    nth_index_function,
    nth_mirror_transform,
    nth_polynomial,
    parse_generalized,
    specialize_v1,
)
from knotoids.laurent import LaurentPoly, QuotientLaurent, lp_canonical, parse_laurent
from knotoids.moves import (
    MoveDescriptor,
    MoveKind,
    apply_move,
    enumerate_moves,
    forbidden_slide,
    random_walk,
    walk,
)

__version__ = "0.1.0"
