"""Jones polynomials two ways, gap analysis, and quasi-alternating tests."""

from .laurent import (
    GapReport,
    HalfLaurent,
    Overlap,
    SupportNotOnLattice,
    ZeroPolynomial,
    analyze,
    gap_between,
    monomial_quotient,
    parse,
)
from .diagram import (
    Diagram,
    DisconnectedDiagram,
    EmptyDiagram,
    InvalidCrossing,
    InvalidStrandLabels,
    NotTypeI,
    PDSyntaxError,
    SameComponent,
    SplitDiagram,
    parse_pd,
    render_pd,
)
from .tait import (
    LoopOrIsthmus,
    NoEmbedding,
    SignedPlanarGraph,
    activity,
    checkerboard,
    dual,
    gamma,
    gamma_skein_check,
    goeritz_det,
    kirchhoff_count,
    parse_edgelist,
    spanning_trees,
    tutte,
    tutte_check,
)
from .bracket import (
    BracketResult,
    bracket_gap_check,
    bracket_result,
    bracket_state_sum,
    determinant,
    jones,
    kauffman_bracket,
    skein_check,
)
from .qa import (
    INCONCLUSIVE,
    NOTQA,
    Budget,
    Certificate,
    KanenobuVerdict,
    QAVerdict,
    Unknown,
    certify,
    kanenobu_jones,
    kanenobu_obstruction,
    obstruct,
    replay_certificate,
)

__all__ = [
    "GapReport", "HalfLaurent", "Overlap", "SupportNotOnLattice",
    "ZeroPolynomial", "analyze", "gap_between", "monomial_quotient", "parse",
    "Diagram", "DisconnectedDiagram", "EmptyDiagram", "InvalidCrossing",
    "InvalidStrandLabels", "NotTypeI", "PDSyntaxError", "SameComponent",
    "SplitDiagram", "parse_pd", "render_pd",
    "LoopOrIsthmus", "NoEmbedding", "SignedPlanarGraph", "activity",
    "checkerboard", "dual", "gamma", "gamma_skein_check", "goeritz_det",
    "kirchhoff_count", "parse_edgelist", "spanning_trees", "tutte",
    "tutte_check",
    "BracketResult", "bracket_gap_check", "bracket_result",
    "bracket_state_sum", "determinant", "jones", "kauffman_bracket",
    "skein_check",
    "INCONCLUSIVE", "NOTQA", "Budget", "Certificate", "KanenobuVerdict",
    "QAVerdict", "Unknown", "certify", "kanenobu_jones",
    "kanenobu_obstruction", "obstruct", "replay_certificate",
]
