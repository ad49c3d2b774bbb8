"""Quasi-alternating obstructions and the bounded certification search.

obstruct applies a battery of necessary conditions to a Jones
polynomial and determinant; any firing rule means the link cannot be
quasi-alternating. certify searches for a positive witness: a tree of
crossing resolutions with additive determinants whose leaves all
simplify to the unknot. The two directions are independent; "Unknown"
from the search is never evidence against membership.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

from .diagram import Diagram, SplitDiagram, parse_pd
from .bracket import determinant as bracket_determinant
from .bracket import jones
from .laurent import HalfLaurent, ZeroPolynomial, analyze, monomial_quotient
from .tait import checkerboard, goeritz_det

NOTQA = "NotQA"
INCONCLUSIVE = "Inconclusive"

# Jones polynomial of the Hopf link used as the reference factor for
# connected sums of Hopf links
HOPF_JONES = HalfLaurent({-5: -1, -1: -1})


@dataclass(frozen=True)
class QAVerdict:
    status: str
    reasons: tuple
    assumptions: dict

    def rule_ids(self):
        return tuple(r[0] for r in self.reasons)


def obstruct(v: HalfLaurent, det: int, prime: bool = False,
             torus_2n: bool = False) -> QAVerdict:
    """Necessary-condition battery for quasi-alternating links.

    Collects every firing rule, in order: breadth bound against the
    determinant; any gap when the caller asserts a prime non-torus
    link; more than one gap without Hopf-sum structure; small breadth
    with a determinant other than 1, 2, 3; broken sign alternation.
    """
    if v.is_zero():
        raise ZeroPolynomial("the zero polynomial is not a Jones polynomial")
    if det < 1:
        raise ValueError("det must be a positive integer")
    rep = analyze(v, step2=2)
    reasons = []
    if rep.breadth2 > 2 * det:
        reasons.append(("breadth", "breadth exceeds the determinant",
                        {"breadth2": rep.breadth2, "det": det}))
    if prime and not torus_2n and rep.gap_count() >= 1:
        reasons.append(("gap",
                        "gap in the Jones polynomial of a prime link "
                        "that is not a (2,n) torus link",
                        {"gaps": rep.gaps}))
    if rep.gap_count() >= 2:
        k = rep.breadth2 // 4
        power = HalfLaurent.one()
        for _ in range(k):
            power = power * HOPF_JONES
        if monomial_quotient(v, power) is None:
            reasons.append(("multi-gap",
                            "more than one gap but not a connected sum "
                            "of Hopf links",
                            {"gaps": rep.gaps, "hopf_factors_tried": k}))
    if rep.breadth2 <= 6 and det not in (1, 2, 3):
        reasons.append(("small-breadth",
                        "breadth at most three forces determinant 1, 2 or 3",
                        {"breadth2": rep.breadth2, "det": det}))
    if not rep.alternating:
        reasons.append(("not-alternating",
                        "coefficient signs do not alternate on the lattice",
                        {"support2": v.support2()}))
    status = NOTQA if reasons else INCONCLUSIVE
    return QAVerdict(status=status, reasons=tuple(reasons),
                     assumptions={"prime": prime,
                                  "not_torus_2n": not torus_2n})


# certification search


@dataclass(frozen=True)
class Budget:
    max_depth: int = 24
    max_nodes: int = 100000
    simplify_passes: int = 50

    @classmethod
    def default(cls) -> "Budget":
        nodes = os.environ.get("QALT_BUDGET_NODES")
        if nodes is not None:
            return cls(max_nodes=int(nodes))
        return cls()


@dataclass(frozen=True)
class Certificate:
    root: Diagram
    tree: dict

    def to_json(self) -> str:
        return json.dumps(self.tree, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        tree = json.loads(text)
        return cls(root=parse_pd(tree["pd"]), tree=tree)


@dataclass(frozen=True)
class Unknown:
    reason: str  # "budget" or "exhausted"


class _BudgetExceeded(Exception):
    pass


def _fast_det(d: Diagram) -> int:
    """Goeritz determinant; 0 for split diagrams."""
    if not d.is_connected():
        return 0
    return goeritz_det(checkerboard(d)[0])


def certify(d: Diagram, budget: Budget = None):
    """Bounded search for a quasi-alternating certificate.

    At each node the diagram is simplified; a 0-crossing unknot is a
    leaf. Otherwise crossings are tried in ascending order: a crossing
    qualifies when both smoothings have positive determinants adding up
    to the parent's, and both children certify recursively. Returns the
    first Certificate in this deterministic order, or Unknown("budget")
    / Unknown("exhausted")."""
    if budget is None:
        budget = Budget.default()
    if d.component_count == 0 or not d.is_connected():
        raise SplitDiagram("certification needs a connected nonempty diagram")
    memo = {}
    counter = [0]

    def rec(dd: Diagram, depth: int):
        counter[0] += 1
        if counter[0] > budget.max_nodes or depth > budget.max_depth:
            raise _BudgetExceeded()
        s = dd.simplify(budget.simplify_passes).canonical()
        if not s.crossings:
            if s.component_count == 1:
                return {"pd": dd.render(), "det": 1, "leaf": True}
            return None
        if not s.is_connected():
            return None
        key = s.render()
        core = memo.get(key)
        if core is not None:
            return {"pd": dd.render(), **core}
        det_s = goeritz_det(checkerboard(s)[0])
        if det_s < 2:
            # a 1-determinant diagram that does not simplify away is
            # not provably the unknot; additivity needs det >= 2 anyway
            return None
        for c in range(len(s.crossings)):
            d0 = s.smooth(c, 0)
            d1 = s.smooth(c, 1)
            det0 = _fast_det(d0)
            det1 = _fast_det(d1)
            if det0 < 1 or det1 < 1 or det0 + det1 != det_s:
                continue
            n0 = rec(d0, depth + 1)
            if n0 is None:
                continue
            n1 = rec(d1, depth + 1)
            if n1 is None:
                continue
            core = {"det": det_s, "reduced_pd": key, "crossing": c,
                    "children": [n0, n1]}
            memo[key] = core
            return {"pd": dd.render(), **core}
        return None

    try:
        tree = rec(d, 0)
    except _BudgetExceeded:
        return Unknown("budget")
    if tree is None:
        return Unknown("exhausted")
    return Certificate(root=d, tree=tree)


def replay_certificate(cert) -> bool:
    """Re-verify a certificate from scratch; raises ValueError on any
    broken condition, including root determinant against the bracket
    route."""
    tree = cert.tree if isinstance(cert, Certificate) else dict(cert)
    root = parse_pd(tree["pd"])

    def walk(node):
        d = parse_pd(node["pd"])
        s = d.simplify().canonical()
        if node.get("leaf"):
            if node["det"] != 1:
                raise ValueError("leaf with det != 1")
            if s.crossings or s.component_count != 1:
                raise ValueError("leaf does not simplify to the unknot")
            return 1
        if s.render() != node["reduced_pd"]:
            raise ValueError("reduced diagram mismatch")
        det = goeritz_det(checkerboard(s)[0])
        if det != node["det"]:
            raise ValueError("stored det %r != %r" % (node["det"], det))
        c = node["crossing"]
        kids = node["children"]
        if len(kids) != 2:
            raise ValueError("internal node needs two children")
        for r, kid in enumerate(kids):
            want = s.smooth(c, r)
            if parse_pd(kid["pd"]) != want:
                raise ValueError("child %d is not the %d-smoothing" % (r, r))
        d0 = walk(kids[0])
        d1 = walk(kids[1])
        if d0 < 1 or d1 < 1 or d0 + d1 != node["det"]:
            raise ValueError("determinant additivity fails at a node")
        return node["det"]

    root_det = walk(tree)
    if root_det != bracket_determinant(root):
        raise ValueError("root determinant disagrees with the bracket route")
    return True


# Kanenobu family

_KANENOBU_COEFFS = (1, -2, 3, -4, 4, -4, 3, -2, 1)


def kanenobu_jones(p: int, q: int) -> HalfLaurent:
    """Closed-form Jones polynomial of the Kanenobu knot K(p, q)."""
    s = p + q
    sign = -1 if s % 2 else 1
    terms = {}
    for k, c in zip(range(-4, 5), _KANENOBU_COEFFS):
        terms[2 * (s + k)] = sign * c
    terms[0] = terms.get(0, 0) + 1
    return HalfLaurent(terms)


@dataclass(frozen=True)
class KanenobuVerdict:
    status: str
    agrees: bool
    obstruction: QAVerdict = field(compare=False)


def kanenobu_obstruction(p: int, q: int) -> KanenobuVerdict:
    """NotQA exactly when |p|+|q| >= 19 or |p+q| > 6; also reports
    whether the generic obstruction battery reaches the same status on
    the closed-form polynomial with det 25."""
    status = NOTQA if (abs(p) + abs(q) >= 19 or abs(p + q) > 6) \
        else INCONCLUSIVE
    verdict = obstruct(kanenobu_jones(p, q), 25,
                       prime=True, torus_2n=False)
    return KanenobuVerdict(status=status,
                           agrees=(verdict.status == status),
                           obstruction=verdict)
