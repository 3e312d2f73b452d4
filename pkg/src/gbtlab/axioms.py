"""Deciders for the nine pairwise axioms and the assembled profile.

Point-pair axioms (T0, T1) are decided over unordered pairs: the pair may
be labeled either way before applying the two-sided separation condition.
The ordered reading would misclassify standard witnesses (a space with
mu1 = {∅,{a}}, mu2 = {∅,{b}} on three points must come out T0), and the
unordered reading is the one that agrees with the singleton
characterizations below.

On a finite carrier the "finite subset", "countable subset" and "any
subset" separation grades coincide, so T1/4, T3/8 and T5/8 share one
canonical decision procedure: every subset is pairwise λ-closed.  The
quantifier-shaped definitional algorithms are kept as cross-validation
oracles, as are the alternative characterizations of T0 and T1/2; a
disagreement between routes raises InternalDisagreementError, which the
CLI maps to exit code 3.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .gbt import GbtSpace
from .gt import GeneralizedTopology


class UnknownAxiomError(ValueError):
    """Axiom name not among the nine deciders."""


class InternalDisagreementError(RuntimeError):
    """Two decision routes for the same axiom disagree: an engine bug."""


def _label_set(t: GeneralizedTopology, mask: int) -> str:
    names = t.ground.names
    return "{" + ",".join(names[i] for i in range(len(names)) if mask >> i & 1) + "}"


# Each low-level decider takes the two topologies and returns
# (verdict, witness); the witness is a short rendering of the first
# falsifying configuration in scan order, or None when the axiom holds.


def decide_t0(t1: GeneralizedTopology, t2: GeneralizedTopology) -> tuple[bool, str | None]:
    n = t1.ground.size
    for x, y in itertools.combinations(range(n), 2):
        p, q = 1 << x, 1 << y
        if any(bool(u & p) != bool(u & q) for u in t1.open_masks):
            continue
        if any(bool(v & p) != bool(v & q) for v in t2.open_masks):
            continue
        return False, f"pair ({t1.ground.names[x]},{t1.ground.names[y]})"
    return True, None


def t0_by_one_point_sets(t1: GeneralizedTopology, t2: GeneralizedTopology) -> bool:
    """T0 via sets that are open on one side or closed on the other."""
    kinds = set(t1.open_masks) | set(t2.open_masks) | set(t1.closed_masks) | set(t2.closed_masks)
    n = t1.ground.size
    for x, y in itertools.combinations(range(n), 2):
        p, q = 1 << x, 1 << y
        if not any(bool(k & p) != bool(k & q) for k in kinds):
            return False
    return True


def t0_by_singletons(t1: GeneralizedTopology, t2: GeneralizedTopology) -> bool:
    """T0 via pairwise λ-closedness of every singleton."""
    cl1, cl2, w1, w2 = t1.closure_table, t2.closure_table, t1.wedge_table, t2.wedge_table
    return all(
        cl1[p] & cl2[p] & w1[p] & w2[p] == p
        for p in (1 << x for x in range(t1.ground.size))
    )


def decide_t1(t1: GeneralizedTopology, t2: GeneralizedTopology) -> tuple[bool, str | None]:
    n = t1.ground.size
    for x, y in itertools.combinations(range(n), 2):
        p, q = 1 << x, 1 << y
        for a, b in ((p, q), (q, p)):
            if any(u & a and not u & b for u in t1.open_masks) and any(
                v & b and not v & a for v in t2.open_masks
            ):
                break
        else:
            return False, f"pair ({t1.ground.names[x]},{t1.ground.names[y]})"
    return True, None


def decide_r0(t1: GeneralizedTopology, t2: GeneralizedTopology) -> tuple[bool, str | None]:
    n = t1.ground.size
    for i, (ta, tb) in ((1, (t1, t2)), (2, (t2, t1))):
        for g_mask in ta.open_masks:
            for x in range(n):
                p = 1 << x
                if g_mask & p and tb.closure_table[p] & ~g_mask:
                    return False, (
                        f"mu{i}-open {_label_set(ta, g_mask)} contains {ta.ground.names[x]} "
                        f"but not its mu{3 - i}-closure {_label_set(ta, tb.closure_table[p])}"
                    )
    return True, None


def decide_symmetric(t1: GeneralizedTopology, t2: GeneralizedTopology) -> tuple[bool, str | None]:
    n = t1.ground.size
    names = t1.ground.names
    for i, (ta, tb) in ((1, (t1, t2)), (2, (t2, t1))):
        for y in range(n):
            cl_y = ta.closure_table[1 << y]
            for x in range(n):
                if x != y and cl_y >> x & 1 and not tb.closure_table[1 << x] >> y & 1:
                    return False, (
                        f"{names[x]} in mu{i}-closure of {{{names[y]}}} but "
                        f"{names[y]} not in mu{3 - i}-closure of {{{names[x]}}}"
                    )
    return True, None


def decide_t_half(t1: GeneralizedTopology, t2: GeneralizedTopology) -> tuple[bool, str | None]:
    """Singleton rule: each {x} is (mu1-open or mu2-closed) and (mu2-open or mu1-closed)."""
    full = t1.ground.full_mask
    for x in range(t1.ground.size):
        p = 1 << x
        open1 = p in t1.open_mask_set
        open2 = p in t2.open_mask_set
        closed1 = (full ^ p) in t1.open_mask_set
        closed2 = (full ^ p) in t2.open_mask_set
        if not (open1 or closed2):
            return False, f"singleton {{{t1.ground.names[x]}}} neither mu1-open nor mu2-closed"
        if not (open2 or closed1):
            return False, f"singleton {{{t1.ground.names[x]}}} neither mu2-open nor mu1-closed"
    return True, None


def t_half_by_definition(t1: GeneralizedTopology, t2: GeneralizedTopology) -> bool:
    """Literal subset scan: every g-closed set wrt the other side is closed."""
    full = t1.ground.full_mask
    for ta, tb in ((t1, t2), (t2, t1)):
        for a in range(full + 1):
            g_closed = ta.closure_table[a] & ~tb.wedge_table[a] == 0
            if g_closed and ta.closure_table[a] != a:
                return False
    return True


def decide_all_lambda(t1: GeneralizedTopology, t2: GeneralizedTopology) -> tuple[bool, str | None]:
    """Every subset pairwise λ-closed: the shared T1/4 = T3/8 = T5/8 decider."""
    cl1, cl2, w1, w2 = t1.closure_table, t2.closure_table, t1.wedge_table, t2.wedge_table
    for a in range(t1.ground.full_mask + 1):
        if cl1[a] & cl2[a] & w1[a] & w2[a] != a:
            return False, f"subset {_label_set(t1, a)} is not pairwise λ-closed"
    return True, None


def t_fraction_by_definition(t1: GeneralizedTopology, t2: GeneralizedTopology) -> bool:
    """Separation of every subset from every outside point by one of the four
    kinds of set (open or closed on either side).  On a finite carrier this is
    the definitional algorithm for T1/4, T3/8 and T5/8 alike."""
    kinds = sorted(set(t1.open_masks) | set(t2.open_masks) | set(t1.closed_masks) | set(t2.closed_masks))
    n = t1.ground.size
    for p_mask in range(t1.ground.full_mask + 1):
        for y in range(n):
            q = 1 << y
            if p_mask & q:
                continue
            if not any(p_mask & ~k == 0 and not k & q for k in kinds):
                return False
    return True


def decide_lambda_symmetric(t1: GeneralizedTopology, t2: GeneralizedTopology) -> tuple[bool, str | None]:
    cl1, cl2, w1, w2 = t1.closure_table, t2.closure_table, t1.wedge_table, t2.wedge_table
    for a in range(t1.ground.full_mask + 1):
        if cl1[a] & cl2[a] & w1[a] & w2[a] != a:
            continue
        if cl1[a] & w2[a] != a or cl2[a] & w1[a] != a:
            return False, f"{_label_set(t1, a)} pairwise λ-closed but not λ-closed on both sides"
    return True, None


AXIOM_NAMES = ("T0", "T1_4", "T3_8", "T5_8", "T1_2", "T1", "R0", "SYM", "LSYM")

_ALIASES = {
    "t0": "T0",
    "t1/4": "T1_4",
    "t1_4": "T1_4",
    "t3/8": "T3_8",
    "t3_8": "T3_8",
    "t5/8": "T5_8",
    "t5_8": "T5_8",
    "t1/2": "T1_2",
    "t1_2": "T1_2",
    "t1": "T1",
    "r0": "R0",
    "sym": "SYM",
    "symmetric": "SYM",
    "lsym": "LSYM",
    "lambda-symmetric": "LSYM",
    "lambda_symmetric": "LSYM",
}


def normalize_axiom_name(name: str) -> str:
    try:
        return _ALIASES[name.lower()]
    except KeyError:
        raise UnknownAxiomError(f"unknown axiom {name!r}; known: {', '.join(AXIOM_NAMES)}") from None


@dataclass(frozen=True)
class AxiomProfile:
    """Truth record of the nine pairwise axioms for one space.

    ``witnesses`` maps an axiom name to a short explanation of the first
    falsifying configuration found, for every axiom that is false.
    """

    t0: bool
    t_quarter: bool
    t_3_8: bool
    t_5_8: bool
    t_half: bool
    t1: bool
    r0: bool
    symmetric: bool
    lambda_symmetric: bool
    witnesses: dict[str, str] = field(default_factory=dict, compare=False)

    def value(self, axiom: str) -> bool:
        return self.as_dict()[normalize_axiom_name(axiom)]

    def as_dict(self) -> dict[str, bool]:
        return {
            "T0": self.t0,
            "T1_4": self.t_quarter,
            "T3_8": self.t_3_8,
            "T5_8": self.t_5_8,
            "T1_2": self.t_half,
            "T1": self.t1,
            "R0": self.r0,
            "SYM": self.symmetric,
            "LSYM": self.lambda_symmetric,
        }


def evaluate_axiom(name: str, t1: GeneralizedTopology, t2: GeneralizedTopology) -> bool:
    """Fast single-axiom evaluation used by the mining sweeps."""
    key = normalize_axiom_name(name)
    if key == "T0":
        return decide_t0(t1, t2)[0]
    if key in ("T1_4", "T3_8", "T5_8"):
        return decide_all_lambda(t1, t2)[0]
    if key == "T1_2":
        return decide_t_half(t1, t2)[0]
    if key == "T1":
        return decide_t1(t1, t2)[0]
    if key == "R0":
        return decide_r0(t1, t2)[0]
    if key == "SYM":
        return decide_symmetric(t1, t2)[0]
    return decide_lambda_symmetric(t1, t2)[0]


def is_pairwise_T0(s: GbtSpace) -> bool:
    return decide_t0(s.mu1, s.mu2)[0]


def is_pairwise_T1(s: GbtSpace) -> bool:
    return decide_t1(s.mu1, s.mu2)[0]


def is_pairwise_R0(s: GbtSpace) -> bool:
    return decide_r0(s.mu1, s.mu2)[0]


def is_pairwise_symmetric(s: GbtSpace) -> bool:
    return decide_symmetric(s.mu1, s.mu2)[0]


def is_pairwise_T_half(s: GbtSpace) -> bool:
    return decide_t_half(s.mu1, s.mu2)[0]


def is_pairwise_T_quarter(s: GbtSpace) -> bool:
    return decide_all_lambda(s.mu1, s.mu2)[0]


def is_pairwise_T_3_8(s: GbtSpace) -> bool:
    return decide_all_lambda(s.mu1, s.mu2)[0]


def is_pairwise_T_5_8(s: GbtSpace) -> bool:
    return decide_all_lambda(s.mu1, s.mu2)[0]


def is_pairwise_lambda_symmetric(s: GbtSpace) -> bool:
    return decide_lambda_symmetric(s.mu1, s.mu2)[0]


def cross_validate_space(s: GbtSpace) -> None:
    """Run every alternative decision route; raise on any disagreement."""
    t1, t2 = s.mu1, s.mu2
    t0 = decide_t0(t1, t2)[0]
    routes_t0 = (t0_by_one_point_sets(t1, t2), t0_by_singletons(t1, t2))
    if any(r != t0 for r in routes_t0):
        raise InternalDisagreementError(
            f"T0 routes disagree on {s!r}: definitional={t0}, "
            f"one-point-sets={routes_t0[0]}, singleton-λ={routes_t0[1]}"
        )
    t_half = decide_t_half(t1, t2)[0]
    if t_half_by_definition(t1, t2) != t_half:
        raise InternalDisagreementError(
            f"T1/2 routes disagree on {s!r}: singleton rule={t_half}"
        )
    frac = decide_all_lambda(t1, t2)[0]
    if t_fraction_by_definition(t1, t2) != frac:
        raise InternalDisagreementError(
            f"T1/4-T5/8 routes disagree on {s!r}: λ-scan={frac}"
        )


def axiom_profile(s: GbtSpace, cross_validate: bool = False) -> AxiomProfile:
    """All nine verdicts, with the implication chain asserted.

    With ``cross_validate`` every axiom that has more than one decision
    route is computed by all of them (exit surface for the agreement
    acceptance criterion).
    """
    t1, t2 = s.mu1, s.mu2
    if cross_validate:
        cross_validate_space(s)

    verdicts: dict[str, tuple[bool, str | None]] = {
        "T0": decide_t0(t1, t2),
        "T1": decide_t1(t1, t2),
        "R0": decide_r0(t1, t2),
        "SYM": decide_symmetric(t1, t2),
        "T1_2": decide_t_half(t1, t2),
        "LSYM": decide_lambda_symmetric(t1, t2),
    }
    frac = decide_all_lambda(t1, t2)
    verdicts["T1_4"] = verdicts["T3_8"] = verdicts["T5_8"] = frac

    chain = ("T1_2", "T5_8", "T3_8", "T1_4", "T0")
    for stronger, weaker in itertools.pairwise(chain):
        if verdicts[stronger][0] and not verdicts[weaker][0]:
            raise InternalDisagreementError(
                f"implication chain broken on {s!r}: {stronger} holds but {weaker} fails"
            )

    witnesses = {name: w for name, (ok, w) in verdicts.items() if not ok and w is not None}
    return AxiomProfile(
        t0=verdicts["T0"][0],
        t_quarter=verdicts["T1_4"][0],
        t_3_8=verdicts["T3_8"][0],
        t_5_8=verdicts["T5_8"][0],
        t_half=verdicts["T1_2"][0],
        t1=verdicts["T1"][0],
        r0=verdicts["R0"][0],
        symmetric=verdicts["SYM"][0],
        lambda_symmetric=verdicts["LSYM"][0],
        witnesses=witnesses,
    )
