"""Stability and simplicity certificates for monad kernel and cohomology bundles.

Stability follows the twisted-exterior-power route: h^0 of Lambda^q T twisted
by B injects into h^0 of the twisted exterior power of the middle term, which
is a sum of line bundles, so exact vanishing over a constrained twist family
reduces to a sign condition on subset-sums of middle degrees.  Simplicity
chases dimensions through the dual kernel sequence.  Certificates only ever
claim what was actually checked; any gap degrades the verdict, never the
other way around.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cohomology import LineBundleSum, h_sum
from .monad import MonadSpec, display_summary
from .space import (
    MultiDegree,
    ProductSpace,
    check_polarization,
    degree,
    normalize,
    slope,
    vneg,
)


class TwistMode(enum.Enum):
    """Constraint defining the twist family a certificate quantifies over.

    PER_GROUP_NEGATIVE: every group's component sum is < 0 (group partition
    taken from the space).  TOTAL_NEGATIVE: the total component sum is < 0.
    """

    PER_GROUP_NEGATIVE = "per-group-negative"
    TOTAL_NEGATIVE = "total-negative"


@dataclass(frozen=True)
class SubsetProfile:
    """Aggregate of all q-subsets of middle summands sharing one degree sum."""

    t_s: MultiDegree
    count: int


@dataclass(frozen=True)
class VanishingResult:
    q: int
    passed: bool
    witness_twist: MultiDegree | None
    witness_profile: MultiDegree | None
    profiles: tuple[SubsetProfile, ...]


def _subset_profiles(middle: LineBundleSum, q: int) -> tuple[SubsetProfile, ...]:
    # DP over summand multiplicities: states keyed by (picked count, degree sum)
    l = len(middle.summands[0][0])
    states: dict[tuple[int, MultiDegree], int] = {(0, (0,) * l): 1}
    for deg, mult in middle.summands:
        nxt: dict[tuple[int, MultiDegree], int] = {}
        for (c, t_s), ways in states.items():
            for e in range(0, min(mult, q - c) + 1):
                key = (c + e, tuple(t + e * d for t, d in zip(t_s, deg)))
                nxt[key] = nxt.get(key, 0) + ways * math.comb(mult, e)
        states = nxt
    return tuple(
        SubsetProfile(t_s, ways)
        for (c, t_s), ways in sorted(states.items())
        if c == q
    )


def _profile_violated(
    x: ProductSpace, t_s: MultiDegree, constraint: TwistMode
) -> bool:
    # a twist B in the family with B + t_S >= 0 exists iff B = -t_S qualifies,
    # i.e. iff every constrained sum of t_S is strictly positive
    if constraint is TwistMode.TOTAL_NEGATIVE:
        return sum(t_s) >= 1
    return all(s >= 1 for _, s in x.group_sums(t_s))


def vanishing_all_twists(
    x: ProductSpace,
    middle: LineBundleSum,
    q: int,
    polarization: MultiDegree,
    constraint: TwistMode,
) -> VanishingResult:
    """Decide h^0(Lambda^q(middle)(B)) = 0 for every twist B in the family.

    The exterior power of a sum of line bundles splits into one line bundle
    per q-subset, with degree the subset-sum t_S; a global section exists for
    some admissible B iff B + t_S >= 0 componentwise for some subset.  The
    componentwise-minimal candidate B = -t_S decides each profile exactly,
    so the check is exhaustive over the (infinite) twist family.  On failure
    the witness twist B = -t_S is returned with its profile.
    """
    x.check_degree(polarization)
    if not 1 <= q <= middle.rank - 1:
        raise ValueError(f"q must lie in 1..{middle.rank - 1}, got {q}")
    for deg, _ in middle.summands:
        x.check_degree(deg)
    profiles = _subset_profiles(middle, q)
    for profile in profiles:
        if _profile_violated(x, profile.t_s, constraint):
            return VanishingResult(
                q=q,
                passed=False,
                witness_twist=vneg(profile.t_s),
                witness_profile=profile.t_s,
                profiles=profiles,
            )
    return VanishingResult(q, True, None, None, profiles)


def vanishing_by_enumeration(
    x: ProductSpace,
    middle: LineBundleSum,
    q: int,
    constraint: TwistMode,
    box: int = 5,
) -> tuple[bool, MultiDegree | None]:
    """Brute-force oracle: try every twist in [-box, box]^l against every q-subset.

    Exhaustive over the full family only when box covers all candidate
    twists -t_S (true for small summand degrees); used for cross-checks.
    Capped at middle rank 16 to keep subset enumeration honest but bounded.
    """
    if middle.rank > 16:
        raise ValueError("enumeration oracle capped at middle rank 16")
    if not 1 <= q <= middle.rank - 1:
        raise ValueError(f"q must lie in 1..{middle.rank - 1}, got {q}")
    l = x.picard_rank
    degs = middle.degrees()
    sums = set()
    for subset in itertools.combinations(range(len(degs)), q):
        t_s = tuple(sum(degs[i][j] for i in subset) for j in range(l))
        sums.add(t_s)
    for b in itertools.product(range(-box, box + 1), repeat=l):
        if constraint is TwistMode.TOTAL_NEGATIVE:
            if sum(b) >= 0:
                continue
        else:
            if any(s >= 0 for _, s in x.group_sums(b)):
                continue
        for t_s in sorted(sums):
            if all(bb + tt >= 0 for bb, tt in zip(b, t_s)):
                return False, b
    return True, None


# ---------------------------------------------------------------------------
# stability

@dataclass(frozen=True)
class QResult:
    q: int
    passed: bool
    witness_twist: MultiDegree | None
    witness_profile: MultiDegree | None


@dataclass(frozen=True)
class StabilityCertificate:
    """Record of the twisted-exterior-power vanishing run for T = ker g.

    verdict: "stable" (every q passed and deg_t < 0), "fails" (some q has a
    witness twist), or "unsupported" (deg_t >= 0: the trivial-normalization
    argument does not apply and no verdict is claimed).
    """

    instance_id: str
    polarization: MultiDegree
    constraint: str
    groups: tuple[tuple[str, tuple[int, ...]], ...]
    rank_t: int
    c1_t: MultiDegree
    degree_t: int
    slope_t: Fraction
    k_e: int
    per_q: tuple[QResult, ...]
    verdict: str
    twist_family: str


def _twist_family_text(x: ProductSpace, constraint: TwistMode) -> str:
    if constraint is TwistMode.TOTAL_NEGATIVE:
        return "all twists B with total degree sum < 0"
    names = ", ".join(name for name, _ in x.groups)
    return f"all twists B with each group sum < 0 over groups ({names})"


def stability_certificate(
    spec: MonadSpec,
    polarization: MultiDegree | None = None,
    constraint: TwistMode | None = None,
) -> StabilityCertificate:
    """Certify slope stability of the kernel bundle over a constrained twist family.

    Checks h^0((Lambda^q T)(B)) = 0 for all q in 1..rank(T)-1 and all B in
    the family, via the injection into the twisted exterior power of the
    middle term.  The certificate names the family checked; it never claims
    vanishing for twists outside it.
    """
    x = spec.space
    if polarization is None:
        polarization = spec.default_polarization
    polarization = tuple(polarization)
    if constraint is None:
        constraint = TwistMode(spec.default_constraint)
    check_polarization(x, polarization)
    summary = display_summary(spec)
    rank_t, c1_t = summary.rank_t, summary.c1_t
    if rank_t < 1:
        raise ValueError("kernel rank must be >= 1")
    deg_t = degree(x, polarization, c1_t)
    slope_t = slope(deg_t, rank_t)
    k_e, _ = normalize(x, polarization, c1_t, rank_t)
    base = dict(
        instance_id=spec.instance_id,
        polarization=polarization,
        constraint=constraint.value,
        groups=x.groups,
        rank_t=rank_t,
        c1_t=c1_t,
        degree_t=deg_t,
        slope_t=slope_t,
        k_e=k_e,
        twist_family=_twist_family_text(x, constraint),
    )
    if deg_t >= 0:
        return StabilityCertificate(per_q=(), verdict="unsupported", **base)
    per_q = []
    all_pass = True
    for q in range(1, rank_t):
        res = vanishing_all_twists(x, spec.term_m, q, polarization, constraint)
        per_q.append(QResult(res.q, res.passed, res.witness_twist, res.witness_profile))
        all_pass = all_pass and res.passed
    return StabilityCertificate(
        per_q=tuple(per_q), verdict="stable" if all_pass else "fails", **base
    )


# ---------------------------------------------------------------------------
# simplicity

@dataclass(frozen=True)
class LesStep:
    """One squeeze 0 -> A -> M -> T -> 0: h^p(T) = 0 forced by the neighbors."""

    p: int
    h_middle: int
    h_first_next: int
    forced: bool


def les_vanish(
    x: ProductSpace, first: LineBundleSum, middle: LineBundleSum, p: int
) -> LesStep:
    """Forced vanishing of h^p(third) in 0 -> first -> middle -> third -> 0.

    Exactness gives h^p(third) = 0 whenever h^p(middle) = 0 and
    h^{p+1}(first) = 0; anything else leaves the third term undetermined
    from these two values alone.
    """
    h_m = h_sum(x, middle, p)
    h_a = h_sum(x, first, p + 1)
    return LesStep(p=p, h_middle=h_m, h_first_next=h_a, forced=(h_m == 0 and h_a == 0))


@dataclass(frozen=True)
class SimplicityCertificate:
    """Record of the endomorphism-count chase for the cohomology bundle E.

    Premise: a stable kernel is simple, so h^0(T tensor T^*) = 1.  The two
    recorded steps force h^0 and h^1 of the twisted dual kernel to vanish;
    together they pin h^0(E tensor E^*) between 1 and 1.  verdict "simple"
    iff both steps are forced; any gap yields "inconclusive".
    """

    instance_id: str
    twist: MultiDegree
    premise: str
    steps: tuple[LesStep, ...]
    chain: str
    verdict: str
    h0_endo: int | None


def simplicity_certificate(
    spec: MonadSpec, stability: StabilityCertificate
) -> SimplicityCertificate:
    """Conclude h^0(E tensor E^*) = 1 from a stable kernel, or report the gap.

    Uses the dual kernel sequence 0 -> C^dual -> M^dual -> T^dual -> 0
    twisted by the negative of the right term's summand degree, and demands
    forced vanishing of h^0 and h^1 of the twisted T^dual.
    """
    if stability.instance_id != spec.instance_id:
        raise ValueError(
            f"stability certificate is for {stability.instance_id}, not {spec.instance_id}"
        )
    if stability.verdict != "stable":
        raise ValueError("simplicity requires a stable kernel certificate")
    degs = {d for d, _ in spec.term_c.summands}
    if len(degs) != 1:
        raise ValueError("right term must have a single summand degree")
    twist = vneg(degs.pop())
    x = spec.space
    first = spec.term_c.dual().twist(twist)
    middle = spec.term_m.dual().twist(twist)
    steps = (les_vanish(x, first, middle, 0), les_vanish(x, first, middle, 1))
    concluded = all(step.forced for step in steps)
    return SimplicityCertificate(
        instance_id=spec.instance_id,
        twist=twist,
        premise="h0(T.T*) = 1: a stable bundle is simple",
        steps=steps,
        chain="1 <= h0(T.T*) <= h0(E.E*) <= h0(E.T*) <= 1",
        verdict="simple" if concluded else "inconclusive",
        h0_endo=1 if concluded else None,
    )
