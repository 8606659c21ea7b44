"""Bounds catalog: every (non)embedding theorem as a rule emitting Bound
records, combined into a best-bounds report for a given lens space.

Lower bounds are stored as "embedding dimension >= dim", i.e. nonembedding
in R^(dim-1), so rules never disagree about off-by-ones.  All rules are
pure; report() is deterministic.

Not encoded: immersion-to-embedding transfer (its embedding analogue
provably fails in general), transfer down in torsion, and the speculative
10-dimensional embedding of the 7-dimensional spaces (unestablished).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .cohomology import is_spin
from .dyadic import alpha, nu
from .inductive import delta_e, derive_rounds

_ROUNDS_CAP = 256


def _engine_bounds(e: int, m: int) -> list:
    """Round-engine bounds for exactly this m, via a cap-normalized cache
    key so whole-table sweeps reuse one rounds computation per e."""
    if m < 3:
        return []
    cap = _ROUNDS_CAP
    while m > cap:
        cap *= 2
    return [b for mm, b in derive_rounds(e, cap) if mm == m]
from .records import (Bound, Category, Direction, InconsistentBoundsError,
                      LensSpace, metastable_smoothable)

__all__ = [
    "LensSpace", "Bound", "Report", "Direction", "Category",
    "metastable_smoothable", "euler_class_condition",
    "euler_class_lower_bounds", "power_of_two_lower", "codim2_lower",
    "compactness_floor", "low_dim_exact", "hhmp_upper", "spin_upper",
    "closed_form_uppers", "projective_pl_uppers", "conjectural_lower_bounds",
    "odd_torsion_transfer", "report", "InconsistentBoundsError",
]


def euler_class_condition(n: int, e: int) -> bool:
    """Hypothesis of the Euler-class nonembedding rule:
    e >= min(alpha(n) - 6, alpha(n) + 1 - 2^nu(n)).

    The min is often negative, making the condition vacuous; it only bites
    in the low-torsion regime with large digit sums.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return e >= min(alpha(n) - 6, alpha(n) + 1 - 2 ** nu(n))


def _lower(dim: int, rule_id: str, citation: str, **flags) -> Bound:
    return Bound(Direction.LOWER, dim, Category.SMOOTH, rule_id, citation,
                 **flags)


def _upper(space: LensSpace, dim: int, rule_id: str, citation: str,
           smooth_rule: bool = False, **flags) -> Bound:
    meta = metastable_smoothable(space.dim, dim)
    cat = Category.SMOOTH if smooth_rule or meta else Category.TOPOLOGICAL
    return Bound(Direction.UPPER, dim, cat, rule_id, citation,
                 metastable=meta, **flags)


def euler_class_lower_bounds(space: LensSpace) -> list[Bound]:
    """Euler-class nonembedding: for every n with n + delta = m, where
    delta = max(0, alpha(n) - e), and the rule's hypothesis holds, the
    space does not embed in R^(4n - 2 alpha(n) + 1).

    The scan over all n in [1, m] is cheap (delta <= alpha(n) <= log2(n)+1)
    and provably complete.  Stated for 2-power torsion only.
    """
    if space.odd_factor != 1:
        return []
    out = []
    for n in range(1, space.m + 1):
        delta = max(0, alpha(n) - space.e)
        if n + delta == space.m and euler_class_condition(n, space.e):
            out.append(_lower(
                4 * n - 2 * alpha(n) + 2, "euler-class",
                "Euler-class obstruction in connective K-theory (delta = 0) "
                f"/ Brown-Peterson theory (delta > 0); n={n}, delta={delta}"))
    return out


def power_of_two_lower(space: LensSpace) -> Bound | None:
    """When alpha(m) = 1 the general-position embedding in R^(4m+1) is
    optimal: no embedding in R^(4m)."""
    if space.odd_factor != 1 or space.m < 1 or alpha(space.m) != 1:
        return None
    return _lower(4 * space.m + 1, "power-of-two-floor",
                  "Gysin-sequence argument: the general-position embedding "
                  "is optimal when alpha(m) = 1")


def codim2_lower(space: LensSpace) -> Bound | None:
    """No codimension-2 embedding for lens spaces of dimension >= 5.

    Such an embedding forces stable parallelizability, and the only stably
    parallelizable lens space of even torsion and dimension >= 5 is the
    parallelizable 7-dimensional 2-torsion space, the one excluded case.
    """
    if space.dim < 5:
        return None
    if space.m == 3 and space.e == 1 and space.odd_factor == 1:
        return None
    return _lower(space.dim + 3, "codim2",
                  "codimension-2 embeddings force stable parallelizability")


def compactness_floor(space: LensSpace) -> Bound:
    """A closed manifold never embeds in its own dimension."""
    return _lower(space.dim + 1, "compactness",
                  "closed manifolds need at least one extra dimension")


def low_dim_exact(space: LensSpace) -> tuple[Bound, Bound] | None:
    """Exact values in dimensions 1 and 3: the circle needs the plane, and
    every 3-dimensional lens space needs and gets R^5 (no R^4 embedding
    exists; R^5 embeddings are smooth)."""
    if space.m == 0:
        cite = "the circle embeds optimally in the plane"
        return (_lower(2, "low-dim", cite),
                _upper(space, 2, "low-dim", cite, smooth_rule=True))
    if space.m == 1:
        return (_lower(5, "low-dim",
                       "no 3-dimensional lens space embeds in R^4 (Hantzsche)"),
                _upper(space, 5, "low-dim",
                       "every 3-dimensional lens space embeds smoothly in "
                       "R^5 (Hirsch)", smooth_rule=True))
    return None


def hhmp_upper(space: LensSpace) -> Bound:
    """General-position embedding in R^(4m+1), any (m, e) with m >= 1."""
    if space.m < 1:
        raise ValueError("use low_dim_exact for the circle")
    return _upper(space, 4 * space.m + 1, "hhmp",
                  "Haefliger-Hirsch-Massey-Peterson general-position "
                  "embedding", smooth_rule=True)


def spin_upper(space: LensSpace) -> Bound | None:
    """Spin embedding in R^(4m) for m = 3 mod 4.

    Spin manifolds of dimension 5, 6, 7 mod 8 and >= 7 embed with
    codimension dim-2 (Thomas); m = 3 mod 4 gives dimension 7 mod 8 >= 7,
    and the spin prerequisite (m odd) is cross-checked on the cohomology.
    """
    if space.odd_factor != 1 or space.m % 4 != 3:
        return None
    if not is_spin(space.m, space.e):
        raise AssertionError(f"spin prerequisite failed for {space}")
    return _upper(space, 4 * space.m, "spin",
                  "spin manifolds of dimension 7 mod 8 embed with "
                  "codimension dim-2 (Thomas)", smooth_rule=True)


def closed_form_uppers(space: LensSpace) -> list[Bound]:
    """The closed-form embedding catalog the inductive rounds regenerate.

    For m = 2l+1 (l >= 1): R^(8l+3); sharpened to R^(8l+2) for even l with
    alpha(l) >= 2.  For m = 4l+3 (l >= 2): R^(16l+delta(e)) with
    delta(1,2,>=3) = 7, 9, 10; sharpened to one less for even l with
    alpha(l) >= 2.  Special case m = 7, e <= 2: R^26.  Category is smooth
    exactly in the metastable range; the one case outside it (m = 3 into
    R^11) is topological.
    """
    if space.odd_factor != 1:
        return []
    m, e = space.m, space.e
    out = []
    if m >= 3 and m % 2 == 1:
        ell = (m - 1) // 2
        out.append(_upper(space, 8 * ell + 3, "round1",
                          "first inductive round (k=1)"))
        if ell % 2 == 0 and alpha(ell) >= 2:
            out.append(_upper(space, 8 * ell + 2, "round1-sharp",
                              "first inductive round, sharpened feed"))
    if m == 7 and e <= 2:
        out.append(_upper(space, 26, "round2-special",
                          "second round applied at (k, j) = (3, 3)"))
    if m >= 11 and m % 4 == 3:
        ell = (m - 3) // 4
        dlt = delta_e(e)
        out.append(_upper(space, 16 * ell + dlt, "round2",
                          "second inductive round (k=3)"))
        if ell % 2 == 0 and alpha(ell) >= 2:
            out.append(_upper(space, 16 * ell + dlt - 1, "round2-sharp",
                              "second inductive round, sharpened feed"))
    return out


def projective_pl_uppers(space: LensSpace) -> list[Bound]:
    """2-torsion-only bounds seeded with the PL embedding of the
    15-dimensional projective space in R^23 (external input): for
    2m+1 = 8j+7, j >= 2, an embedding in R^(16j+7), and in R^(16j+6) for
    even j that is not a power of 2."""
    if space.e != 1 or space.odd_factor != 1:
        return []
    if space.m % 4 != 3 or space.m < 11:
        return []
    j = (space.m - 3) // 4
    cite = "second round seeded with the PL embedding of P^15 in R^23 (Rees)"
    out = [_upper(space, 16 * j + 7, "pl-round2", cite, external=True)]
    if j % 2 == 0 and alpha(j) >= 2:
        out.append(_upper(space, 16 * j + 6, "pl-round2-sharp", cite,
                          external=True))
    return out


def conjectural_lower_bounds(space: LensSpace) -> list[Bound]:
    """Low-torsion Euler-class bounds with the valuation hypothesis waived.

    It is conjectured that the hypothesis can be dropped when delta > 0;
    these bounds are tagged conjectural and never enter a default report.
    """
    if space.odd_factor != 1:
        return []
    out = []
    for n in range(1, space.m + 1):
        delta = alpha(n) - space.e
        if delta > 0 and n + delta == space.m \
                and not euler_class_condition(n, space.e):
            out.append(_lower(
                4 * n - 2 * alpha(n) + 2, "euler-class-conjectural",
                f"low-torsion Euler-class bound, hypothesis waived; n={n}, "
                f"delta={delta}", conjectural=True))
    return out


def odd_torsion_transfer(space: LensSpace) -> LensSpace:
    """The 2-primary space whose upper bounds transfer to this one.

    Valid for bounds within the metastable range: the canonical projection
    lets embeddings of the 2-primary space carry over to odd multiples of
    the torsion.
    """
    if space.odd_factor < 3:
        raise ValueError("transfer applies to odd_factor >= 3 only")
    return LensSpace(space.m, space.e, 1)


@dataclass(frozen=True)
class Report:
    """Best lower/upper bounds with full provenance for one lens space."""

    space: LensSpace
    lower: Bound
    upper: Bound
    all_bounds: tuple[Bound, ...]
    exact: bool

    @property
    def gap(self) -> int:
        return self.upper.dim - self.lower.dim


def _best(bounds: list[Bound], want_max: bool) -> Bound:
    best = bounds[0]
    for b in bounds[1:]:
        if (b.dim > best.dim) if want_max else (b.dim < best.dim):
            best = b
    return best


def report(space: LensSpace, conjectural: bool = False,
           external: bool = False) -> Report:
    """Aggregate every applicable rule; best lower is the max, best upper
    the min (ties keep the earlier, more specific rule).

    conjectural / external opt into the flagged rule sets; without them no
    conjectural or external-input bound is consulted.  Raises
    InconsistentBoundsError if lower exceeds upper (an engine bug).
    """
    lowers: list[Bound] = []
    uppers: list[Bound] = []

    exact_pair = low_dim_exact(space)
    if exact_pair is not None:
        lowers.append(exact_pair[0])
        uppers.append(exact_pair[1])

    p2 = power_of_two_lower(space)
    if p2 is not None:
        lowers.append(p2)
    lowers.extend(euler_class_lower_bounds(space))
    c2 = codim2_lower(space)
    if c2 is not None:
        lowers.append(c2)
    lowers.append(compactness_floor(space))
    if conjectural:
        lowers.extend(conjectural_lower_bounds(space))

    if space.m >= 1:
        primary = space if space.odd_factor == 1 else odd_torsion_transfer(space)
        cand: list[Bound] = []
        cand.extend(closed_form_uppers(primary))
        for b in _engine_bounds(primary.e, primary.m):
            if external or not b.external:
                cand.append(b)
        if external:
            cand.extend(projective_pl_uppers(primary))
        sp = spin_upper(primary)
        if sp is not None:
            cand.append(sp)
        cand.append(hhmp_upper(primary))
        if space.odd_factor != 1:
            cand = [replace(b, transferred=True) for b in cand
                    if metastable_smoothable(space.dim, b.dim)]
        uppers.extend(cand)

    lower = _best(lowers, True)
    upper = _best(uppers, False)
    if lower.dim > upper.dim:
        raise InconsistentBoundsError(space, lower, upper)
    return Report(space, lower, upper, tuple(lowers + uppers),
                  lower.dim == upper.dim)
