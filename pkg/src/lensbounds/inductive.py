"""Inductive construction of lens-space embeddings, with derivation trees.

One inductive *round* fixes a small k and repeatedly applies the step: from
a smooth embedding of L(k, e) in R^alpha carrying sigma independent normal
sections, an embedding of L(j, e) in R^beta, and an embedding of the
(k+1)-fold bundle over L(j, e) in R^(sigma+beta), produce a (topological)
embedding of L(k+j+1, e) in R^(alpha+beta+1) whenever one of two numeric
gates holds.  Running rounds k=1 and k=3 regenerates the closed-form
catalog; every step is recorded as a DerivationNode whose side conditions
replay from stored integer witnesses.

The third round (k=7) is deliberately not run: it yields nothing new for
e >= 2, and the larger section counts sometimes quoted for e = 1 rest on
improperly argued immersions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .dyadic import alpha, nu, radon_pair
from .lifting import davis_mahowald_check, embedding_gate, feeding_params
from .records import (Bound, Category, DerivationNode, Direction,
                      RoundsDivergenceError, SideCondition,
                      metastable_smoothable, register_condition)


@dataclass(frozen=True, slots=True)
class SectionedEmbedding:
    """L(k, e) inside R^ambient with sigma independent normal sections."""

    k: int
    e: int
    ambient: int
    sigma: int


@dataclass(frozen=True, slots=True)
class BundleEmbedding:
    """Whitney multiple of the canonical line bundle over L(base_m, e)."""

    multiple: int
    base_m: int
    e: int
    ambient: int
    sharpened: bool = False


@dataclass(frozen=True, slots=True)
class Feeding:
    """Feeding embeddings available for (mu, ell, e): main and, when the
    drop lam = 1 applies, the one-dimension sharpening."""

    mu: int
    ell: int
    e: int
    i: int
    lam: int
    main: BundleEmbedding
    sharp: BundleEmbedding | None


def sections_table(k: int, e: int) -> int | None:
    """Certified section counts sigma_{k,e} for the igniting embeddings.

    Only k = 1 and k = 3 are tabulated; k = 7 is deliberately absent (see
    module docstring).
    """
    if k < 0 or e < 1:
        raise ValueError(f"need k >= 0 and e >= 1, got k={k}, e={e}")
    if k == 1:
        return 3
    if k == 3:
        return 7 if e == 1 else 5 if e == 2 else 4
    return None


def igniting_embedding(k: int, e: int) -> SectionedEmbedding | None:
    """The tabulated embedding L(k, e) in R^(4k+2) with its section count."""
    sigma = sections_table(k, e)
    if sigma is None:
        return None
    return SectionedEmbedding(k=k, e=e, ambient=4 * k + 2, sigma=sigma)


def milgram_condition(mu: int, ell: int) -> bool:
    """Whether the linear-algebra section construction stays strong enough
    at round parameter mu: 2^(mu+1) - 1 <= alpha(ell) + mu + kappa(mu),
    kappa(1) = 1, kappa(mu >= 2) = 4.  Always true for mu <= 2, rarely for
    mu >= 3 (which is why no round beyond k = 3 is run)."""
    if mu < 1 or ell < 1:
        raise ValueError(f"need mu >= 1 and ell >= 1, got mu={mu}, ell={ell}")
    kappa = 1 if mu == 1 else 4
    return 2 ** (mu + 1) - 1 <= alpha(ell) + mu + kappa


def delta_e(e: int) -> int:
    """Ambient shift of the second round: 7 / 9 / 10 for e = 1 / 2 / >= 3."""
    if e < 1:
        raise ValueError(f"need e >= 1, got {e}")
    return 7 if e == 1 else 9 if e == 2 else 10


def feeding_embedding(mu: int, ell: int, e: int) -> Feeding | None:
    """Feeding embeddings 2^mu * eta over L(i, e), i = 2^mu*ell - 1.

    Absent for (mu=2, e>2, ell=1), the one combination the lifting
    argument does not cover.  Ambient 4i+3 always; additionally 4i+2 when
    ell is even with alpha(ell) >= 2 (drop lam = 1).
    """
    if mu not in (1, 2):
        raise ValueError(f"mu must be 1 or 2, got {mu}")
    if ell < 1 or e < 1:
        raise ValueError(f"need ell >= 1 and e >= 1, got ell={ell}, e={e}")
    if mu == 2 and e > 2 and ell == 1:
        return None
    inst = feeding_params(mu, ell, 0)
    ambient = embedding_gate(inst)
    assert ambient == 4 * inst.n + 3
    i = inst.n
    mult = 2**mu
    main = BundleEmbedding(mult, i, e, ambient)
    lam = 1 if ell % 2 == 0 and alpha(ell) >= 2 else 0
    sharp = None
    if lam:
        sharp_inst = feeding_params(mu, ell, 1)
        sharp_ambient = embedding_gate(sharp_inst)
        assert sharp_ambient == 4 * i + 2
        sharp = BundleEmbedding(mult, i, e, sharp_ambient, sharpened=True)
    return Feeding(mu, ell, e, i, lam, main, sharp)


# --- side-condition replay predicates ------------------------------------

def _feed_route(mu: int, ell: int, lam: int) -> int:
    # 1: connectivity of the fiber (mu=1 unsharpened); 2: Davis-Mahowald
    # digit-sum gate; 3: low-multiple / quaternionic lifting, certified
    # directly (alpha(ell) = 1, including ell = 1).
    if lam == 1:
        return 2
    if mu == 1:
        return 1
    return 2 if alpha(ell) >= 2 else 3


def _replay_feed_certificate(v: dict[str, int]) -> bool:
    route = _feed_route(v["mu"], v["ell"], v["lam"])
    if route != v["route"]:
        return False
    if route == 1:
        return v["mu"] == 1 and v["lam"] == 0
    if route == 2:
        return davis_mahowald_check(v["ell"]).ok
    return alpha(v["ell"]) == 1


def _replay_boundary_radon(v: dict[str, int]) -> bool:
    if v["sigma"] + v["beta"] != 4 * v["j"] + 2:
        return False
    a, b = radon_pair(nu(2 * v["j"] + 2))
    return (a, b) == (v["a"], v["b"]) and 2 * v["k"] + 3 <= 8 * a + 2**b


register_condition(
    "sections-exceed",
    lambda v: v["sigma"] + v["beta"] > 4 * v["j"] + 2)
register_condition("boundary-radon", _replay_boundary_radon)
register_condition(
    "feed-within",
    lambda v: v["feed"] <= v["sigma"] + v["beta"])
register_condition(
    "ambient-sum",
    lambda v: v["dim"] == v["alpha"] + v["beta"] + 1)
register_condition(
    "beta-from-prior",
    lambda v: v["prior"] <= v["beta"] <= v["prior"] + 1)
register_condition(
    "weakening",
    lambda v: v["have"] <= v["use"])
register_condition(
    "sections-table",
    lambda v: sections_table(v["k"], v["e"]) == v["sigma"])
register_condition(
    "feeding-admissible",
    lambda v: not (v["mu"] == 2 and v["e"] > 2 and v["ell"] == 1))
register_condition(
    "feeding-ambient",
    lambda v: embedding_gate(feeding_params(v["mu"], v["ell"], v["lam"]))
    == v["ambient"])
register_condition("feeding-certificate", _replay_feed_certificate)


def inductive_step(k: int, j: int, e: int, alpha_dim: int, beta_dim: int,
                   sigma: int, premises: tuple[DerivationNode, ...] = (),
                   rule_id: str = "inductive-step",
                   extra_conditions: tuple[SideCondition, ...] = (),
                   external: bool = False) -> Bound | None:
    """One application of the inductive step, if a gate fires.

    The caller vouches for the three hypothesis embeddings (ideally as
    premise nodes): L(k,e) in R^alpha_dim with sigma normal sections,
    L(j,e) in R^beta_dim, and the (k+1)-fold bundle over L(j,e) in
    R^(sigma+beta_dim).  Gate (strict): sigma+beta > 4j+2.  Gate
    (boundary): sigma+beta = 4j+2 and 2k+3 <= 8a+2^b where
    nu(2j+2) = 4a+b, 0 <= b <= 3.  Returns the upper bound
    alpha_dim+beta_dim+1 for L(k+j+1, e), or None if neither gate fires.
    """
    total = sigma + beta_dim
    need = 4 * j + 2
    if total > need:
        gate = SideCondition.make(
            "sections-exceed",
            f"sigma + beta = {total} > 4j + 2 = {need}",
            sigma=sigma, beta=beta_dim, j=j)
    elif total == need:
        a, b = radon_pair(nu(2 * j + 2))
        if 2 * k + 3 > 8 * a + 2**b:
            return None
        gate = SideCondition.make(
            "boundary-radon",
            f"sigma + beta = 4j + 2 = {need} and 2k + 3 = {2 * k + 3} <= "
            f"8a + 2^b = {8 * a + 2**b} (nu(2j+2) = {nu(2 * j + 2)} = 4*{a}+{b})",
            sigma=sigma, beta=beta_dim, j=j, k=k, a=a, b=b)
    else:
        return None
    m_out = k + j + 1
    dim = alpha_dim + beta_dim + 1
    conditions = (gate,
                  SideCondition.make(
                      "ambient-sum",
                      f"ambient = alpha + beta + 1 = {alpha_dim}+{beta_dim}+1 = {dim}",
                      alpha=alpha_dim, beta=beta_dim, dim=dim),
                  ) + extra_conditions
    manifold_dim = 2 * m_out + 1
    smooth = metastable_smoothable(manifold_dim, dim)
    category = Category.SMOOTH if smooth else Category.TOPOLOGICAL
    node = DerivationNode(
        rule_id, f"L(m={m_out}, e={e}) embeds ({category}) in R^{dim}",
        premises, conditions)
    return Bound(Direction.UPPER, dim, category, rule_id,
                 "inductive step over the double mapping cylinder "
                 f"decomposition (k={k}, j={j})",
                 derivation=node, external=external, metastable=smooth)


def _feed_node(mu: int, ell: int, e: int, lam: int) -> tuple[DerivationNode, int]:
    inst = feeding_params(mu, ell, lam)
    ambient = embedding_gate(inst)
    if ambient is None:
        raise RoundsDivergenceError(
            f"feeding gate unexpectedly closed at mu={mu}, ell={ell}, lam={lam}")
    route = _feed_route(mu, ell, lam)
    route_text = {1: "fiber connectivity", 2: "Davis-Mahowald gate",
                  3: "low-multiple lifting"}[route]
    conditions = (
        SideCondition.make(
            "feeding-admissible",
            f"feed defined for mu={mu}, ell={ell}, e={e}",
            mu=mu, ell=ell, e=e),
        SideCondition.make(
            "feeding-ambient",
            f"gate: 2m+d+1 = {2 * inst.m + inst.d + 1} = 4i+3-lam "
            f"(i={inst.n}, lam={lam})",
            mu=mu, ell=ell, lam=lam, ambient=ambient),
        SideCondition.make(
            "feeding-certificate",
            f"lifting certified via {route_text}",
            mu=mu, ell=ell, lam=lam, route=route),
    )
    return DerivationNode(
        "feeding",
        f"{2**mu}*eta over L({inst.n}, e={e}) embeds in R^{ambient}",
        (), conditions), ambient


def _igniting_node(k: int, e: int) -> DerivationNode:
    emb = igniting_embedding(k, e)
    assert emb is not None
    cond = SideCondition.make(
        "sections-table", f"tabulated sigma(k={k}, e={e}) = {emb.sigma}",
        k=k, e=e, sigma=emb.sigma)
    return DerivationNode(
        "axiom:igniting",
        f"L({k}, e={e}) embeds smoothly in R^{emb.ambient} with "
        f"{emb.sigma} independent normal sections", (), (cond,))


def _feed_within(feed: int, sigma: int, beta: int) -> SideCondition:
    return SideCondition.make(
        "feed-within",
        f"feeding ambient {feed} fits inside R^(sigma+beta) = R^{sigma + beta}",
        feed=feed, sigma=sigma, beta=beta)


def _check_form(bound: Bound, expected: int, m: int, e: int) -> Bound:
    if bound is None or bound.dim != expected:
        got = "nothing" if bound is None else f"R^{bound.dim}"
        raise RoundsDivergenceError(
            f"round output diverges from closed form at (m={m}, e={e}): "
            f"expected R^{expected}, derived {got}")
    return bound


@lru_cache(maxsize=32)
def derive_rounds(e: int, max_m: int) -> tuple[tuple[int, Bound], ...]:
    """All (m, bound) pairs the two rounds produce for m <= max_m, in
    derivation order, each bound verified against its closed form.

    Results are immutable and cached; nodes are shared between the bounds
    of one run, so a cached run is small.
    """
    if e < 1:
        raise ValueError(f"need e >= 1, got {e}")
    if max_m < 3:
        raise ValueError(f"need max_m >= 3, got {max_m}")
    out: list[tuple[int, Bound]] = []
    dlt = delta_e(e)

    # --- round 1 (k = 1) --------------------------------------------------
    dim3 = DerivationNode(
        "axiom:dim3-embedding",
        f"L(m=1, e={e}) embeds smoothly in R^5 (every 3-dim lens space does)")
    frame = DerivationNode(
        "axiom:dim3-normal-frame",
        "the R^5 embedding of L(1, e) has trivial normal 2-plane bundle: "
        "sigma = 2 independent normal sections")
    feed, feed_dim = _feed_node(1, 1, e, 0)
    base1 = inductive_step(
        1, 1, e, 5, 5, 2,
        premises=(dim3, frame, feed),
        rule_id="round1:base",
        extra_conditions=(_feed_within(feed_dim, 2, 5),))
    base1 = _check_form(base1, 8 * 1 + 3, 3, e)
    out.append((3, base1))
    col2_dim: dict[int, int] = {1: base1.dim}
    col2_node: dict[int, DerivationNode] = {1: base1.derivation}

    ign1 = _igniting_node(1, e)
    sigma1 = sections_table(1, e)
    for ell in range(2, (max_m - 1) // 2 + 1):
        m = 2 * ell + 1
        prior_dim = col2_dim[ell - 1]
        prior_node = col2_node[ell - 1]
        beta = prior_dim + 1
        feed, feed_dim = _feed_node(1, ell, e, 0)
        step = inductive_step(
            1, 2 * ell - 1, e, 6, beta, sigma1,
            premises=(ign1, prior_node, feed),
            rule_id="round1:step",
            extra_conditions=(
                _feed_within(feed_dim, sigma1, beta),
                SideCondition.make(
                    "beta-from-prior",
                    f"beta = {beta} is one higher than the prior round output {prior_dim}",
                    beta=beta, prior=prior_dim)))
        step = _check_form(step, 8 * ell + 3, m, e)
        out.append((m, step))
        col2_dim[ell] = step.dim
        col2_node[ell] = step.derivation
        if ell % 2 == 0 and alpha(ell) >= 2:
            feed_s, feed_s_dim = _feed_node(1, ell, e, 1)
            sharp = inductive_step(
                1, 2 * ell - 1, e, 6, prior_dim, sigma1,
                premises=(ign1, prior_node, feed_s),
                rule_id="round1:sharp",
                extra_conditions=(
                    _feed_within(feed_s_dim, sigma1, prior_dim),
                    SideCondition.make(
                        "beta-from-prior",
                        f"beta = {prior_dim} reuses the prior round output",
                        beta=prior_dim, prior=prior_dim)))
            out.append((m, _check_form(sharp, 8 * ell + 2, m, e)))

    # --- round 2 (k = 3) --------------------------------------------------
    if max_m < 7:
        return tuple(out)
    ign3 = _igniting_node(3, e)
    sigma3 = sections_table(3, e)

    special_node = None
    if e <= 2:
        feed, feed_dim = _feed_node(2, 1, e, 0)
        special = inductive_step(
            3, 3, e, 14, col2_dim[1], sigma3,
            premises=(ign3, col2_node[1], feed),
            rule_id="round2:special",
            extra_conditions=(_feed_within(feed_dim, sigma3, col2_dim[1]),))
        special = _check_form(special, 26, 7, e)
        out.append((7, special))
        special_node = special.derivation

    # ground the second induction: L(7, e) in R^(17 + delta(e))
    base_dim = 17 + dlt
    external = e == 1
    if e >= 3:
        have_node, have_dim = col2_node[3], col2_dim[3]
    elif e == 2:
        have_node, have_dim = special_node, 26
    else:
        have_node = DerivationNode(
            "axiom:pl-seed",
            "PL embedding of the 15-dimensional 2-torsion space in R^23 "
            "(external input)")
        have_dim = 23
    base2 = Bound(
        Direction.UPPER, base_dim,
        Category.SMOOTH if metastable_smoothable(15, base_dim)
        else Category.TOPOLOGICAL,
        "round2:base", "ground of the second inductive round",
        derivation=DerivationNode(
            "round2:base",
            f"L(m=7, e={e}) embeds in R^{base_dim}",
            (have_node,),
            (SideCondition.make(
                "weakening",
                f"embedding in R^{have_dim} persists into R^{base_dim}",
                have=have_dim, use=base_dim),)),
        external=external,
        metastable=metastable_smoothable(15, base_dim))
    out.append((7, base2))
    col4_dim: dict[int, int] = {1: base_dim}
    col4_node: dict[int, DerivationNode] = {1: base2.derivation}
    for ell in range(2, (max_m - 3) // 4 + 1):
        m = 4 * ell + 3
        prior_dim = col4_dim[ell - 1]
        prior_node = col4_node[ell - 1]
        beta = 16 * ell + dlt - 15
        feed, feed_dim = _feed_node(2, ell, e, 0)
        step = inductive_step(
            3, 4 * ell - 1, e, 14, beta, sigma3,
            premises=(ign3, prior_node, feed),
            rule_id="round2:step",
            extra_conditions=(
                _feed_within(feed_dim, sigma3, beta),
                SideCondition.make(
                    "beta-from-prior",
                    f"beta = {beta} from the prior round output {prior_dim}",
                    beta=beta, prior=prior_dim)),
            external=external)
        step = _check_form(step, 16 * ell + dlt, m, e)
        out.append((m, step))
        col4_dim[ell] = step.dim
        col4_node[ell] = step.derivation
        if ell % 2 == 0 and alpha(ell) >= 2:
            beta_s = col4_dim[ell - 1]
            feed_s, feed_s_dim = _feed_node(2, ell, e, 1)
            sharp = inductive_step(
                3, 4 * ell - 1, e, 14, beta_s, sigma3,
                premises=(ign3, prior_node, feed_s),
                rule_id="round2:sharp",
                extra_conditions=(
                    _feed_within(feed_s_dim, sigma3, beta_s),
                    SideCondition.make(
                        "beta-from-prior",
                        f"beta = {beta_s} reuses the prior round output",
                        beta=beta_s, prior=beta_s)),
                external=external)
            out.append((m, _check_form(sharp, 16 * ell + dlt - 1, m, e)))
    return tuple(out)


def run_rounds(e: int, max_m: int) -> dict[int, Bound]:
    """Best derived upper bound per manifold parameter m <= max_m.

    Every produced bound is checked against its closed form; any mismatch
    raises RoundsDivergenceError naming the offending (m, e).
    """
    best: dict[int, Bound] = {}
    for m, bound in derive_rounds(e, max_m):
        if m not in best or bound.dim < best[m].dim:
            best[m] = bound
    return best
