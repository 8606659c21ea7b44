"""Shared record types: lens spaces, bounds, and derivation trees.

A Bound is one lower or upper bound on the Euclidean embedding dimension,
tagged with the rule that produced it and (for engine-derived bounds) a
derivation tree whose numeric side conditions can be replayed from their
stored integer witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable


class Direction(Enum):
    LOWER = "lower"   # embedding dimension >= dim
    UPPER = "upper"   # embedding dimension <= dim

    def __str__(self) -> str:
        return self.value


class Category(Enum):
    SMOOTH = "smooth"
    TOPOLOGICAL = "topological"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, slots=True)
class LensSpace:
    """The (2m+1)-dimensional lens space of torsion 2^e * odd_factor."""

    m: int
    e: int
    odd_factor: int = 1

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValueError(f"need m >= 0, got {self.m}")
        if self.e < 1:
            raise ValueError(f"need e >= 1, got {self.e}")
        if self.odd_factor < 1 or self.odd_factor % 2 == 0:
            raise ValueError(f"odd_factor must be odd >= 1, got {self.odd_factor}")

    @property
    def dim(self) -> int:
        return 2 * self.m + 1

    @property
    def torsion(self) -> int:
        return 2**self.e * self.odd_factor

    def __str__(self) -> str:
        return f"L^{self.dim}({self.torsion})"


def metastable_smoothable(manifold_dim: int, ambient_dim: int) -> bool:
    """Whether the ambient dimension is in the metastable range.

    In the range 2*ambient >= 3*(manifold_dim + 1), topological and smooth
    embeddability of a smooth closed manifold coincide.
    """
    return 2 * ambient_dim >= 3 * (manifold_dim + 1)


# Replay predicates for side-condition kinds, keyed by kind name.  The
# producing module registers its kinds; replay of an unknown kind fails
# loudly rather than vacuously passing.
_REPLAY: dict[str, Callable[[dict[str, int]], bool]] = {}


def register_condition(kind: str, predicate: Callable[[dict[str, int]], bool]) -> None:
    _REPLAY[kind] = predicate


@dataclass(frozen=True, slots=True)
class SideCondition:
    """One checked numeric condition with the integers that satisfied it."""

    kind: str
    witness: tuple[tuple[str, int], ...]
    text: str

    @classmethod
    def make(cls, kind: str, text: str, **witness: int) -> "SideCondition":
        return cls(kind, tuple(sorted(witness.items())), text)

    @property
    def values(self) -> dict[str, int]:
        return dict(self.witness)

    def replay(self) -> bool:
        if self.kind not in _REPLAY:
            raise KeyError(f"no replay predicate registered for {self.kind!r}")
        return _REPLAY[self.kind](self.values)


@dataclass(frozen=True, slots=True)
class DerivationNode:
    """Rule application: premises (child nodes or axioms) and side conditions."""

    rule_id: str
    conclusion: str
    premises: tuple["DerivationNode", ...] = ()
    side_conditions: tuple[SideCondition, ...] = ()

    @property
    def is_axiom(self) -> bool:
        return self.rule_id.startswith("axiom:")

    def replay(self) -> bool:
        """Re-evaluate every side condition in the tree from its witnesses."""
        return (all(c.replay() for c in self.side_conditions)
                and all(p.replay() for p in self.premises))

    def walk(self):
        yield self
        for p in self.premises:
            yield from p.walk()

    def to_lines(self, indent: int = 0) -> list[str]:
        pad = "  " * indent
        lines = [f"{pad}{self.rule_id}: {self.conclusion}"]
        for c in self.side_conditions:
            lines.append(f"{pad}  | {c.text}")
        for p in self.premises:
            lines.extend(p.to_lines(indent + 1))
        return lines

    def to_dict(self) -> dict:
        return {
            "rule": self.rule_id,
            "conclusion": self.conclusion,
            "side_conditions": [
                {"kind": c.kind, "witness": c.values, "text": c.text}
                for c in self.side_conditions
            ],
            "premises": [p.to_dict() for p in self.premises],
        }


@dataclass(frozen=True, slots=True)
class Bound:
    """One bound on the embedding dimension, with provenance.

    LOWER means "the embedding dimension is at least dim" (nonembedding in
    R^(dim-1)); UPPER means "at most dim".  metastable records, for upper
    bounds, whether the ambient dimension lies in the smoothing range.
    """

    direction: Direction
    dim: int
    category: Category
    rule_id: str
    citation: str
    derivation: DerivationNode | None = None
    conjectural: bool = False
    external: bool = False
    transferred: bool = False
    metastable: bool | None = None

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise ValueError(f"need dim >= 0, got {self.dim}")

    def __str__(self) -> str:
        sense = ">=" if self.direction is Direction.LOWER else "<="
        flags = "".join(
            f" [{name}]"
            for name, on in (("conjectural", self.conjectural),
                             ("external", self.external),
                             ("transferred", self.transferred)) if on)
        return f"emb {sense} {self.dim} ({self.category}, {self.rule_id}){flags}"


class InconsistentBoundsError(Exception):
    """A lower bound exceeded an upper bound: an engine bug, not an input error."""

    def __init__(self, space: LensSpace, lower: Bound, upper: Bound):
        self.space = space
        self.lower = lower
        self.upper = upper
        super().__init__(
            f"internal inconsistency for {space}: lower {lower.dim} "
            f"({lower.rule_id}) > upper {upper.dim} ({upper.rule_id})")


class RoundsDivergenceError(Exception):
    """The round-runner produced a bound off its closed form."""
