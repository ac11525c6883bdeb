"""Verdicts returned by the decision procedures."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from ..core import Multipole


class Kind(Enum):
    COMPLETE = "complete"
    NOT_COMPLETE = "not complete"
    CLOSED_SUFFICIENT = "closed (sufficient condition)"
    CLOSED_UP_TO_BOUND = "closed up to bound"
    NOT_CLOSED = "not closed"
    REDUCIBLE = "reducible"
    IRREDUCIBLE = "irreducible (exhaustive)"
    SEPARABLE = "separable"
    NOT_SEPARABLE = "not separable (exhaustive)"


_HOLDS = {Kind.COMPLETE, Kind.CLOSED_SUFFICIENT, Kind.CLOSED_UP_TO_BOUND, Kind.REDUCIBLE, Kind.SEPARABLE}


@dataclass(frozen=True)
class Witness:
    """A candidate multipole, already reordered so its semiedge i faces position i.

    ``permutation[i]`` is the candidate's original semiedge placed at position i.
    """

    multipole: Multipole | None = None
    permutation: tuple[int, ...] | None = None
    state: tuple[int, ...] | None = None


@dataclass(frozen=True)
class AnalysisVerdict:
    kind: Kind
    witness: Witness | None = None
    bound_meta: dict = field(default_factory=dict)
    note: str = ""

    @property
    def holds(self) -> bool:
        return self.kind in _HOLDS

    @property
    def label(self) -> str:
        if self.kind is Kind.CLOSED_UP_TO_BOUND:
            return f"closed up to n<={self.bound_meta.get('n_max')}"
        return self.kind.value

    def to_json(self) -> dict:
        from ..mpole_io import write_mpole

        out: dict = {"verdict": self.label, "kind": self.kind.name, "holds": self.holds,
                     "bounds": dict(sorted(self.bound_meta.items()))}
        if self.note:
            out["note"] = self.note
        if self.witness is not None:
            w: dict = {}
            if self.witness.multipole is not None:
                w["mpole"] = write_mpole(self.witness.multipole)
            if self.witness.permutation is not None:
                w["permutation"] = list(self.witness.permutation)
            if self.witness.state is not None:
                w["state"] = "".join(map(str, self.witness.state))
            out["witness"] = w
        return out
